#include "axlarena/tournament.hpp"

#include <atomic>
#include <exception>
#include <mutex>
#include <string>
#include <thread>

#include "axlarena/errors.hpp"

namespace axl {

namespace {

// Domain-separation tag so the edge stream of a repetition can never be
// mistaken for a player/noise/termination stream of some match.
constexpr std::uint64_t kEdgeStreamTag = 0xED6Eull;

struct Task {
  std::size_t repetition;
  std::size_t index_a;
  std::size_t index_b;
  std::uint64_t seed;
};

std::vector<Task> plan_tasks(const TournamentSpec& spec) {
  std::vector<Task> tasks;
  for (std::size_t rep = 0; rep < spec.repetitions; ++rep) {
    RngStream edge_rng(derive_seed(spec.master_seed, {kEdgeStreamTag, rep}));
    for (auto [a, b] : generate_edges(spec, rep, edge_rng)) {
      tasks.push_back({rep, a, b, derive_match_seed(spec.master_seed, a, b, rep)});
    }
  }
  return tasks;
}

[[noreturn]] void rethrow_with_context(const Task& t, const Roster& players) {
  const std::string where = " (repetition " + std::to_string(t.repetition) + ": " +
                            players[t.index_a]->name() + " vs " +
                            players[t.index_b]->name() + ")";
  try {
    throw;
  } catch (const LengthUnknown& e) {
    throw LengthUnknown(e.what() + where);
  } catch (const KeyMissing& e) {
    throw KeyMissing(e.what() + where);
  } catch (const StrategyFault& e) {
    throw StrategyFault(e.what() + where);
  }
}

}  // namespace

std::uint64_t derive_match_seed(std::uint64_t master_seed, std::uint64_t a,
                                std::uint64_t b, std::uint64_t repetition) {
  return derive_seed(master_seed, {a, b, repetition});
}

std::vector<std::pair<std::size_t, std::size_t>> generate_edges(
    const TournamentSpec& spec, std::size_t /*repetition*/, RngStream& rng) {
  const std::size_t n = spec.players.size();
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a; b < n; ++b) {
      if (a == b && !spec.with_self_play) continue;
      if (spec.edge_prob >= 1.0 || rng.bernoulli(spec.edge_prob)) {
        edges.emplace_back(a, b);
      }
    }
  }
  return edges;
}

InteractionArchive run_tournament(const TournamentSpec& spec, unsigned jobs) {
  if (spec.players.empty()) throw InvalidValue("players", "needs at least one player");
  if (spec.repetitions == 0) throw InvalidValue("repetitions", "must be at least 1");
  if (!(spec.edge_prob > 0.0 && spec.edge_prob <= 1.0)) {
    throw InvalidValue("edge_prob", "must lie in (0, 1]");
  }

  const std::vector<Task> tasks = plan_tasks(spec);
  std::vector<MatchRecord> records(tasks.size());

  MatchSpec match_spec;
  match_spec.turns = spec.turns;
  match_spec.prob_end = spec.prob_end;
  match_spec.noise = spec.noise;
  match_spec.game = spec.game;

  // Workers pull task indices from a shared counter and write into
  // preassigned slots, so the archive layout never depends on scheduling.
  std::atomic<std::size_t> cursor{0};
  std::mutex fault_mutex;
  std::size_t fault_index = tasks.size();
  std::exception_ptr fault;

  auto worker = [&] {
    for (;;) {
      const std::size_t i = cursor.fetch_add(1, std::memory_order_relaxed);
      if (i >= tasks.size()) return;
      const Task& t = tasks[i];
      try {
        MatchSpec s = match_spec;
        s.seed = t.seed;
        records[i] = play_match(s, *spec.players[t.index_a], *spec.players[t.index_b]);
      } catch (...) {
        std::lock_guard<std::mutex> lock(fault_mutex);
        if (i < fault_index) {
          fault_index = i;
          fault = std::current_exception();
        }
      }
    }
  };

  if (jobs == 0) jobs = std::max(1u, std::thread::hardware_concurrency());
  const unsigned n_threads =
      static_cast<unsigned>(std::min<std::size_t>(jobs, std::max<std::size_t>(tasks.size(), 1)));
  if (n_threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(n_threads);
    for (unsigned i = 0; i < n_threads; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }

  if (fault) {
    try {
      std::rethrow_exception(fault);
    } catch (const StrategyFault&) {
      rethrow_with_context(tasks[fault_index], spec.players);
    }
    // Anything else (InvalidValue from a bad spec) propagates untouched.
  }

  InteractionArchive archive;
  archive.entries.reserve(tasks.size());
  for (std::size_t i = 0; i < tasks.size(); ++i) {
    archive.entries.push_back(
        {tasks[i].repetition, tasks[i].index_a, tasks[i].index_b, std::move(records[i])});
  }
  return archive;
}

}  // namespace axl
