#include "axlarena/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <string>

#include "axlarena/config.hpp"
#include "axlarena/errors.hpp"
#include "axlarena/evolution.hpp"
#include "axlarena/lookup.hpp"
#include "axlarena/results.hpp"
#include "axlarena/serialize.hpp"
#include "axlarena/text.hpp"
#include "axlarena/training.hpp"

#include "CLI11.hpp"
#include "json.hpp"

namespace axl {

namespace {

// One bag of option storage shared by all subcommands; only the parsed
// subcommand's values are ever read.
struct Flags {
  std::string players;
  std::uint64_t seed = 0;
  std::uint64_t turns = 200;
  std::uint64_t repetitions = 10;
  double noise = 0.0;
  double prob_end = 0.0;
  double edge_prob = 1.0;
  unsigned jobs = 1;
  std::string output_dir = ".";
  std::string format = "json";
  std::string config_path;
  bool self_play = true;

  // train / eco specific
  std::uint64_t first_m = 0;
  std::uint64_t pairs_n = 1;
  std::uint64_t population = 16;
  std::uint64_t generations = 0;
  double mutation_rate = 0.1;
};

void add_common_options(CLI::App* sub, Flags& f) {
  sub->add_option("--players", f.players,
                  "Comma-separated strategy names; transformer syntax allowed");
  sub->add_option("--seed", f.seed, "Master seed (default: $AXL_ARENA_SEED, else 0)");
  sub->add_option("--jobs", f.jobs, "Worker threads; 0 = all cores. Never changes output");
  sub->add_option("--turns", f.turns, "Rounds per match (cap when --prob-end is set)");
  sub->add_option("--repetitions", f.repetitions, "Tournament repetitions");
  sub->add_option("--noise", f.noise, "Per-action flip probability, in [0,1]");
  sub->add_option("--prob-end", f.prob_end, "Per-round ending probability, in [0,1]");
  sub->add_option("--edge-prob", f.edge_prob, "Probability a pair meets, in (0,1]");
  sub->add_option("--output-dir", f.output_dir, "Directory for output files");
  sub->add_option("--format", f.format, "Summary format: json or csv");
  sub->add_option("--config", f.config_path, "TOML or JSON config file; flags override");
  sub->add_flag("--self-play,!--no-self-play", f.self_play,
                "Include matches of a strategy against itself");
}

// Flags beat the environment seed, which beats the config file.
RunConfig merge_config(const CLI::App* sub, const Flags& f) {
  RunConfig c;
  if (sub->count("--config")) c = parse_config_file(f.config_path);
  if (sub->count("--players")) c.players = split_player_list(f.players);
  if (sub->count("--turns")) c.turns = static_cast<std::size_t>(f.turns);
  if (sub->count("--repetitions")) c.repetitions = static_cast<std::size_t>(f.repetitions);
  if (sub->count("--noise")) c.noise = f.noise;
  if (sub->count("--prob-end")) c.prob_end = f.prob_end;
  if (sub->count("--edge-prob")) c.edge_prob = f.edge_prob;
  if (sub->count("--jobs")) c.jobs = f.jobs;
  if (sub->count("--output-dir")) c.output_dir = f.output_dir;
  if (sub->count("--format")) {
    if (f.format == "json") {
      c.format = RunConfig::Format::json;
    } else if (f.format == "csv") {
      c.format = RunConfig::Format::csv;
    } else {
      throw InvalidValue("format", "must be 'csv' or 'json'");
    }
  }
  if (sub->count("--self-play") || sub->count("--no-self-play")) {
    c.with_self_play = f.self_play;
  }
  if (sub->count("--seed")) {
    c.seed = f.seed;
  } else if (const char* env = std::getenv("AXL_ARENA_SEED")) {
    c.seed = parse_u64(env, "AXL_ARENA_SEED");
  }
  return c;
}

std::string output_path(const RunConfig& c, const std::string& filename) {
  std::filesystem::create_directories(c.output_dir);
  return (std::filesystem::path(c.output_dir) / filename).string();
}

int run_tournament_command(const CLI::App* sub, const Flags& f, std::ostream& out) {
  const RunConfig config = merge_config(sub, f);
  const TournamentSpec spec = to_tournament_spec(config);
  const InteractionArchive archive = run_tournament(spec, config.jobs);
  const ResultSet rs = build_result_set(archive, spec);

  const std::string interactions = output_path(config, "interactions.csv");
  write_interactions(archive, spec.players, interactions);
  const std::string summary = output_path(
      config, config.format == RunConfig::Format::csv ? "summary.csv" : "summary.json");
  write_summary(rs, summary, config.format);

  std::size_t rank = 1;
  for (const auto& [name, median] : rank_strategies(rs)) {
    out << rank++ << ". " << name << "  " << decimal_string(median) << '\n';
  }
  out << "interactions: " << interactions << '\n';
  out << "summary: " << summary << '\n';
  return 0;
}

int run_match_command(const CLI::App* sub, const Flags& f, std::ostream& out) {
  const RunConfig config = merge_config(sub, f);
  if (config.players.size() != 2) {
    throw InvalidValue("players", "match needs exactly two players");
  }
  const Roster players = resolve_players(config.players);
  MatchSpec spec;
  spec.turns = config.turns;
  spec.noise = config.noise;
  spec.prob_end = config.prob_end;
  spec.seed = config.seed;
  const MatchRecord rec = play_match(spec, *players[0], *players[1]);
  out << to_string(rec.actions_a) << " / " << to_string(rec.actions_b) << '\n';
  out << decimal_string(rec.score_a) << ' ' << decimal_string(rec.score_b) << '\n';
  return 0;
}

int run_moran_command(const CLI::App* sub, const Flags& f, std::ostream& out) {
  const RunConfig config = merge_config(sub, f);
  if (config.players.empty()) {
    throw InvalidValue("players", "moran needs a population of players");
  }
  MoranState state;
  state.population = resolve_players(config.players);
  state.seed = config.seed;
  state.turns_per_interaction = sub->count("--turns") ? config.turns : 100;
  const MoranResult result = run_moran(state);
  out << "winner: " << result.winner << '\n';
  out << "generations: " << result.generations << '\n';
  return 0;
}

int run_eco_command(const CLI::App* sub, const Flags& f, std::ostream& out) {
  const RunConfig config = merge_config(sub, f);
  const TournamentSpec spec = to_tournament_spec(config);
  const InteractionArchive archive = run_tournament(spec, config.jobs);
  const ResultSet rs = build_result_set(archive, spec);

  EcoState state;
  state.payoff_matrix = dense_payoff_matrix(rs);
  state.proportions.assign(rs.names.size(), 1.0 / static_cast<double>(rs.names.size()));
  const std::size_t generations = sub->count("--generations") ? f.generations : 100;
  const auto trajectory = run_eco(state, generations);

  nlohmann::ordered_json doc;
  doc["names"] = rs.names;
  doc["trajectory"] = trajectory;
  const std::string path = output_path(config, "trajectory.json");
  std::ofstream file(path, std::ios::binary);
  if (!file) throw IoFailure("cannot open '" + path + "' for writing");
  file << doc.dump(2) << '\n';
  if (!file.good()) throw IoFailure("failed while writing '" + path + "'");

  for (std::size_t i = 0; i < rs.names.size(); ++i) {
    out << rs.names[i] << "  " << decimal_string(trajectory.back()[i]) << '\n';
  }
  out << "trajectory: " << path << '\n';
  return 0;
}

int run_train_command(const CLI::App* sub, const Flags& f, std::ostream& out) {
  const RunConfig config = merge_config(sub, f);
  TrainerConfig trainer;
  trainer.first_m = static_cast<std::size_t>(f.first_m);
  trainer.pairs_n = static_cast<std::size_t>(f.pairs_n);
  trainer.population_size = static_cast<std::size_t>(f.population);
  trainer.generations = sub->count("--generations") ? static_cast<std::size_t>(f.generations) : 50;
  trainer.mutation_rate = f.mutation_rate;
  trainer.opponent_pool =
      config.players.empty() ? demo_roster() : resolve_players(config.players);
  trainer.turns = sub->count("--turns") ? config.turns : 100;
  trainer.seed = config.seed;
  const TrainingResult result = evolve_lookup_table(trainer);
  out << "best fitness: " << decimal_string(result.score_history.back()) << '\n';
  out << lookup_table_to_text(result.best);
  return 0;
}

int run_list_command(std::ostream& out) {
  const Roster& roster = stewart_roster();
  const Roster& demo = demo_roster();
  std::size_t width = 0;
  for (const auto& s : roster) width = std::max(width, s->name().size());

  out << std::left << std::setw(static_cast<int>(width + 2)) << "name"
      << std::setw(8) << "memory" << std::setw(12) << "stochastic"
      << std::setw(13) << "uses_length" << "demo" << '\n';
  for (const auto& s : roster) {
    const Classifier& c = s->classifier();
    const bool in_demo =
        std::any_of(demo.begin(), demo.end(),
                    [&](const StrategyPtr& d) { return d->name() == s->name(); });
    out << std::left << std::setw(static_cast<int>(width + 2)) << s->name()
        << std::setw(8) << decimal_string(c.memory_depth)
        << std::setw(12) << (c.stochastic ? "yes" : "no")
        << std::setw(13) << (c.uses_game_length ? "yes" : "no")
        << (in_demo ? "*" : "") << '\n';
  }
  return 0;
}

}  // namespace

int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Iterated prisoner's dilemma tournaments, population dynamics, and "
               "strategy training"};
  app.name("axl-arena");
  app.require_subcommand(1);

  Flags f;
  CLI::App* tournament = app.add_subcommand("tournament", "Round-robin tournament");
  CLI::App* match = app.add_subcommand("match", "Play one match between two players");
  CLI::App* moran = app.add_subcommand("moran", "Moran process to fixation");
  CLI::App* eco = app.add_subcommand("eco", "Replicator dynamics over tournament payoffs");
  CLI::App* train = app.add_subcommand("train", "Evolve a lookup-table strategy");
  CLI::App* list = app.add_subcommand("list-strategies", "Print the builtin strategies");

  for (CLI::App* sub : {tournament, match, moran, eco, train}) {
    add_common_options(sub, f);
  }
  eco->add_option("--generations", f.generations, "Replicator steps (default 100)");
  train->add_option("--generations", f.generations, "Trainer generations (default 50)");
  train->add_option("--first-m", f.first_m, "Opponent opening moves in the key");
  train->add_option("--pairs-n", f.pairs_n, "Recent action pairs in the key");
  train->add_option("--population", f.population, "Genomes kept per generation");
  train->add_option("--mutation-rate", f.mutation_rate, "Per-entry flip probability");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 2;
  }

  try {
    if (app.got_subcommand(tournament)) return run_tournament_command(tournament, f, out);
    if (app.got_subcommand(match)) return run_match_command(match, f, out);
    if (app.got_subcommand(moran)) return run_moran_command(moran, f, out);
    if (app.got_subcommand(eco)) return run_eco_command(eco, f, out);
    if (app.got_subcommand(train)) return run_train_command(train, f, out);
    if (app.got_subcommand(list)) return run_list_command(out);
    err << "error: no subcommand given\n";
    return 2;
  } catch (const UnknownStrategy& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const InvalidValue& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const ConstraintViolation& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace axl
