#include "axlarena/results.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "axlarena/errors.hpp"

namespace axl {

namespace {

std::uint64_t count_cooperations(const History& h) {
  return static_cast<std::uint64_t>(std::count(h.begin(), h.end(), Action::C));
}

// Linear-interpolation quantile of an ascending sample (the R-7 rule).
double quantile_sorted(const std::vector<double>& sorted, double q) {
  if (sorted.empty()) return 0.0;
  const double h = static_cast<double>(sorted.size() - 1) * q;
  const std::size_t lo = static_cast<std::size_t>(h);
  if (lo + 1 >= sorted.size()) return sorted.back();
  const double frac = h - static_cast<double>(lo);
  return sorted[lo] + frac * (sorted[lo + 1] - sorted[lo]);
}

double median_of(const std::vector<double>& values) {
  std::vector<double> sorted = values;
  std::sort(sorted.begin(), sorted.end());
  return quantile_sorted(sorted, 0.5);
}

}  // namespace

ResultSet build_result_set(const InteractionArchive& archive, const TournamentSpec& spec) {
  if (archive.entries.empty()) {
    throw EmptyArchive("no interactions to aggregate");
  }

  const std::size_t n = spec.players.size();
  const std::size_t reps = spec.repetitions;

  ResultSet rs;
  rs.repetitions = reps;
  rs.names.reserve(n);
  for (const auto& p : spec.players) rs.names.push_back(p->name());

  std::vector<std::vector<double>> norm_sum(n, std::vector<double>(reps, 0.0));
  std::vector<std::vector<std::size_t>> norm_cnt(n, std::vector<std::size_t>(reps, 0));
  std::vector<std::vector<double>> score_sum(n, std::vector<double>(n, 0.0));
  rs.wins.assign(n, std::vector<std::size_t>(reps, 0));
  rs.plays.assign(n, std::vector<std::uint64_t>(n, 0));
  rs.coops.assign(n, std::vector<std::uint64_t>(n, 0));
  rs.matches_played.assign(n, 0);
  rs.good_partner_matches.assign(n, 0);

  for (const ArchiveEntry& e : archive.entries) {
    const std::size_t a = e.index_a;
    const std::size_t b = e.index_b;
    const std::size_t rep = e.repetition;
    const double len = static_cast<double>(e.record.length());
    if (len == 0) continue;
    const std::uint64_t rounds = e.record.length();
    const std::uint64_t ca = count_cooperations(e.record.actions_a);
    const std::uint64_t cb = count_cooperations(e.record.actions_b);

    if (a == b) {
      // One self match is two participations of the same strategy.
      score_sum[a][a] += e.record.score_a + e.record.score_b;
      rs.plays[a][a] += 2 * rounds;
      rs.coops[a][a] += ca + cb;
      rs.matches_played[a] += 2;
      if (ca >= cb) ++rs.good_partner_matches[a];
      if (cb >= ca) ++rs.good_partner_matches[a];
      continue;
    }

    norm_sum[a][rep] += e.record.score_a / len;
    norm_sum[b][rep] += e.record.score_b / len;
    ++norm_cnt[a][rep];
    ++norm_cnt[b][rep];

    if (e.record.score_a > e.record.score_b) ++rs.wins[a][rep];
    if (e.record.score_b > e.record.score_a) ++rs.wins[b][rep];

    score_sum[a][b] += e.record.score_a;
    score_sum[b][a] += e.record.score_b;
    rs.plays[a][b] += rounds;
    rs.plays[b][a] += rounds;
    rs.coops[a][b] += ca;
    rs.coops[b][a] += cb;

    ++rs.matches_played[a];
    ++rs.matches_played[b];
    if (ca >= cb) ++rs.good_partner_matches[a];
    if (cb >= ca) ++rs.good_partner_matches[b];
  }

  rs.normalized_scores.assign(n, std::vector<double>(reps, 0.0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t r = 0; r < reps; ++r) {
      if (norm_cnt[i][r] > 0) {
        rs.normalized_scores[i][r] = norm_sum[i][r] / static_cast<double>(norm_cnt[i][r]);
      }
    }
  }

  rs.payoff_matrix.assign(n, std::vector<std::optional<double>>(n));
  rs.cooperation_rates.assign(n, std::vector<std::optional<double>>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (rs.plays[i][j] > 0) {
        const double plays = static_cast<double>(rs.plays[i][j]);
        rs.payoff_matrix[i][j] = score_sum[i][j] / plays;
        rs.cooperation_rates[i][j] = static_cast<double>(rs.coops[i][j]) / plays;
      }
    }
  }

  std::vector<double> medians(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) medians[i] = median_of(rs.normalized_scores[i]);
  rs.ranking.resize(n);
  std::iota(rs.ranking.begin(), rs.ranking.end(), std::size_t{0});
  std::stable_sort(rs.ranking.begin(), rs.ranking.end(),
                   [&](std::size_t x, std::size_t y) { return medians[x] > medians[y]; });

  return rs;
}

std::vector<std::pair<std::string, double>> rank_strategies(const ResultSet& rs) {
  std::vector<std::pair<std::string, double>> out;
  out.reserve(rs.ranking.size());
  for (std::size_t i : rs.ranking) {
    out.emplace_back(rs.names[i], median_of(rs.normalized_scores[i]));
  }
  return out;
}

std::vector<MoralityRecord> morality_metrics(const ResultSet& rs) {
  const std::size_t n = rs.names.size();
  std::vector<MoralityRecord> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::uint64_t plays = 0;
    std::uint64_t coops = 0;
    for (std::size_t j = 0; j < n; ++j) {
      plays += rs.plays[i][j];
      coops += rs.coops[i][j];
    }
    if (plays > 0) {
      out[i].cooperation_rating = static_cast<double>(coops) / static_cast<double>(plays);
    }
    if (rs.matches_played[i] > 0) {
      out[i].good_partner_rating = static_cast<double>(rs.good_partner_matches[i]) /
                                   static_cast<double>(rs.matches_played[i]);
    }
  }
  return out;
}

std::vector<FiveNumberSummary> emit_boxplot_data(const ResultSet& rs) {
  std::vector<FiveNumberSummary> out;
  out.reserve(rs.names.size());
  for (const auto& scores : rs.normalized_scores) {
    std::vector<double> sorted = scores;
    std::sort(sorted.begin(), sorted.end());
    FiveNumberSummary s;
    if (!sorted.empty()) {
      s.min = sorted.front();
      s.q1 = quantile_sorted(sorted, 0.25);
      s.median = quantile_sorted(sorted, 0.5);
      s.q3 = quantile_sorted(sorted, 0.75);
      s.max = sorted.back();
    }
    out.push_back(s);
  }
  return out;
}

std::vector<std::vector<double>> dense_payoff_matrix(const ResultSet& rs) {
  const std::size_t n = rs.names.size();
  std::vector<std::vector<double>> m(n, std::vector<double>(n, 0.0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (!rs.payoff_matrix[i][j]) {
        throw InvalidValue("payoff_matrix", "'" + rs.names[i] + "' never met '" +
                                                rs.names[j] + "'");
      }
      m[i][j] = *rs.payoff_matrix[i][j];
    }
  }
  return m;
}

}  // namespace axl
