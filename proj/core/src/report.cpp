#include "bidlab/report.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "bidlab/errors.hpp"

namespace bidlab {

ComparisonReport compare_teams(std::string team_a, std::string team_b, std::span<const GameRow> games,
                               const StatsConfig& stats, bool strict) {
  ComparisonReport r;
  r.team_a = std::move(team_a);
  r.team_b = std::move(team_b);
  r.games = static_cast<int>(games.size());
  if (games.empty()) return r;

  std::vector<double> a, b;
  std::vector<std::pair<double, double>> ranks;
  for (const auto& g : games) {
    a.push_back(g.mean_a);
    b.push_back(g.mean_b);
    ranks.emplace_back(g.rank_a, g.rank_b);
  }
  r.mean_a = sample_mean(a);
  r.mean_b = sample_mean(b);

  auto guarded = [&](const char* what, auto&& compute) {
    try {
      compute();
    } catch (const StatisticsError& e) {
      if (strict) throw;
      r.notes.push_back(std::string(what) + ": " + e.what());
    }
  };
  if (stats.z_test) guarded("z-test", [&] { r.z_test = z_test(a, b); });
  if (stats.wilcoxon) guarded("wilcoxon", [&] { r.wilcoxon = wilcoxon_signed_rank(ranks).p; });
  if (stats.ci) {
    r.ci_a = mean_ci(a);
    r.ci_b = mean_ci(b);
  }
  return r;
}

TableFormat parse_format(std::string_view s) {
  if (s == "csv") return TableFormat::Csv;
  if (s == "text") return TableFormat::Text;
  throw InvalidArgument("format must be csv or text");
}

std::string format_double(double x) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, x, std::chars_format::general);
  return std::string(buf, res.ptr);
}

namespace {

std::string opt(const std::optional<double>& x) { return x ? format_double(*x) : std::string(); }

std::string fixed(const std::optional<double>& x, int digits) {
  if (!x) return "NA";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, *x);
  return buf;
}

std::optional<double> parse_opt(const std::string& s, const char* what) {
  if (s.empty()) return std::nullopt;
  double x = 0;
  auto res = std::from_chars(s.data(), s.data() + s.size(), x);
  if (res.ec != std::errc() || res.ptr != s.data() + s.size()) {
    throw InvalidArgument(std::string("bad number in column ") + what + ": '" + s + "'");
  }
  return x;
}

std::vector<std::string> lines_of(std::string_view text) {
  std::vector<std::string> out;
  std::string line;
  std::istringstream in{std::string(text)};
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (!line.empty()) out.push_back(line);
  }
  return out;
}

}  // namespace

std::string csv_field(std::string_view s) {
  if (s.find_first_of(",\"\n") == std::string_view::npos) return std::string(s);
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::vector<std::string> split_csv_line(std::string_view line) {
  std::vector<std::string> out(1);
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
        out.back() += '"';
        ++i;
      } else if (c == '"') {
        quoted = false;
      } else {
        out.back() += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      out.emplace_back();
    } else {
      out.back() += c;
    }
  }
  return out;
}

std::string emit_table(std::span<const ComparisonReport> reports, TableFormat format) {
  std::ostringstream out;
  if (format == TableFormat::Csv) {
    out << "team_a,team_b,mean_a,mean_b,z_test,wilcoxon,games\n";
    for (const auto& r : reports) {
      out << csv_field(r.team_a) << ',' << csv_field(r.team_b) << ',' << opt(r.mean_a) << ',' << opt(r.mean_b) << ','
          << opt(r.z_test) << ',' << opt(r.wilcoxon) << ',' << r.games << '\n';
    }
    return out.str();
  }
  std::vector<std::vector<std::string>> rows{{"Teams", "Means", "z-test", "Wilcoxon", "Games"}};
  for (const auto& r : reports) {
    rows.push_back({r.team_a + " < " + r.team_b, fixed(r.mean_a, 2) + "  " + fixed(r.mean_b, 2), fixed(r.z_test, 4),
                    fixed(r.wilcoxon, 4), std::to_string(r.games)});
  }
  std::vector<std::size_t> width(rows[0].size(), 0);
  for (const auto& row : rows) {
    for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
  }
  for (const auto& row : rows) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      out << row[c];
      if (c + 1 < row.size()) out << std::string(width[c] - row[c].size() + 2, ' ');
    }
    out << '\n';
  }
  return out.str();
}

std::vector<ComparisonReport> parse_table_csv(std::string_view csv) {
  const auto lines = lines_of(csv);
  if (lines.empty() || lines[0] != "team_a,team_b,mean_a,mean_b,z_test,wilcoxon,games") {
    throw InvalidArgument("comparison CSV lacks its header row");
  }
  std::vector<ComparisonReport> out;
  for (std::size_t k = 1; k < lines.size(); ++k) {
    const auto f = split_csv_line(lines[k]);
    if (f.size() != 7) throw InvalidArgument("comparison CSV row " + std::to_string(k) + " has the wrong field count");
    ComparisonReport r;
    r.team_a = f[0];
    r.team_b = f[1];
    r.mean_a = parse_opt(f[2], "mean_a");
    r.mean_b = parse_opt(f[3], "mean_b");
    r.z_test = parse_opt(f[4], "z_test");
    r.wilcoxon = parse_opt(f[5], "wilcoxon");
    const auto games = parse_opt(f[6], "games");
    r.games = games ? static_cast<int>(*games) : 0;
    out.push_back(std::move(r));
  }
  return out;
}

std::string emit_ci_csv(std::span<const ComparisonReport> reports) {
  std::ostringstream out;
  out << "team,n,mean,se,lo,hi\n";
  auto row = [&](const std::string& team, const std::optional<MeanCI>& ci) {
    if (!ci) return;
    out << csv_field(team) << ',' << ci->n << ',' << format_double(ci->mean) << ',' << format_double(ci->se) << ','
        << format_double(ci->lo) << ',' << format_double(ci->hi) << '\n';
  };
  for (const auto& r : reports) {
    row(r.team_a, r.ci_a);
    row(r.team_b, r.ci_b);
  }
  return out.str();
}

std::string emit_games_csv(std::span<const GameRow> rows) {
  std::ostringstream out;
  out << "game,mean_a,mean_b,rank_a,rank_b\n";
  for (const auto& g : rows) {
    out << g.game << ',' << format_double(g.mean_a) << ',' << format_double(g.mean_b) << ','
        << format_double(g.rank_a) << ',' << format_double(g.rank_b) << '\n';
  }
  return out.str();
}

std::vector<GameRow> parse_games_csv(std::string_view csv) {
  const auto lines = lines_of(csv);
  if (lines.empty() || lines[0] != "game,mean_a,mean_b,rank_a,rank_b") {
    throw InvalidArgument("per-game CSV lacks the header game,mean_a,mean_b,rank_a,rank_b");
  }
  std::vector<GameRow> out;
  for (std::size_t k = 1; k < lines.size(); ++k) {
    const auto f = split_csv_line(lines[k]);
    if (f.size() != 5) throw InvalidArgument("per-game CSV row " + std::to_string(k) + " has the wrong field count");
    GameRow g;
    g.game = static_cast<int>(parse_opt(f[0], "game").value_or(-1));
    g.mean_a = parse_opt(f[1], "mean_a").value_or(0);
    g.mean_b = parse_opt(f[2], "mean_b").value_or(0);
    g.rank_a = parse_opt(f[3], "rank_a").value_or(0);
    g.rank_b = parse_opt(f[4], "rank_b").value_or(0);
    out.push_back(g);
  }
  return out;
}

}  // namespace bidlab
