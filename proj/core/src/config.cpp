#include "bidlab/config.hpp"

#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "bidlab/errors.hpp"

namespace bidlab {

using nlohmann::json;

const char* to_string(GameMode m) {
  switch (m) {
    case GameMode::Solve: return "solve";
    case GameMode::Sequential: return "sequential";
    case GameMode::Simultaneous: return "simultaneous";
    case GameMode::Hybrid: return "hybrid";
  }
  return "?";
}

namespace {

std::string join(const std::string& path, const std::string& key) { return path.empty() ? key : path + "." + key; }
std::string at(const std::string& path, std::size_t i) { return path + "[" + std::to_string(i) + "]"; }

const json& field(const json& obj, const std::string& path, const char* key) {
  if (!obj.is_object()) throw ConfigError(path, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) throw ConfigError(join(path, key), "required field missing");
  return *it;
}

const json* optional_field(const json& obj, const std::string& path, const char* key) {
  if (!obj.is_object()) throw ConfigError(path, "expected an object");
  auto it = obj.find(key);
  return it == obj.end() ? nullptr : &*it;
}

void only_keys(const json& obj, const std::string& path, std::initializer_list<const char*> keys) {
  if (!obj.is_object()) throw ConfigError(path, "expected an object");
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    bool known = false;
    for (const char* k : keys) known = known || it.key() == k;
    if (!known) throw ConfigError(join(path, it.key()), "unknown field");
  }
}

std::int64_t as_int(const json& j, const std::string& path) {
  if (!j.is_number_integer()) throw ConfigError(path, "expected an integer");
  return j.get<std::int64_t>();
}

int as_count(const json& j, const std::string& path, int min = 0) {
  const auto v = as_int(j, path);
  if (v < min || v > 100'000'000) throw ConfigError(path, "must be an integer >= " + std::to_string(min));
  return static_cast<int>(v);
}

bool as_bool(const json& j, const std::string& path) {
  if (!j.is_boolean()) throw ConfigError(path, "expected true or false");
  return j.get<bool>();
}

std::string as_string(const json& j, const std::string& path) {
  if (!j.is_string()) throw ConfigError(path, "expected a string");
  return j.get<std::string>();
}

double as_double(const json& j, const std::string& path) {
  if (!j.is_number()) throw ConfigError(path, "expected a number");
  return j.get<double>();
}

/// "1/2", "0.25", 0.25 or 1.
Rational as_probability(const json& j, const std::string& path) {
  try {
    if (j.is_string()) return parse_rational(j.get<std::string>());
    if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
    if (j.is_number()) return rational_from_double(j.get<double>());
  } catch (const Error& e) {
    throw ConfigError(path, e.what());
  }
  throw ConfigError(path, "expected a probability such as \"1/2\" or 0.5");
}

std::pair<Money, Money> as_range(const json& j, const std::string& path) {
  if (!j.is_array() || j.size() != 2) throw ConfigError(path, "expected [low, high]");
  const Money lo = as_int(j[0], at(path, 0)), hi = as_int(j[1], at(path, 1));
  if (lo < 0 || lo > hi) throw ConfigError(path, "need 0 <= low <= high");
  return {lo, hi};
}

std::map<std::string, GoodId> item_labels(const Universe& u) {
  std::map<std::string, GoodId> labels;
  for (GoodId i = 0; i < u.item_count(); ++i) labels[u.item_label(i)] = i;
  return labels;
}

GoodSet as_item_set(const Universe& u, const json& j, const std::string& path) {
  if (!j.is_array()) throw ConfigError(path, "expected a list of item names");
  const auto labels = item_labels(u);
  GoodSet s;
  for (std::size_t k = 0; k < j.size(); ++k) {
    const std::string name = as_string(j[k], at(path, k));
    auto it = labels.find(name);
    if (it == labels.end()) throw ConfigError(at(path, k), "unknown item '" + name + "'");
    s = s.with(it->second);
  }
  return s;
}

PriceDistribution as_distribution(const json& j, const std::string& path) {
  if (!j.is_array() || j.empty()) throw ConfigError(path, "expected a nonempty list of [price, prob] points");
  std::vector<PricePoint> pts;
  for (std::size_t k = 0; k < j.size(); ++k) {
    const std::string p = at(path, k);
    const json& e = j[k];
    if (e.is_array() && e.size() == 2) {
      pts.push_back({as_int(e[0], at(p, 0)), as_probability(e[1], at(p, 1))});
    } else if (e.is_object()) {
      only_keys(e, p, {"price", "prob"});
      pts.push_back({as_int(field(e, p, "price"), join(p, "price")), as_probability(field(e, p, "prob"), join(p, "prob"))});
    } else {
      throw ConfigError(p, "expected [price, prob] or {\"price\":…, \"prob\":…}");
    }
  }
  try {
    return PriceDistribution(std::move(pts));
  } catch (const InvalidArgument& e) {
    throw ConfigError(path, e.what());
  }
}

Universe parse_universe(const json& root, const ValuationConfig& hint_hotel, bool hotel, bool hybrid) {
  std::vector<std::string> names;
  if (const json* g = optional_field(root, "", "goods")) {
    if (!g->is_array() || g->empty()) throw ConfigError("goods", "expected a nonempty list of names");
    std::set<std::string> seen;
    for (std::size_t k = 0; k < g->size(); ++k) {
      names.push_back(as_string((*g)[k], at("goods", k)));
      if (names.back().empty() || !seen.insert(names.back()).second) {
        throw ConfigError(at("goods", k), "good names must be unique and nonempty");
      }
    }
    if (hotel && static_cast<int>(names.size()) != sim::hotel_goods(hint_hotel.hotel)) {
      throw ConfigError("goods", "hotel market needs exactly 2 * nights goods");
    }
  } else if (hotel) {
    names = sim::hotel_good_names(hint_hotel.hotel);
  } else {
    throw ConfigError("goods", "required field missing");
  }

  std::vector<int> supply(names.size(), 1);
  if (const json* s = optional_field(root, "", "supply"); s && !hybrid) {
    if (s->is_number_integer()) {
      supply.assign(names.size(), as_count(*s, "supply", 1));
    } else if (s->is_object()) {
      for (auto it = s->begin(); it != s->end(); ++it) {
        const std::string p = join("supply", it.key());
        auto pos = std::find(names.begin(), names.end(), it.key());
        if (pos == names.end()) throw ConfigError(p, "unknown good");
        supply[static_cast<std::size_t>(pos - names.begin())] = as_count(it.value(), p, 1);
      }
    } else {
      throw ConfigError("supply", "expected an integer or an object of per-good counts");
    }
  }
  try {
    return Universe(std::move(names), std::move(supply));
  } catch (const InvalidArgument& e) {
    throw ConfigError("supply", e.what());
  }
}

ValuationConfig parse_valuation_kind(const json& root) {
  const json& v = field(root, "", "valuation");
  ValuationConfig out;
  if (!v.is_object()) throw ConfigError("valuation", "expected an object");
  if (const json* g = optional_field(v, "valuation", "generator")) {
    const std::string kind = as_string(*g, "valuation.generator");
    if (kind == "pairs") {
      only_keys(v, "valuation", {"generator", "single", "pair", "complement_share"});
      out.kind = ValuationKind::Pairs;
      if (const json* r = optional_field(v, "valuation", "single")) {
        std::tie(out.pairs.single_lo, out.pairs.single_hi) = as_range(*r, "valuation.single");
      }
      if (const json* r = optional_field(v, "valuation", "pair")) {
        std::tie(out.pairs.pair_lo, out.pairs.pair_hi) = as_range(*r, "valuation.pair");
      }
      if (const json* c = optional_field(v, "valuation", "complement_share")) {
        out.pairs.complement_share = as_double(*c, "valuation.complement_share");
        if (out.pairs.complement_share < 0 || out.pairs.complement_share > 1) {
          throw ConfigError("valuation.complement_share", "must lie in [0, 1]");
        }
      }
    } else if (kind == "hotel") {
      only_keys(v, "valuation", {"generator", "nights", "clients", "night", "premium_max", "trip"});
      out.kind = ValuationKind::Hotel;
      auto& h = out.hotel;
      if (const json* n = optional_field(v, "valuation", "nights")) h.nights = as_count(*n, "valuation.nights", 1);
      if (const json* n = optional_field(v, "valuation", "clients")) h.clients = as_count(*n, "valuation.clients", 1);
      if (const json* r = optional_field(v, "valuation", "night")) std::tie(h.night_lo, h.night_hi) = as_range(*r, "valuation.night");
      if (const json* p = optional_field(v, "valuation", "premium_max")) {
        h.premium_hi = as_int(*p, "valuation.premium_max");
      }
      if (const json* r = optional_field(v, "valuation", "trip")) std::tie(h.trip_lo, h.trip_hi) = as_range(*r, "valuation.trip");
      try {
        sim::validate(h);
      } catch (const InvalidArgument& e) {
        throw ConfigError("valuation", e.what());
      }
    } else {
      throw ConfigError("valuation.generator", "unknown generator '" + kind + "' (pairs, hotel)");
    }
  } else if (optional_field(v, "valuation", "bundles")) {
    out.kind = ValuationKind::Bundles;
  } else {
    out.kind = ValuationKind::Table;
  }
  return out;
}

void parse_fixed_valuation(const json& root, const Universe& u, ValuationConfig& out) {
  const json& v = root.at("valuation");
  if (out.kind == ValuationKind::Bundles) {
    only_keys(v, "valuation", {"bundles"});
    const json& list = v.at("bundles");
    if (!list.is_array()) throw ConfigError("valuation.bundles", "expected a list");
    std::vector<BundleSpec> bundles;
    for (std::size_t k = 0; k < list.size(); ++k) {
      const std::string p = at("valuation.bundles", k);
      only_keys(list[k], p, {"requires", "value"});
      BundleSpec b;
      b.value = as_int(field(list[k], p, "value"), join(p, "value"));
      const json& req = field(list[k], p, "requires");
      if (!req.is_object() || req.empty()) throw ConfigError(join(p, "requires"), "expected {good: copies, …}");
      for (auto it = req.begin(); it != req.end(); ++it) {
        const std::string rp = join(join(p, "requires"), it.key());
        const int g = u.find(it.key());
        if (g < 0) throw ConfigError(rp, "unknown good");
        b.requirements.push_back({g, as_count(it.value(), rp, 1)});
      }
      bundles.push_back(std::move(b));
    }
    try {
      out.fixed = Valuation::from_bundles(u.item_goods(), std::move(bundles));
    } catch (const InvalidArgument& e) {
      throw ConfigError("valuation.bundles", e.what());
    }
    return;
  }
  only_keys(v, "valuation", {"entries", "free_disposal"});
  const bool disposal = v.contains("free_disposal") ? as_bool(v["free_disposal"], "valuation.free_disposal") : false;
  const json& list = field(v, "valuation", "entries");
  if (!list.is_array()) throw ConfigError("valuation.entries", "expected a list");
  std::vector<std::pair<GoodSet, Money>> entries;
  for (std::size_t k = 0; k < list.size(); ++k) {
    const std::string p = at("valuation.entries", k);
    const json& e = list[k];
    if (e.is_array() && e.size() == 2) {
      entries.emplace_back(as_item_set(u, e[0], at(p, 0)), as_int(e[1], at(p, 1)));
    } else {
      only_keys(e, p, {"items", "value"});
      entries.emplace_back(as_item_set(u, field(e, p, "items"), join(p, "items")),
                           as_int(field(e, p, "value"), join(p, "value")));
    }
  }
  try {
    out.fixed = Valuation::from_entries(u.item_count(), entries, disposal);
  } catch (const InvalidArgument& e) {
    throw ConfigError("valuation.entries", e.what());
  }
}

void parse_prices(const json& root, const Universe& u, const std::filesystem::path& base, PriceConfig& out) {
  const json* pj = optional_field(root, "", "prices");
  if (!pj) return;
  const json& p = *pj;
  const std::string model = as_string(field(p, "prices", "model"), "prices.model");
  try {
    if (model == "independent" || model == "per_good") {
      only_keys(p, "prices", {"model", "goods"});
      const json& goods = field(p, "prices", "goods");
      std::vector<PriceDistribution> per_good(static_cast<std::size_t>(u.good_count()));
      std::vector<bool> seen(per_good.size(), false);
      if (!goods.is_object()) throw ConfigError("prices.goods", "expected {good: [[price, prob], …]}");
      for (auto it = goods.begin(); it != goods.end(); ++it) {
        const std::string gp = join("prices.goods", it.key());
        const int g = u.find(it.key());
        if (g < 0) throw ConfigError(gp, "unknown good");
        per_good[static_cast<std::size_t>(g)] = as_distribution(it.value(), gp);
        seen[static_cast<std::size_t>(g)] = true;
      }
      for (int g = 0; g < u.good_count(); ++g) {
        if (!seen[static_cast<std::size_t>(g)]) throw ConfigError(join("prices.goods", u.good_name(g)), "no price distribution");
      }
      if (model == "per_good") {
        out.model = PriceModel::per_good(u.item_goods(), std::move(per_good));
      } else {
        std::vector<PriceDistribution> items;
        for (int g : u.item_goods()) items.push_back(per_good[static_cast<std::size_t>(g)]);
        out.model = PriceModel::independent(std::move(items));
      }
    } else if (model == "correlated") {
      only_keys(p, "prices", {"model", "scenarios"});
      const json& list = field(p, "prices", "scenarios");
      if (!list.is_array() || list.empty()) throw ConfigError("prices.scenarios", "expected a nonempty list");
      std::vector<Scenario> scenarios;
      for (std::size_t k = 0; k < list.size(); ++k) {
        const std::string sp = at("prices.scenarios", k);
        only_keys(list[k], sp, {"prices", "prob"});
        Scenario s;
        s.prob = as_probability(field(list[k], sp, "prob"), join(sp, "prob"));
        const json& prices = field(list[k], sp, "prices");
        std::vector<Money> per_good(static_cast<std::size_t>(u.good_count()), -1);
        if (!prices.is_object()) throw ConfigError(join(sp, "prices"), "expected {good: price, …}");
        for (auto it = prices.begin(); it != prices.end(); ++it) {
          const std::string gp = join(join(sp, "prices"), it.key());
          const int g = u.find(it.key());
          if (g < 0) throw ConfigError(gp, "unknown good");
          per_good[static_cast<std::size_t>(g)] = as_int(it.value(), gp);
          if (per_good[static_cast<std::size_t>(g)] < 0) throw ConfigError(gp, "prices must be nonnegative");
        }
        for (int g = 0; g < u.good_count(); ++g) {
          if (per_good[static_cast<std::size_t>(g)] < 0) {
            throw ConfigError(join(join(sp, "prices"), u.good_name(g)), "price missing");
          }
        }
        for (int g : u.item_goods()) s.prices.push_back(per_good[static_cast<std::size_t>(g)]);
        scenarios.push_back(std::move(s));
      }
      out.model = PriceModel::correlated(std::move(scenarios));
    } else if (model == "percentile") {
      only_keys(p, "prices", {"model", "prior", "levels", "table"});
      out.percentile = true;
      if (const json* pr = optional_field(p, "prices", "prior")) {
        out.prior = as_int(*pr, "prices.prior");
        if (out.prior < 0) throw ConfigError("prices.prior", "must be nonnegative");
      }
      if (const json* lv = optional_field(p, "prices", "levels")) {
        if (!lv->is_array()) throw ConfigError("prices.levels", "expected a list of percentiles");
        out.levels.clear();
        for (std::size_t k = 0; k < lv->size(); ++k) out.levels.push_back(as_double((*lv)[k], at("prices.levels", k)));
        sim::PercentilePriceTable::flat(1, out.levels, 0);  // validates the levels
      }
      if (const json* t = optional_field(p, "prices", "table")) {
        std::filesystem::path file = as_string(*t, "prices.table");
        if (file.is_relative()) file = base / file;
        std::ifstream in(file);
        if (!in) throw ConfigError("prices.table", "cannot open " + file.string());
        const json tj = json::parse(in, nullptr, false);
        if (tj.is_discarded()) throw ConfigError("prices.table", "not valid JSON: " + file.string());
        out.table = sim::PercentilePriceTable::from_json(tj);
        if (out.table->goods() != u.good_count()) throw ConfigError("prices.table", "good count differs from goods");
      }
    } else {
      throw ConfigError("prices.model", "unknown model '" + model + "' (independent, per_good, correlated, percentile)");
    }
  } catch (const ConfigError&) {
    throw;
  } catch (const json::exception& e) {
    throw ConfigError("prices", e.what());
  } catch (const InvalidArgument& e) {
    throw ConfigError("prices", e.what());
  }
}

StrategySpec parse_strategy(const json& j, const std::string& path, const char* name_key) {
  StrategySpec s;
  const std::string name = as_string(field(j, path, name_key), join(path, name_key));
  const auto kind = parse_strategy_kind(name);
  if (!kind) throw ConfigError(join(path, name_key), "unknown strategy '" + name + "'");
  s.kind = *kind;
  if (const json* v = optional_field(j, path, "n_gen")) s.n_gen = as_count(*v, join(path, "n_gen"), 1);
  if (const json* v = optional_field(j, path, "n_eval")) s.n_eval = as_count(*v, join(path, "n_eval"), 1);
  if (const json* v = optional_field(j, path, "exact_cap")) {
    s.exact_cap = static_cast<std::size_t>(as_count(*v, join(path, "exact_cap"), 0));
  }
  if (const json* v = optional_field(j, path, "scoring")) {
    const std::string sc = as_string(*v, join(path, "scoring"));
    if (sc == "auto") s.scoring = Scoring::Auto;
    else if (sc == "exact") s.scoring = Scoring::Exact;
    else if (sc == "sampled") s.scoring = Scoring::Sampled;
    else throw ConfigError(join(path, "scoring"), "expected auto, exact or sampled");
  }
  return s;
}

StrategySpec strategy_from(const json& j, const std::string& path) {
  if (j.is_string()) return parse_strategy(json{{"strategy", j}}, path, "strategy");
  only_keys(j, path, {"strategy", "n_gen", "n_eval", "exact_cap", "scoring"});
  return parse_strategy(j, path, "strategy");
}

void parse_teams(const json& root, ExperimentConfig& c) {
  const json* tj = optional_field(root, "", "teams");
  if (!tj) return;
  if (!tj->is_array()) throw ConfigError("teams", "expected a list of teams");
  std::set<std::string> names;
  for (std::size_t k = 0; k < tj->size(); ++k) {
    const std::string p = at("teams", k);
    const json& t = (*tj)[k];
    only_keys(t, p, {"name", "strategy", "size", "n_gen", "n_eval", "exact_cap", "scoring"});
    TeamConfig team;
    team.strategy = parse_strategy(t, p, "strategy");
    team.name = t.contains("name") ? as_string(t["name"], join(p, "name")) : std::string(strategy_name(team.strategy.kind));
    if (t.contains("size")) team.size = as_count(t["size"], join(p, "size"), 1);
    while (!names.insert(team.name).second) team.name += "'";
    c.teams.push_back(std::move(team));
  }
}

void parse_games(const json& root, const Universe& u, ExperimentConfig& c) {
  const json* gj = optional_field(root, "", "games");
  if (!gj) return;
  auto& g = c.games;
  if (gj->is_number_integer()) {
    g.count = as_count(*gj, "games");
    g.mode = GameMode::Hybrid;
    return;
  }
  only_keys(*gj, "games", {"mode", "count", "training", "training_teams", "order", "single_winner", "workers"});
  if (const json* m = optional_field(*gj, "games", "mode")) {
    const std::string mode = as_string(*m, "games.mode");
    if (mode == "solve") g.mode = GameMode::Solve;
    else if (mode == "sequential") g.mode = GameMode::Sequential;
    else if (mode == "simultaneous") g.mode = GameMode::Simultaneous;
    else if (mode == "hybrid") g.mode = GameMode::Hybrid;
    else throw ConfigError("games.mode", "expected solve, sequential, simultaneous or hybrid");
  }
  if (const json* v = optional_field(*gj, "games", "count")) g.count = as_count(*v, "games.count");
  if (const json* v = optional_field(*gj, "games", "training")) g.training = as_count(*v, "games.training");
  if (const json* v = optional_field(*gj, "games", "training_teams")) {
    if (!v->is_array() || v->size() != 2) throw ConfigError("games.training_teams", "expected two strategies");
    g.train_a = strategy_from((*v)[0], "games.training_teams[0]");
    g.train_b = strategy_from((*v)[1], "games.training_teams[1]");
  }
  if (const json* v = optional_field(*gj, "games", "order")) {
    const GoodSet s = as_item_set(u, *v, "games.order");
    const auto labels = item_labels(u);
    for (const auto& name : *v) g.order.push_back(labels.at(name.get<std::string>()));
    if (s.size() != u.item_count() || static_cast<int>(g.order.size()) != u.item_count()) {
      throw ConfigError("games.order", "must list every item exactly once");
    }
  }
  if (const json* v = optional_field(*gj, "games", "single_winner")) g.single_winner = as_bool(*v, "games.single_winner");
  if (const json* v = optional_field(*gj, "games", "workers")) g.workers = static_cast<unsigned>(as_count(*v, "games.workers"));
}

void parse_stats(const json& root, StatsConfig& s) {
  const json* sj = optional_field(root, "", "stats");
  if (!sj) return;
  if (sj->is_array()) {
    s = {false, false, false};
    for (std::size_t k = 0; k < sj->size(); ++k) {
      const std::string name = as_string((*sj)[k], at("stats", k));
      if (name == "z_test") s.z_test = true;
      else if (name == "wilcoxon") s.wilcoxon = true;
      else if (name == "ci") s.ci = true;
      else throw ConfigError(at("stats", k), "unknown statistic (z_test, wilcoxon, ci)");
    }
    return;
  }
  only_keys(*sj, "stats", {"z_test", "wilcoxon", "ci"});
  if (sj->contains("z_test")) s.z_test = as_bool((*sj)["z_test"], "stats.z_test");
  if (sj->contains("wilcoxon")) s.wilcoxon = as_bool((*sj)["wilcoxon"], "stats.wilcoxon");
  if (sj->contains("ci")) s.ci = as_bool((*sj)["ci"], "stats.ci");
}

void parse_output(const json& root, OutputConfig& o) {
  const json* oj = optional_field(root, "", "output");
  if (!oj) return;
  only_keys(*oj, "output", {"dir", "format", "log"});
  if (oj->contains("dir")) o.dir = as_string((*oj)["dir"], "output.dir");
  if (oj->contains("format")) {
    o.format = as_string((*oj)["format"], "output.format");
    if (o.format != "csv" && o.format != "text") throw ConfigError("output.format", "expected csv or text");
  }
  if (oj->contains("log")) o.log = as_bool((*oj)["log"], "output.log");
}

}  // namespace

sim::ValuationGenerator ExperimentConfig::generator() const {
  switch (valuation.kind) {
    case ValuationKind::Table:
    case ValuationKind::Bundles: {
      const Valuation v = instance();
      const std::vector<int> goods = universe.item_goods();
      return [v, goods](Rng&) { return sim::AgentValuation{v, goods}; };
    }
    case ValuationKind::Pairs: return sim::pairs_generator(universe.good_count(), valuation.pairs);
    case ValuationKind::Hotel: return sim::hotel_generator(valuation.hotel);
  }
  throw ConfigError("valuation", "no generator");
}

const Valuation& ExperimentConfig::instance() const {
  if (!valuation.fixed) throw ConfigError("valuation", "this command needs an explicit valuation, not a generator");
  return *valuation.fixed;
}

const PriceModel& ExperimentConfig::price_model() const {
  if (!prices.model) throw ConfigError("prices", "this command needs an exogenous price model");
  return *prices.model;
}

sim::HybridSetup ExperimentConfig::hybrid_setup() const {
  return {universe.good_names(), generator(), auction_supply};
}

ExperimentConfig parse_config(const json& root, const std::filesystem::path& base_dir) {
  only_keys(root, "", {"goods", "valuation", "prices", "supply", "teams", "games", "seed", "stats", "output"});
  ExperimentConfig c;
  c.valuation = parse_valuation_kind(root);
  // The mode decides how `supply` reads, so peek at it before building the universe.
  bool hybrid = false;
  if (const json* g = optional_field(root, "", "games")) {
    hybrid = g->is_number_integer() || (g->is_object() && g->contains("mode") && (*g)["mode"] == "hybrid");
  }
  c.universe = parse_universe(root, c.valuation, c.valuation.kind == ValuationKind::Hotel, hybrid);
  parse_games(root, c.universe, c);

  if (hybrid) {
    if (const json* s = optional_field(root, "", "supply")) c.auction_supply = as_count(*s, "supply", 1);
  }
  if (c.valuation.kind == ValuationKind::Table || c.valuation.kind == ValuationKind::Bundles) {
    parse_fixed_valuation(root, c.universe, c.valuation);
  } else if (c.valuation.kind == ValuationKind::Pairs && c.universe.good_count() > kMaxGoods) {
    throw ConfigError("goods", "pairs generator supports at most 20 goods");
  }
  parse_prices(root, c.universe, base_dir, c.prices);
  parse_teams(root, c);
  if (const json* s = optional_field(root, "", "seed")) {
    if (!s->is_number_unsigned() && !s->is_number_integer()) throw ConfigError("seed", "expected a nonnegative integer");
    if (s->is_number_integer() && !s->is_number_unsigned() && s->get<std::int64_t>() < 0) {
      throw ConfigError("seed", "expected a nonnegative integer");
    }
    c.seed = s->get<std::uint64_t>();
  } else if (c.games.mode != GameMode::Solve) {
    throw ConfigError("seed", "required field missing (games need an explicit seed)");
  }
  parse_stats(root, c.stats);
  parse_output(root, c.output);

  // Mode-specific requirements.
  switch (c.games.mode) {
    case GameMode::Solve:
      if (!c.valuation.fixed) throw ConfigError("valuation", "solve mode needs an explicit valuation");
      if (!c.prices.model) throw ConfigError("prices", "solve mode needs an exogenous price model");
      break;
    case GameMode::Sequential:
    case GameMode::Simultaneous:
      if (!c.prices.model) throw ConfigError("prices", "exogenous games need a price model");
      if (c.valuation.kind == ValuationKind::Hotel) throw ConfigError("valuation.generator", "hotel markets need hybrid games");
      if (c.valuation.kind == ValuationKind::Pairs && c.universe.item_count() != c.universe.good_count()) {
        throw ConfigError("supply", "the pairs generator needs unit supply");
      }
      if (c.teams.empty()) throw ConfigError("teams", "at least one team is required");
      break;
    case GameMode::Hybrid:
      if (!c.prices.percentile) throw ConfigError("prices.model", "hybrid games need the percentile model");
      if (c.teams.size() != 2) throw ConfigError("teams", "hybrid games need exactly two teams");
      if (c.teams[0].size != c.teams[1].size) throw ConfigError("teams", "hybrid teams must have equal size");
      if (c.valuation.kind == ValuationKind::Bundles) throw ConfigError("valuation", "hybrid games need a table or generator valuation");
      break;
  }
  for (std::size_t k = 0; k < c.teams.size(); ++k) {
    if (c.teams[k].strategy.kind == StrategyKind::SequentialOptimal && c.games.mode != GameMode::Sequential) {
      throw ConfigError(join(at("teams", k), "strategy"), "seq-opt only plays sequential games");
    }
  }
  return c;
}

ExperimentConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("", "cannot open config " + path.string());
  const json j = json::parse(in, nullptr, false, true);
  if (j.is_discarded()) throw ConfigError("", "config is not valid JSON: " + path.string());
  return parse_config(j, path.parent_path());
}

GoodSet parse_item_list(const Universe& u, const std::string& csv, const std::string& what) {
  json list = json::array();
  std::stringstream ss(csv);
  for (std::string item; std::getline(ss, item, ',');) {
    if (!item.empty()) list.push_back(item);
  }
  return as_item_set(u, list, what);
}

}  // namespace bidlab
