#include "bidlab/sim/games.hpp"

#include <algorithm>
#include <numeric>
#include <optional>

#include "bidlab/errors.hpp"
#include "bidlab/sequential_mdp.hpp"
#include "bidlab/sim/hybrid_auction.hpp"

namespace bidlab::sim {

std::vector<double> average_ranks(std::span<const Money> scores) {
  const std::size_t n = scores.size();
  std::vector<std::size_t> idx(n);
  std::iota(idx.begin(), idx.end(), 0);
  std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return scores[a] > scores[b]; });
  std::vector<double> ranks(n);
  for (std::size_t i = 0; i < n;) {
    std::size_t j = i;
    while (j < n && scores[idx[j]] == scores[idx[i]]) ++j;
    const double shared = (static_cast<double>(i + 1) + static_cast<double>(j)) / 2.0;
    for (std::size_t k = i; k < j; ++k) ranks[idx[k]] = shared;
    i = j;
  }
  return ranks;
}

namespace {

std::vector<AgentValuation> draw_valuations(std::size_t agents, const ValuationGenerator& gen, Rng& rng,
                                            int items) {
  std::vector<AgentValuation> out;
  for (std::size_t a = 0; a < agents; ++a) {
    out.push_back(gen(rng));
    if (items >= 0 && out.back().valuation.size() != items) {
      throw InvalidArgument("generated valuation does not match the price model's item count");
    }
  }
  return out;
}

/// Agents that win an item at `price` given their bids.
std::vector<std::size_t> exogenous_winners(std::span<const Money> bids, Money price, bool single_winner) {
  std::vector<std::size_t> winners;
  for (std::size_t a = 0; a < bids.size(); ++a) {
    if (bids[a] >= price) winners.push_back(a);
  }
  if (single_winner && winners.size() > 1) {
    std::size_t best = winners.front();
    for (std::size_t a : winners) {
      if (bids[a] > bids[best]) best = a;
    }
    winners = {best};
  }
  return winners;
}

StrategySpec seeded(StrategySpec spec, std::uint64_t seed) {
  spec.seed = seed;
  return spec;
}

}  // namespace

GameResult run_sequential_game(std::span<const StrategySpec> agents, const ValuationGenerator& gen,
                               const PriceModel& m, std::vector<GoodId> order, std::uint64_t seed,
                               ExogenousOptions options) {
  const std::size_t n_agents = agents.size();
  Rng rng(seed);
  const auto vals = draw_valuations(n_agents, gen, rng, m.item_count());
  const Scenario draw = sample_scenario(m, rng);

  std::vector<std::optional<ValueTable>> tables(n_agents);
  for (std::size_t a = 0; a < n_agents; ++a) {
    if (agents[a].kind == StrategyKind::SequentialOptimal) {
      tables[a] = backward_induction(vals[a].valuation, m, order);
    }
  }

  std::vector<GoodSet> held(n_agents);
  std::vector<Money> paid(n_agents, 0);
  GoodSet remaining;
  for (GoodId g : order) remaining = remaining.with(g);

  std::vector<Money> bids(n_agents);
  for (std::size_t j = 0; j < order.size(); ++j) {
    const GoodId good = order[j];
    for (std::size_t a = 0; a < n_agents; ++a) {
      if (tables[a]) {
        bids[a] = optimal_bid({held[a], static_cast<int>(j)}, *tables[a]);
      } else {
        const auto spec = seeded(agents[a], derive_seed(seed, 1 + j * n_agents + a));
        bids[a] = compute_bids(spec, m, vals[a].valuation, {held[a], remaining})[static_cast<std::size_t>(good)];
      }
    }
    const Money price = draw.prices[static_cast<std::size_t>(good)];
    for (std::size_t a : exogenous_winners(bids, price, options.single_winner)) {
      held[a] = held[a].with(good);
      paid[a] += price;
    }
    remaining = remaining.without(good);
  }

  GameResult r;
  for (std::size_t a = 0; a < n_agents; ++a) r.scores.push_back(vals[a].valuation(held[a]) - paid[a]);
  r.ranks = average_ranks(r.scores);
  return r;
}

GameResult run_simultaneous_game(std::span<const StrategySpec> agents, const ValuationGenerator& gen,
                                 const PriceModel& m, std::uint64_t seed, ExogenousOptions options) {
  const std::size_t n_agents = agents.size();
  Rng rng(seed);
  const auto vals = draw_valuations(n_agents, gen, rng, m.item_count());
  const Scenario draw = sample_scenario(m, rng);

  std::vector<BidVector> bids;
  for (std::size_t a = 0; a < n_agents; ++a) {
    const auto spec = seeded(agents[a], derive_seed(seed, 1 + a));
    bids.push_back(compute_bids(spec, m, vals[a].valuation, BiddingContext::everything(m.item_count())));
  }

  std::vector<GoodSet> won(n_agents);
  std::vector<Money> paid(n_agents, 0);
  std::vector<Money> item_bids(n_agents);
  for (GoodId x = 0; x < m.item_count(); ++x) {
    for (std::size_t a = 0; a < n_agents; ++a) item_bids[a] = bids[a][static_cast<std::size_t>(x)];
    const Money price = draw.prices[static_cast<std::size_t>(x)];
    for (std::size_t a : exogenous_winners(item_bids, price, options.single_winner)) {
      won[a] = won[a].with(x);
      paid[a] += price;
    }
  }

  GameResult r;
  for (std::size_t a = 0; a < n_agents; ++a) r.scores.push_back(vals[a].valuation.disposal_value(won[a]) - paid[a]);
  r.ranks = average_ranks(r.scores);
  return r;
}

HybridGameRecord run_hybrid_game(std::span<const HybridAgent> agents, const HybridSetup& setup,
                                 std::span<const PercentilePriceTable> team_tables, std::uint64_t seed,
                                 GameLogBuffer* log, int game_index) {
  const std::size_t n_agents = agents.size();
  const int n_goods = static_cast<int>(setup.goods.size());
  for (const auto& a : agents) {
    if (a.team < 0 || static_cast<std::size_t>(a.team) >= team_tables.size()) {
      throw InvalidArgument("hybrid agent refers to a team without a price table");
    }
    if (team_tables[static_cast<std::size_t>(a.team)].goods() != n_goods) {
      throw InvalidArgument("price table good count differs from the market");
    }
  }

  Rng rng(seed);
  const auto vals = draw_valuations(n_agents, setup.valuations, rng, -1);
  std::vector<std::vector<GoodSet>> items_of(n_agents, std::vector<GoodSet>(static_cast<std::size_t>(n_goods)));
  for (std::size_t a = 0; a < n_agents; ++a) {
    const auto& ig = vals[a].item_goods;
    for (std::size_t i = 0; i < ig.size(); ++i) {
      if (ig[i] < 0 || ig[i] >= n_goods) throw InvalidArgument("valuation item refers to an unknown good");
      auto& s = items_of[a][static_cast<std::size_t>(ig[i])];
      s = s.with(static_cast<GoodId>(i));
    }
  }

  std::vector<HybridAuction> auctions(static_cast<std::size_t>(n_goods), HybridAuction(setup.supply));
  std::vector<GoodSet> held(n_agents);
  std::vector<Money> paid(n_agents, 0);
  HybridGameRecord rec;
  rec.clearing_prices.assign(static_cast<std::size_t>(n_goods), 0);

  std::vector<std::size_t> turn(n_agents);
  std::iota(turn.begin(), turn.end(), 0);
  std::vector<Money> quotes(static_cast<std::size_t>(n_goods), 0);

  for (int round = 0; round < n_goods; ++round) {
    for (int g = 0; g < n_goods; ++g) {
      quotes[static_cast<std::size_t>(g)] = auctions[static_cast<std::size_t>(g)].closed() ? 0 : auctions[static_cast<std::size_t>(g)].quote();
    }
    // Every agent decides from the same quote snapshot.
    std::vector<BidVector> bids(n_agents);
    for (std::size_t a = 0; a < n_agents; ++a) {
      GoodSet market;
      for (int g = 0; g < n_goods; ++g) {
        if (!auctions[static_cast<std::size_t>(g)].closed()) market = market | items_of[a][static_cast<std::size_t>(g)];
      }
      if (market.empty()) continue;
      const auto& table = team_tables[static_cast<std::size_t>(agents[a].team)];
      const PriceModel model = table.model(vals[a].item_goods, quotes);
      const auto spec = seeded(agents[a].strategy,
                               derive_seed(seed, 1 + static_cast<std::uint64_t>(round) * n_agents + a));
      bids[a] = compute_bids(spec, model, vals[a].valuation, {held[a], market});
    }

    std::shuffle(turn.begin(), turn.end(), rng);
    for (std::size_t a : turn) {
      if (bids[a].empty()) continue;
      for (int g = 0; g < n_goods; ++g) {
        auto& auction = auctions[static_cast<std::size_t>(g)];
        if (auction.closed()) continue;
        std::vector<Money> units;
        for (GoodId i : items_of[a][static_cast<std::size_t>(g)]) {
          if (bids[a][static_cast<std::size_t>(i)] > 0) units.push_back(bids[a][static_cast<std::size_t>(i)]);
        }
        if (units.empty()) continue;
        std::sort(units.rbegin(), units.rend());
        const BidVerdict verdict = auction.submit(static_cast<int>(a), units);
        if (log) log->bid(game_index, round, static_cast<int>(a), g, units, to_string(verdict));
      }
    }

    std::vector<int> open;
    for (int g = 0; g < n_goods; ++g) {
      if (!auctions[static_cast<std::size_t>(g)].closed()) open.push_back(g);
    }
    const int good = open[std::uniform_int_distribution<std::size_t>(0, open.size() - 1)(rng)];
    const Clearing c = auctions[static_cast<std::size_t>(good)].close();
    rec.clearing_prices[static_cast<std::size_t>(good)] = c.price;
    rec.close_order.push_back(good);
    nlohmann::json awards = nlohmann::json::array();
    for (const auto& w : c.awards) {
      const auto a = static_cast<std::size_t>(w.agent);
      int given = 0;
      for (GoodId i : items_of[a][static_cast<std::size_t>(good)]) {
        if (given == w.units) break;
        held[a] = held[a].with(i);
        ++given;
      }
      paid[a] += c.price * w.units;
      awards.push_back({{"agent", w.agent}, {"units", w.units}});
    }
    if (log) log->close(game_index, round, good, c.price, c.units_sold, awards);
  }

  for (std::size_t a = 0; a < n_agents; ++a) {
    rec.result.scores.push_back(vals[a].valuation.disposal_value(held[a]) - paid[a]);
  }
  rec.result.ranks = average_ranks(rec.result.scores);
  if (log) {
    for (std::size_t a = 0; a < n_agents; ++a) {
      log->score(game_index, static_cast<int>(a), agents[a].team, rec.result.scores[a], rec.result.ranks[a]);
    }
  }
  return rec;
}

}  // namespace bidlab::sim
