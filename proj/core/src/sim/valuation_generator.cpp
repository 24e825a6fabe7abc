#include "bidlab/sim/valuation_generator.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "bidlab/errors.hpp"

namespace bidlab::sim {

namespace {

Money uniform_money(Rng& rng, Money lo, Money hi) {
  return std::uniform_int_distribution<Money>(lo, hi)(rng);
}

}  // namespace

ValuationGenerator fixed_valuation(Valuation v) {
  std::vector<int> goods(static_cast<std::size_t>(v.size()));
  std::iota(goods.begin(), goods.end(), 0);
  return [v = std::move(v), goods = std::move(goods)](Rng&) { return AgentValuation{v, goods}; };
}

Valuation random_pairs_valuation(int goods, Rng& rng, const PairsParams& params) {
  if (goods < 1 || goods > kMaxGoods) throw InvalidArgument("pairs valuation needs 1..20 goods");
  if (params.single_lo < 0 || params.single_lo > params.single_hi || params.pair_lo < 0 ||
      params.pair_lo > params.pair_hi) {
    throw InvalidArgument("pairs valuation: bad value range");
  }
  std::vector<int> perm(static_cast<std::size_t>(goods));
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);

  // Each group contributes a value depending only on which of its goods are present.
  struct Group {
    std::vector<int> goods;
    bool complementary = false;
    std::vector<Money> single;
    Money pair = 0;
  };
  std::vector<Group> groups;
  for (std::size_t k = 0; k < perm.size(); k += 2) {
    Group g;
    if (k + 1 < perm.size()) {
      g.goods = {perm[k], perm[k + 1]};
      g.complementary = uniform01(rng) < params.complement_share;
      if (g.complementary) {
        g.pair = uniform_money(rng, params.pair_lo, params.pair_hi);
      } else {
        g.single = {uniform_money(rng, params.single_lo, params.single_hi),
                    uniform_money(rng, params.single_lo, params.single_hi)};
      }
    } else {
      g.goods = {perm[k]};
      g.single = {uniform_money(rng, params.single_lo, params.single_hi)};
    }
    groups.push_back(std::move(g));
  }

  std::vector<Money> table(std::size_t{1} << goods, 0);
  for (std::uint32_t s = 0; s < table.size(); ++s) {
    const GoodSet set(s);
    Money total = 0;
    for (const auto& g : groups) {
      if (g.complementary) {
        if (set.contains(g.goods[0]) && set.contains(g.goods[1])) total += g.pair;
        continue;
      }
      Money best = 0;
      for (std::size_t i = 0; i < g.goods.size(); ++i) {
        if (set.contains(g.goods[i])) best = std::max(best, g.single[i]);
      }
      total += best;
    }
    table[s] = total;
  }
  return Valuation::from_table(goods, std::move(table));
}

ValuationGenerator pairs_generator(int goods, PairsParams params) {
  std::vector<int> item_goods(static_cast<std::size_t>(goods));
  std::iota(item_goods.begin(), item_goods.end(), 0);
  return [goods, params, item_goods](Rng& rng) {
    return AgentValuation{random_pairs_valuation(goods, rng, params), item_goods};
  };
}

int hotel_goods(const HotelParams& p) { return 2 * p.nights; }

std::vector<std::string> hotel_good_names(const HotelParams& p) {
  std::vector<std::string> names;
  for (const char* hotel : {"budget", "premium"}) {
    for (int n = 0; n < p.nights; ++n) names.push_back(std::string(hotel) + "-" + std::to_string(n + 1));
  }
  return names;
}

void validate(const HotelParams& p) {
  if (p.nights < 1 || p.clients < 1) throw InvalidArgument("hotel market needs at least one night and one client");
  if (p.night_lo < 0 || p.night_lo > p.night_hi || p.premium_hi < 0 || p.trip_lo < 0 || p.trip_lo > p.trip_hi) {
    throw InvalidArgument("hotel market: bad value range");
  }
  // Worst case every client stays every night in both hotels' copy lists.
  if (2 * p.nights * p.clients > kMaxGoods) {
    throw InvalidArgument("hotel market too large: 2 * nights * clients must be <= 20");
  }
}

AgentValuation hotel_valuation(const HotelParams& p, const std::vector<HotelClient>& clients) {
  const int goods = hotel_goods(p);
  std::vector<int> copies(static_cast<std::size_t>(goods), 0);
  for (const auto& c : clients) {
    for (int n = c.arrive; n < c.depart; ++n) {
      ++copies[static_cast<std::size_t>(n)];
      ++copies[static_cast<std::size_t>(p.nights + n)];
    }
  }
  std::vector<int> item_goods;
  for (int g = 0; g < goods; ++g) item_goods.insert(item_goods.end(), static_cast<std::size_t>(copies[g]), g);
  const int items = static_cast<int>(item_goods.size());

  // Value depends only on how many copies of each good are present.
  std::map<std::vector<int>, Money> memo;
  auto best_assignment = [&](const std::vector<int>& have) {
    Money best = 0;
    std::vector<int> used(have.size());
    // choice[c] in {0: none, 1: budget, 2: premium}, as a base-3 odometer.
    std::vector<int> choice(clients.size(), 0);
    while (true) {
      std::fill(used.begin(), used.end(), 0);
      Money total = 0;
      bool ok = true;
      for (std::size_t c = 0; c < clients.size() && ok; ++c) {
        if (choice[c] == 0) continue;
        const auto& cl = clients[c];
        const int base = (choice[c] - 1) * p.nights;
        for (int n = cl.arrive; n < cl.depart; ++n) {
          if (++used[static_cast<std::size_t>(base + n)] > have[static_cast<std::size_t>(base + n)]) ok = false;
        }
        total += cl.trip + cl.per_night * (cl.depart - cl.arrive) + (choice[c] == 2 ? cl.premium : 0);
      }
      if (ok) best = std::max(best, total);
      std::size_t k = 0;
      while (k < choice.size() && ++choice[k] == 3) choice[k++] = 0;
      if (k == choice.size()) break;
    }
    return best;
  };

  std::vector<Money> table(std::size_t{1} << items, 0);
  std::vector<int> have(static_cast<std::size_t>(goods));
  for (std::uint32_t s = 1; s < table.size(); ++s) {
    std::fill(have.begin(), have.end(), 0);
    for (GoodId i : GoodSet(s)) ++have[static_cast<std::size_t>(item_goods[static_cast<std::size_t>(i)])];
    auto [it, fresh] = memo.try_emplace(have, 0);
    if (fresh) it->second = best_assignment(have);
    table[s] = it->second;
  }
  return AgentValuation{Valuation::from_table(items, std::move(table)), std::move(item_goods)};
}

std::vector<HotelClient> draw_hotel_clients(const HotelParams& p, Rng& rng) {
  std::vector<HotelClient> out;
  // Stays are uniform over the nights·(nights+1)/2 intervals.
  const int stays = p.nights * (p.nights + 1) / 2;
  for (int c = 0; c < p.clients; ++c) {
    int pick = std::uniform_int_distribution<int>(0, stays - 1)(rng);
    HotelClient cl;
    for (int a = 0; a < p.nights; ++a) {
      const int here = p.nights - a;
      if (pick < here) {
        cl.arrive = a;
        cl.depart = a + pick + 1;
        break;
      }
      pick -= here;
    }
    cl.per_night = uniform_money(rng, p.night_lo, p.night_hi);
    cl.premium = uniform_money(rng, 0, p.premium_hi);
    cl.trip = uniform_money(rng, p.trip_lo, p.trip_hi);
    out.push_back(cl);
  }
  return out;
}

ValuationGenerator hotel_generator(HotelParams p) {
  validate(p);
  return [p](Rng& rng) { return hotel_valuation(p, draw_hotel_clients(p, rng)); };
}

}  // namespace bidlab::sim
