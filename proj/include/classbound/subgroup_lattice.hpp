#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <set>
#include <vector>

#include "classbound/enumerated_group.hpp"

namespace classbound {

namespace detail {

// Index multiplication table for small groups; makes subgroup-lattice walks
// cheap integer work instead of repeated element products.
template <class E>
std::vector<std::uint32_t> mul_table(const EnumeratedGroup<E>& g) {
  std::uint32_t n = static_cast<std::uint32_t>(g.order());
  std::vector<std::uint32_t> t(static_cast<std::size_t>(n) * n);
  for (std::uint32_t a = 0; a < n; ++a)
    for (std::uint32_t b = 0; b < n; ++b)
      t[static_cast<std::size_t>(a) * n + b] = g.index_of(g.element(a) * g.element(b));
  return t;
}

inline std::vector<std::uint32_t> close_indices(const std::vector<std::uint32_t>& table,
                                                std::uint32_t n, std::uint32_t id,
                                                std::vector<std::uint32_t> seeds) {
  std::vector<bool> in(n, false);
  std::vector<std::uint32_t> members{id};
  in[id] = true;
  for (std::uint32_t s : seeds)
    if (!in[s]) {
      in[s] = true;
      members.push_back(s);
    }
  std::vector<std::uint32_t> gens = seeds;
  for (std::size_t qi = 0; qi < members.size(); ++qi) {
    for (std::uint32_t s : gens) {
      std::uint32_t y = table[static_cast<std::size_t>(members[qi]) * n + s];
      if (!in[y]) {
        in[y] = true;
        members.push_back(y);
      }
    }
  }
  std::sort(members.begin(), members.end());
  return members;
}

}  // namespace detail

// Every subgroup of a small group, found as the join closure of the cyclic
// subgroups. Complete because any subgroup is generated by its elements, i.e.
// is an iterated join of cyclic subgroups. Sorted by (order, members).
template <class E>
std::vector<Subgroup<E>> all_subgroups(const EnumeratedGroup<E>& g) {
  require(g.order() <= config().exhaustive_subgroup_cap, Errc::CapExceeded,
          "exhaustive subgroup enumeration is limited to order " +
              std::to_string(config().exhaustive_subgroup_cap));
  std::uint32_t n = static_cast<std::uint32_t>(g.order());
  std::vector<std::uint32_t> table = detail::mul_table(g);
  std::uint32_t id = g.identity_index();
  std::set<std::vector<std::uint32_t>> seen;
  std::vector<std::vector<std::uint32_t>> subs;
  auto add = [&](std::vector<std::uint32_t> members) {
    if (seen.insert(members).second) subs.push_back(std::move(members));
  };
  for (std::uint32_t i = 0; i < n; ++i) add(detail::close_indices(table, n, id, {i}));
  for (std::size_t a = 0; a < subs.size(); ++a)
    for (std::size_t b = 0; b < a; ++b) {
      std::vector<std::uint32_t> u = subs[a];
      u.insert(u.end(), subs[b].begin(), subs[b].end());
      add(detail::close_indices(table, n, id, std::move(u)));
    }
  std::sort(subs.begin(), subs.end(), [](const auto& x, const auto& y) {
    return x.size() != y.size() ? x.size() < y.size() : x < y;
  });
  std::vector<Subgroup<E>> out;
  for (auto& m : subs) out.push_back(Subgroup<E>::from_members_trusted(g, std::move(m)));
  return out;
}

// All normal subgroups: distinct normal closures of cyclic subgroups, closed
// under joins. Works on groups well beyond the exhaustive-lattice cap since
// the number of normal subgroups stays small.
template <class E>
std::vector<Subgroup<E>> normal_subgroups(const EnumeratedGroup<E>& g) {
  std::set<std::vector<std::uint32_t>> seen;
  std::vector<std::vector<std::uint32_t>> subs;
  std::vector<std::vector<E>> gens_of;
  auto add = [&](std::vector<std::uint32_t> members, std::vector<E> gens) {
    if (seen.insert(members).second) {
      subs.push_back(std::move(members));
      gens_of.push_back(std::move(gens));
    }
  };
  add({g.identity_index()}, {});
  std::set<std::vector<std::uint32_t>> cyclic_seen;
  for (std::uint32_t i = 0; i < g.order(); ++i) {
    std::vector<std::uint32_t> powers{g.identity_index()};
    std::uint32_t x = i;
    while (x != g.identity_index()) {
      powers.push_back(x);
      x = g.mul(x, i);
    }
    std::sort(powers.begin(), powers.end());
    if (!cyclic_seen.insert(powers).second) continue;
    Subgroup<E> nc = normal_closure(g, {g.element(i)});
    add(nc.members(), {g.element(i)});
  }
  for (std::size_t a = 0; a < subs.size(); ++a)
    for (std::size_t b = 0; b < a; ++b) {
      std::vector<E> u = gens_of[a];
      u.insert(u.end(), gens_of[b].begin(), gens_of[b].end());
      if (u.empty()) continue;
      // join of normal closures = normal closure of the combined seeds
      Subgroup<E> j = normal_closure(g, u);
      add(j.members(), std::move(u));
    }
  std::sort(subs.begin(), subs.end(), [](const auto& x, const auto& y) {
    return x.size() != y.size() ? x.size() < y.size() : x < y;
  });
  std::vector<Subgroup<E>> out;
  for (auto& m : subs) out.push_back(Subgroup<E>::from_members_trusted(g, std::move(m)));
  return out;
}

// A Sylow 2-subgroup by greedy growth: any 2-subgroup lies inside some Sylow
// 2-subgroup, so as long as the current group is smaller than the full
// 2-part there exists an element of 2-power order whose join with it is again
// a 2-group; scan in canonical order and take the first.
template <class E>
Subgroup<E> sylow_2_subgroup(const EnumeratedGroup<E>& g) {
  std::uint64_t target = 1;
  while (g.order() % (target * 2) == 0) target *= 2;
  auto is_pow2 = [](std::uint64_t v) { return (v & (v - 1)) == 0; };
  std::vector<E> gens;
  std::uint64_t cur = 1;
  while (cur < target) {
    bool grew = false;
    for (std::uint32_t i = 0; i < g.order(); ++i) {
      if (!is_pow2(g.element_order(i))) continue;
      std::vector<E> trial = gens;
      trial.push_back(g.element(i));
      Subgroup<E> s = Subgroup<E>::from_generators(g, trial);
      if (s.order() > cur && is_pow2(s.order())) {
        gens = std::move(trial);
        cur = s.order();
        grew = true;
        break;
      }
    }
    require(grew, Errc::SearchFailed, "Sylow 2-subgroup growth stalled");
  }
  if (gens.empty()) return Subgroup<E>::from_members_trusted(g, {g.identity_index()});
  return Subgroup<E>::from_generators(g, gens);
}

enum class SampleStrategy { AllCyclic, Exhaustive, RandomGenerated };

// Subgroup sampling used by the sweep verifiers. AllCyclic and Exhaustive are
// deterministic; RandomGenerated draws `count` subgroups, each generated by
// `gens_per_draw` uniformly chosen elements of the seeded RNG stream.
template <class E>
std::vector<Subgroup<E>> subgroup_sample(const EnumeratedGroup<E>& g, SampleStrategy strategy,
                                         std::uint32_t count, std::uint32_t gens_per_draw,
                                         std::uint64_t seed) {
  std::vector<Subgroup<E>> out;
  switch (strategy) {
    case SampleStrategy::AllCyclic: {
      std::set<std::vector<std::uint32_t>> seen;
      for (std::uint32_t i = 0; i < g.order(); ++i) {
        Subgroup<E> s = Subgroup<E>::from_generators(g, {g.element(i)});
        if (seen.insert(s.members()).second) out.push_back(std::move(s));
      }
      std::sort(out.begin(), out.end(), [](const Subgroup<E>& x, const Subgroup<E>& y) {
        return x.order() != y.order() ? x.order() < y.order() : x.members() < y.members();
      });
      break;
    }
    case SampleStrategy::Exhaustive:
      out = all_subgroups(g);
      break;
    case SampleStrategy::RandomGenerated: {
      std::mt19937_64 rng(seed);
      std::uniform_int_distribution<std::uint32_t> pick(0, static_cast<std::uint32_t>(g.order() - 1));
      for (std::uint32_t c = 0; c < count; ++c) {
        std::vector<E> gens;
        for (std::uint32_t j = 0; j < gens_per_draw; ++j) gens.push_back(g.element(pick(rng)));
        out.push_back(Subgroup<E>::from_generators(g, gens));
      }
      break;
    }
  }
  return out;
}

// Subnormality test by iterated normal closures: H is subnormal in G exactly
// when the chain K_0 = G, K_{i+1} = <H^{K_i}> descends all the way to H. The
// chain strictly shrinks, so the loop terminates.
template <class E>
bool is_subnormal(const EnumeratedGroup<E>& g, const Subgroup<E>& h) {
  std::vector<E> h_gens = h.generator_values();
  std::uint64_t h_order = h.order();
  EnumeratedGroup<E> cur = g;
  for (;;) {
    Subgroup<E> cl = normal_closure(cur, h_gens);
    if (cl.order() == h_order) return true;
    if (cl.order() == cur.order()) return false;
    cur = EnumeratedGroup<E>(cur.identity_element(), spanning_generators(cur, cl.members()));
  }
}

}  // namespace classbound
