#pragma once

#include <cstdint>
#include <vector>

#include "classbound/enumerated_group.hpp"

namespace classbound {

template <class E>
struct FixedClassReport {
  std::uint64_t class_count = 0;
  std::uint64_t fixed_count = 0;
  std::vector<std::uint32_t> fixed_class_ids;
};

template <class E>
void require_invariant(const EnumeratedGroup<E>& n, const E& g) {
  E gi = g.inverse();
  for (const E& h : n.generators())
    require(n.contains(gi * h * g), Errc::NotInvariant,
            "conjugation by the given element does not preserve the group");
}

// Number of conjugacy classes of N sent to themselves by conjugation with g.
// g need not lie in N but must normalize it.
template <class E>
FixedClassReport<E> fixed_classes(const EnumeratedGroup<E>& n, const E& g) {
  require_invariant(n, g);
  const ClassSet& cs = n.classes();
  FixedClassReport<E> rep;
  rep.class_count = cs.count();
  E gi = g.inverse();
  for (std::uint32_t c = 0; c < cs.reps.size(); ++c) {
    std::uint32_t img = n.index_of(gi * n.element(cs.reps[c]) * g);
    if (cs.class_of[img] == c) {
      ++rep.fixed_count;
      rep.fixed_class_ids.push_back(c);
    }
  }
  return rep;
}

// Independent oracle for the same count, via averaging: the number of g-fixed
// classes equals |{(x, h) in N x N : x^g = x^h}| / |N|. Uses no class data at
// all, only raw products, so it cross-checks the class machinery. Quadratic.
template <class E>
std::uint64_t fixed_classes_avg_oracle(const EnumeratedGroup<E>& n, const E& g) {
  require(n.order() <= config().oracle_cap, Errc::CapExceeded,
          "averaging oracle is limited to order " + std::to_string(config().oracle_cap));
  require_invariant(n, g);
  E gi = g.inverse();
  std::uint64_t pairs = 0;
  for (std::uint32_t xi = 0; xi < n.order(); ++xi) {
    E xg = gi * n.element(xi) * g;
    for (std::uint32_t hi = 0; hi < n.order(); ++hi) {
      const E& h = n.element(hi);
      if (h.inverse() * n.element(xi) * h == xg) ++pairs;
    }
  }
  require(pairs % n.order() == 0, Errc::SearchFailed,
          "averaging count is not divisible by the group order");
  return pairs / n.order();
}

template <class E>
struct CosetOrbitSet {
  std::uint64_t coset_size = 0;
  std::uint64_t orbit_count = 0;
  std::vector<std::uint64_t> orbit_sizes;
  std::vector<E> orbit_reps;
};

// Orbits of N acting by conjugation on the coset N*g (whose elements live in
// <N, g>, not in N). The orbit count equals the number of g-fixed classes of
// N; together with the direct count and the averaging oracle this gives three
// independent routes to one number.
template <class E>
CosetOrbitSet<E> coset_conjugation_orbits(const EnumeratedGroup<E>& n, const E& g) {
  require_invariant(n, g);
  std::vector<E> coset;
  for (std::uint32_t i = 0; i < n.order(); ++i) coset.push_back(n.element(i) * g);
  std::sort(coset.begin(), coset.end());
  IndexTable<E> table(&coset);
  for (std::uint32_t i = 0; i < coset.size(); ++i) table.insert(i);
  std::vector<E> gen_inv;
  for (const E& s : n.generators()) gen_inv.push_back(s.inverse());
  CosetOrbitSet<E> out;
  out.coset_size = coset.size();
  std::vector<bool> seen(coset.size(), false);
  std::vector<std::uint32_t> queue;
  for (std::uint32_t i = 0; i < coset.size(); ++i) {
    if (seen[i]) continue;
    ++out.orbit_count;
    out.orbit_reps.push_back(coset[i]);
    std::uint64_t size = 1;
    seen[i] = true;
    queue.assign(1, i);
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
      for (std::size_t si = 0; si < n.generators().size(); ++si) {
        E y = gen_inv[si] * coset[queue[qi]] * n.generators()[si];
        std::uint32_t yi = table.find(y);
        require(yi != npos32, Errc::NotInvariant, "conjugation left the coset");
        if (!seen[yi]) {
          seen[yi] = true;
          ++size;
          queue.push_back(yi);
        }
      }
    }
    out.orbit_sizes.push_back(size);
  }
  return out;
}

}  // namespace classbound
