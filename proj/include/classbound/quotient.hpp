#pragma once

#include <cstdint>
#include <vector>

#include "classbound/enumerated_group.hpp"
#include "classbound/permutation.hpp"

namespace classbound {

// Coset labeling for a normal subgroup. coset_rep[c] is the lex-min member of
// coset c because elements are scanned in sorted order.
template <class E>
struct CosetLabeling {
  std::vector<std::uint32_t> coset_of;   // parent element index -> coset id
  std::vector<std::uint32_t> coset_rep;  // coset id -> parent element index
};

template <class E>
CosetLabeling<E> label_cosets(const EnumeratedGroup<E>& g, const Subgroup<E>& n) {
  CosetLabeling<E> lab;
  lab.coset_of.assign(g.order(), npos32);
  for (std::uint32_t i = 0; i < g.order(); ++i) {
    if (lab.coset_of[i] != npos32) continue;
    std::uint32_t c = static_cast<std::uint32_t>(lab.coset_rep.size());
    lab.coset_rep.push_back(i);
    for (std::uint32_t m : n.members())
      lab.coset_of[g.mul(m, i)] = c;
  }
  return lab;
}

// G/N materialized as a permutation group via its right-regular action on the
// cosets. Kept for small indices; for counting classes of a big quotient use
// quotient_class_count below, which never builds permutations.
template <class E>
struct Quotient {
  EnumeratedGroup<Permutation> group;
  CosetLabeling<E> cosets;
  std::vector<std::uint32_t> coset_to_q;  // coset id -> index in group

  std::uint32_t image_index(std::uint32_t parent_idx) const {
    return coset_to_q[cosets.coset_of[parent_idx]];
  }
};

template <class E>
Quotient<E> quotient_group(const EnumeratedGroup<E>& g, const Subgroup<E>& n,
                           std::uint32_t max_index = 5000) {
  require(n.is_normal(), Errc::NotNormal, "quotient requires a normal subgroup");
  CosetLabeling<E> lab = label_cosets(g, n);
  std::uint32_t k = static_cast<std::uint32_t>(lab.coset_rep.size());
  require(k <= max_index, Errc::ExcludedDegree,
          "quotient index " + std::to_string(k) + " exceeds limit " + std::to_string(max_index) +
              "; use quotient_class_count for counting");
  auto coset_perm = [&](std::uint32_t c) {
    std::vector<std::uint16_t> img(k);
    for (std::uint32_t d = 0; d < k; ++d)
      img[d] = static_cast<std::uint16_t>(
          lab.coset_of[g.mul(lab.coset_rep[d], lab.coset_rep[c])]);
    return Permutation::from_images(std::move(img));
  };
  std::vector<Permutation> qgens;
  for (const E& s : g.generators()) qgens.push_back(coset_perm(lab.coset_of[g.index_of(s)]));
  EnumeratedGroup<Permutation> qg(Permutation::identity(k), std::move(qgens));
  require(qg.order() == k, Errc::NotNormal, "regular action has wrong order");
  std::vector<std::uint32_t> coset_to_q(k);
  for (std::uint32_t c = 0; c < k; ++c) coset_to_q[c] = qg.index_of(coset_perm(c));
  return Quotient<E>{std::move(qg), std::move(lab), std::move(coset_to_q)};
}

// k(G/N) without materializing the quotient: counts orbits of G acting on the
// cosets of N by conjugation.
template <class E>
std::uint64_t quotient_class_count(const EnumeratedGroup<E>& g, const Subgroup<E>& n) {
  require(n.is_normal(), Errc::NotNormal, "quotient requires a normal subgroup");
  CosetLabeling<E> lab = label_cosets(g, n);
  std::uint32_t k = static_cast<std::uint32_t>(lab.coset_rep.size());
  std::vector<bool> seen(k, false);
  std::uint64_t orbits = 0;
  std::vector<std::uint32_t> queue;
  for (std::uint32_t c = 0; c < k; ++c) {
    if (seen[c]) continue;
    ++orbits;
    seen[c] = true;
    queue.assign(1, c);
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
      for (const E& s : g.generators()) {
        std::uint32_t rep = lab.coset_rep[queue[qi]];
        std::uint32_t y = lab.coset_of[g.index_of(s.inverse() * g.element(rep) * s)];
        if (!seen[y]) {
          seen[y] = true;
          queue.push_back(y);
        }
      }
    }
  }
  return orbits;
}

}  // namespace classbound
