#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "classbound/perm_groups.hpp"
#include "classbound/product_decomposition.hpp"

namespace classbound {

// A wreath product base x base with the block swap, together with the two
// block factors and a swap-invariant subgroup N of the base product. The
// ambient group is held by shared_ptr so subgroups and decompositions can
// keep pointing at it after copies of the instance are made.
struct SwapWreathInstance {
  std::shared_ptr<PermGroup> group;
  Subgroup<Permutation> m1, m2, m, n;
  std::uint32_t swap_index = 0;

  ProductDecomposition<Permutation> decomposition() const {
    return ProductDecomposition<Permutation>(group.get(), {m1, m2}, n, swap_index);
  }

  // The base product as a single factor; the shape needed when every factor
  // must be normal in the ambient group.
  ProductDecomposition<Permutation> single_decomposition() const {
    return ProductDecomposition<Permutation>(group.get(), {m}, n, swap_index);
  }
};

namespace detail {

inline SwapWreathInstance swap_wreath_with(const PermGroup& base,
                                           const std::vector<Permutation>& n_base_gens,
                                           const std::vector<Permutation>& n_diag_gens) {
  SwapWreathInstance inst;
  inst.group = std::make_shared<PermGroup>(wreath_product(base, cyclic_group(2)));
  const PermGroup& g = *inst.group;
  std::size_t d = base.elements().front().degree();

  std::vector<Permutation> g1, g2, ngens;
  for (const Permutation& s : base.generators()) {
    g1.push_back(embed_in_block(s, 0, 2));
    g2.push_back(embed_in_block(s, 1, 2));
  }
  for (const Permutation& s : n_base_gens) {
    ngens.push_back(embed_in_block(s, 0, 2));
    ngens.push_back(embed_in_block(s, 1, 2));
  }
  for (const Permutation& s : n_diag_gens) {
    std::vector<std::uint16_t> img(2 * d);
    for (std::size_t b = 0; b < 2; ++b)
      for (std::size_t i = 0; i < d; ++i)
        img[b * d + i] = static_cast<std::uint16_t>(b * d + s[static_cast<std::uint16_t>(i)]);
    ngens.push_back(Permutation::from_images(img));
  }

  inst.m1 = Subgroup<Permutation>::from_generators(g, g1);
  inst.m2 = Subgroup<Permutation>::from_generators(g, g2);
  std::vector<Permutation> both = g1;
  both.insert(both.end(), g2.begin(), g2.end());
  inst.m = Subgroup<Permutation>::from_generators(g, both);
  inst.n = Subgroup<Permutation>::from_generators(g, ngens);

  std::vector<std::uint16_t> swap_img(2 * d);
  for (std::size_t i = 0; i < d; ++i) {
    swap_img[i] = static_cast<std::uint16_t>(d + i);
    swap_img[d + i] = static_cast<std::uint16_t>(i);
  }
  inst.swap_index = g.index_of(Permutation::from_images(swap_img));
  return inst;
}

}  // namespace detail

// S3 wr C2 with N = (A3 x A3) extended by the diagonal transposition. N has
// order 18 and the block swap normalizes it.
inline SwapWreathInstance example_03a() {
  PermGroup s3 = symmetric_group(3);
  return detail::swap_wreath_with(s3, {Permutation::from_cycles(3, "(0 1 2)")},
                                  {Permutation::from_cycles(3, "(0 1)")});
}

// F(q,p) wr C2 with N = (F' x F') extended by the diagonal complement
// generator, |N| = p^2 q.
inline SwapWreathInstance frobenius_wreath_pair(std::size_t q, std::size_t p) {
  PermGroup f = frobenius_group(q, p);
  const Permutation& shift = f.generators()[0];
  const Permutation& scale = f.generators()[1];
  return detail::swap_wreath_with(f, {shift}, {scale});
}

}  // namespace classbound
