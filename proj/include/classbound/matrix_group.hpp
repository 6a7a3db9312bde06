#pragma once

#include <cstdint>
#include <memory>
#include <random>
#include <vector>

#include "classbound/enumerated_group.hpp"
#include "classbound/gf.hpp"
#include "classbound/perm_groups.hpp"
#include "classbound/quotient.hpp"
#include "classbound/subgroup_lattice.hpp"

namespace classbound {

// A finite subgroup of GL(d, p) held as an explicit element list, together
// with the module parameters. When the group respects a decomposition of the
// underlying space into equal coordinate blocks, block_count/block_dim record
// that shape (block_count == 1 means no block structure is claimed).
struct MatrixGroup {
  uint32_t p = 0;
  uint32_t d = 0;
  std::shared_ptr<EnumeratedGroup<GfMatrix>> grp;
  uint32_t block_count = 1;
  uint32_t block_dim = 0;

  const EnumeratedGroup<GfMatrix>& group() const { return *grp; }
  uint64_t order() const { return grp->order(); }
  uint64_t vec_count() const { return gf_vec_count(p, d); }
};

inline MatrixGroup matrix_group(uint32_t p, uint32_t d, std::vector<GfMatrix> gens,
                                uint64_t cap = config().enumeration_cap) {
  for (const GfMatrix& g : gens) {
    require(g.p() == p && g.dim() == d, Errc::ExcludedDegree,
            "generator shape does not match the declared module");
    (void)g.inverse();  // throws SingularGenerator if not in GL(d, p)
  }
  MatrixGroup m;
  m.p = p;
  m.d = d;
  m.block_dim = d;
  m.grp = std::make_shared<EnumeratedGroup<GfMatrix>>(GfMatrix::identity(p, d),
                                                      std::move(gens), cap);
  return m;
}

// Faithful permutation image on the p^d vectors of the module. Vector i maps
// to point i; faithfulness is automatic for a matrix group acting on its own
// space.
inline PermGroup matrix_perm_image(const MatrixGroup& m) {
  uint64_t n = m.vec_count();
  require(n <= 65535, Errc::ExcludedDegree, "module too large for a permutation image");
  std::vector<Permutation> gens;
  for (const GfMatrix& g : m.group().generators()) {
    std::vector<uint16_t> img(n);
    for (uint64_t v = 0; v < n; ++v) img[v] = static_cast<uint16_t>(gf_apply(v, g));
    gens.push_back(Permutation::from_images(std::move(img)));
  }
  return PermGroup(Permutation::identity(n), std::move(gens));
}

// Orbit count of a matrix group on its module (the zero orbit included).
inline uint64_t vector_orbit_count(const MatrixGroup& m) {
  uint64_t n = m.vec_count();
  std::vector<char> seen(n, 0);
  uint64_t orbits = 0;
  std::vector<uint64_t> stack;
  const auto gens = m.group().generators();
  for (uint64_t v = 0; v < n; ++v) {
    if (seen[v]) continue;
    ++orbits;
    seen[v] = 1;
    stack.assign(1, v);
    while (!stack.empty()) {
      uint64_t w = stack.back();
      stack.pop_back();
      for (const GfMatrix& g : gens) {
        uint64_t x = gf_apply(w, g);
        if (!seen[x]) {
          seen[x] = 1;
          stack.push_back(x);
        }
      }
    }
  }
  return orbits;
}

namespace detail {

inline bool has_element_of_order(const EnumeratedGroup<GfMatrix>& g, uint64_t ord) {
  for (uint32_t i = 0; i < g.order(); ++i)
    if (g.element_order(i) == ord) return true;
  return false;
}

}  // namespace detail

// Structural findings for the order-96 complement search below. Every check
// is recorded rather than enforced so a failing expectation shows up in test
// output instead of aborting the construction.
struct FiveComplementReport {
  MatrixGroup group;
  uint64_t order = 0;
  bool no_order_five = false;
  uint64_t center_order = 0;
  bool center_order_two = false;        // expected order 2 at the call site
  bool central_quotient_s4xc2 = false;  // fingerprint match against S4 x C2
  bool second_derived_q8 = false;       // fingerprint match against Q8
  uint64_t module_orbits = 0;
  bool two_module_orbits = false;
  bool sylow2_c4wrc2 = false;  // Sylow 2-subgroup fingerprint vs C4 wr C2
};

// Deterministic search for a subgroup of GL(2, 5) of order 96 with no element
// of order 5: scan ordered generator pairs (a, b) over the sorted elements of
// GL(2, 5) and return the first pair whose closure works. The scan order makes
// the returned generators reproducible across runs.
inline FiveComplementReport five_complement_gl25() {
  MatrixGroup gl = matrix_group(
      5, 2,
      {GfMatrix::from_rows(5, 2, {2, 0, 0, 1}), GfMatrix::from_rows(5, 2, {4, 1, 4, 0})});
  require(gl.order() == 480, Errc::SearchFailed, "GL(2,5) enumeration came out wrong");

  const auto& g = gl.group();
  MatrixGroup found;
  bool ok = false;
  for (uint32_t ai = 0; ai < g.order() && !ok; ++ai) {
    uint64_t ao = g.element_order(ai);
    if (ao == 1 || ao % 5 == 0 || 96 % ao != 0) continue;
    for (uint32_t bi = 0; bi < g.order() && !ok; ++bi) {
      uint64_t bo = g.element_order(bi);
      if (bo % 5 == 0 || 96 % bo != 0) continue;
      try {
        MatrixGroup cand = matrix_group(5, 2, {g.element(ai), g.element(bi)}, 97);
        if (cand.order() != 96) continue;
        if (detail::has_element_of_order(cand.group(), 5)) continue;
        found = cand;
        ok = true;
      } catch (const Error&) {
        continue;  // closure blew past 96 elements
      }
    }
  }
  require(ok, Errc::SearchFailed, "no order-96 subgroup of GL(2,5) avoiding order-5 elements");

  FiveComplementReport rep;
  rep.group = found;
  rep.order = found.order();
  rep.no_order_five = !detail::has_element_of_order(found.group(), 5);

  const auto& L = found.group();
  Subgroup<GfMatrix> z = center_subgroup(L);
  rep.center_order = z.order();
  rep.center_order_two = (rep.center_order == 2);

  Fingerprint lz = quotient_group(L, z).group.fingerprint();
  Fingerprint s4c2 = direct_product(symmetric_group(4), cyclic_group(2)).fingerprint();
  rep.central_quotient_s4xc2 = (lz == s4c2);

  Subgroup<GfMatrix> d1 = derived_subgroup(L);
  Subgroup<GfMatrix> d2 = derived_subgroup(d1.group());
  MatrixGroup q8 = matrix_group(
      5, 2,
      {GfMatrix::from_rows(5, 2, {0, 1, 4, 0}), GfMatrix::from_rows(5, 2, {2, 0, 0, 3})});
  rep.second_derived_q8 = (d2.group().fingerprint() == q8.group().fingerprint());

  rep.module_orbits = vector_orbit_count(found);
  rep.two_module_orbits = (rep.module_orbits == 2);

  Subgroup<GfMatrix> syl = sylow_2_subgroup(L);
  Fingerprint c4wr = wreath_product(cyclic_group(4), cyclic_group(2)).fingerprint();
  rep.sylow2_c4wrc2 = (syl.group().fingerprint() == c4wr);
  return rep;
}

// d x d block-diagonal matrix whose i-th block is blocks[i].
inline GfMatrix block_diagonal(uint32_t p, const std::vector<GfMatrix>& blocks) {
  uint32_t d = 0;
  for (const GfMatrix& b : blocks) d += b.dim();
  GfMatrix m = GfMatrix::identity(p, d);
  for (uint32_t i = 0; i < d; ++i) m.set(i, i, 0);
  uint32_t off = 0;
  for (const GfMatrix& b : blocks) {
    for (uint32_t i = 0; i < b.dim(); ++i)
      for (uint32_t j = 0; j < b.dim(); ++j) m.set(off + i, off + j, b.at(i, j));
    off += b.dim();
  }
  return m;
}

// Permutation matrix moving coordinate block i to block top(i).
inline GfMatrix block_permutation_matrix(uint32_t p, uint32_t block_dim, const Permutation& top) {
  uint32_t n = static_cast<uint32_t>(top.degree());
  uint32_t d = n * block_dim;
  GfMatrix m = GfMatrix::identity(p, d);
  for (uint32_t i = 0; i < d; ++i) m.set(i, i, 0);
  for (uint32_t b = 0; b < n; ++b)
    for (uint32_t k = 0; k < block_dim; ++k)
      m.set(b * block_dim + k, static_cast<uint32_t>(top.apply(b)) * block_dim + k, 1);
  return m;
}

// Embed a block-local matrix into block `which` of an n-block space.
inline GfMatrix embed_block(const GfMatrix& m, uint32_t which, uint32_t n) {
  std::vector<GfMatrix> blocks(n, GfMatrix::identity(m.p(), m.dim()));
  blocks[which] = m;
  return block_diagonal(m.p(), blocks);
}

// Subgroup of the wreath product H1 wr P on n = deg(P) blocks, generated by
// block matrices plus the lifted top group. The mixing seed selects the base
// part:
//   0   full wreath base (one copy of H1's generators per block),
//   1   diagonal base (each generator repeated in every block),
//   >=2 a seeded mix: per generator, a random subset of blocks gets the
//       generator while the rest get seeded powers of it, plus one diagonal
//       generator so the block action stays transitive on candidates.
// Every variant lies between the diagonal and the full wreath product and has
// block action exactly P.
inline MatrixGroup induced_block_group(const MatrixGroup& h1, const PermGroup& top,
                                       uint64_t mixing_seed,
                                       uint64_t cap = config().enumeration_cap) {
  uint32_t n = static_cast<uint32_t>(top.identity_element().degree());
  require(n >= 2, Errc::ExcludedDegree, "need at least two blocks");
  uint32_t p = h1.p, bd = h1.d;
  std::vector<GfMatrix> gens;
  const auto base_gens = h1.group().generators();

  if (mixing_seed == 0) {
    for (uint32_t b = 0; b < n; ++b)
      for (const GfMatrix& g : base_gens) gens.push_back(embed_block(g, b, n));
  } else if (mixing_seed == 1) {
    for (const GfMatrix& g : base_gens)
      gens.push_back(block_diagonal(p, std::vector<GfMatrix>(n, g)));
  } else {
    std::mt19937_64 rng(mixing_seed);
    for (const GfMatrix& g : base_gens) {
      std::vector<GfMatrix> blocks;
      for (uint32_t b = 0; b < n; ++b) {
        uint64_t e = rng() % h1.group().element_order(h1.group().index_of(g));
        blocks.push_back(g.pow(e));
      }
      // Guarantee the generator itself shows up somewhere.
      blocks[rng() % n] = g;
      gens.push_back(block_diagonal(p, blocks));
    }
    for (const GfMatrix& g : base_gens)
      gens.push_back(block_diagonal(p, std::vector<GfMatrix>(n, g)));
  }
  for (const Permutation& t : top.generators())
    gens.push_back(block_permutation_matrix(p, bd, t));

  MatrixGroup m = matrix_group(p, bd * n, std::move(gens), cap);
  m.block_count = n;
  m.block_dim = bd;
  return m;
}

// Image of the block action of a group built over equal blocks: the
// permutation of blocks induced by each element (blocks must be permuted,
// i.e. every nonzero block row hits exactly one block column).
inline Permutation block_action_of(const GfMatrix& m, uint32_t block_dim) {
  uint32_t n = m.dim() / block_dim;
  std::vector<uint16_t> img(n, 0xFFFF);
  for (uint32_t bi = 0; bi < n; ++bi) {
    uint32_t target = n;
    for (uint32_t bj = 0; bj < n; ++bj) {
      bool nonzero = false;
      for (uint32_t i = 0; i < block_dim && !nonzero; ++i)
        for (uint32_t j = 0; j < block_dim && !nonzero; ++j)
          if (m.at(bi * block_dim + i, bj * block_dim + j)) nonzero = true;
      if (!nonzero) continue;
      require(target == n, Errc::NotInvariant, "element does not permute the blocks");
      target = bj;
    }
    require(target < n, Errc::NotInvariant, "element kills a block");
    img[bi] = static_cast<uint16_t>(target);
  }
  return Permutation::from_images(std::move(img));
}

inline PermGroup block_action_group(const MatrixGroup& m) {
  require(m.block_count >= 2, Errc::ExcludedDegree, "group carries no block structure");
  std::vector<Permutation> gens;
  for (const GfMatrix& g : m.group().generators())
    gens.push_back(block_action_of(g, m.block_dim));
  return PermGroup(Permutation::identity(m.block_count), std::move(gens));
}

}  // namespace classbound
