#pragma once

#include <cstdint>
#include <numeric>
#include <vector>

#include "classbound/enumerated_group.hpp"
#include "classbound/permutation.hpp"

namespace classbound {

using PermGroup = EnumeratedGroup<Permutation>;

inline PermGroup trivial_group(std::size_t degree = 1) {
  return PermGroup(Permutation::identity(degree), {});
}

inline PermGroup cyclic_group(std::size_t n) {
  require(n >= 1, Errc::ExcludedDegree, "cyclic group needs n >= 1");
  std::vector<std::uint16_t> img(n);
  for (std::size_t i = 0; i < n; ++i) img[i] = static_cast<std::uint16_t>((i + 1) % n);
  return PermGroup(Permutation::identity(n), {Permutation::from_images(img)});
}

inline PermGroup symmetric_group(std::size_t n) {
  require(n >= 1, Errc::ExcludedDegree, "symmetric group needs n >= 1");
  std::vector<Permutation> gens;
  if (n >= 2) gens.push_back(Permutation::from_cycles(n, "(0 1)"));
  if (n >= 3) {
    std::vector<std::uint16_t> img(n);
    for (std::size_t i = 0; i < n; ++i) img[i] = static_cast<std::uint16_t>((i + 1) % n);
    gens.push_back(Permutation::from_images(img));
  }
  return PermGroup(Permutation::identity(n), std::move(gens));
}

inline PermGroup alternating_group(std::size_t n) {
  require(n >= 3, Errc::ExcludedDegree, "alternating group needs n >= 3");
  std::vector<Permutation> gens{Permutation::from_cycles(n, "(0 1 2)")};
  if (n > 3) {
    std::vector<std::uint16_t> img(n);
    std::iota(img.begin(), img.end(), std::uint16_t{0});
    if (n % 2 == 1) {
      for (std::size_t i = 0; i < n; ++i) img[i] = static_cast<std::uint16_t>((i + 1) % n);
    } else {
      for (std::size_t i = 1; i < n; ++i) img[i] = static_cast<std::uint16_t>(i % (n - 1) + 1);
    }
    gens.push_back(Permutation::from_images(img));
  }
  return PermGroup(Permutation::identity(n), std::move(gens));
}

inline PermGroup dihedral_group(std::size_t n) {
  require(n >= 3, Errc::ExcludedDegree, "dihedral group needs n >= 3 vertices");
  std::vector<std::uint16_t> rot(n), flip(n);
  for (std::size_t i = 0; i < n; ++i) {
    rot[i] = static_cast<std::uint16_t>((i + 1) % n);
    flip[i] = static_cast<std::uint16_t>((n - i) % n);
  }
  return PermGroup(Permutation::identity(n),
                   {Permutation::from_images(rot), Permutation::from_images(flip)});
}

// Frobenius group of order p*q acting on GF(p): translations x -> x+1 and the
// scaling x -> c*x by the least c of multiplicative order q mod p.
inline PermGroup frobenius_group(std::size_t q, std::size_t p) {
  require(p >= 3 && q >= 2 && (p - 1) % q == 0, Errc::ExcludedDegree,
          "frobenius group needs q dividing p-1");
  for (std::size_t d = 2; d * d <= p; ++d)
    require(p % d != 0, Errc::ExcludedDegree, "frobenius modulus must be prime");
  std::size_t c = 0;
  for (std::size_t cand = 2; cand < p; ++cand) {
    std::size_t v = 1, ord = 0;
    do {
      v = v * cand % p;
      ++ord;
    } while (v != 1);
    if (ord == q) {
      c = cand;
      break;
    }
  }
  require(c != 0, Errc::SearchFailed, "no multiplicative element of the requested order");
  std::vector<std::uint16_t> shift(p), scale(p);
  for (std::size_t i = 0; i < p; ++i) {
    shift[i] = static_cast<std::uint16_t>((i + 1) % p);
    scale[i] = static_cast<std::uint16_t>(i * c % p);
  }
  return PermGroup(Permutation::identity(p),
                   {Permutation::from_images(shift), Permutation::from_images(scale)});
}

// Embeds a permutation of d points into block `block` of n consecutive blocks.
inline Permutation embed_in_block(const Permutation& p, std::size_t block, std::size_t n) {
  std::size_t d = p.degree();
  std::vector<std::uint16_t> img(d * n);
  std::iota(img.begin(), img.end(), std::uint16_t{0});
  for (std::size_t i = 0; i < d; ++i)
    img[block * d + i] = static_cast<std::uint16_t>(block * d + p[static_cast<std::uint16_t>(i)]);
  return Permutation::from_images(img);
}

// Lifts a permutation of the n blocks to the d*n points.
inline Permutation lift_block_permutation(const Permutation& top, std::size_t d) {
  std::size_t n = top.degree();
  std::vector<std::uint16_t> img(d * n);
  for (std::size_t b = 0; b < n; ++b)
    for (std::size_t i = 0; i < d; ++i)
      img[b * d + i] = static_cast<std::uint16_t>(top[static_cast<std::uint16_t>(b)] * d + i);
  return Permutation::from_images(img);
}

// Imprimitive wreath product: one copy of `base` on each of top.degree()
// blocks, permuted by `top`. Generators are the base generators in every
// block plus the lifted top generators, so the result is the full wreath
// product regardless of transitivity of the top group.
inline PermGroup wreath_product(const PermGroup& base, const PermGroup& top) {
  std::size_t d = base.elements().front().degree();
  std::size_t n = top.elements().front().degree();
  std::vector<Permutation> gens;
  for (std::size_t b = 0; b < n; ++b)
    for (const Permutation& s : base.generators()) gens.push_back(embed_in_block(s, b, n));
  for (const Permutation& s : top.generators()) gens.push_back(lift_block_permutation(s, d));
  return PermGroup(Permutation::identity(d * n), std::move(gens));
}

inline PermGroup direct_product(const PermGroup& a, const PermGroup& b) {
  std::size_t da = a.elements().front().degree();
  std::size_t db = b.elements().front().degree();
  std::vector<Permutation> gens;
  for (const Permutation& s : a.generators()) {
    std::vector<std::uint16_t> img(da + db);
    std::iota(img.begin(), img.end(), std::uint16_t{0});
    for (std::size_t i = 0; i < da; ++i) img[i] = s[static_cast<std::uint16_t>(i)];
    gens.push_back(Permutation::from_images(img));
  }
  for (const Permutation& s : b.generators()) {
    std::vector<std::uint16_t> img(da + db);
    std::iota(img.begin(), img.end(), std::uint16_t{0});
    for (std::size_t i = 0; i < db; ++i)
      img[da + i] = static_cast<std::uint16_t>(da + s[static_cast<std::uint16_t>(i)]);
    gens.push_back(Permutation::from_images(img));
  }
  return PermGroup(Permutation::identity(da + db), std::move(gens));
}

// Diagonally embedded copies: each generator acts simultaneously in all n
// blocks. Subgroup of the wreath base.
inline std::vector<Permutation> diagonal_generators(const PermGroup& base, std::size_t n) {
  std::size_t d = base.elements().front().degree();
  std::vector<Permutation> out;
  for (const Permutation& s : base.generators()) {
    std::vector<std::uint16_t> img(d * n);
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t i = 0; i < d; ++i)
        img[b * d + i] = static_cast<std::uint16_t>(b * d + s[static_cast<std::uint16_t>(i)]);
    out.push_back(Permutation::from_images(img));
  }
  return out;
}

}  // namespace classbound
