#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "classbound/enumerated_group.hpp"

namespace classbound {

// Internal direct product M = M_1 x ... x M_l inside an ambient group G,
// together with a g-invariant N <= M and an element g whose powers cover G/M.
// Precomputes the tail products L_i = M_i M_{i+1} ... M_l and, for every
// element of M, its factorization into components, so downstream checks can
// project in O(1).
template <class E>
class ProductDecomposition {
 public:
  ProductDecomposition(const EnumeratedGroup<E>* ambient, std::vector<Subgroup<E>> factors,
                       Subgroup<E> n, uint32_t g_index)
      : ambient_(ambient), factors_(std::move(factors)), n_(std::move(n)), g_(g_index) {
    validate();
    build_tails();
    build_components();
  }

  const EnumeratedGroup<E>& ambient() const { return *ambient_; }
  size_t factor_count() const { return factors_.size(); }
  const Subgroup<E>& factor(size_t i) const { return factors_[i]; }
  const Subgroup<E>& product() const { return m_; }
  const Subgroup<E>& invariant_subgroup() const { return n_; }
  uint32_t g_index() const { return g_; }
  uint64_t top_order() const { return top_order_; }

  // Tail subgroup M_i ... M_l, 0-based: tail(i) = M_{i+1} x ... x M_l in
  // 1-based speak. tail(factor_count()) is the trivial subgroup.
  const Subgroup<E>& tail(size_t i) const { return tails_[i]; }

  // Component i (0-based) of an element of M, as an ambient index.
  uint32_t component(uint32_t member_index, size_t i) const {
    size_t pos = position_in_m(member_index);
    return comps_[pos * factors_.size() + i];
  }

  bool in_tail(size_t i, uint32_t idx) const { return tail_mask_[i][idx] != 0; }

  // Membership mask over ambient indices for the product set N * tail(i).
  const std::vector<char>& n_tail_mask(size_t i) const { return n_tail_mask_[i]; }

  // The permutation of factor positions induced by conjugation with g.
  // Throws NotInvariant if g fails to permute the factors.
  std::vector<size_t> factor_permutation() const {
    const auto& g = *ambient_;
    std::vector<size_t> sigma(factors_.size());
    for (size_t i = 0; i < factors_.size(); ++i) {
      std::vector<uint32_t> image;
      image.reserve(factors_[i].order());
      for (uint32_t idx : factors_[i].members()) image.push_back(g.conj(idx, g_));
      std::sort(image.begin(), image.end());
      bool found = false;
      for (size_t j = 0; j < factors_.size(); ++j) {
        if (image == factors_[j].members()) {
          sigma[i] = j;
          found = true;
          break;
        }
      }
      if (!found) fail(Errc::NotInvariant, "conjugation by g does not permute the factors");
    }
    return sigma;
  }

  // True when the induced permutation of the factors is a single cycle.
  bool factors_transitive() const {
    std::vector<size_t> sigma = factor_permutation();
    size_t i = 0, steps = 0;
    do {
      i = sigma[i];
      ++steps;
    } while (i != 0 && steps <= sigma.size());
    return steps == sigma.size();
  }

 private:
  size_t position_in_m(uint32_t member_index) const {
    const auto& mem = m_.members();
    auto it = std::lower_bound(mem.begin(), mem.end(), member_index);
    require(it != mem.end() && *it == member_index, Errc::ElementNotInGroup,
            "element is not in the product subgroup");
    return static_cast<size_t>(it - mem.begin());
  }

  void validate() {
    require(!factors_.empty(), Errc::NotASubgroup, "decomposition needs at least one factor");
    const auto& g = *ambient_;
    uint64_t prod = 1;
    std::vector<E> gens;
    for (auto& f : factors_) {
      prod *= f.order();
      for (const E& v : f.generator_values()) gens.push_back(v);
    }
    // Pairwise commuting factors whose orders multiply up to the product's
    // order form an internal direct product; the factors need not be normal
    // in the ambient group (g may permute them), but the product must be.
    for (size_t i = 0; i < factors_.size(); ++i)
      for (size_t j = i + 1; j < factors_.size(); ++j)
        for (const E& a : factors_[i].generator_values())
          for (const E& b : factors_[j].generator_values())
            require(a * b == b * a, Errc::NotASubgroup, "factors do not commute pairwise");
    m_ = Subgroup<E>::from_generators(g, gens);
    require(m_.order() == prod, Errc::NotASubgroup,
            "factors do not form an internal direct product");
    require(m_.is_normal(), Errc::NotNormal, "the product must be normal in the ambient group");
    for (uint32_t idx : n_.members()) {
      require(m_.contains_index(idx), Errc::NotASubgroup, "N is not contained in the product");
      require(n_.contains_index(g.conj(idx, g_)), Errc::NotInvariant, "N is not g-invariant");
    }

    // g's powers must sweep out all cosets of M.
    top_order_ = g.order() / m_.order();
    std::vector<char> seen(g.order(), 0);
    for (uint32_t idx : m_.members()) seen[idx] = 1;
    uint64_t cosets_hit = 1;
    uint32_t cur = g_;
    uint64_t guard = 0;
    while (!m_.contains_index(cur)) {
      if (!seen[cur]) {
        ++cosets_hit;
        for (uint32_t idx : m_.members()) seen[g.mul(idx, cur)] = 1;
      }
      cur = g.mul(cur, g_);
      require(++guard <= g.order(), Errc::SearchFailed, "coset walk did not terminate");
    }
    require(cosets_hit == top_order_, Errc::NotASubgroup,
            "powers of g do not cover the quotient by the product");
  }

  void build_tails() {
    const auto& g = *ambient_;
    size_t l = factors_.size();
    tails_.clear();
    tail_mask_.assign(l + 1, {});
    std::vector<E> gens;
    std::vector<Subgroup<E>> rev;
    rev.push_back(Subgroup<E>::from_generators(g, {}));  // trivial
    for (size_t i = l; i-- > 0;) {
      for (const E& v : factors_[i].generator_values()) gens.push_back(v);
      rev.push_back(Subgroup<E>::from_generators(g, gens));
    }
    // rev holds tails from the trivial one upward; reverse into natural order.
    tails_.assign(rev.rbegin(), rev.rend());
    for (size_t i = 0; i <= l; ++i) {
      tail_mask_[i].assign(g.order(), 0);
      for (uint32_t idx : tails_[i].members()) tail_mask_[i][idx] = 1;
    }
    n_tail_mask_.assign(l + 1, {});
    for (size_t i = 0; i <= l; ++i) {
      n_tail_mask_[i].assign(g.order(), 0);
      for (uint32_t nn : n_.members())
        for (uint32_t tt : tails_[i].members()) n_tail_mask_[i][g.mul(nn, tt)] = 1;
    }
  }

  void build_components() {
    const auto& g = *ambient_;
    size_t l = factors_.size();
    comps_.assign(m_.order() * l, 0);
    for (size_t pos = 0; pos < m_.members().size(); ++pos) {
      uint32_t rem = m_.members()[pos];
      for (size_t i = 0; i + 1 < l; ++i) {
        bool found = false;
        for (uint32_t cand : factors_[i].members()) {
          uint32_t rest = g.mul(g.inv(cand), rem);
          if (tail_mask_[i + 1][rest]) {
            comps_[pos * l + i] = cand;
            rem = rest;
            found = true;
            break;
          }
        }
        if (!found) fail(Errc::SearchFailed, "component extraction failed");
      }
      comps_[pos * l + (l - 1)] = rem;
    }
  }

  const EnumeratedGroup<E>* ambient_;
  std::vector<Subgroup<E>> factors_;
  Subgroup<E> m_;
  Subgroup<E> n_;
  uint32_t g_;
  uint64_t top_order_ = 1;
  std::vector<Subgroup<E>> tails_;
  std::vector<std::vector<char>> tail_mask_;
  std::vector<std::vector<char>> n_tail_mask_;
  std::vector<uint32_t> comps_;
};

template <class E>
ProductDecomposition<E> make_product_decomposition(const EnumeratedGroup<E>& ambient,
                                                   std::vector<Subgroup<E>> factors, Subgroup<E> n,
                                                   uint32_t g_index) {
  return ProductDecomposition<E>(&ambient, std::move(factors), std::move(n), g_index);
}

}  // namespace classbound
