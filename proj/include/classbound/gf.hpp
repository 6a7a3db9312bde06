#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "classbound/config.hpp"

namespace classbound {

// Square matrix over GF(p), row-major, p a small prime. Vectors are ROW
// vectors and act on the right: w = v * M. Group elements must be invertible;
// inverse() throws SingularGenerator otherwise.
class GfMatrix {
 public:
  GfMatrix() = default;

  static GfMatrix identity(uint32_t p, uint32_t d) {
    GfMatrix m(p, d);
    for (uint32_t i = 0; i < d; ++i) m.a_[i * d + i] = 1;
    return m;
  }

  // Entries are reduced mod p, so small negative literals are fine.
  static GfMatrix from_rows(uint32_t p, uint32_t d, const std::vector<int>& flat) {
    require(flat.size() == static_cast<size_t>(d) * d, Errc::IoError,
            "matrix literal has the wrong number of entries");
    GfMatrix m(p, d);
    for (size_t i = 0; i < flat.size(); ++i) {
      int v = flat[i] % static_cast<int>(p);
      if (v < 0) v += static_cast<int>(p);
      m.a_[i] = static_cast<uint8_t>(v);
    }
    return m;
  }

  uint32_t p() const { return p_; }
  uint32_t dim() const { return d_; }
  uint8_t at(uint32_t i, uint32_t j) const { return a_[i * d_ + j]; }
  void set(uint32_t i, uint32_t j, uint8_t v) { a_[i * d_ + j] = static_cast<uint8_t>(v % p_); }

  GfMatrix operator*(const GfMatrix& o) const {
    require(p_ == o.p_ && d_ == o.d_, Errc::ExcludedDegree, "matrix shape mismatch");
    GfMatrix r(p_, d_);
    for (uint32_t i = 0; i < d_; ++i)
      for (uint32_t k = 0; k < d_; ++k) {
        uint32_t aik = a_[i * d_ + k];
        if (!aik) continue;
        for (uint32_t j = 0; j < d_; ++j)
          r.a_[i * d_ + j] =
              static_cast<uint8_t>((r.a_[i * d_ + j] + aik * o.a_[k * d_ + j]) % p_);
      }
    return r;
  }

  GfMatrix inverse() const {
    // Gauss-Jordan on [A | I].
    std::vector<uint32_t> w(static_cast<size_t>(d_) * 2 * d_, 0);
    for (uint32_t i = 0; i < d_; ++i) {
      for (uint32_t j = 0; j < d_; ++j) w[i * 2 * d_ + j] = a_[i * d_ + j];
      w[i * 2 * d_ + d_ + i] = 1;
    }
    for (uint32_t col = 0; col < d_; ++col) {
      uint32_t piv = col;
      while (piv < d_ && w[piv * 2 * d_ + col] == 0) ++piv;
      require(piv < d_, Errc::SingularGenerator, "matrix is singular");
      if (piv != col)
        for (uint32_t j = 0; j < 2 * d_; ++j) std::swap(w[piv * 2 * d_ + j], w[col * 2 * d_ + j]);
      uint32_t inv = mod_inverse(w[col * 2 * d_ + col]);
      for (uint32_t j = 0; j < 2 * d_; ++j) w[col * 2 * d_ + j] = w[col * 2 * d_ + j] * inv % p_;
      for (uint32_t i = 0; i < d_; ++i) {
        if (i == col) continue;
        uint32_t f = w[i * 2 * d_ + col];
        if (!f) continue;
        for (uint32_t j = 0; j < 2 * d_; ++j)
          w[i * 2 * d_ + j] = (w[i * 2 * d_ + j] + (p_ - f) * w[col * 2 * d_ + j]) % p_;
      }
    }
    GfMatrix r(p_, d_);
    for (uint32_t i = 0; i < d_; ++i)
      for (uint32_t j = 0; j < d_; ++j) r.a_[i * d_ + j] = static_cast<uint8_t>(w[i * 2 * d_ + d_ + j]);
    return r;
  }

  GfMatrix transpose() const {
    GfMatrix r(p_, d_);
    for (uint32_t i = 0; i < d_; ++i)
      for (uint32_t j = 0; j < d_; ++j) r.a_[j * d_ + i] = a_[i * d_ + j];
    return r;
  }

  GfMatrix pow(uint64_t e) const {
    GfMatrix r = identity(p_, d_), b = *this;
    while (e) {
      if (e & 1) r = r * b;
      b = b * b;
      e >>= 1;
    }
    return r;
  }

  bool is_identity() const {
    for (uint32_t i = 0; i < d_; ++i)
      for (uint32_t j = 0; j < d_; ++j)
        if (a_[i * d_ + j] != (i == j ? 1 : 0)) return false;
    return true;
  }

  bool operator==(const GfMatrix& o) const { return p_ == o.p_ && d_ == o.d_ && a_ == o.a_; }
  bool operator!=(const GfMatrix& o) const { return !(*this == o); }
  bool operator<(const GfMatrix& o) const {
    if (p_ != o.p_) return p_ < o.p_;
    if (d_ != o.d_) return d_ < o.d_;
    return a_ < o.a_;
  }

  size_t hash() const {
    size_t h = 1469598103934665603ull;
    auto mix = [&](uint64_t v) {
      h ^= v;
      h *= 1099511628211ull;
    };
    mix(p_);
    mix(d_);
    for (uint8_t b : a_) mix(b);
    return h;
  }

  std::string to_string() const {
    std::string s = "[";
    for (uint32_t i = 0; i < d_; ++i) {
      s += i ? ";" : "";
      for (uint32_t j = 0; j < d_; ++j) {
        s += j ? "," : "";
        s += std::to_string(static_cast<int>(a_[i * d_ + j]));
      }
    }
    return s + "]";
  }

 private:
  GfMatrix(uint32_t p, uint32_t d) : p_(p), d_(d), a_(static_cast<size_t>(d) * d, 0) {
    require(p >= 2 && d >= 1, Errc::ExcludedDegree, "matrix needs a prime modulus and dimension");
  }

  uint32_t mod_inverse(uint32_t v) const {
    // p is prime and tiny; Fermat by scan keeps it dependency-free.
    for (uint32_t c = 1; c < p_; ++c)
      if (v * c % p_ == 1) return c;
    fail(Errc::SingularGenerator, "no modular inverse");
  }

  uint32_t p_ = 0;
  uint32_t d_ = 0;
  std::vector<uint8_t> a_;
};

// Row vectors in GF(p)^d are packed into indices big-endian: entry 0 is the
// most significant digit. Index ranges over [0, p^d).
inline uint64_t gf_vec_count(uint32_t p, uint32_t d) {
  uint64_t n = 1;
  for (uint32_t i = 0; i < d; ++i) n *= p;
  return n;
}

inline std::vector<uint8_t> gf_unpack(uint64_t idx, uint32_t p, uint32_t d) {
  std::vector<uint8_t> v(d);
  for (uint32_t i = d; i-- > 0;) {
    v[i] = static_cast<uint8_t>(idx % p);
    idx /= p;
  }
  return v;
}

inline uint64_t gf_pack(const std::vector<uint8_t>& v, uint32_t p) {
  uint64_t idx = 0;
  for (uint8_t e : v) idx = idx * p + e;
  return idx;
}

inline uint64_t gf_apply(uint64_t vecidx, const GfMatrix& m) {
  uint32_t p = m.p(), d = m.dim();
  std::vector<uint8_t> v = gf_unpack(vecidx, p, d);
  std::vector<uint8_t> w(d, 0);
  for (uint32_t i = 0; i < d; ++i) {
    if (!v[i]) continue;
    for (uint32_t j = 0; j < d; ++j)
      w[j] = static_cast<uint8_t>((w[j] + v[i] * m.at(i, j)) % p);
  }
  return gf_pack(w, p);
}

inline uint64_t gf_add(uint64_t a, uint64_t b, uint32_t p, uint32_t d) {
  std::vector<uint8_t> va = gf_unpack(a, p, d), vb = gf_unpack(b, p, d);
  for (uint32_t i = 0; i < d; ++i) va[i] = static_cast<uint8_t>((va[i] + vb[i]) % p);
  return gf_pack(va, p);
}

inline uint64_t gf_neg(uint64_t a, uint32_t p, uint32_t d) {
  std::vector<uint8_t> v = gf_unpack(a, p, d);
  for (uint32_t i = 0; i < d; ++i) v[i] = static_cast<uint8_t>((p - v[i]) % p);
  return gf_pack(v, p);
}

}  // namespace classbound
