#pragma once

#include <cctype>
#include <cstdint>
#include <numeric>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "classbound/config.hpp"

namespace classbound {

// Permutation of {0, ..., n-1}, stored as the image table. Composition is
// left-to-right: (a * b) means "apply a, then b", so conjugation x^g = g^-1 x g
// and the usual right-action identities hold without sign fiddling.
class Permutation {
 public:
  Permutation() = default;

  explicit Permutation(std::size_t n) : img_(n) {
    require(n < 65536, Errc::ExcludedDegree, "permutation degree must be < 65536");
    std::iota(img_.begin(), img_.end(), std::uint16_t{0});
  }

  static Permutation identity(std::size_t n) { return Permutation(n); }

  static Permutation from_images(std::vector<std::uint16_t> images) {
    Permutation p;
    p.img_ = std::move(images);
    require(p.img_.size() < 65536, Errc::ExcludedDegree, "permutation degree must be < 65536");
    std::vector<bool> seen(p.img_.size(), false);
    for (std::uint16_t v : p.img_) {
      require(v < p.img_.size() && !seen[v], Errc::SingularGenerator,
              "image table is not a bijection");
      seen[v] = true;
    }
    return p;
  }

  // Parses disjoint-cycle notation over 0-based points, e.g. "(0 1 2)(3 4)".
  // Commas and whitespace both separate points; "()" and "" give the identity.
  static Permutation from_cycles(std::size_t n, const std::string& text) {
    Permutation p(n);
    std::size_t i = 0;
    auto skip_ws = [&] {
      while (i < text.size() && (std::isspace(static_cast<unsigned char>(text[i])) || text[i] == ','))
        ++i;
    };
    skip_ws();
    while (i < text.size()) {
      require(text[i] == '(', Errc::IoError, "expected '(' in cycle notation: " + text);
      ++i;
      std::vector<std::uint16_t> cyc;
      skip_ws();
      while (i < text.size() && text[i] != ')') {
        std::size_t j = i;
        while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
        require(j > i, Errc::IoError, "expected point in cycle notation: " + text);
        unsigned long v = std::stoul(text.substr(i, j - i));
        require(v < n, Errc::IoError, "cycle point out of range: " + text);
        cyc.push_back(static_cast<std::uint16_t>(v));
        i = j;
        skip_ws();
      }
      require(i < text.size(), Errc::IoError, "unterminated cycle: " + text);
      ++i;  // ')'
      for (std::size_t k = 0; k < cyc.size(); ++k) {
        std::uint16_t from = cyc[k], to = cyc[(k + 1) % cyc.size()];
        require(p.img_[from] == from, Errc::IoError, "point repeated in cycles: " + text);
        p.img_[from] = to;
      }
      // A fixed point written as "(x)" is fine; the loop above set img[x] = x.
      skip_ws();
    }
    return p;
  }

  std::size_t degree() const { return img_.size(); }
  std::uint16_t operator[](std::uint16_t i) const { return img_[i]; }
  std::uint16_t apply(std::uint16_t i) const { return img_[i]; }

  bool is_identity() const {
    for (std::size_t i = 0; i < img_.size(); ++i)
      if (img_[i] != i) return false;
    return true;
  }

  Permutation operator*(const Permutation& other) const {
    require(degree() == other.degree(), Errc::ExcludedDegree, "degree mismatch in product");
    Permutation r;
    r.img_.resize(img_.size());
    for (std::size_t i = 0; i < img_.size(); ++i) r.img_[i] = other.img_[img_[i]];
    return r;
  }

  Permutation inverse() const {
    Permutation r;
    r.img_.resize(img_.size());
    for (std::size_t i = 0; i < img_.size(); ++i) r.img_[img_[i]] = static_cast<std::uint16_t>(i);
    return r;
  }

  friend bool operator==(const Permutation& a, const Permutation& b) { return a.img_ == b.img_; }
  friend bool operator!=(const Permutation& a, const Permutation& b) { return a.img_ != b.img_; }
  friend bool operator<(const Permutation& a, const Permutation& b) { return a.img_ < b.img_; }

  std::size_t hash() const {
    std::size_t h = 1469598103934665603ull;
    for (std::uint16_t v : img_) {
      h ^= v;
      h *= 1099511628211ull;
    }
    return h;
  }

  std::string cycle_string() const {
    std::ostringstream out;
    std::vector<bool> seen(img_.size(), false);
    bool any = false;
    for (std::size_t i = 0; i < img_.size(); ++i) {
      if (seen[i] || img_[i] == i) continue;
      any = true;
      out << '(' << i;
      seen[i] = true;
      for (std::uint16_t j = img_[i]; j != i; j = img_[j]) {
        out << ' ' << j;
        seen[j] = true;
      }
      out << ')';
    }
    return any ? out.str() : "()";
  }

  friend std::ostream& operator<<(std::ostream& os, const Permutation& p) {
    return os << p.cycle_string();
  }

 private:
  std::vector<std::uint16_t> img_;
};

}  // namespace classbound
