#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <utility>
#include <vector>

#include "classbound/matrix_group.hpp"

namespace classbound {

// Reference to a conjugacy class of a semidirect product G |x V, named by its
// position in the canonical class order together with the canonical
// representative pair (linear part index, translation vector index).
struct AffineClassRef {
  uint64_t ordinal = 0;
  uint32_t lin_rep = 0;
  uint64_t vec_rep = 0;

  friend bool operator==(const AffineClassRef&, const AffineClassRef&) = default;
};

// Semidirect product G |x V of a finite linear group with its module, under
// the convention (g1, v1)(g2, v2) = (g1 g2, v1 * g2 + v2) with V written
// additively and vectors acting as rows on the right.
//
// The linear part may act non-faithfully: each group element's action on V is
// produced by an extractor, so a block of a larger matrix can serve as the
// module action while classes are still computed in the full group. Elements
// are addressed as id = lin_index * |V| + vec_index.
//
// Two independent class enumerations are available. The brute path closes
// conjugation orbits over all |G||V| elements and works for any group within
// the configured cap. The structured path requires p coprime to |G| and walks
// the classes as pairs (linear class rep n, orbit rep of C_G(n) on the fixed
// space C_V(n)); canonical vector reps are the numerically least members of
// their orbits, so reps and class order are deterministic.
class AffineGroup {
 public:
  using Extractor = std::function<GfMatrix(const GfMatrix&)>;

  AffineGroup(std::shared_ptr<const EnumeratedGroup<GfMatrix>> lin, uint32_t p, uint32_t dim,
              Extractor extract)
      : lin_(std::move(lin)), p_(p), dim_(dim), extract_(std::move(extract)) {
    vcount_ = gf_vec_count(p_, dim_);
    act_.reserve(lin_->order());
    for (uint32_t i = 0; i < lin_->order(); ++i) {
      GfMatrix a = extract_(lin_->element(i));
      require(a.p() == p_ && a.dim() == dim_, Errc::ExcludedDegree,
              "extracted action does not match the module");
      act_.push_back(std::move(a));
    }
  }

  // Natural module: the matrices act on their own space.
  static AffineGroup natural(const MatrixGroup& m) {
    return AffineGroup(m.grp, m.p, m.d, [](const GfMatrix& g) { return g; });
  }

  // Copying constructor for linear parts that live in someone else's subgroup
  // cache: takes its own snapshot of the group.
  static AffineGroup over(const EnumeratedGroup<GfMatrix>& lin, uint32_t p, uint32_t dim,
                          Extractor extract) {
    return AffineGroup(std::make_shared<EnumeratedGroup<GfMatrix>>(lin), p, dim,
                       std::move(extract));
  }

  const EnumeratedGroup<GfMatrix>& linear() const { return *lin_; }
  uint32_t p() const { return p_; }
  uint32_t dim() const { return dim_; }
  uint64_t vec_count() const { return vcount_; }
  uint64_t order() const { return lin_->order() * vcount_; }
  const GfMatrix& action(uint32_t lin_idx) const { return act_[lin_idx]; }
  GfMatrix action_of(const GfMatrix& m) const { return extract_(m); }

  bool coprime() const { return lin_->order() % p_ != 0; }

  uint64_t id_of(uint32_t lin_idx, uint64_t vec) const { return lin_idx * vcount_ + vec; }
  uint32_t lin_of(uint64_t id) const { return static_cast<uint32_t>(id / vcount_); }
  uint64_t vec_of(uint64_t id) const { return id % vcount_; }

  uint64_t mul(uint64_t a, uint64_t b) const {
    uint32_t la = lin_of(a), lb = lin_of(b);
    return id_of(lin_->mul(la, lb), gf_add(gf_apply(vec_of(a), act_[lb]), vec_of(b), p_, dim_));
  }

  uint64_t inv(uint64_t a) const {
    uint32_t li = lin_->inv(lin_of(a));
    return id_of(li, gf_neg(gf_apply(vec_of(a), act_[li]), p_, dim_));
  }

  uint64_t class_count() const { return coprime() ? structured().total : brute().reps.size(); }

  // Canonical class list: ordinal -> representative pair. Structured order is
  // linear class major, vector rep ascending; brute order is by least id.
  std::vector<AffineClassRef> class_reps() const {
    std::vector<AffineClassRef> out;
    if (coprime()) {
      const Structured& s = structured();
      for (uint32_t c = 0; c < s.per_class.size(); ++c)
        for (size_t oi = 0; oi < s.per_class[c].orbit_reps.size(); ++oi)
          out.push_back({s.per_class[c].base + oi, lin_->classes().reps[c],
                         s.per_class[c].orbit_reps[oi]});
    } else {
      const Brute& b = brute();
      for (uint64_t i = 0; i < b.reps.size(); ++i)
        out.push_back({i, lin_of(b.reps[i]), vec_of(b.reps[i])});
    }
    return out;
  }

  std::vector<uint64_t> class_sizes() const {
    if (!coprime()) return brute().sizes;
    const Structured& s = structured();
    const ClassSet& cs = lin_->classes();
    std::vector<uint64_t> out;
    for (uint32_t c = 0; c < s.per_class.size(); ++c)
      for (uint64_t orb : s.per_class[c].orbit_sizes)
        // |GV| / |C_GV((n, w))| where |C_GV| = |C_V(n)| * |C_G(n)| / orbit size.
        out.push_back(cs.sizes[c] * (vcount_ / s.per_class[c].fixed.size()) * orb);
    return out;
  }

  AffineClassRef identify(uint32_t lin_idx, uint64_t vec) const {
    if (coprime()) return identify_structured(lin_idx, vec);
    const Brute& b = brute();
    uint32_t c = b.class_of[id_of(lin_idx, vec)];
    return {c, lin_of(b.reps[c]), vec_of(b.reps[c])};
  }

  // Checks that the two enumerations induce the same partition of the group.
  // Requires both paths to be runnable.
  bool structured_matches_brute() const {
    require(coprime(), Errc::HypothesisFailed, "structured classes need a coprime module");
    const Brute& b = brute();
    const Structured& s = structured();
    if (b.reps.size() != s.total) return false;
    std::vector<uint64_t> map(s.total, UINT64_MAX);
    for (uint64_t id = 0; id < order(); ++id) {
      uint64_t so = identify_structured(lin_of(id), vec_of(id)).ordinal;
      uint32_t bc = b.class_of[id];
      if (map[bc] == UINT64_MAX)
        map[bc] = so;
      else if (map[bc] != so)
        return false;
    }
    std::sort(map.begin(), map.end());
    for (uint64_t i = 0; i < map.size(); ++i)
      if (map[i] != i) return false;
    return true;
  }

 private:
  struct LinearClassData {
    uint64_t base = 0;                // ordinal of this class block's first class
    std::vector<uint64_t> fixed;      // sorted members of C_V(n)
    std::vector<uint64_t> orbit_reps;  // sorted canonical (least) orbit reps
    std::vector<uint64_t> orbit_sizes;
    std::vector<uint64_t> rep_of;     // vec -> its orbit rep, npos elsewhere
    GfMatrix projector;               // V ->> C_V(n) along [V, n]
  };

  struct Structured {
    std::vector<LinearClassData> per_class;
    uint64_t total = 0;
  };

  struct Brute {
    std::vector<uint32_t> class_of;
    std::vector<uint64_t> reps;  // least id per class, ascending
    std::vector<uint64_t> sizes;
  };

  const Structured& structured() const {
    if (structured_) return *structured_;
    require(coprime(), Errc::HypothesisFailed, "structured classes need a coprime module");
    require(lin_->order() <= config().structured_linear_cap, Errc::CapExceeded,
            "linear part too large for structured classes");
    auto s = std::make_unique<Structured>();
    const ClassSet& cs = lin_->classes();
    uint64_t base = 0;
    for (uint32_t c = 0; c < cs.count(); ++c) {
      LinearClassData data;
      data.base = base;
      const GfMatrix& n = act_[cs.reps[c]];
      for (uint64_t v = 0; v < vcount_; ++v)
        if (gf_apply(v, n) == v) data.fixed.push_back(v);
      data.projector = fixed_space_projector(n);

      std::vector<GfMatrix> cgens;
      for (const GfMatrix& g : lin_->centralizer_generators(cs.reps[c]))
        cgens.push_back(extract_(g));
      data.rep_of.assign(vcount_, UINT64_MAX);
      std::vector<uint64_t> stack;
      for (uint64_t v : data.fixed) {
        if (data.rep_of[v] != UINT64_MAX) continue;
        data.orbit_reps.push_back(v);
        data.rep_of[v] = v;
        uint64_t size = 1;
        stack.assign(1, v);
        while (!stack.empty()) {
          uint64_t w = stack.back();
          stack.pop_back();
          for (const GfMatrix& g : cgens) {
            uint64_t x = gf_apply(w, g);
            if (data.rep_of[x] == UINT64_MAX) {
              data.rep_of[x] = v;
              ++size;
              stack.push_back(x);
            }
          }
        }
        data.orbit_sizes.push_back(size);
      }
      base += data.orbit_reps.size();
      s->per_class.push_back(std::move(data));
    }
    s->total = base;
    structured_ = std::move(s);
    return *structured_;
  }

  // Coprime projection onto the fixed space of n: (1/m) * sum of the powers
  // of n, m the matrix order. Annihilates [V, n] and fixes C_V(n) pointwise.
  GfMatrix fixed_space_projector(const GfMatrix& n) const {
    GfMatrix sum(GfMatrix::identity(p_, dim_));
    GfMatrix pw = n;
    uint64_t m = 1;
    while (!pw.is_identity()) {
      for (uint32_t i = 0; i < dim_; ++i)
        for (uint32_t j = 0; j < dim_; ++j) sum.set(i, j, (sum.at(i, j) + pw.at(i, j)) % p_);
      pw = pw * n;
      ++m;
    }
    require(m % p_ != 0, Errc::HypothesisFailed, "projector needs the action order prime to p");
    uint32_t minv = 0;
    for (uint32_t c = 1; c < p_; ++c)
      if (m % p_ * c % p_ == 1) minv = c;
    GfMatrix pi = GfMatrix::identity(p_, dim_);
    for (uint32_t i = 0; i < dim_; ++i)
      for (uint32_t j = 0; j < dim_; ++j) pi.set(i, j, sum.at(i, j) * minv % p_);
    return pi;
  }

  AffineClassRef identify_structured(uint32_t lin_idx, uint64_t vec) const {
    const Structured& s = structured();
    const ClassSet& cs = lin_->classes();
    uint32_t c = cs.class_of[lin_idx];
    // transporter t satisfies rep^t = lin_idx, so conjugating by t^-1 carries
    // the linear part back to the class rep.
    uint32_t ti = lin_->inv(cs.transporter[lin_idx]);
    uint64_t moved = gf_apply(vec, act_[ti]);
    const LinearClassData& data = s.per_class[c];
    uint64_t w = gf_apply(moved, data.projector);
    uint64_t rep = data.rep_of[w];
    require(rep != UINT64_MAX, Errc::SearchFailed, "projection left the fixed space");
    uint64_t pos = static_cast<uint64_t>(
        std::lower_bound(data.orbit_reps.begin(), data.orbit_reps.end(), rep) -
        data.orbit_reps.begin());
    return {data.base + pos, cs.reps[c], rep};
  }

  const Brute& brute() const {
    if (brute_) return *brute_;
    require(order() <= config().affine_brute_cap, Errc::CapExceeded,
            "semidirect product too large for brute-force classes");
    auto b = std::make_unique<Brute>();
    uint64_t n = order();
    b->class_of.assign(n, npos32);

    // Conjugating generators: the linear generators plus translations by the
    // standard basis vectors.
    std::vector<uint64_t> cgens;
    for (const GfMatrix& g : lin_->generators()) cgens.push_back(id_of(lin_->index_of(g), 0));
    uint64_t step = 1;
    for (uint32_t i = 0; i < dim_; ++i) {
      cgens.push_back(id_of(lin_->identity_index(), step));
      step *= p_;
    }
    std::vector<uint64_t> ginv;
    for (uint64_t g : cgens) ginv.push_back(inv(g));

    std::vector<uint64_t> queue;
    for (uint64_t i = 0; i < n; ++i) {
      if (b->class_of[i] != npos32) continue;
      uint32_t c = static_cast<uint32_t>(b->reps.size());
      b->reps.push_back(i);
      b->class_of[i] = c;
      uint64_t size = 1;
      queue.assign(1, i);
      for (size_t qi = 0; qi < queue.size(); ++qi) {
        for (size_t gi = 0; gi < cgens.size(); ++gi) {
          uint64_t y = mul(mul(ginv[gi], queue[qi]), cgens[gi]);
          if (b->class_of[y] == npos32) {
            b->class_of[y] = c;
            ++size;
            queue.push_back(y);
          }
        }
      }
      b->sizes.push_back(size);
    }
    brute_ = std::move(b);
    return *brute_;
  }

  std::shared_ptr<const EnumeratedGroup<GfMatrix>> lin_;
  uint32_t p_ = 0;
  uint32_t dim_ = 0;
  uint64_t vcount_ = 0;
  Extractor extract_;
  std::vector<GfMatrix> act_;
  mutable std::unique_ptr<Structured> structured_;
  mutable std::unique_ptr<Brute> brute_;
};

// Count of classes of NV sent to themselves by conjugation with (h, u), where
// h is a matrix normalizing the linear part and u a vector index. Also checks
// the invariance up front so a non-normalizing h fails loudly.
inline uint64_t fixed_affine_classes(const AffineGroup& nv, const GfMatrix& h, uint64_t u = 0) {
  const auto& lin = nv.linear();
  GfMatrix hi = h.inverse();
  for (const GfMatrix& g : lin.generators())
    require(lin.find(hi * g * h) != npos32, Errc::NotInvariant,
            "conjugator does not normalize the linear part");
  GfMatrix acth = nv.action_of(h);
  uint64_t fixed = 0;
  for (const AffineClassRef& r : nv.class_reps()) {
    GfMatrix img = hi * lin.element(r.lin_rep) * h;
    uint32_t il = lin.find(img);
    require(il != npos32, Errc::NotInvariant, "conjugation left the linear part");
    // (n, w)^(h, u) = (n^h, w * act(h) + u * (I - act(n^h)))
    GfMatrix one_minus = GfMatrix::identity(nv.p(), nv.dim());
    const GfMatrix& a = nv.action(il);
    for (uint32_t i = 0; i < nv.dim(); ++i)
      for (uint32_t j = 0; j < nv.dim(); ++j)
        one_minus.set(i, j, (one_minus.at(i, j) + nv.p() - a.at(i, j)) % nv.p());
    uint64_t iv = gf_add(gf_apply(r.vec_rep, acth), gf_apply(u, one_minus), nv.p(), nv.dim());
    if (nv.identify(il, iv).ordinal == r.ordinal) ++fixed;
  }
  return fixed;
}

// Averaging oracle for the same count, mirroring the group version: the
// number of fixed classes equals |{(x, y) in NV x NV : x^(h,u) = x^y}| / |NV|.
inline uint64_t fixed_affine_avg_oracle(const AffineGroup& nv, const GfMatrix& h, uint64_t u = 0) {
  require(nv.order() <= config().oracle_cap, Errc::CapExceeded,
          "averaging oracle is limited to small products");
  const auto& lin = nv.linear();
  GfMatrix hi = h.inverse();
  GfMatrix acth = nv.action_of(h);
  uint64_t pairs = 0;
  for (uint64_t x = 0; x < nv.order(); ++x) {
    GfMatrix img = hi * lin.element(nv.lin_of(x)) * h;
    uint32_t il = lin.find(img);
    require(il != npos32, Errc::NotInvariant, "conjugation left the linear part");
    GfMatrix one_minus = GfMatrix::identity(nv.p(), nv.dim());
    const GfMatrix& a = nv.action(il);
    for (uint32_t i = 0; i < nv.dim(); ++i)
      for (uint32_t j = 0; j < nv.dim(); ++j)
        one_minus.set(i, j, (one_minus.at(i, j) + nv.p() - a.at(i, j)) % nv.p());
    uint64_t xg =
        nv.id_of(il, gf_add(gf_apply(nv.vec_of(x), acth), gf_apply(u, one_minus), nv.p(), nv.dim()));
    for (uint64_t y = 0; y < nv.order(); ++y)
      if (nv.mul(nv.mul(nv.inv(y), x), y) == xg) ++pairs;
  }
  require(pairs % nv.order() == 0, Errc::SearchFailed,
          "averaging count is not divisible by the group order");
  return pairs / nv.order();
}

// Orbits of the linear group on a space of covectors or vectors of dimension
// sub_dim, under per-element action matrices supplied by the caller.
struct ModuleOrbitSet {
  uint64_t count = 0;
  std::vector<uint64_t> reps;   // least member per orbit, ascending
  std::vector<uint64_t> sizes;  // aligned with reps
  std::vector<uint64_t> rep_of;
};

inline ModuleOrbitSet orbits_under(uint32_t p, uint32_t dim, const std::vector<GfMatrix>& gens) {
  uint64_t n = gf_vec_count(p, dim);
  ModuleOrbitSet out;
  out.rep_of.assign(n, UINT64_MAX);
  std::vector<uint64_t> stack;
  for (uint64_t v = 0; v < n; ++v) {
    if (out.rep_of[v] != UINT64_MAX) continue;
    out.reps.push_back(v);
    out.rep_of[v] = v;
    uint64_t size = 1;
    stack.assign(1, v);
    while (!stack.empty()) {
      uint64_t w = stack.back();
      stack.pop_back();
      for (const GfMatrix& g : gens) {
        uint64_t x = gf_apply(w, g);
        if (out.rep_of[x] == UINT64_MAX) {
          out.rep_of[x] = v;
          ++size;
          stack.push_back(x);
        }
      }
    }
    out.sizes.push_back(size);
  }
  out.count = out.reps.size();
  return out;
}

// Contragredient action on the dual module: lambda^g (v) = lambda(v * g^-1),
// realized on covector coordinates as lambda * (g^-1)^T.
inline GfMatrix dual_action_of(const GfMatrix& m) { return m.inverse().transpose(); }

inline ModuleOrbitSet dual_orbits(const AffineGroup& a) {
  std::vector<GfMatrix> gens;
  for (const GfMatrix& g : a.linear().generators()) gens.push_back(dual_action_of(a.action_of(g)));
  return orbits_under(a.p(), a.dim(), gens);
}

inline ModuleOrbitSet vector_orbits(const AffineGroup& a) {
  std::vector<GfMatrix> gens;
  for (const GfMatrix& g : a.linear().generators()) gens.push_back(a.action_of(g));
  return orbits_under(a.p(), a.dim(), gens);
}

}  // namespace classbound
