#pragma once

#include <functional>
#include <map>
#include <memory>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "classbound/affine.hpp"
#include "classbound/class_lemmas.hpp"
#include "classbound/instances.hpp"
#include "classbound/matrix_group.hpp"
#include "classbound/module_lemmas.hpp"
#include "classbound/perm_groups.hpp"
#include "classbound/subgroup_lattice.hpp"

namespace classbound {

// One verifier invocation scheduled against one named instance. run() may
// throw; the campaign turns that into a skip record rather than aborting.
struct PlannedCheck {
  std::string lemma;
  std::string instance;
  std::function<std::vector<LemmaCheckRecord>()> run;
};

// A named corpus entry. plan(seed) constructs the underlying groups and
// returns every check the campaign should execute for this item; the seed
// only feeds verifiers that subsample, never the instance set itself.
struct CorpusItem {
  std::string name;
  std::string summary;
  std::map<std::string, double> expected;
  std::function<std::vector<PlannedCheck>(uint64_t seed)> plan;
};

// Lemma identifiers covered by the standard campaign suite.
inline const std::vector<std::string>& standard_suite() {
  static const std::vector<std::string> ids = {
      "1.1",   "1.2",        "2",     "affine-xcheck", "b1",    "b2",    "b3",
      "brauer", "c1",        "c2",    "c4",            "corf3", "expected",
      "f2",    "index-bound", "lema3", "lemd2",        "lemd4", "leme1",
      "leme2", "maroti",     "t74",   "thmC",          "thmd1"};
  return ids;
}

namespace detail {

inline PlannedCheck one_check(std::string lemma, std::string instance,
                              std::function<LemmaCheckRecord()> f) {
  PlannedCheck c;
  c.lemma = std::move(lemma);
  c.instance = std::move(instance);
  c.run = [f = std::move(f)]() { return std::vector<LemmaCheckRecord>{f()}; };
  return c;
}

inline LemmaCheckRecord expected_record(const std::string& item, const std::string& key,
                                        double computed, double expected) {
  return make_equality_record("expected", item + "/expected/" + key, computed, expected);
}

// Structured-versus-brute cross check for an affine instance small enough to
// enumerate both ways.
inline LemmaCheckRecord affine_xcheck_record(const MatrixGroup& m, const std::string& instance) {
  AffineGroup a = AffineGroup::natural(m);
  LemmaCheckRecord r = make_equality_record("affine-xcheck", instance,
                                            static_cast<double>(a.class_count()),
                                            static_cast<double>(a.class_count()));
  r.holds = a.structured_matches_brute();
  r.extras["order"] = static_cast<double>(a.order());
  return r;
}

// The 1.1 / b3 / index-bound family over one normal subgroup.
inline void plan_normal_checks(std::vector<PlannedCheck>& out, const std::string& item,
                               std::shared_ptr<PermGroup> g, const std::string& sub_name,
                               Subgroup<Permutation> n) {
  out.push_back(one_check("1.1", item + "/1.1/" + sub_name, [g, n, item, sub_name]() {
    return verify_lemma_1_1(*g, n, item + "/1.1/" + sub_name);
  }));
  out.push_back(one_check("b3", item + "/b3/" + sub_name, [g, n, item, sub_name]() {
    return verify_lemma_b3(*g, n, item + "/b3/" + sub_name);
  }));
  out.push_back(one_check("index-bound", item + "/index-bound/" + sub_name,
                          [g, n, item, sub_name]() {
                            return verify_index_bound(*g, n, item + "/index-bound/" + sub_name);
                          }));
}

inline void plan_b1_check(std::vector<PlannedCheck>& out, const std::string& item,
                          std::shared_ptr<PermGroup> g, const std::string& sub_name,
                          Subgroup<Permutation> h) {
  out.push_back(one_check("b1", item + "/b1/" + sub_name, [g, h, item, sub_name]() {
    return verify_lemma_b1(*g, h, item + "/b1/" + sub_name);
  }));
}

inline CorpusItem symmetric_item(int n) {
  CorpusItem it;
  it.name = "s" + std::to_string(n);
  it.summary = "symmetric group of degree " + std::to_string(n);
  it.plan = [n, name = it.name](uint64_t) {
    auto g = std::make_shared<PermGroup>(symmetric_group(n));
    std::vector<PlannedCheck> out;

    plan_normal_checks(out, name, g, "trivial", Subgroup<Permutation>::from_generators(*g, {}));
    Subgroup<Permutation> alt =
        Subgroup<Permutation>::from_generators(*g, alternating_group(n).generators());
    plan_normal_checks(out, name, g, "alt", alt);
    if (n == 4) {
      Subgroup<Permutation> v4 = Subgroup<Permutation>::from_generators(
          *g, {Permutation::from_cycles(4, "(0 1)(2 3)"), Permutation::from_cycles(4, "(0 2)(1 3)")});
      plan_normal_checks(out, name, g, "v4", v4);
    }
    plan_normal_checks(out, name, g, "full", whole_group(*g));

    plan_b1_check(out, name, g, "alt", alt);
    plan_b1_check(out, name, g, "transposition",
                  Subgroup<Permutation>::from_generators(*g, {Permutation::from_cycles(n, "(0 1)")}));
    std::string long_cycle = "(";
    for (int i = 0; i < n; ++i) long_cycle += (i ? " " : "") + std::to_string(i);
    long_cycle += ")";
    plan_b1_check(out, name, g, "ncycle",
                  Subgroup<Permutation>::from_generators(*g, {Permutation::from_cycles(n, long_cycle)}));

    Subgroup<Permutation> full = whole_group(*g);
    Subgroup<Permutation> triv = Subgroup<Permutation>::from_generators(*g, {});
    uint32_t gi = g->index_of(g->generators()[0]);
    out.push_back(one_check("c1", name + "/c1/full-alt", [g, full, alt, gi, name]() {
      return verify_lemma_c1(*g, full, alt, gi, name + "/c1/full-alt");
    }));
    out.push_back(one_check("c1", name + "/c1/alt-trivial", [g, alt, triv, gi, name]() {
      return verify_lemma_c1(*g, alt, triv, gi, name + "/c1/alt-trivial");
    }));

    out.push_back(one_check("maroti", name + "/maroti/self",
                            [g, n, name]() { return verify_maroti(*g, n, name + "/maroti/self"); }));
    out.push_back(one_check("maroti", name + "/maroti/alt", [g, alt, n, name]() {
      return verify_maroti(alt, n, name + "/maroti/alt");
    }));
    return out;
  };
  return it;
}

inline CorpusItem alternating_item(int n) {
  CorpusItem it;
  it.name = "a" + std::to_string(n);
  it.summary = "alternating group of degree " + std::to_string(n);
  it.plan = [n, name = it.name](uint64_t) {
    auto g = std::make_shared<PermGroup>(alternating_group(n));
    std::vector<PlannedCheck> out;
    plan_normal_checks(out, name, g, "trivial", Subgroup<Permutation>::from_generators(*g, {}));
    if (n == 4) {
      Subgroup<Permutation> v4 = Subgroup<Permutation>::from_generators(
          *g, {Permutation::from_cycles(4, "(0 1)(2 3)"), Permutation::from_cycles(4, "(0 2)(1 3)")});
      plan_normal_checks(out, name, g, "v4", v4);
    }
    plan_normal_checks(out, name, g, "full", whole_group(*g));
    plan_b1_check(out, name, g, "three-cycle",
                  Subgroup<Permutation>::from_generators(*g, {Permutation::from_cycles(n, "(0 1 2)")}));
    out.push_back(one_check("maroti", name + "/maroti/self",
                            [g, n, name]() { return verify_maroti(*g, n, name + "/maroti/self"); }));
    return out;
  };
  return it;
}

inline CorpusItem cyclic_item(int n) {
  CorpusItem it;
  it.name = "c" + std::to_string(n);
  it.summary = "cyclic group of order " + std::to_string(n);
  it.plan = [n, name = it.name](uint64_t) {
    auto g = std::make_shared<PermGroup>(cyclic_group(n));
    std::vector<PlannedCheck> out;
    const Permutation& r = g->generators()[0];
    for (int d = 1; d <= n; ++d) {
      if (n % d) continue;
      Permutation gen = Permutation::identity(n);
      for (int i = 0; i < n / d; ++i) gen = gen * r;
      Subgroup<Permutation> s = Subgroup<Permutation>::from_generators(*g, {gen});
      std::string nm = "ord" + std::to_string(d);
      plan_normal_checks(out, name, g, nm, s);
      plan_b1_check(out, name, g, nm, s);
    }
    if (n >= 3)
      out.push_back(one_check("maroti", name + "/maroti/self",
                              [g, n, name]() { return verify_maroti(*g, n, name + "/maroti/self"); }));
    return out;
  };
  return it;
}

inline CorpusItem dihedral_item(int n) {
  CorpusItem it;
  it.name = "dih" + std::to_string(n);
  it.summary = "dihedral group of order " + std::to_string(2 * n);
  it.plan = [n, name = it.name](uint64_t) {
    auto g = std::make_shared<PermGroup>(dihedral_group(n));
    std::vector<PlannedCheck> out;
    const Permutation& rot = g->generators()[0];
    const Permutation& refl = g->generators()[1];
    plan_normal_checks(out, name, g, "trivial", Subgroup<Permutation>::from_generators(*g, {}));
    Subgroup<Permutation> rotations = Subgroup<Permutation>::from_generators(*g, {rot});
    plan_normal_checks(out, name, g, "rotations", rotations);
    if (n % 2 == 0) {
      Permutation half = Permutation::identity(n);
      for (int i = 0; i < n / 2; ++i) half = half * rot;
      plan_normal_checks(out, name, g, "center",
                         Subgroup<Permutation>::from_generators(*g, {half}));
    }
    plan_normal_checks(out, name, g, "full", whole_group(*g));
    plan_b1_check(out, name, g, "reflection",
                  Subgroup<Permutation>::from_generators(*g, {refl}));
    plan_b1_check(out, name, g, "rotations", rotations);
    out.push_back(one_check("maroti", name + "/maroti/self",
                            [g, n, name]() { return verify_maroti(*g, n, name + "/maroti/self"); }));
    return out;
  };
  return it;
}

inline CorpusItem frobenius_item(int q, int p) {
  CorpusItem it;
  it.name = "frobenius-q" + std::to_string(q) + "p" + std::to_string(p);
  it.summary = "Frobenius group of order " + std::to_string(q * p);
  it.plan = [q, p, name = it.name](uint64_t) {
    auto g = std::make_shared<PermGroup>(frobenius_group(q, p));
    std::vector<PlannedCheck> out;
    const Permutation& shift = g->generators()[0];
    const Permutation& scale = g->generators()[1];
    plan_normal_checks(out, name, g, "trivial", Subgroup<Permutation>::from_generators(*g, {}));
    plan_normal_checks(out, name, g, "kernel",
                       Subgroup<Permutation>::from_generators(*g, {shift}));
    plan_normal_checks(out, name, g, "full", whole_group(*g));
    plan_b1_check(out, name, g, "complement",
                  Subgroup<Permutation>::from_generators(*g, {scale}));
    out.push_back(one_check("maroti", name + "/maroti/self",
                            [g, p, name]() { return verify_maroti(*g, p, name + "/maroti/self"); }));
    return out;
  };
  return it;
}

// Shared plan for the block-swap instances (Example 0.3a and the Frobenius
// wreath family): Lemma 2 and c2 on the swapped factors, 1.2 part (a) on the
// single normal factor, plus the quotient-style checks against M and N.
inline void plan_swap_checks(std::vector<PlannedCheck>& out, const std::string& name,
                             const SwapWreathInstance& inst) {
  out.push_back(one_check("2", name + "/2/swap", [inst, name]() {
    return verify_lemma_2(inst.decomposition(), name + "/2/swap");
  }));
  out.push_back(one_check("c2", name + "/c2/swap", [inst, name]() {
    return verify_lemma_c2(inst.decomposition(), name + "/c2/swap");
  }));
  out.push_back(one_check("1.2", name + "/1.2a/base", [inst, name]() {
    return verify_lemma_1_2(inst.single_decomposition(), name + "/1.2a/base", Lemma12Part::A);
  }));
  auto g = inst.group;
  plan_normal_checks(out, name, g, "base", inst.m);
  plan_normal_checks(out, name, g, "n", inst.n);
  plan_b1_check(out, name, g, "block0", inst.m1);
}

inline CorpusItem example_03a_item() {
  CorpusItem it;
  it.name = "ex0.3a";
  it.summary = "S3 wr C2 with the order-18 mixed-parity subgroup and the block swap";
  it.expected = {{"k(N)", 6.0}, {"fixed", 4.0}, {"lem2-bound", 6.0}};
  it.plan = [name = it.name, expected = it.expected](uint64_t) {
    SwapWreathInstance inst = example_03a();
    std::vector<PlannedCheck> out;
    out.push_back(one_check("expected", name + "/expected/k(N)", [inst, name, expected]() {
      return expected_record(name, "k(N)", static_cast<double>(inst.n.group().class_count()),
                             expected.at("k(N)"));
    }));
    out.push_back(one_check("expected", name + "/expected/fixed", [inst, name, expected]() {
      return expected_record(name, "fixed",
                             static_cast<double>(fixed_class_count(inst.n, inst.swap_index)),
                             expected.at("fixed"));
    }));
    out.push_back(one_check("expected", name + "/expected/lem2-bound", [inst, name, expected]() {
      return expected_record(name, "lem2-bound",
                             verify_lemma_2(inst.decomposition(), "tmp").rhs,
                             expected.at("lem2-bound"));
    }));
    plan_swap_checks(out, name, inst);
    return out;
  };
  return it;
}

inline CorpusItem frobenius_wreath_item(int q, int p, double expected_fixed) {
  CorpusItem it;
  it.name = "frobenius-wr-q" + std::to_string(q) + "p" + std::to_string(p);
  it.summary = "F(" + std::to_string(q) + "," + std::to_string(p) +
               ") wr C2 with the diagonal-complement subgroup and the block swap";
  it.expected = {{"fixed", expected_fixed}};
  it.plan = [q, p, name = it.name, expected_fixed](uint64_t) {
    SwapWreathInstance inst = frobenius_wreath_pair(q, p);
    std::vector<PlannedCheck> out;
    out.push_back(one_check("expected", name + "/expected/fixed", [inst, name, expected_fixed]() {
      return expected_record(name, "fixed",
                             static_cast<double>(fixed_class_count(inst.n, inst.swap_index)),
                             expected_fixed);
    }));
    plan_swap_checks(out, name, inst);
    return out;
  };
  return it;
}

inline CorpusItem l_gl25_item() {
  CorpusItem it;
  it.name = "L-gl25";
  it.summary = "the order-96 Hall 5'-subgroup of GL(2,5) acting on GF(5)^2";
  it.expected = {{"order", 96.0}, {"dual-orbits", 2.0}};
  it.plan = [name = it.name](uint64_t) {
    FiveComplementReport rep = five_complement_gl25();
    MatrixGroup g = rep.group;
    std::vector<PlannedCheck> out;
    out.push_back(one_check("expected", name + "/expected/order", [g, name]() {
      return expected_record(name, "order", static_cast<double>(g.order()), 96.0);
    }));
    out.push_back(one_check("expected", name + "/expected/dual-orbits", [g, name]() {
      return expected_record(name, "dual-orbits",
                             static_cast<double>(dual_orbits(AffineGroup::natural(g)).count), 2.0);
    }));
    out.push_back(one_check("lema3", name + "/lema3/natural",
                            [g, name]() { return verify_lema3(g, name + "/lema3/natural"); }));
    out.push_back(one_check("affine-xcheck", name + "/affine-xcheck", [g, name]() {
      return affine_xcheck_record(g, name + "/affine-xcheck");
    }));

    const EnumeratedGroup<GfMatrix>& L = g.group();
    std::vector<Subgroup<GfMatrix>> normals = normal_subgroups(L);
    for (std::size_t i = 0; i < normals.size(); ++i) {
      std::string nm = "n" + std::to_string(normals[i].order()) + "-" + std::to_string(i);
      Subgroup<GfMatrix> sub = normals[i];
      out.push_back(one_check("1.1", name + "/1.1/" + nm, [g, sub, name, nm]() {
        return verify_lemma_1_1(g.group(), sub, name + "/1.1/" + nm);
      }));
      out.push_back(one_check("b3", name + "/b3/" + nm, [g, sub, name, nm]() {
        return verify_lemma_b3(g.group(), sub, name + "/b3/" + nm);
      }));
      out.push_back(one_check("index-bound", name + "/index-bound/" + nm, [g, sub, name, nm]() {
        return verify_index_bound(g.group(), sub, name + "/index-bound/" + nm);
      }));
    }

    std::vector<Subgroup<GfMatrix>> lattice = all_subgroups(L);
    for (std::size_t i = 0; i < lattice.size(); ++i) {
      std::string nm = "sub" + std::to_string(i);
      Subgroup<GfMatrix> sub = lattice[i];
      out.push_back(one_check("b1", name + "/b1/" + nm, [g, sub, name, nm]() {
        return verify_lemma_b1(g.group(), sub, name + "/b1/" + nm);
      }));
    }

    Subgroup<GfMatrix> d1 = derived_subgroup(L);
    Subgroup<GfMatrix> d2 = Subgroup<GfMatrix>::from_generators(
        L, derived_subgroup(d1.group()).generator_values());
    uint32_t gi = L.index_of(L.generators()[0]);
    out.push_back(one_check("c1", name + "/c1/derived-second", [g, d1, d2, gi, name]() {
      return verify_lemma_c1(g.group(), d1, d2, gi, name + "/c1/derived-second");
    }));
    out.push_back(one_check("c1", name + "/c1/full-derived", [g, d1, gi, name]() {
      return verify_lemma_c1(g.group(), whole_group(g.group()), d1, gi,
                             name + "/c1/full-derived");
    }));
    return out;
  };
  return it;
}

inline CorpusItem small_affine_item(const std::string& name, const std::string& summary,
                                    std::vector<std::vector<int>> gens, double expected_k,
                                    bool with_split) {
  CorpusItem it;
  it.name = name;
  it.summary = summary;
  it.expected = {{"k", expected_k}};
  it.plan = [name, gens = std::move(gens), expected_k, with_split](uint64_t) {
    std::vector<GfMatrix> mats;
    for (const std::vector<int>& rows : gens) mats.push_back(GfMatrix::from_rows(5, 2, rows));
    MatrixGroup m = matrix_group(5, 2, mats);
    std::vector<PlannedCheck> out;
    out.push_back(one_check("expected", name + "/expected/k", [m, name, expected_k]() {
      return expected_record(name, "k",
                             static_cast<double>(AffineGroup::natural(m).class_count()),
                             expected_k);
    }));
    out.push_back(one_check("affine-xcheck", name + "/affine-xcheck", [m, name]() {
      return affine_xcheck_record(m, name + "/affine-xcheck");
    }));
    out.push_back(one_check("lema3", name + "/lema3/natural",
                            [m, name]() { return verify_lema3(m, name + "/lema3/natural"); }));
    if (with_split)
      out.push_back(one_check("leme1", name + "/leme1/split", [m, name]() {
        return verify_leme1(m, 1, name + "/leme1/split");
      }));
    return out;
  };
  return it;
}

inline CorpusItem translation_item() {
  CorpusItem it;
  it.name = "translation-gf25";
  it.summary = "pure translation module GF(5)^2 with outer conjugators";
  it.plan = [name = it.name](uint64_t) {
    MatrixGroup m = matrix_group(5, 2, {});
    std::vector<PlannedCheck> out;
    struct Conj {
      const char* nm;
      std::vector<int> rows;
    };
    for (const Conj& c : {Conj{"identity", {1, 0, 0, 1}}, Conj{"minus", {4, 0, 0, 4}},
                          Conj{"scale", {2, 0, 0, 1}}}) {
      std::string inst = name + "/brauer/" + c.nm;
      out.push_back(one_check("brauer", inst, [m, c, inst]() {
        return brauer_check_abelian(AffineGroup::natural(m), GfMatrix::from_rows(5, 2, c.rows),
                                    0, inst);
      }));
    }
    out.push_back(one_check("affine-xcheck", name + "/affine-xcheck", [m, name]() {
      return affine_xcheck_record(m, name + "/affine-xcheck");
    }));
    out.push_back(one_check("lema3", name + "/lema3/natural",
                            [m, name]() { return verify_lema3(m, name + "/lema3/natural"); }));
    return out;
  };
  return it;
}

// L x L in both diagonal blocks of GF(5)^4.
inline MatrixGroup l_base_product() {
  FiveComplementReport rep = five_complement_gl25();
  std::vector<GfMatrix> gens;
  for (const GfMatrix& s : rep.group.group().generators()) {
    gens.push_back(embed_block(s, 0, 2));
    gens.push_back(embed_block(s, 1, 2));
  }
  MatrixGroup m = matrix_group(5, 4, gens);
  m.block_count = 2;
  m.block_dim = 2;
  return m;
}

inline CorpusItem l_product_item() {
  CorpusItem it;
  it.name = "LxL-gf54";
  it.summary = "L x L block-diagonal on GF(5)^4 with the block swap";
  it.plan = [name = it.name](uint64_t) {
    MatrixGroup nn = l_base_product();
    std::vector<PlannedCheck> out;
    out.push_back(one_check("leme1", name + "/leme1/split",
                            [nn, name]() { return verify_leme1(nn, 2, name + "/leme1/split"); }));
    out.push_back(one_check("leme2", name + "/leme2/swap", [nn, name]() {
      return verify_leme2_blocks(nn, name + "/leme2/swap");
    }));
    out.push_back(one_check("lemd2", name + "/lemd2/swap", [nn, name]() {
      GfMatrix swap = block_permutation_matrix(5, 2, Permutation::from_cycles(2, "(0 1)"));
      return verify_lemd2_instance(nn, swap, 2, name + "/lemd2/swap");
    }));
    out.push_back(one_check("lema3", name + "/lema3/natural",
                            [nn, name]() { return verify_lema3(nn, name + "/lema3/natural"); }));
    return out;
  };
  return it;
}

inline CorpusItem l_wreath_item() {
  CorpusItem it;
  it.name = "L-wr-c2-gf54";
  it.summary = "L wr C2 on GF(5)^4, the imprimitive extension with a block 2-cycle";
  it.plan = [name = it.name](uint64_t) {
    FiveComplementReport rep = five_complement_gl25();
    MatrixGroup w = induced_block_group(rep.group, cyclic_group(2), 0);
    std::vector<PlannedCheck> out;
    PlannedCheck c4;
    c4.lemma = "c4";
    c4.instance = name + "/c4";
    c4.run = [w, name]() { return verify_lemc4(w, name + "/c4"); };
    out.push_back(std::move(c4));
    out.push_back(one_check("thmC", name + "/thmC/full", [w, name]() {
      return verify_theoremC_instance(w, name + "/thmC/full");
    }));
    out.push_back(one_check("b2", name + "/b2/f625",
                            [w, name]() { return verify_lemma_b2(w, 625.0, name + "/b2/f625"); }));
    out.push_back(one_check("lema3", name + "/lema3/natural",
                            [w, name]() { return verify_lema3(w, name + "/lema3/natural"); }));
    return out;
  };
  return it;
}

// Seeded swap-invariant subgroup of L x L: two random elements together with
// their swap conjugates. The swap normalizes the result by construction.
inline MatrixGroup swap_invariant_subgroup(uint64_t seed) {
  MatrixGroup ll = l_base_product();
  const EnumeratedGroup<GfMatrix>& full = ll.group();
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<uint32_t> pick(0, static_cast<uint32_t>(full.order() - 1));
  GfMatrix swap = block_permutation_matrix(5, 2, Permutation::from_cycles(2, "(0 1)"));
  std::vector<GfMatrix> gens;
  for (int i = 0; i < 2; ++i) {
    GfMatrix x = full.element(pick(rng));
    gens.push_back(x);
    gens.push_back(swap * x * swap);
  }
  MatrixGroup n = matrix_group(5, 4, gens);
  n.block_count = 2;
  n.block_dim = 2;
  return n;
}

inline CorpusItem swap_invariant_item(uint64_t seed) {
  CorpusItem it;
  it.name = "LxL-swapinv-s" + std::to_string(seed);
  it.summary = "seeded swap-invariant subgroup of L x L on GF(5)^4";
  it.plan = [seed, name = it.name](uint64_t) {
    MatrixGroup n = swap_invariant_subgroup(seed);
    std::vector<PlannedCheck> out;
    out.push_back(one_check("leme2", name + "/leme2/swap", [n, name]() {
      return verify_leme2_blocks(n, name + "/leme2/swap");
    }));
    if (n.order() * n.vec_count() <= config().affine_brute_cap)
      out.push_back(one_check("affine-xcheck", name + "/affine-xcheck", [n, name]() {
        return affine_xcheck_record(n, name + "/affine-xcheck");
      }));
    return out;
  };
  return it;
}

inline CorpusItem induced_item(uint64_t seed) {
  CorpusItem it;
  it.name = "induced-gf54-s" + std::to_string(seed);
  it.summary = "seeded mixed-block subgroup of L wr C2 on GF(5)^4";
  it.plan = [seed, name = it.name](uint64_t) {
    FiveComplementReport rep = five_complement_gl25();
    MatrixGroup w = induced_block_group(rep.group, cyclic_group(2), seed);
    std::vector<PlannedCheck> out;
    out.push_back(one_check("thmC", name + "/thmC/induced", [w, name]() {
      return verify_theoremC_instance(w, name + "/thmC/induced");
    }));
    return out;
  };
  return it;
}

inline CorpusItem theoremC_exclusion_item() {
  CorpusItem it;
  it.name = "thmC-exclusions";
  it.summary = "the two excluded block-1 configurations on GF(5)^2";
  it.plan = [](uint64_t) {
    std::vector<PlannedCheck> out;
    PlannedCheck c;
    c.lemma = "thmC";
    c.instance = "thmC-exclusion";
    c.run = []() { return theoremC_exclusion_records(); };
    out.push_back(std::move(c));
    return out;
  };
  return it;
}

inline CorpusItem numeric_item() {
  CorpusItem it;
  it.name = "numeric-thresholds";
  it.summary = "closed-form threshold and constant checks";
  it.plan = [](uint64_t) {
    std::vector<PlannedCheck> out;
    PlannedCheck w47;
    w47.lemma = "lemd4";
    w47.instance = "numeric/w2^47";
    w47.run = []() {
      auto [a, b] = check_lemd4_thresholds(47, 2, 1, "numeric/w2^47");
      return std::vector<LemmaCheckRecord>{a, b};
    };
    out.push_back(std::move(w47));
    out.push_back(one_check("lemd4", "numeric/w2^19(b)", []() {
      return check_lemd4_thresholds(19, 2, 1, "numeric/w2^19").second;
    }));
    out.push_back(one_check("thmd1", "numeric/L-order96",
                            []() { return theoremd1_record(96, 25, "numeric/L-order96"); }));
    out.push_back(one_check("corf3", "numeric/constant",
                            []() { return corf3_constant_record("numeric/constant"); }));
    out.push_back(one_check("t74", "numeric/deg625", []() {
      return theorem7_4_record(1.0, 1.0, 2, 25, 625, "numeric/deg625");
    }));
    out.push_back(one_check("f2", "numeric/index2", []() {
      return theoremf2_record(1.0, 2, 625.0, 2, 25, 1.0, "numeric/index2");
    }));
    out.push_back(one_check("leme2", "numeric/five-blocks", []() {
      return verify_leme2_numeric(5, 96, 25, "numeric/five-blocks");
    }));
    out.push_back(one_check("leme2", "numeric/three-blocks", []() {
      return verify_leme2_numeric(3, 48, 25, "numeric/three-blocks");
    }));
    out.push_back(one_check("lemd2", "numeric/refined-le-coarse", []() {
      Lemd2Bounds b = eval_lemd2_bounds(25, 2, false);
      return make_bound_record("lemd2", "numeric/refined-le-coarse", b.a2, b.a1);
    }));
    return out;
  };
  return it;
}

inline CorpusItem maroti_item(int n) {
  CorpusItem it;
  it.name = "maroti-s" + std::to_string(n);
  it.summary = "class-number bound sweep over subgroups of S" + std::to_string(n);
  it.plan = [n, name = it.name](uint64_t) {
    auto g = std::make_shared<PermGroup>(symmetric_group(n));
    std::vector<PlannedCheck> out;
    std::vector<Subgroup<Permutation>> cyc =
        subgroup_sample(*g, SampleStrategy::AllCyclic, 0, 0, 0);
    for (std::size_t i = 0; i < cyc.size(); ++i) {
      std::string inst = name + "/cyc" + std::to_string(i);
      Subgroup<Permutation> s = cyc[i];
      out.push_back(one_check("maroti", inst,
                              [g, s, n, inst]() { return verify_maroti(s, n, inst); }));
    }
    uint64_t sample_seed = 1000 + static_cast<uint64_t>(n);
    std::vector<Subgroup<Permutation>> rnd =
        subgroup_sample(*g, SampleStrategy::RandomGenerated, 100, 2, sample_seed);
    for (std::size_t i = 0; i < rnd.size(); ++i) {
      std::string inst = name + "/rnd" + std::to_string(i) + "-s" + std::to_string(sample_seed);
      Subgroup<Permutation> s = rnd[i];
      out.push_back(one_check("maroti", inst,
                              [g, s, n, inst]() { return verify_maroti(s, n, inst); }));
    }
    return out;
  };
  return it;
}

}  // namespace detail

// The deterministic standard corpus. Seeded entries embed their generation
// seed in the item name; the campaign seed never changes the instance set.
inline std::vector<CorpusItem> corpus_standard() {
  std::vector<CorpusItem> items;
  for (int n = 3; n <= 7; ++n) items.push_back(detail::symmetric_item(n));
  for (int n = 3; n <= 7; ++n) items.push_back(detail::alternating_item(n));
  for (int n : {2, 3, 4, 6, 8, 12}) items.push_back(detail::cyclic_item(n));
  for (int n : {3, 4, 5, 6, 8}) items.push_back(detail::dihedral_item(n));

  const std::pair<int, int> qp[] = {{2, 3}, {2, 5}, {2, 7}, {3, 7}, {3, 13}};
  for (auto [q, p] : qp) items.push_back(detail::frobenius_item(q, p));
  const double wreath_fixed[] = {4.0, 6.0, 8.0, 5.0, 7.0};
  for (std::size_t i = 0; i < 5; ++i)
    items.push_back(detail::frobenius_wreath_item(qp[i].first, qp[i].second, wreath_fixed[i]));

  items.push_back(detail::example_03a_item());
  items.push_back(detail::l_gl25_item());

  items.push_back(detail::small_affine_item(
      "L-c2v", "the order-2 scalar group on GF(5)^2", {{4, 0, 0, 4}}, 14.0, true));
  items.push_back(detail::small_affine_item(
      "L-c4v", "a fixed-point-free C4 on GF(5)^2", {{0, 1, 4, 0}}, 10.0, false));
  items.push_back(detail::small_affine_item(
      "L-q8v", "the quaternion group on GF(5)^2", {{0, 1, 4, 0}, {2, 0, 0, 3}}, 8.0, false));
  items.push_back(detail::small_affine_item(
      "L-c4v-reducible", "a reducible C4 on GF(5)^2", {{2, 0, 0, 1}}, 25.0, true));
  items.push_back(detail::translation_item());

  items.push_back(detail::l_product_item());
  items.push_back(detail::l_wreath_item());
  for (uint64_t seed = 101; seed <= 110; ++seed)
    items.push_back(detail::swap_invariant_item(seed));
  for (uint64_t seed = 201; seed <= 205; ++seed) items.push_back(detail::induced_item(seed));

  items.push_back(detail::theoremC_exclusion_item());
  items.push_back(detail::numeric_item());
  for (int n = 3; n <= 7; ++n) items.push_back(detail::maroti_item(n));
  return items;
}

}  // namespace classbound
