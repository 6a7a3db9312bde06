#include <catch2/catch_amalgamated.hpp>

#include "classbound/class_lemmas.hpp"
#include "classbound/instances.hpp"
#include "classbound/perm_groups.hpp"

using namespace classbound;

namespace {

Subgroup<Permutation> klein_four(const PermGroup& s4) {
  return Subgroup<Permutation>::from_generators(
      s4, {Permutation::from_cycles(4, "(0 1)(2 3)"), Permutation::from_cycles(4, "(0 2)(1 3)")});
}

}  // namespace

TEST_CASE("diagonal extension in S3 wr C2 hits all its known counts") {
  SwapWreathInstance inst = example_03a();
  CHECK(inst.group->order() == 72);
  CHECK(inst.n.order() == 18);
  CHECK(inst.n.group().class_count() == 6);
  CHECK(fixed_class_count(inst.n, inst.swap_index) == 4);

  ProductDecomposition<Permutation> d = inst.decomposition();
  CHECK(d.top_order() == 2);

  LemmaCheckRecord l2 = verify_lemma_2(d, "ex");
  CHECK(l2.lhs == 4.0);
  CHECK(l2.rhs == 6.0);
  CHECK(l2.holds);

  LemmaCheckRecord c2 = verify_lemma_c2(d, "ex");
  CHECK(c2.extras["kJ"] == 2.0);
  CHECK(c2.extras["kN0"] == 3.0);
  CHECK(c2.extras["N1_order"] == 9.0);
  CHECK(c2.rhs == 6.0);
  CHECK(c2.holds);

  // The fixed-class count exceeds every class number available inside S3.
  uint64_t max_k = 0;
  PermGroup s3 = symmetric_group(3);
  for (const auto& u : all_subgroups(s3)) max_k = std::max(max_k, u.group().class_count());
  CHECK(max_k == 3);
  CHECK(fixed_class_count(inst.n, inst.swap_index) > max_k);
}

TEST_CASE("componentwise conjugacy conditions agree on the diagonal extension") {
  SwapWreathInstance inst = example_03a();

  // The block factors are swapped by g, so the componentwise equivalence
  // applies to the base product as a single normal factor.
  ProductDecomposition<Permutation> d = inst.single_decomposition();
  LemmaCheckRecord r = verify_lemma_1_2(d, "ex");
  CHECK(r.holds);
  CHECK(r.mode == "exact");
  CHECK(r.extras["x_checked"] == 18.0);
  CHECK(r.extras["equiv_mismatches"] == 0.0);
  CHECK(r.lhs == 4.0);

  LemmaCheckRecord ra = verify_lemma_1_2(d, "ex", Lemma12Part::A);
  CHECK(ra.holds);
  CHECK(ra.lhs == 0.0);

  // With non-normal factors the equivalence is not claimed and the verifier
  // refuses to run.
  ProductDecomposition<Permutation> swapped = inst.decomposition();
  bool rejected = false;
  try {
    verify_lemma_1_2(swapped, "ex");
  } catch (const Error& e) {
    rejected = e.code() == Errc::NotNormal;
  }
  CHECK(rejected);
}

TEST_CASE("componentwise conditions discriminate across two normal factors") {
  // C4 x C4 extended by the simultaneous inverting involution: both factors
  // stay normal, and exactly the four involutions survive condition (i).
  PermGroup amb(Permutation::identity(8),
                {Permutation::from_cycles(8, "(0 1 2 3)"), Permutation::from_cycles(8, "(4 5 6 7)"),
                 Permutation::from_cycles(8, "(1 3)(5 7)")});
  CHECK(amb.order() == 32);
  Subgroup<Permutation> m1 =
      Subgroup<Permutation>::from_generators(amb, {Permutation::from_cycles(8, "(0 1 2 3)")});
  Subgroup<Permutation> m2 =
      Subgroup<Permutation>::from_generators(amb, {Permutation::from_cycles(8, "(4 5 6 7)")});
  Subgroup<Permutation> n = Subgroup<Permutation>::from_generators(
      amb, {Permutation::from_cycles(8, "(0 1 2 3)"), Permutation::from_cycles(8, "(4 5 6 7)")});
  ProductDecomposition<Permutation> d(&amb, {m1, m2}, n,
                                      amb.index_of(Permutation::from_cycles(8, "(1 3)(5 7)")));

  LemmaCheckRecord r = verify_lemma_1_2(d, "c4c4-inv");
  CHECK(r.holds);
  CHECK(r.extras["x_checked"] == 16.0);
  CHECK(r.extras["equiv_mismatches"] == 0.0);
  CHECK(r.lhs == 4.0);
  CHECK(r.rhs == 4.0);  // k_1 = k_2 = 2, and the bound is tight here
}

TEST_CASE("component extraction splits wreath base elements") {
  SwapWreathInstance inst = example_03a();
  ProductDecomposition<Permutation> d = inst.decomposition();
  const PermGroup& g = *inst.group;
  uint32_t x = g.index_of(Permutation::from_cycles(6, "(0 1 2)(3 5 4)"));
  CHECK(g.element(d.component(x, 0)) == Permutation::from_cycles(6, "(0 1 2)"));
  CHECK(g.element(d.component(x, 1)) == Permutation::from_cycles(6, "(3 5 4)"));
}

TEST_CASE("frobenius wreath family fixed counts and bounds") {
  struct Case {
    size_t q, p;
    uint64_t fixed;
  };
  // q = 2 gives p + 1 fixed classes; q > 2 gives 1 + (p-1)/q + q - 1.
  for (Case c : {Case{2, 3, 4}, Case{2, 5, 6}, Case{2, 7, 8}, Case{3, 7, 5}}) {
    SwapWreathInstance inst = frobenius_wreath_pair(c.q, c.p);
    CHECK(inst.n.order() == c.p * c.p * c.q);
    CHECK(fixed_class_count(inst.n, inst.swap_index) == c.fixed);

    ProductDecomposition<Permutation> d = inst.decomposition();
    LemmaCheckRecord l2 = verify_lemma_2(d, "fw");
    CHECK(l2.rhs == static_cast<double>(c.p * c.q));
    CHECK(l2.holds);

    LemmaCheckRecord c2 = verify_lemma_c2(d, "fw");
    CHECK(c2.extras["kN0"] == static_cast<double>(c.p));
    CHECK(c2.extras["kJ"] == static_cast<double>(c.q));
    CHECK(c2.holds);

    if (inst.m.order() <= 500) {
      LemmaCheckRecord l12 = verify_lemma_1_2(inst.single_decomposition(), "fw");
      CHECK(l12.holds);
      CHECK(l12.extras["equiv_mismatches"] == 0.0);
    }
  }
}

TEST_CASE("coset orbit refinement recovers the class number exactly") {
  PermGroup s4 = symmetric_group(4);
  LemmaCheckRecord r = verify_lemma_1_1(s4, klein_four(s4), "s4-v4");
  CHECK(r.holds);
  CHECK(r.lhs == 5.0);
  CHECK(r.rhs == 5.0);
  CHECK(r.extras["right"] >= 5.0);

  // Degenerate ends: the whole group and the trivial subgroup.
  LemmaCheckRecord whole = verify_lemma_1_1(s4, whole_group(s4), "s4-s4");
  CHECK(whole.holds);
  Subgroup<Permutation> triv = Subgroup<Permutation>::from_generators(s4, {});
  LemmaCheckRecord one = verify_lemma_1_1(s4, triv, "s4-1");
  CHECK(one.holds);
  CHECK(one.extras["kQ"] == 5.0);

  SwapWreathInstance inst = example_03a();
  LemmaCheckRecord wr = verify_lemma_1_1(*inst.group, inst.n, "wr-n");
  CHECK(wr.holds);
}

TEST_CASE("core bound on class numbers") {
  // Point stabilizer in S5: the bound is tight.
  PermGroup s5 = symmetric_group(5);
  Subgroup<Permutation> stab = Subgroup<Permutation>::from_generators(
      s5, {Permutation::from_cycles(5, "(1 2)"), Permutation::from_cycles(5, "(1 2 3 4)")});
  CHECK(stab.order() == 24);
  LemmaCheckRecord r = verify_lemma_b1(s5, stab, "s5-stab");
  CHECK(r.extras["core_order"] == 1.0);
  CHECK(r.extras["k0"] == 2.0);
  CHECK(r.lhs == 7.0);
  CHECK(r.rhs == 7.0);
  CHECK(r.holds);

  // H = G collapses to k(G) <= k(G).
  LemmaCheckRecord full = verify_lemma_b1(s5, whole_group(s5), "s5-s5");
  CHECK(full.extras["k0"] == 0.0);
  CHECK(full.lhs == full.rhs);
  CHECK(full.holds);

  SwapWreathInstance inst = example_03a();
  LemmaCheckRecord wr = verify_lemma_b1(*inst.group, inst.m, "wr-base");
  CHECK(wr.holds);

  PermGroup s4 = symmetric_group(4);
  Subgroup<Permutation> d4 = Subgroup<Permutation>::from_generators(
      s4, {Permutation::from_cycles(4, "(0 1 2 3)"), Permutation::from_cycles(4, "(0 2)")});
  LemmaCheckRecord dr = verify_lemma_b1(s4, d4, "s4-d4");
  CHECK(dr.extras["core_order"] == 4.0);
  CHECK(dr.holds);
}

TEST_CASE("normal subgroup splitting bound") {
  PermGroup s4 = symmetric_group(4);
  Subgroup<Permutation> a4 = Subgroup<Permutation>::from_generators(
      s4, {Permutation::from_cycles(4, "(0 1 2)"), Permutation::from_cycles(4, "(1 2 3)")});
  LemmaCheckRecord r = verify_lemma_b3(s4, a4, "s4-a4");
  CHECK(r.lhs == 5.0);
  CHECK(r.extras["max_fixed"] == 2.0);
  CHECK(r.rhs == 2.0 + 2.0 * 1.0 * 2.0);
  CHECK(r.holds);

  LemmaCheckRecord whole = verify_lemma_b3(s4, whole_group(s4), "s4-s4");
  CHECK(whole.lhs == whole.rhs);
  CHECK(whole.holds);

  Subgroup<Permutation> triv = Subgroup<Permutation>::from_generators(s4, {});
  LemmaCheckRecord one = verify_lemma_b3(s4, triv, "s4-1");
  CHECK(one.holds);

  SwapWreathInstance inst = example_03a();
  LemmaCheckRecord wr = verify_lemma_b3(*inst.group, inst.m, "wr-base");
  CHECK(wr.holds);
}

TEST_CASE("centralizer order factors through the quotient") {
  SwapWreathInstance inst = example_03a();
  const PermGroup& g = *inst.group;
  LemmaCheckRecord r = verify_lemma_c1(g, inst.m, inst.m, inst.swap_index, "wr-swap");
  CHECK(r.lhs == 6.0);
  CHECK(r.rhs == 6.0);
  CHECK(r.holds);

  Subgroup<Permutation> a3a3 = Subgroup<Permutation>::from_generators(
      g, {Permutation::from_cycles(6, "(0 1 2)"), Permutation::from_cycles(6, "(3 4 5)")});
  LemmaCheckRecord ident = verify_lemma_c1(g, inst.m, a3a3, g.identity_index(), "wr-id");
  CHECK(ident.lhs == 36.0);
  CHECK(ident.rhs == 36.0);

  PermGroup s4 = symmetric_group(4);
  Subgroup<Permutation> a4 = Subgroup<Permutation>::from_generators(
      s4, {Permutation::from_cycles(4, "(0 1 2)"), Permutation::from_cycles(4, "(1 2 3)")});
  LemmaCheckRecord mix = verify_lemma_c1(s4, a4, klein_four(s4),
                                         s4.index_of(Permutation::from_cycles(4, "(0 1)")),
                                         "s4-transposition");
  CHECK(mix.lhs == 2.0);
  CHECK(mix.rhs == 2.0);
  CHECK(mix.holds);
}

TEST_CASE("class number bound for permutation groups of small degree") {
  CHECK(verify_maroti(symmetric_group(3), 3, "s3").slack == 0.0);
  LemmaCheckRecord s5 = verify_maroti(symmetric_group(5), 5, "s5");
  CHECK(s5.lhs == 7.0);
  CHECK(s5.rhs == 9.0);
  CHECK(s5.holds);
  LemmaCheckRecord c7 = verify_maroti(cyclic_group(7), 7, "c7");
  CHECK(c7.lhs == 7.0);
  CHECK(c7.rhs == 27.0);
  CHECK(verify_maroti(symmetric_group(7), 7, "s7").holds);
  CHECK_THROWS_AS(verify_maroti(symmetric_group(2), 2, "s2"), Error);
}

TEST_CASE("index times class number of a normal subgroup bounds the total") {
  PermGroup s4 = symmetric_group(4);
  Subgroup<Permutation> a4 = Subgroup<Permutation>::from_generators(
      s4, {Permutation::from_cycles(4, "(0 1 2)"), Permutation::from_cycles(4, "(1 2 3)")});
  LemmaCheckRecord r = verify_index_bound(s4, a4, "s4-a4");
  CHECK(r.lhs == 5.0);
  CHECK(r.rhs == 8.0);
  CHECK(r.holds);
  CHECK(verify_index_bound(s4, klein_four(s4), "s4-v4").holds);
}

TEST_CASE("fixed class counts are invariant under simultaneous conjugation") {
  PermGroup s4 = symmetric_group(4);
  Subgroup<Permutation> v4 = klein_four(s4);
  for (uint32_t r : s4.classes().reps) {
    uint64_t base = fixed_class_count(v4, r);
    for (const Permutation& t : s4.generators())
      CHECK(fixed_class_count(v4, s4.conj(r, s4.index_of(t))) == base);
  }
}

TEST_CASE("decomposition rejects malformed inputs") {
  PermGroup s4 = symmetric_group(4);
  Subgroup<Permutation> f1 =
      Subgroup<Permutation>::from_generators(s4, {Permutation::from_cycles(4, "(0 1)")});
  Subgroup<Permutation> f2 =
      Subgroup<Permutation>::from_generators(s4, {Permutation::from_cycles(4, "(0 2)")});
  CHECK_THROWS_AS(ProductDecomposition<Permutation>(&s4, {f1, f2}, f1,
                                                    s4.index_of(Permutation::from_cycles(4, "(0 3)"))),
                  Error);

  // Commuting factors whose product is not normal are rejected too.
  Subgroup<Permutation> f3 =
      Subgroup<Permutation>::from_generators(s4, {Permutation::from_cycles(4, "(2 3)")});
  bool threw = false;
  try {
    ProductDecomposition<Permutation>(&s4, {f1, f3}, f1,
                                      s4.index_of(Permutation::from_cycles(4, "(0 2)(1 3)")));
  } catch (const Error& e) {
    threw = e.code() == Errc::NotNormal;
  }
  CHECK(threw);

  // A swap-invariant N is required.
  SwapWreathInstance inst = example_03a();
  Subgroup<Permutation> lop = Subgroup<Permutation>::from_generators(
      *inst.group, {Permutation::from_cycles(6, "(0 1 2)")});
  CHECK_THROWS_AS(
      ProductDecomposition<Permutation>(inst.group.get(), {inst.m1, inst.m2}, lop, inst.swap_index),
      Error);

  // Identity on top: factors exist but are not permuted transitively.
  PermGroup d = direct_product(symmetric_group(3), symmetric_group(3));
  Subgroup<Permutation> b1 =
      Subgroup<Permutation>::from_generators(d, {Permutation::from_cycles(6, "(0 1 2)"),
                                                 Permutation::from_cycles(6, "(0 1)")});
  Subgroup<Permutation> b2 =
      Subgroup<Permutation>::from_generators(d, {Permutation::from_cycles(6, "(3 4 5)"),
                                                 Permutation::from_cycles(6, "(3 4)")});
  ProductDecomposition<Permutation> dd(&d, {b1, b2}, whole_group(d), d.identity_index());
  bool not_transitive = false;
  try {
    verify_lemma_2(dd, "no-swap");
  } catch (const Error& e) {
    not_transitive = e.code() == Errc::NotTransitive;
  }
  CHECK(not_transitive);
}
