#include <catch2/catch_amalgamated.hpp>

#include "classbound/fixed_classes.hpp"
#include "classbound/perm_groups.hpp"
#include "classbound/quotient.hpp"
#include "classbound/subgroup_lattice.hpp"

using namespace classbound;

TEST_CASE("permutation arithmetic and cycle notation") {
  Permutation a = Permutation::from_cycles(5, "(0 1 2)");
  Permutation b = Permutation::from_cycles(5, "(2 3)");
  CHECK((a * b)[0] == 1);
  CHECK((a * b)[1] == 3);
  CHECK((a * b)[2] == 0);
  CHECK((a * a * a).is_identity());
  CHECK(a.inverse() * a == Permutation::identity(5));
  CHECK(Permutation::from_cycles(5, "(0 1 2)(3 4)").cycle_string() == "(0 1 2)(3 4)");
  CHECK(Permutation::identity(4).cycle_string() == "()");
  CHECK_THROWS_AS(Permutation::from_cycles(3, "(0 5)"), Error);
  CHECK_THROWS_AS(Permutation::from_cycles(3, "(0 1"), Error);
  CHECK_THROWS_AS(Permutation::from_images({0, 0, 1}), Error);
}

TEST_CASE("composition order is left to right") {
  // With (a*b) = apply a then b, conjugation x^g = g^-1 x g relabels points
  // by g: moving point i to g(i).
  Permutation x = Permutation::from_cycles(4, "(0 1)");
  Permutation g = Permutation::from_cycles(4, "(0 2)(1 3)");
  CHECK(g.inverse() * x * g == Permutation::from_cycles(4, "(2 3)"));
}

TEST_CASE("symmetric group orders and class counts") {
  const std::uint64_t orders[] = {6, 24, 120, 720, 5040};
  const std::uint64_t ks[] = {3, 5, 7, 11, 15};
  for (std::size_t n = 3; n <= 7; ++n) {
    PermGroup s = symmetric_group(n);
    CHECK(s.order() == orders[n - 3]);
    CHECK(s.class_count() == ks[n - 3]);
  }
}

TEST_CASE("alternating group orders and class counts") {
  const std::uint64_t ks[] = {3, 4, 5, 7, 9};
  std::uint64_t fact = 2;
  for (std::size_t n = 3; n <= 7; ++n) {
    fact *= n;
    PermGroup a = alternating_group(n);
    CHECK(a.order() == fact / 2);
    CHECK(a.class_count() == ks[n - 3]);
  }
}

TEST_CASE("dihedral and cyclic basics") {
  CHECK(cyclic_group(12).order() == 12);
  CHECK(cyclic_group(12).class_count() == 12);
  CHECK(dihedral_group(4).order() == 8);
  CHECK(dihedral_group(4).class_count() == 5);
  CHECK(dihedral_group(7).order() == 14);
  CHECK(dihedral_group(7).class_count() == 5);
}

TEST_CASE("frobenius groups") {
  PermGroup f = frobenius_group(2, 3);  // S3
  CHECK(f.order() == 6);
  CHECK(f.class_count() == 3);
  PermGroup f37 = frobenius_group(3, 7);
  CHECK(f37.order() == 21);
  CHECK(f37.class_count() == 5);
  PermGroup f313 = frobenius_group(3, 13);
  CHECK(f313.order() == 39);
  CHECK(f313.class_count() == 7);
  CHECK_THROWS_AS(frobenius_group(3, 8), Error);
  CHECK_THROWS_AS(frobenius_group(4, 7), Error);
}

TEST_CASE("class reps are lex-min and transporters conjugate rep to element") {
  PermGroup g = symmetric_group(5);
  const ClassSet& cs = g.classes();
  std::uint64_t total = 0;
  for (std::size_t c = 0; c < cs.count(); ++c) total += cs.sizes[c];
  CHECK(total == g.order());
  for (std::uint32_t i = 0; i < g.order(); ++i) {
    std::uint32_t c = cs.class_of[i];
    CHECK(cs.reps[c] <= i);
    const Permutation& t = g.element(cs.transporter[i]);
    CHECK(t.inverse() * g.element(cs.reps[c]) * t == g.element(i));
  }
}

TEST_CASE("centralizers agree with brute force") {
  PermGroup g = symmetric_group(5);
  for (std::uint32_t i : {1u, 7u, 30u, 119u}) {
    auto members = g.centralizer_members(i);
    auto gens = g.centralizer_generators(i);
    PermGroup c(g.identity_element(), gens);
    CHECK(c.order() == members.size());
    for (std::uint32_t m : members) CHECK(c.contains(g.element(m)));
  }
}

TEST_CASE("normal closure, derived subgroup, center") {
  PermGroup s4 = symmetric_group(4);
  Subgroup<Permutation> v4 = normal_closure(s4, {Permutation::from_cycles(4, "(0 1)(2 3)")});
  CHECK(v4.order() == 4);
  CHECK(v4.is_normal());
  Subgroup<Permutation> d = derived_subgroup(s4);
  CHECK(d.order() == 12);
  Subgroup<Permutation> dd = derived_subgroup(d.group());
  CHECK(dd.order() == 4);
  CHECK(center_subgroup(s4).order() == 1);
  CHECK(center_subgroup(dihedral_group(4)).order() == 2);
}

TEST_CASE("core of a subgroup") {
  PermGroup s4 = symmetric_group(4);
  // point stabilizer of 3: an S3 with trivial core
  std::vector<Permutation> st{Permutation::from_cycles(4, "(0 1)"),
                              Permutation::from_cycles(4, "(0 1 2)")};
  Subgroup<Permutation> s3 = Subgroup<Permutation>::from_generators(s4, st);
  CHECK(s3.order() == 6);
  CHECK(core_of(s4, s3).order() == 1);
  // D4 contains the normal V4
  Subgroup<Permutation> d4 = Subgroup<Permutation>::from_generators(
      s4, {Permutation::from_cycles(4, "(0 1 2 3)"), Permutation::from_cycles(4, "(0 2)")});
  CHECK(d4.order() == 8);
  CHECK(core_of(s4, d4).order() == 4);
}

TEST_CASE("quotient of S4 by V4 is S3") {
  PermGroup s4 = symmetric_group(4);
  Subgroup<Permutation> v4 = normal_closure(s4, {Permutation::from_cycles(4, "(0 1)(2 3)")});
  Quotient<Permutation> q = quotient_group(s4, v4);
  CHECK(q.group.order() == 6);
  CHECK(q.group.class_count() == 3);
  CHECK(quotient_class_count(s4, v4) == 3);
  // the projection is a homomorphism
  for (std::uint32_t a : {3u, 11u, 17u})
    for (std::uint32_t b : {1u, 9u, 23u}) {
      std::uint32_t ab = s4.mul(a, b);
      CHECK(q.group.mul(q.image_index(a), q.image_index(b)) == q.image_index(ab));
    }
  Subgroup<Permutation> stab = Subgroup<Permutation>::from_generators(
      s4, {Permutation::from_cycles(4, "(0 1)"), Permutation::from_cycles(4, "(0 1 2)")});
  CHECK_THROWS_AS(quotient_group(s4, stab), Error);
}

TEST_CASE("wreath and direct products") {
  PermGroup s3wr2 = wreath_product(symmetric_group(3), symmetric_group(2));
  CHECK(s3wr2.order() == 72);
  PermGroup c4wr2 = wreath_product(cyclic_group(4), cyclic_group(2));
  CHECK(c4wr2.order() == 32);
  CHECK(c4wr2.class_count() == 14);
  PermGroup c2wr3 = wreath_product(cyclic_group(2), cyclic_group(3));
  CHECK(c2wr3.order() == 24);
  PermGroup s4xc2 = direct_product(symmetric_group(4), cyclic_group(2));
  CHECK(s4xc2.order() == 48);
  CHECK(s4xc2.class_count() == 10);
}

TEST_CASE("fingerprints distinguish isoclinic groups") {
  // D4 and Q8 share order and class sizes but differ in element orders.
  PermGroup d4 = dihedral_group(4);
  Fingerprint fd = d4.fingerprint();
  CHECK(fd.order == 8);
  CHECK(fd.class_sizes == std::vector<std::uint64_t>{1, 1, 2, 2, 2});
  PermGroup s4 = symmetric_group(4);
  CHECK(s4.fingerprint() == s4.fingerprint());
  CHECK(!(s4.fingerprint() == d4.fingerprint()));
}

TEST_CASE("subgroup lattice of S4") {
  PermGroup s4 = symmetric_group(4);
  auto subs = all_subgroups(s4);
  CHECK(subs.size() == 30);
  std::uint64_t max_k = 0;
  for (const auto& s : subs) max_k = std::max(max_k, s.group().class_count());
  CHECK(max_k == 5);  // attained by S4 itself
  auto normals = normal_subgroups(s4);
  CHECK(normals.size() == 4);  // 1, V4, A4, S4
  for (const auto& n : normals) CHECK(n.is_normal());
}

TEST_CASE("normal subgroups catch proper powers") {
  PermGroup c4 = cyclic_group(4);
  auto normals = normal_subgroups(c4);
  CHECK(normals.size() == 3);  // 1, C2, C4
}

TEST_CASE("sylow 2-subgroups") {
  CHECK(sylow_2_subgroup(symmetric_group(4)).order() == 8);
  CHECK(sylow_2_subgroup(symmetric_group(5)).order() == 8);
  CHECK(sylow_2_subgroup(alternating_group(5)).order() == 4);
  CHECK(sylow_2_subgroup(cyclic_group(3)).order() == 1);
}

TEST_CASE("subgroup sampling") {
  PermGroup s4 = symmetric_group(4);
  auto cyc = subgroup_sample(s4, SampleStrategy::AllCyclic, 0, 0, 0);
  CHECK(cyc.size() == 17);  // 1 + 9 C2 + 4 C3 + 3 C4
  auto rnd = subgroup_sample(s4, SampleStrategy::RandomGenerated, 20, 2, 42);
  CHECK(rnd.size() == 20);
  auto rnd2 = subgroup_sample(s4, SampleStrategy::RandomGenerated, 20, 2, 42);
  for (std::size_t i = 0; i < rnd.size(); ++i) CHECK(rnd[i].members() == rnd2[i].members());
}

TEST_CASE("enumeration cap is enforced") {
  std::vector<Permutation> gens{Permutation::from_cycles(8, "(0 1)"),
                                Permutation::from_cycles(8, "(0 1 2 3 4 5 6 7)")};
  CHECK_THROWS_AS(PermGroup(Permutation::identity(8), gens, 1000), Error);
}
