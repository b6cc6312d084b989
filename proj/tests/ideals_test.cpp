#include <gtest/gtest.h>

#include "pmv/finite.hpp"
#include "pmv/gamma.hpp"
#include "pmv/ideals.hpp"

using namespace pmv;

namespace {

Rational Q(const char* s) { return parse_rational(s); }
Element d(const char* s) { return GroupElement::scalar(Q(s)); }
Element lh(const char* t, const char* a, const char* b, const char* c) {
  return GroupElement(GroupElement::Exact{Q(t), Q(a), Q(b), Q(c)});
}
PseudoMV dyadic_unit() { return gamma(UnitalLGroup(dyadics(), GroupElement::scalar(1))); }
PseudoMV lex_heis() { return gamma(UnitalLGroup(lex(rationals(), heisenberg()), lh("1", "0", "0", "0").point())); }
PseudoMV cat(const std::string& s) { return build_catalogue(CatalogueSpec::parse(s)); }

std::size_t at(const PseudoMV& a, const std::string& label) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a.render(i) == label) return i;
  }
  ADD_FAILURE() << "no element " << label;
  return 0;
}

std::vector<std::size_t> all(const PseudoMV& a) {
  std::vector<std::size_t> v(a.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = i;
  return v;
}

}  // namespace

TEST(ClassifyIdeal, ZeroInChain) {
  auto a = cat("chain(2)");
  auto h = classify_ideal(a, {a.zero().index()});
  EXPECT_TRUE(h.normal);
  EXPECT_TRUE(h.prime);
  EXPECT_TRUE(h.proper);
  EXPECT_FALSE(h.boolean_ideal);
}

TEST(ClassifyIdeal, ProjectionKernel) {
  auto a = cat("product(boolean(1),chain(2))");
  auto h = classify_ideal(a, {at(a, "(0,0)"), at(a, "(0,1)"), at(a, "(0,2)")});
  EXPECT_TRUE(h.normal);
  EXPECT_TRUE(h.prime);
  // quotient is boolean(1)
  EXPECT_TRUE(h.boolean_ideal);
}

TEST(ClassifyIdeal, FullCarrier) {
  auto a = cat("chain(3)");
  auto h = classify_ideal(a, all(a));
  EXPECT_TRUE(h.normal);
  EXPECT_FALSE(h.proper);
  EXPECT_FALSE(h.prime);
  EXPECT_TRUE(h.boolean_ideal);
}

TEST(ClassifyIdeal, RejectsNonIdeals) {
  auto a = cat("chain(2)");
  EXPECT_THROW(classify_ideal(a, {at(a, "1")}), DomainError);             // no 0
  EXPECT_THROW(classify_ideal(a, {at(a, "0"), at(a, "2")}), DomainError);  // not a downset
  EXPECT_THROW(classify_ideal(a, {at(a, "0"), at(a, "1")}), DomainError);  // 1 (+) 1 = 2
  EXPECT_THROW(classify_ideal(dyadic_unit(), {0}), Unsupported);
}

TEST(EnumerateIdeals, Counts) {
  EXPECT_EQ(enumerate_ideals(cat("boolean(2)")).size(), 4u);
  auto c2 = enumerate_ideals(cat("chain(2)"));
  ASSERT_EQ(c2.size(), 2u);
  EXPECT_EQ(c2[0].members.size(), 1u);
  EXPECT_EQ(c2[1].members.size(), 3u);
  EXPECT_EQ(enumerate_ideals(cat("chain(1)")).size(), 2u);
  // ideals of a product of chains are products of ideals
  EXPECT_EQ(enumerate_ideals(cat("product(chain(2),chain(3))")).size(), 4u);
  EXPECT_THROW(enumerate_ideals(cat("chain(12)")), CeilingExceeded);
}

TEST(EnumerateIdeals, NormalPrimesExist) {
  for (const auto& [spec, a] : catalogue_closure(8)) {
    if (a.degenerate()) continue;
    auto ideals = enumerate_ideals(a);
    bool found = false;
    for (const auto& i : ideals) found = found || (i.normal && i.prime);
    EXPECT_TRUE(found) << spec.text();
  }
}

TEST(Quotient, ProjectionGivesFactor) {
  auto a = cat("product(boolean(1),boolean(1))");
  auto h = classify_ideal(a, {at(a, "(0,0)"), at(a, "(0,1)")});
  auto q = quotient(a, h, SqrtMap::identity());
  EXPECT_TRUE(find_isomorphism(q.algebra, cat("boolean(1)")).has_value());
  EXPECT_EQ(q.class_of[at(a, "(1,0)")], q.class_of[at(a, "(1,1)")]);
  EXPECT_TRUE(q.compatible.holds);
  ASSERT_TRUE(q.report.has_value());
  EXPECT_TRUE(q.report->square_root());
}

TEST(Quotient, TrivialIdeals) {
  auto a = cat("product(chain(1),chain(2))");
  auto by_zero = quotient(a, classify_ideal(a, {a.zero().index()}));
  EXPECT_TRUE(find_isomorphism(by_zero.algebra, a).has_value());
  auto by_all = quotient(a, classify_ideal(a, all(a)));
  EXPECT_EQ(by_all.algebra.size(), 1u);
  EXPECT_TRUE(by_all.algebra.degenerate());
}

TEST(Quotient, AllNormalIdealsOfCatalogue) {
  for (const auto& [spec, a] : catalogue_closure(12)) {
    for (const auto& i : enumerate_ideals(a)) {
      if (!i.normal) continue;
      auto q = quotient(a, i);
      EXPECT_TRUE(check_axioms(q.algebra).all_passed()) << spec.text() << " / " << i.render();
    }
  }
}

TEST(Invariance, BooleanIdealEquivalenceOnCatalogue) {
  std::size_t rooted = 0;
  for (const auto& [spec, a] : catalogue_closure(12)) {
    auto w = brute_force_weak_sqrt(a);
    if (!w.map) continue;
    auto r = SqrtMap::table(*w.map);
    if (!verify(a, r).square_root()) continue;
    ++rooted;
    for (const auto& i : enumerate_ideals(a)) {
      auto v = is_r_invariant(i, r);
      if (!i.normal) continue;
      ASSERT_TRUE(v.matches_boolean.has_value());
      EXPECT_TRUE(*v.matches_boolean) << spec.text() << " " << i.render();
      auto q = quotient(a, i, r);
      EXPECT_TRUE(q.compatible.holds);
      EXPECT_TRUE(q.report->square_root());
      // r_I(0/I) = 0/I forces a Boolean quotient
      if (v.invariant) {
        EXPECT_EQ(q.root->operator()(q.algebra.zero()), q.algebra.zero());
        EXPECT_TRUE(is_boolean_algebra(q.algebra));
      }
    }
  }
  EXPECT_GE(rooted, 3u);
}

TEST(Invariance, KernelOfProjection) {
  auto a = cat("product(boolean(1),boolean(1))");
  auto h = classify_ideal(a, {at(a, "(0,0)"), at(a, "(0,1)")});
  auto v = is_r_invariant(h, SqrtMap::identity());
  EXPECT_TRUE(v.invariant);
  EXPECT_TRUE(h.boolean_ideal);
  EXPECT_TRUE(*v.matches_boolean);
}

// {0} is a prime ideal of Gamma(D,1) but r(0) = 1/2 escapes it; consistent with the
// Boolean-ideal criterion since 1/2 ^ 1/2 is not 0.
TEST(Invariance, PrimeZeroIdealOfDyadics) {
  auto a = dyadic_unit();
  auto zero = predicate_ideal(a, "{0}", [&](const Element& x) { return a.equal(x, a.zero()); }, 500);
  EXPECT_TRUE(zero.normal);
  EXPECT_TRUE(zero.prime);
  EXPECT_FALSE(zero.boolean_ideal);
  auto v = is_r_invariant(zero, closed_form(a, ClosedFormVariant::sym()));
  EXPECT_FALSE(v.invariant);
  EXPECT_EQ(*v.witness, "0");
  EXPECT_TRUE(*v.matches_boolean);
}

TEST(Representable, Catalogue) {
  for (const auto& [spec, a] : catalogue_closure(8)) {
    EXPECT_TRUE(is_representable(a).representable) << spec.text();
  }
  EXPECT_TRUE(is_representable(cat("chain(0)")).representable);
  EXPECT_TRUE(is_representable(lex_heis()).representable);
}

TEST(Atoms, Finite) {
  auto c2 = cat("chain(2)");
  auto at2 = atoms(c2);
  ASSERT_EQ(at2.size(), 1u);
  EXPECT_EQ(c2.render(at2[0]), "1");
  EXPECT_EQ(atoms(cat("boolean(2)")).size(), 2u);
  EXPECT_TRUE(atoms(cat("chain(0)")).empty());
  EXPECT_THROW(atoms(dyadic_unit()), Unsupported);
}

TEST(AtomlessWitness, ChainAtomHasNone) {
  auto a = cat("chain(2)");
  auto w = strongly_atomless_witness(a, at(a, "1"));
  EXPECT_EQ(w.status, AtomlessWitness::Status::none);
  // x = 2 has y = 1 with 1 ^ (2 (.) 1^-) = 1 ^ 1
  auto w2 = strongly_atomless_witness(a, at(a, "2"));
  EXPECT_EQ(w2.status, AtomlessWitness::Status::found);
  EXPECT_THROW(strongly_atomless_witness(a, a.zero()), DomainError);
}

TEST(AtomlessWitness, DyadicHalf) {
  auto a = dyadic_unit();
  auto r = closed_form(a, ClosedFormVariant::sym());
  auto w = strongly_atomless_witness(a, d("1/2"), 64, r);
  ASSERT_EQ(w.status, AtomlessWitness::Status::found);
  EXPECT_TRUE(w.canonical);
  EXPECT_EQ(*w.y, d("1/4"));
  EXPECT_EQ(*w.value, d("1/4"));
  // without a root the sampled search still succeeds
  auto s = strongly_atomless_witness(a, d("1/2"), 64);
  EXPECT_EQ(s.status, AtomlessWitness::Status::found);
  EXPECT_FALSE(s.canonical);
}

// Canonical witness value is x/2 on strict, symmetric, representable algebras.
TEST(AtomlessWitness, CanonicalHalvesOnStrictGammas) {
  for (const auto& a : {dyadic_unit(), lex_heis()}) {
    auto r = closed_form(a, ClosedFormVariant::sym());
    const LGroup& g = a.unital_group()->group();
    for (const auto& x : probe_elements(a, 300, 77)) {
      if (a.equal(x, a.zero())) continue;
      auto w = strongly_atomless_witness(a, x, 0, r);
      ASSERT_EQ(w.status, AtomlessWitness::Status::found) << a.render(x);
      EXPECT_TRUE(w.canonical);
      EXPECT_EQ(*w.value, Element(*g.halve(x.point()))) << a.render(x);
    }
  }
}
