#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>

#include "pmv/error.hpp"
#include "pmv/finite.hpp"

using namespace pmv;

namespace {

PseudoMV cat(const std::string& s) { return build_catalogue(CatalogueSpec::parse(s)); }

std::size_t label_index(const PseudoMV& a, const std::string& label) {
  for (const auto& x : a.elements()) {
    if (a.render(x) == label) return x.index();
  }
  throw std::runtime_error("no label " + label);
}

// The same algebra with its carrier relabelled by perm (new index = perm[old index]).
PseudoMV permuted(const PseudoMV& a, const std::vector<std::size_t>& perm) {
  const auto& t = *a.table();
  FiniteTable p;
  p.n = t.n;
  p.oplus.assign(t.n, std::vector<std::size_t>(t.n));
  p.neg.resize(t.n);
  p.tilde.resize(t.n);
  p.labels.resize(t.n);
  for (std::size_t i = 0; i < t.n; ++i) {
    for (std::size_t j = 0; j < t.n; ++j) p.oplus[perm[i]][perm[j]] = perm[t.oplus[i][j]];
    p.neg[perm[i]] = perm[t.neg[i]];
    p.tilde[perm[i]] = perm[t.tilde[i]];
    p.labels[perm[i]] = t.labels[i];
  }
  p.zero = perm[t.zero];
  p.one = perm[t.one];
  return table_algebra(std::move(p), "permuted " + a.describe());
}

}  // namespace

TEST(Catalogue, Sizes) {
  EXPECT_EQ(cat("chain(1)").size(), 2u);
  EXPECT_EQ(cat("chain(3)").size(), 4u);
  EXPECT_EQ(cat("boolean(3)").size(), 8u);
  EXPECT_EQ(cat("product(boolean(1),chain(2))").size(), 6u);
  EXPECT_EQ(cat("interval(product(boolean(1),chain(2)),(0,2))").size(), 3u);
  EXPECT_EQ(cat("chain(0)").size(), 1u);
  EXPECT_TRUE(cat("chain(0)").degenerate());
}

TEST(Catalogue, ParseRoundTrip) {
  for (const char* s : {"chain(3)", "boolean(2)", "product(boolean(1),product(chain(2),chain(1)))",
                        "interval(product(boolean(1),chain(2)),(1,0))"}) {
    EXPECT_EQ(CatalogueSpec::parse(s).text(), s);
  }
  EXPECT_THROW(CatalogueSpec::parse("chain(3"), ParseError);
  EXPECT_THROW(CatalogueSpec::parse("ring(3)"), ParseError);
  EXPECT_THROW(cat("interval(chain(3),1)"), DomainError);  // 1 is not Boolean in a 4-chain
}

TEST(Catalogue, ChainArithmetic) {
  auto a = cat("chain(3)");
  // Lukasiewicz: 2 (.) 2 = max(0, 2 + 2 - 3)
  EXPECT_EQ(a.render(odot(a, label_index(a, "2"), label_index(a, "2"))), "1");
}

TEST(Catalogue, BooleanSkeleton) {
  auto b = cat("boolean(2)");
  EXPECT_EQ(boolean_skeleton(b).size(), 4u);
  auto c = cat("chain(3)");
  auto sk = boolean_skeleton(c);
  ASSERT_EQ(sk.size(), 2u);
  EXPECT_EQ(c.render(sk[0]), "0");
  EXPECT_EQ(c.render(sk[1]), "3");
  auto p = cat("product(chain(1),chain(2))");
  std::vector<std::string> labels;
  for (const auto& x : boolean_skeleton(p)) labels.push_back(p.render(x));
  EXPECT_EQ(labels, (std::vector<std::string>{"(0,0)", "(0,2)", "(1,0)", "(1,2)"}));
  EXPECT_EQ(boolean_skeleton(cat("product(boolean(1),chain(2))")).size(), 4u);
}

TEST(Table, CorruptedEntryIsReported) {
  FiniteTable t = *cat("chain(2)").table();
  t.oplus[1][1] = 1;  // should be 2
  auto bad = table_algebra(t, "corrupt", false);
  auto report = check_axioms(bad);
  EXPECT_FALSE(report.all_passed());
  bool a6_failed = false;
  for (const auto& l : report.laws) {
    if (l.name == "A6" && !l.passed) {
      a6_failed = true;
      EXPECT_TRUE(l.counterexample.has_value());
    }
  }
  EXPECT_TRUE(a6_failed || !report.law("A1").passed);
  EXPECT_THROW(table_algebra(t, "corrupt"), AxiomFailure);
  t.neg[0] = 9;
  EXPECT_THROW(table_algebra(t, "range", false), DomainError);
}

TEST(Table, A6CorruptionAlone) {
  // Break only the join law: in boolean(2) make (1,0) (+) (0,1) absorb to (1,0).
  FiniteTable t = *cat("boolean(2)").table();
  t.oplus[2][1] = 2;
  auto report = check_axioms(table_algebra(t, "corrupt", false));
  EXPECT_FALSE(report.law("A6").passed);
  EXPECT_TRUE(report.law("A6").counterexample.has_value());
}

TEST(WeakRoot, BooleanIsIdentity) {
  for (const char* s : {"boolean(1)", "boolean(2)", "boolean(3)", "product(boolean(1),boolean(1))", "chain(1)"}) {
    auto a = cat(s);
    auto w = brute_force_weak_sqrt(a);
    ASSERT_TRUE(w.map.has_value()) << s;
    for (std::size_t i = 0; i < a.size(); ++i) EXPECT_EQ((*w.map)[i], i);
    EXPECT_TRUE(check_sq3(a, [](const Element& x) { return x; }).holds);
  }
}

TEST(WeakRoot, ChainFailsAtMidpoint) {
  auto a = cat("chain(2)");
  auto w = brute_force_weak_sqrt(a);
  EXPECT_FALSE(w.map.has_value());
  ASSERT_TRUE(w.failing_x.has_value());
  EXPECT_EQ(a.render(*w.failing_x), "1");
  EXPECT_EQ(w.failure, WeakRootSearch::Failure::square_mismatch);
  EXPECT_FALSE(brute_force_weak_sqrt(cat("chain(4)")).map.has_value());
}

TEST(WeakRoot, ExhaustiveSq1Sq2AndInjective) {
  for (const char* s : {"boolean(3)", "product(boolean(2),boolean(1))"}) {
    auto a = cat(s);
    auto r = *brute_force_weak_sqrt(a).map;
    for (const auto& x : a.elements()) {
      EXPECT_EQ(odot(a, r[x.index()], r[x.index()]), x);
      for (const auto& y : a.elements()) {
        if (leq(a, odot(a, y, y), x)) EXPECT_TRUE(leq(a, y, r[x.index()]));
      }
    }
    auto sorted = r;
    std::sort(sorted.begin(), sorted.end());
    EXPECT_TRUE(std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end());
  }
}

TEST(WeakRoot, UniqueUpToRelabelling) {
  auto a = cat("product(boolean(1),boolean(2))");
  std::vector<std::size_t> perm(a.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::reverse(perm.begin(), perm.end());
  std::rotate(perm.begin(), perm.begin() + 3, perm.end());
  auto b = permuted(a, perm);
  auto ra = *brute_force_weak_sqrt(a).map;
  auto rb = *brute_force_weak_sqrt(b).map;
  for (std::size_t i = 0; i < a.size(); ++i) EXPECT_EQ(rb[perm[i]], perm[ra[i]]);
  EXPECT_EQ(ra, *brute_force_weak_sqrt(a).map);
}

TEST(Search, VerdictsCoincide) {
  auto rows = search_square_rootable(6);
  EXPECT_GE(rows.size(), 8u);
  bool saw_chain2 = false;
  bool saw_chain4 = false;
  for (const auto& r : rows) {
    EXPECT_TRUE(r.consistent()) << r.spec;
    if (r.spec == "chain(2)") {
      saw_chain2 = true;
      EXPECT_EQ(r.failing_x.value_or(""), "1");
    }
    if (r.spec == "chain(4)") {
      saw_chain4 = true;
      EXPECT_FALSE(r.weak_root_exists);
      EXPECT_FALSE(r.is_boolean);
    }
    if (r.spec == "chain(1)") EXPECT_TRUE(r.weak_root_exists && r.is_boolean);
  }
  EXPECT_TRUE(saw_chain2 && saw_chain4);
  auto one = search_square_rootable(1);
  ASSERT_EQ(one.size(), 1u);
  EXPECT_TRUE(one[0].is_boolean && one[0].weak_root_exists);
  EXPECT_THROW(search_square_rootable(7), CeilingExceeded);
}

TEST(Isomorphism, Examples) {
  auto a = cat("product(chain(2),boolean(1))");
  auto id = find_isomorphism(a, a);
  ASSERT_TRUE(id.has_value());
  auto f = find_isomorphism(cat("product(boolean(1),boolean(1))"), cat("boolean(2)"));
  EXPECT_TRUE(f.has_value());
  EXPECT_FALSE(find_isomorphism(cat("chain(2)"), cat("boolean(2)")).has_value());
  EXPECT_FALSE(find_isomorphism(cat("chain(3)"), cat("boolean(2)")).has_value());
  EXPECT_TRUE(find_isomorphism(cat("product(chain(1),chain(2))"), cat("product(chain(2),chain(1))")).has_value());
  EXPECT_THROW(find_isomorphism(cat("boolean(4)"), cat("boolean(4)")), CeilingExceeded);
}

TEST(Interval, ProjectionIsHomomorphism) {
  auto a = cat("product(chain(2),chain(1))");
  for (const auto& top : boolean_skeleton(a)) {
    auto iv = boolean_interval(a, top);
    const auto& m = iv.algebra;
    EXPECT_TRUE(check_axioms(m).all_passed());
    for (const auto& x : a.elements()) {
      EXPECT_EQ(iv.from_parent(a.minus(x)), m.minus(iv.from_parent(x)));
      EXPECT_EQ(iv.from_parent(a.tilde(x)), m.tilde(iv.from_parent(x)));
      for (const auto& y : a.elements()) {
        EXPECT_EQ(iv.from_parent(a.oplus(x, y)), m.oplus(iv.from_parent(x), iv.from_parent(y)));
      }
    }
    EXPECT_EQ(iv.from_parent(a.one()), m.one());
  }
}

TEST(Materialize, ClosureOfConstants) {
  auto a = cat("chain(4)");
  auto m = materialize(a);
  EXPECT_EQ(m.size(), 5u);
}
