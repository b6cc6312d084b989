#include "pmv/sqrt.hpp"

#include <algorithm>
#include <array>
#include <utility>

namespace pmv {

SqrtMap::SqrtMap(Kind kind, std::string description, std::function<Element(const Element&)> fn,
                 std::optional<Element> witness)
    : kind_(kind), description_(std::move(description)), fn_(std::move(fn)), witness_(std::move(witness)) {
  if (!fn_) throw DomainError("SqrtMap needs an evaluator");
}

SqrtMap SqrtMap::identity() {
  return SqrtMap(Kind::identity, "identity", [](const Element& x) { return x; });
}

SqrtMap SqrtMap::table(std::vector<std::size_t> map) {
  std::string text = "table[";
  for (std::size_t i = 0; i < map.size(); ++i) text += (i ? "," : "") + std::to_string(map[i]);
  text += "]";
  return SqrtMap(Kind::table, std::move(text), [map = std::move(map)](const Element& x) {
    if (x.index() >= map.size()) throw DomainError("table root: index out of range");
    return Element(map[x.index()]);
  });
}

SqrtMap SqrtMap::custom(std::string description, std::function<Element(const Element&)> fn) {
  return SqrtMap(Kind::custom_numeric, std::move(description), std::move(fn));
}

std::string kind_name(SqrtMap::Kind kind) {
  switch (kind) {
    case SqrtMap::Kind::table: return "table";
    case SqrtMap::Kind::closed_sym: return "closed-form-sym";
    case SqrtMap::Kind::closed_weak: return "closed-form-weak";
    case SqrtMap::Kind::mixed: return "mixed";
    case SqrtMap::Kind::identity: return "identity";
    case SqrtMap::Kind::custom_numeric: return "custom-numeric";
  }
  return "unknown";
}

std::string classification_name(Classification c) {
  switch (c) {
    case Classification::boolean: return "boolean";
    case Classification::strict: return "strict";
    case Classification::product: return "product";
    case Classification::not_a_square_root: return "not-a-square-root";
    case Classification::weak_only: return "weak-only";
  }
  return "unknown";
}

namespace {

constexpr std::size_t kWitnessCap = 16;

template <std::size_t N>
std::string render_tuple(const PseudoMV& a, const std::array<Element, N>& t) {
  if constexpr (N == 1) {
    return a.render(t[0]);
  } else {
    std::string out = "(";
    for (std::size_t i = 0; i < N; ++i) out += (i ? ", " : "") + a.render(t[i]);
    return out + ")";
  }
}

// Runs the check on every enumerated tuple and keeps the first few failures.
template <std::size_t N, class Pred>
Verdict tally(const PseudoMV& a, std::size_t budget, std::uint64_t stream, Pred&& ok) {
  Verdict v;
  find_counterexample<N>(
      a, budget, stream,
      [&](const std::array<Element, N>& t) {
        if (!ok(t)) {
          v.holds = false;
          if (v.witnesses.size() < kWitnessCap) v.witnesses.push_back(render_tuple(a, t));
        }
        return true;
      },
      &v.checked);
  std::sort(v.witnesses.begin(), v.witnesses.end());
  return v;
}

Verdict skipped_verdict() {
  Verdict v;
  v.skipped = true;
  return v;
}

Verdict single(bool ok, std::string witness) {
  Verdict v;
  v.checked = 1;
  if (!ok) {
    v.holds = false;
    v.witnesses.push_back(std::move(witness));
  }
  return v;
}

// r evaluated with the value checked to lie in the algebra.
struct Root {
  const PseudoMV& a;
  const SqrtMap& r;

  Element operator()(const Element& x) const {
    std::optional<Element> y;
    try {
      y = r(x);
    } catch (const DomainError& e) {
      throw DomainError(a.describe() + ": r is undefined at " + a.render(x) + " (" + e.what() + ")");
    }
    if (!a.contains(*y)) {
      throw DomainError(a.describe() + ": r(" + a.render(x) + ") = " + a.render(*y) + " is outside the algebra");
    }
    return *y;
  }
};

std::size_t budget_of(const PseudoMV& a, std::optional<std::size_t> budget) {
  return budget.value_or(a.sampler().sample_count);
}

Classification classify(const PseudoMV& a, const SqrtReport& rep) {
  if (!rep.weak_root()) return Classification::not_a_square_root;
  if (!rep.sq3.holds || !rep.boolean_witness_u) return Classification::weak_only;
  const Element& u = *rep.boolean_witness_u;
  if (a.equal(u, a.one())) return Classification::boolean;
  if (a.equal(u, a.zero())) return Classification::strict;
  return Classification::product;
}

}  // namespace

// ---------------------------------------------------------------------------
// Verification

SqrtReport verify(const PseudoMV& a, const SqrtMap& r, std::optional<std::size_t> budget) {
  const std::size_t n = budget_of(a, budget);
  const Root R{a, r};
  SqrtReport rep;
  rep.r0 = R(a.zero());
  const Element r0 = rep.r0;

  rep.sq1 = tally<1>(a, n, 301, [&](const auto& t) {
    Element rx = R(t[0]);
    return a.equal(odot(a, rx, rx), t[0]);
  });
  rep.sq2 = tally<2>(a, n, 302, [&](const auto& t) {
    const auto& [y, z] = t;
    Element x = join(a, odot(a, y, y), z);
    return leq(a, y, R(x));
  });
  rep.sq3 = tally<1>(a, n, 303, [&](const auto& t) {
    const Element& x = t[0];
    Element rx = R(x);
    return a.equal(R(a.minus(x)), arrow(a, rx, r0)) && a.equal(R(a.tilde(x)), squiggle(a, rx, r0));
  });
  rep.sq4 = tally<1>(a, n, 304, [&](const auto& t) {
    Element rx = R(t[0]);
    return a.equal(odot(a, rx, r0), odot(a, r0, rx));
  });
  rep.sq3_cross = tally<1>(a, n, 305, [&](const auto& t) {
    const Element& x = t[0];
    Element rx = R(x);
    return leq(a, odot(a, rx, R(a.minus(x))), r0) && leq(a, odot(a, R(a.tilde(x)), rx), r0);
  });
  rep.strict = a.equal(r0, a.minus(r0));
  if (rep.square_root()) {
    Element m = a.minus(r0);
    rep.boolean_witness_u = odot(a, m, m);
  }
  rep.classification = classify(a, rep);
  return rep;
}

// ---------------------------------------------------------------------------
// Closed forms

SqrtMap closed_form(const PseudoMV& a, const ClosedFormVariant& variant) {
  const UnitalLGroup* ug = a.unital_group();
  if (ug == nullptr) throw Unsupported(a.describe() + ": closed forms need a gamma-backed algebra");
  const GroupPtr g = ug->group_ptr();
  const GroupElement u = ug->unit();
  auto halved = [g](const GroupElement& x) {
    auto h = g->halve(x);
    if (!h) throw DomainError(g->name() + ": " + g->render(x) + " has no half");
    return *h;
  };

  switch (variant.kind) {
    case ClosedFormVariant::Kind::sym: {
      if (!g->two_divisible()) throw DomainError(g->name() + ": halving unavailable");
      auto verdict = in_center(*g, halved(u), 256, a.sampler());
      if (!verdict.central) throw DomainError(g->name() + ": u/2 is not central");
      return SqrtMap(SqrtMap::Kind::closed_sym, "(x+u)/2",
                     [g, u, halved](const Element& x) { return Element(halved(g->add(x.point(), u))); });
    }
    case ClosedFormVariant::Kind::weak: {
      if (!g->two_divisible()) throw DomainError(g->name() + ": halving unavailable");
      return SqrtMap(SqrtMap::Kind::closed_weak, "((x-u)/2)+u", [g, u, halved](const Element& x) {
        return Element(g->add(halved(g->sub(x.point(), u)), u));
      });
    }
    case ClosedFormVariant::Kind::mixed: {
      if (!variant.w) throw DomainError("mixed closed form needs a Boolean element w");
      const Element w(*variant.w);
      if (!a.contains(w) || !is_idempotent(a, w)) {
        throw DomainError(a.describe() + ": " + a.render(w) + " is not a Boolean element");
      }
      const Element wm = a.minus(w);
      halved(wm.point());
      return SqrtMap(
          SqrtMap::Kind::mixed, "(x^w)v((x^w-)+w-)/2 with w=" + a.render(w),
          [a, g, w, wm, halved](const Element& x) {
            Element low = meet(a, x, w);
            Element high(halved(g->add(meet(a, x, wm).point(), wm.point())));
            return join(a, low, high);
          },
          w);
    }
  }
  throw DomainError("unknown closed-form variant");
}

// ---------------------------------------------------------------------------
// Strictness, Boolean witness, decomposition

StrictVerdict is_strict(const PseudoMV& a, const SqrtMap& r) {
  StrictVerdict v;
  v.r0 = Root{a, r}(a.zero());
  Element m = a.minus(v.r0);
  v.strict = a.equal(v.r0, m);
  v.tilde_agrees = a.equal(m, a.tilde(v.r0));
  return v;
}

Element boolean_witness(const PseudoMV& a, const SqrtMap& r) {
  const Element r0 = Root{a, r}(a.zero());
  const Element m = a.minus(r0);
  Element u = odot(a, m, m);
  if (!is_idempotent(a, u)) {
    throw AxiomFailure(a.describe() + ": r(0)^- (.) r(0)^- = " + a.render(u) + " is not idempotent");
  }
  if (!a.equal(join(a, u, r0), m)) {
    throw AxiomFailure(a.describe() + ": u v r(0) differs from r(0)^- for u = " + a.render(u));
  }
  if (a.is_finite()) {
    for (const auto& v : a.elements()) {
      if (is_idempotent(a, v) && a.equal(join(a, v, r0), m) && !a.equal(v, u)) {
        throw AxiomFailure(a.describe() + ": idempotents " + a.render(u) + " and " + a.render(v) +
                           " both satisfy v v r(0) = r(0)^-");
      }
    }
  }
  return u;
}

SqrtMap relative_root(const PseudoMV& parent, const IntervalAlgebra& part, const Element& top, const SqrtMap& r) {
  const std::string name = "r(x)(.)" + parent.render(top);
  if (part.algebra.is_finite()) {
    std::vector<std::size_t> map;
    for (const auto& x : part.algebra.elements()) {
      map.push_back(part.from_parent(odot(parent, r(part.to_parent(x)), top)).index());
    }
    return SqrtMap(SqrtMap::Kind::table, name, [map](const Element& x) { return Element(map.at(x.index())); });
  }
  return SqrtMap::custom(name, [parent, part, top, r](const Element& x) {
    return part.from_parent(odot(parent, r(part.to_parent(x)), top));
  });
}

Decomposition decompose(const PseudoMV& a, const SqrtMap& r, std::optional<std::size_t> budget) {
  const std::size_t n = budget_of(a, budget);
  auto rep = verify(a, r, n);
  if (!rep.square_root()) {
    throw AxiomFailure(a.describe() + ": decomposition needs a square root (" + classification_name(rep.classification) +
                       ")");
  }
  Decomposition d;
  d.classification = rep.classification;
  d.u = boolean_witness(a, r);
  if (d.classification != Classification::product) return d;

  const Element v = a.minus(d.u);
  auto bp = boolean_interval(a, d.u);
  auto sp = boolean_interval(a, v);
  d.boolean_root = relative_root(a, bp, d.u, r);
  d.strict_root = relative_root(a, sp, v, r);

  const PseudoMV& A1 = bp.algebra;
  const PseudoMV& A2 = sp.algebra;
  auto rb = verify(A1, *d.boolean_root, n);
  d.boolean_part_ok = rb.square_root() && A1.equal((*d.boolean_root)(A1.zero()), A1.zero()) && is_boolean_algebra(A1);
  auto rs = verify(A2, *d.strict_root, n);
  d.strict_part_ok = rs.square_root() && is_strict(A2, *d.strict_root).strict;

  d.iso = [f1 = bp.from_parent, f2 = sp.from_parent](const Element& x) { return std::make_pair(f1(x), f2(x)); };
  d.boolean_part = bp;
  d.strict_part = sp;
  const auto& iso = d.iso;
  d.homomorphism = tally<2>(a, n, 330, [&](const auto& t) {
    const auto& [x, y] = t;
    auto [p1, p2] = iso(x);
    auto [q1, q2] = iso(y);
    auto s = iso(a.oplus(x, y));
    auto m = iso(a.minus(x));
    auto w = iso(a.tilde(x));
    bool ok = A1.equal(s.first, A1.oplus(p1, q1)) && A2.equal(s.second, A2.oplus(p2, q2));
    ok = ok && A1.equal(m.first, A1.minus(p1)) && A2.equal(m.second, A2.minus(p2));
    ok = ok && A1.equal(w.first, A1.tilde(p1)) && A2.equal(w.second, A2.tilde(p2));
    // inverse (a,b) |-> a (+) b, and every mixed pair is hit
    ok = ok && a.equal(a.oplus(bp.to_parent(p1), sp.to_parent(p2)), x);
    auto mixed = iso(join(a, bp.to_parent(p1), sp.to_parent(q2)));
    return ok && A1.equal(mixed.first, p1) && A2.equal(mixed.second, q2);
  });
  return d;
}

// ---------------------------------------------------------------------------
// Induced algebra on [r(0),1]

InducedAlgebra induced_interval_algebra(const PseudoMV& a, const SqrtMap& r, std::optional<std::size_t> budget) {
  const std::size_t n = budget_of(a, budget);
  const Root R{a, r};
  const Element r0 = R(a.zero());
  const std::string name = "[" + a.render(r0) + ",1] of " + a.describe();
  auto box = [a, r](const Element& x, const Element& y) {
    return Root{a, r}(a.oplus(odot(a, x, x), odot(a, y, y)));
  };
  auto prime = [a, r0](const Element& x) { return a.oplus(a.minus(x), r0); };
  auto star = [a, r0](const Element& x) { return a.oplus(a.tilde(x), r0); };

  std::optional<PseudoMV> b;
  std::function<Element(const Element&)> f;
  std::function<Element(const Element&)> back;  // new coordinates -> parent
  if (a.is_finite()) {
    std::vector<Element> carrier;
    std::vector<std::size_t> position(a.size(), a.size());
    for (const auto& x : a.elements()) {
      if (leq(a, r0, x)) {
        position[x.index()] = carrier.size();
        carrier.push_back(x);
      }
    }
    auto pos = [position, name](const Element& x) {
      if (position[x.index()] == position.size()) throw AxiomFailure(name + ": operation leaves the interval");
      return position[x.index()];
    };
    FiniteTable t;
    t.n = carrier.size();
    t.oplus.assign(t.n, std::vector<std::size_t>(t.n));
    for (std::size_t i = 0; i < t.n; ++i) {
      for (std::size_t j = 0; j < t.n; ++j) t.oplus[i][j] = pos(box(carrier[i], carrier[j]));
      t.neg.push_back(pos(prime(carrier[i])));
      t.tilde.push_back(pos(star(carrier[i])));
      t.labels.push_back(a.render(carrier[i]));
    }
    t.zero = pos(r0);
    t.one = pos(a.one());
    b = table_algebra(std::move(t), name, false);
    f = [R, pos](const Element& x) { return Element(pos(R(x))); };
    back = [carrier](const Element& x) { return carrier.at(x.index()); };
  } else {
    AlgebraOps ops;
    ops.name = name;
    ops.zero = r0;
    ops.one = a.one();
    ops.oplus = box;
    ops.minus = prime;
    ops.tilde = star;
    ops.equal = [a](const Element& x, const Element& y) { return a.equal(x, y); };
    ops.contains = [a, r0](const Element& x) { return a.contains(x) && leq(a, r0, x); };
    ops.sample = [a, r](Rng& rng, const SamplerConfig&) { return Root{a, r}(a.sample(rng)); };
    ops.render = [a](const Element& x) { return a.render(x); };
    ops.tolerance = a.tolerance();
    b = make_algebra(std::move(ops), a.sampler());
    f = [R](const Element& x) { return R(x); };
    back = [](const Element& x) { return x; };
  }

  InducedAlgebra out{*b, f, check_axioms(*b, n), {}, {}};
  const PseudoMV& B = out.algebra;
  out.isomorphism = tally<2>(a, n, 340, [&](const auto& t) {
    const auto& [x, y] = t;
    Element fx = f(x);
    Element fy = f(y);
    bool ok = B.equal(f(a.oplus(x, y)), B.oplus(fx, fy));
    ok = ok && B.equal(f(a.minus(x)), B.minus(fx)) && B.equal(f(a.tilde(x)), B.tilde(fx));
    ok = ok && B.equal(f(a.zero()), B.zero()) && B.equal(f(a.one()), B.one());
    return ok && (a.equal(x, y) == B.equal(fx, fy));
  });
  // Every w >= r(0) has the form x v r(0), and is hit by w (.) w.
  out.image = tally<1>(a, n, 341, [&](const auto& t) {
    Element w = join(a, t[0], r0);
    return a.equal(R(odot(a, w, w)), w) && leq(a, r0, R(t[0])) && a.equal(back(f(w)), R(w));
  });
  return out;
}

// ---------------------------------------------------------------------------
// Iterates and the dyadic ladder

Element iterate(const SqrtMap& r, const Element& x, unsigned m) {
  Element y = x;
  for (unsigned i = 0; i < m; ++i) y = r(y);
  return y;
}

bool power_check(const PseudoMV& a, const SqrtMap& r, const Element& x, unsigned m, unsigned n) {
  if (n > m) throw DomainError("power_check needs n <= m");
  return a.equal(power2(a, iterate(r, x, m), n), iterate(r, x, m - n));
}

std::vector<DyadicRung> dyadic_ladder(const PseudoMV& a, const SqrtMap& r, unsigned depth) {
  const UnitalLGroup* ug = a.unital_group();
  if (ug == nullptr) throw Unsupported(a.describe() + ": the dyadic ladder needs a gamma-backed algebra");
  if (depth > 20) throw CeilingExceeded("ladder depth " + std::to_string(depth) + " exceeds 20");
  if (!is_strict(a, r).strict) throw DomainError(a.describe() + ": the ladder needs a strict root");
  const LGroup& g = ug->group();
  const Root R{a, r};
  const GroupElement half = R(a.zero()).point();

  std::vector<DyadicRung> out;
  Element step = R(a.zero());
  for (unsigned k = 1; k <= depth; ++k) {
    if (k > 1) {
      step = Element(g.sub(R(step).point(), half));
      if (!a.contains(step)) {
        throw DomainError(a.describe() + ": rung " + std::to_string(k) + " left the interval");
      }
    }
    std::optional<Element> sum = a.zero();
    const std::uint64_t copies = std::uint64_t{1} << k;
    for (std::uint64_t i = 0; i < copies && sum; ++i) sum = partial_add(a, *sum, step);
    out.push_back(DyadicRung{k, step, sum.has_value() && a.equal(*sum, a.one())});
  }
  return out;
}

// ---------------------------------------------------------------------------
// Identities and named properties

VarietyVerdict check_variety_identities(const PseudoMV& a, const SqrtMap& r, std::optional<std::size_t> budget) {
  const std::size_t n = budget_of(a, budget);
  const Root R{a, r};
  const Element r0 = R(a.zero());
  VarietyVerdict v;
  v.squares = tally<1>(a, n, 350, [&](const auto& t) {
    Element rx = R(t[0]);
    return a.equal(odot(a, rx, rx), t[0]);
  });
  v.maximality = tally<2>(a, n, 351, [&](const auto& t) {
    const auto& [x, y] = t;
    return a.equal(meet(a, R(join(a, odot(a, y, y), x)), y), y);
  });
  v.negations = tally<1>(a, n, 352, [&](const auto& t) {
    Element rx = R(t[0]);
    return a.equal(R(a.minus(t[0])), arrow(a, rx, r0)) && a.equal(R(a.tilde(t[0])), squiggle(a, rx, r0));
  });
  return v;
}

std::vector<PropertyItem> square_root_properties(const PseudoMV& a, const SqrtMap& r,
                                                 std::optional<std::size_t> budget) {
  const std::size_t n = budget_of(a, budget);
  const auto rep = verify(a, r, n);
  const Root R{a, r};
  const Element zero = a.zero();
  const Element one = a.one();
  const Element r0 = R(zero);
  auto eq = [&](const Element& x, const Element& y) { return a.equal(x, y); };
  auto le = [&](const Element& x, const Element& y) { return leq(a, x, y); };
  auto dot = [&](const Element& x, const Element& y) { return odot(a, x, y); };
  auto vee = [&](const Element& x, const Element& y) { return join(a, x, y); };
  auto wedge = [&](const Element& x, const Element& y) { return meet(a, x, y); };
  auto to = [&](const Element& x, const Element& y) { return arrow(a, x, y); };
  auto sq = [&](const Element& x, const Element& y) { return squiggle(a, x, y); };
  auto idem = [&](const Element& x) { return is_idempotent(a, x); };

  std::vector<PropertyItem> items;
  std::uint64_t stream = 400;
  auto add = [&](std::string name, bool needs_sq3, auto&& run) {
    PropertyItem item{std::move(name), needs_sq3, {}};
    ++stream;
    if (!rep.weak_root() || (needs_sq3 && !rep.sq3.holds)) {
      item.verdict = skipped_verdict();
    } else {
      item.verdict = run();
    }
    items.push_back(std::move(item));
  };
  auto one_var = [&](auto&& pred) { return [&, pred] { return tally<1>(a, n, stream, pred); }; };
  auto two_var = [&](auto&& pred) { return [&, pred] { return tally<2>(a, n, stream, pred); }; };

  // r(x) (.) r(y) <= r(x (.) y), and the two arrow equalities, at one instance.
  auto product_below = [&](const Element& x, const Element& y) { return le(dot(R(x), R(y)), R(dot(x, y))); };
  auto arrow_exact = [&](const Element& x, const Element& y) { return eq(to(R(x), R(y)), R(to(x, y))); };
  auto squiggle_exact = [&](const Element& x, const Element& y) { return eq(sq(R(x), R(y)), R(sq(x, y))); };

  add("lower_bounds", false, one_var([&](const auto& t) {
        const Element& x = t[0];
        Element rx = R(x);
        Element xr = vee(x, r0);
        return le(x, xr) && le(xr, rx) && eq(R(one), one) && le(vee(dot(rx, r0), dot(r0, rx)), x) &&
               eq(dot(rx, x), dot(x, rx));
      }));
  add("monotone", false, two_var([&](const auto& t) {
        const auto& [x, y] = t;
        return le(R(x), R(vee(x, y))) && le(R(wedge(x, y)), R(x));
      }));
  add("meet_below_products", false, two_var([&](const auto& t) {
        const auto& [x, y] = t;
        Element m = wedge(x, y);
        bool boolean_below_r0 = idem(x) && le(x, r0);
        return le(m, dot(R(x), R(y))) && le(m, dot(R(y), R(x))) && (!boolean_below_r0 || eq(x, zero));
      }));
  add("square_of_square", false, one_var([&](const auto& t) {
        const Element& x = t[0];
        Element s = dot(x, x);
        Element rs = R(s);
        Element rx = R(x);
        Element rx2 = dot(rx, rx);
        return le(x, rs) && eq(dot(rs, rs), s) && eq(dot(rx2, rx2), s);
      }));
  add("overlap_below_root_of_zero", false, one_var([&](const auto& t) {
        const Element& x = t[0];
        return le(vee(wedge(x, a.minus(x)), wedge(x, a.tilde(x))), r0);
      }));
  add("boolean_iff_fixed", false, one_var([&](const auto& t) {
        Element rx = R(t[0]);
        return idem(rx) == eq(rx, t[0]);
      }));
  add("preserves_meet", false, two_var([&](const auto& t) {
        const auto& [x, y] = t;
        return eq(wedge(R(x), R(y)), R(wedge(x, y)));
      }));
  add("residual_inequalities", false, two_var([&](const auto& t) {
        const auto& [x, y] = t;
        return le(to(R(x), R(y)), R(to(x, y))) && le(sq(R(x), R(y)), R(sq(x, y)));
      }));
  // The two halves of the "for all x,y" equivalence that hold instance by instance:
  // the product bound at (x, x->y) gives r(x->y) <= r(x)->r(y), and the arrow equality
  // at (x, x(.)y) gives the product bound at (x,y). Same for ~>.
  add("residual_equivalence", false, two_var([&](const auto& t) {
        const auto& [x, y] = t;
        bool ok = !product_below(x, to(x, y)) || le(R(to(x, y)), to(R(x), R(y)));
        ok = ok && (!arrow_exact(x, dot(x, y)) || product_below(x, y));
        ok = ok && (!product_below(sq(x, y), x) || le(R(sq(x, y)), sq(R(x), R(y))));
        return ok && (!squiggle_exact(y, dot(x, y)) || product_below(x, y));
      }));
  add("preserves_join", true, two_var([&](const auto& t) {
        const auto& [x, y] = t;
        return eq(R(vee(x, y)), vee(R(x), R(y)));
      }));
  add("product_upper_bound", true, two_var([&](const auto& t) {
        const auto& [x, y] = t;
        return le(R(dot(x, y)), vee(dot(R(x), R(y)), r0));
      }));
  add("square_shift", true, one_var([&](const auto& t) {
        const Element& x = t[0];
        Element rx = R(x);
        Element rxx = R(dot(x, x));
        return eq(rxx, vee(dot(rx, rx), r0)) && eq(rxx, vee(x, r0)) && (!le(r0, x) || eq(rxx, x));
      }));
  add("boolean_iff_shift", true, one_var([&](const auto& t) {
        const Element& x = t[0];
        Element rx = R(x);
        bool b = idem(x);
        return b == eq(rx, a.oplus(x, r0)) && b == eq(rx, a.oplus(r0, x));
      }));
  add("doubling_shift", true, one_var([&](const auto& t) {
        const Element& y = t[0];
        Element v = R(a.oplus(y, y));
        return eq(v, a.oplus(y, r0)) && eq(v, a.oplus(r0, y));
      }));
  add("complement_square_boolean", true, [&] {
    Element c = to(r0, zero);
    Element d = sq(r0, zero);
    Element cc = dot(c, c);
    return single(eq(cc, dot(d, d)) && idem(cc), a.render(cc));
  });
  add("interval_image", true, [&] {
    return tally<3>(a, n, stream, [&](const auto& t) {
      const auto& [x, y, s] = t;
      Element lo = wedge(x, y);
      Element hi = vee(x, y);
      Element z = wedge(vee(s, lo), hi);
      Element w = wedge(vee(s, R(lo)), R(hi));
      Element pre = dot(w, w);
      Element top = vee(s, r0);
      return le(R(lo), R(z)) && le(R(z), R(hi)) && eq(R(pre), w) && le(lo, pre) && le(pre, hi) &&
             eq(R(dot(top, top)), top);
    });
  });
  add("cancellation", true, two_var([&](const auto& t) {
        const auto& [x, y] = t;
        Element rx = R(x);
        Element ry = R(y);
        return !le(y, wedge(dot(rx, ry), dot(ry, rx))) || le(y, x);
      }));
  add("relative_roots", true, [&] {
    std::vector<Element> tops;
    if (a.is_finite()) {
      tops = boolean_skeleton(a);
    } else {
      for (const auto& x : probe_elements(a, n, stream)) {
        if (idem(x) && std::none_of(tops.begin(), tops.end(), [&](const Element& b) { return eq(b, x); })) {
          tops.push_back(x);
        }
      }
    }
    Verdict v;
    for (const auto& top : tops) {
      auto part = boolean_interval(a, top);
      auto sub = verify(part.algebra, relative_root(a, part, top, r), n);
      v.checked += sub.sq1.checked + sub.sq2.checked + sub.sq3.checked;
      if (!sub.square_root()) {
        v.holds = false;
        v.witnesses.push_back(a.render(top));
      }
    }
    std::sort(v.witnesses.begin(), v.witnesses.end());
    return v;
  });
  add("sum_lower_bound", true, two_var([&](const auto& t) {
        const auto& [x, y] = t;
        Element lhs = R(a.oplus(x, y));
        Element rhs = a.oplus(dot(R(x), a.minus(r0)), R(y));
        return le(rhs, lhs) && (!arrow_exact(a.tilde(x), y) || eq(lhs, rhs));
      }));
  add("iterated_powers", true, one_var([&](const auto& t) {
        for (unsigned m = 0; m <= 4; ++m) {
          for (unsigned k = 0; k <= m; ++k) {
            if (!power_check(a, r, t[0], m, k)) return false;
          }
        }
        return true;
      }));
  add("halves_of_negations", true, one_var([&](const auto& t) {
        const Element& x = t[0];
        Element p = a.tilde(R(a.minus(x)));
        Element q = a.minus(R(a.tilde(x)));
        Element pp = a.oplus(p, p);
        bool ok = le(vee(p, q), pp) && eq(pp, x) && eq(a.oplus(q, q), x);
        ok = ok && eq(R(dot(x, x)), vee(x, r0));
        return ok && idem(x) == eq(R(x), vee(x, r0));
      }));
  add("upper_bound", true, one_var([&](const auto& t) {
        const Element& x = t[0];
        return le(R(x), wedge(a.oplus(x, r0), a.oplus(r0, x)));
      }));
  add("root_sequence", true, one_var([&](const auto& t) {
        Element prev = t[0];
        for (unsigned k = 1; k <= 5; ++k) {
          Element next = R(prev);
          if (!le(prev, next) || !eq(power2(a, next, k), t[0])) return false;
          prev = next;
        }
        return true;
      }));
  add("residual_upper_bound", true, one_var([&](const auto& t) {
        const Element& x = t[0];
        return le(R(x), wedge(to(r0, x), sq(r0, x)));
      }));
  add("negation_shift", true, one_var([&](const auto& t) {
        const Element& x = t[0];
        Element rx = R(x);
        return eq(a.oplus(a.minus(R(a.tilde(x))), r0), rx) && eq(a.oplus(r0, a.tilde(R(a.minus(x)))), rx);
      }));
  add("commutes_with_root", true, one_var([&](const auto& t) {
        const Element& x = t[0];
        Element rx = R(x);
        return eq(a.oplus(x, rx), a.oplus(rx, x)) && eq(a.oplus(x, r0), a.oplus(r0, x));
      }));
  // max and min checked as domination over the probes plus attainment at r(0).
  add("root_of_zero_extremal", true, [&] {
    Element m = a.minus(r0);
    bool attained = eq(wedge(r0, m), r0) && eq(wedge(r0, a.tilde(r0)), r0) && eq(vee(r0, m), m) &&
                    eq(vee(r0, a.tilde(r0)), m) && eq(m, a.tilde(r0));
    Verdict v = tally<1>(a, n, stream, [&](const auto& t) {
      const Element& x = t[0];
      return le(wedge(x, a.minus(x)), r0) && le(wedge(x, a.tilde(x)), r0) && le(m, vee(x, a.minus(x))) &&
             le(m, vee(x, a.tilde(x)));
    });
    if (!attained) {
      v.holds = false;
      v.witnesses.insert(v.witnesses.begin(), a.render(r0));
    }
    return v;
  });
  add("complement_root_bound", true, [&] {
    Element c = to(r0, zero);
    return single(le(R(c), vee(c, R(r0))), a.render(c));
  });
  return items;
}

}  // namespace pmv
