#include "pmv/lgroups.hpp"

#include <cmath>
#include <sstream>

#include "pmv/error.hpp"

namespace pmv {

// ---------------------------------------------------------------------------
// GroupElement

std::size_t GroupElement::arity() const {
  return std::visit([](const auto& v) { return v.size(); }, coords_);
}

const GroupElement::Exact& GroupElement::exact() const {
  if (!is_exact()) throw BackendMismatch("expected an exact group element");
  return std::get<Exact>(coords_);
}

const GroupElement::Approx& GroupElement::approx() const {
  if (is_exact()) throw BackendMismatch("expected a floating-point group element");
  return std::get<Approx>(coords_);
}

GroupElement GroupElement::slice(std::size_t offset, std::size_t length) const {
  if (offset + length > arity()) throw DomainError("slice out of range");
  return std::visit(
      [&](const auto& v) {
        using V = std::decay_t<decltype(v)>;
        return GroupElement(V(v.begin() + static_cast<std::ptrdiff_t>(offset),
                              v.begin() + static_cast<std::ptrdiff_t>(offset + length)));
      },
      coords_);
}

GroupElement concat(const GroupElement& a, const GroupElement& b) {
  if (a.is_exact() != b.is_exact()) throw BackendMismatch("cannot mix exact and float coordinates");
  if (a.is_exact()) {
    GroupElement::Exact out = a.exact();
    out.insert(out.end(), b.exact().begin(), b.exact().end());
    return GroupElement(std::move(out));
  }
  GroupElement::Approx out = a.approx();
  out.insert(out.end(), b.approx().begin(), b.approx().end());
  return GroupElement(std::move(out));
}

// ---------------------------------------------------------------------------
// LGroup defaults

GroupElement LGroup::join(const GroupElement& a, const GroupElement& b) const {
  auto o = order(a, b);
  if (o == std::partial_ordering::unordered) throw Unsupported(name() + ": join of incomparable elements");
  return o == std::partial_ordering::less ? b : a;
}

GroupElement LGroup::meet(const GroupElement& a, const GroupElement& b) const {
  auto o = order(a, b);
  if (o == std::partial_ordering::unordered) throw Unsupported(name() + ": meet of incomparable elements");
  return o == std::partial_ordering::greater ? b : a;
}

std::string LGroup::render(const GroupElement& a) const {
  std::ostringstream out;
  if (a.is_exact()) {
    const auto& v = a.exact();
    if (v.size() == 1) return render_rational(v[0]);
    out << '(';
    for (std::size_t i = 0; i < v.size(); ++i) out << (i ? "," : "") << render_rational(v[i]);
    out << ')';
  } else {
    const auto& v = a.approx();
    if (v.size() == 1) return render_double(v[0]);
    out << '(';
    for (std::size_t i = 0; i < v.size(); ++i) out << (i ? "," : "") << render_double(v[i]);
    out << ')';
  }
  return out.str();
}

namespace {

std::partial_ordering cmp_q(const Rational& a, const Rational& b) {
  int c = cmp(a, b);
  if (c < 0) return std::partial_ordering::less;
  if (c > 0) return std::partial_ordering::greater;
  return std::partial_ordering::equivalent;
}

std::partial_ordering cmp_d(double a, double b, double tol) {
  if (std::fabs(a - b) <= tol) return std::partial_ordering::equivalent;
  return a < b ? std::partial_ordering::less : std::partial_ordering::greater;
}

void require_arity(const LGroup& g, const GroupElement& a) {
  if (a.arity() != g.arity() || a.is_exact() != (g.mode() == ArithmeticMode::exact)) {
    throw BackendMismatch(g.name() + ": element " + g.render(a) + " has the wrong shape");
  }
}

std::uint64_t pick_denominator(Rng& rng, const SamplerConfig& cfg) {
  std::uint64_t bound = cfg.denominator_bound == 0 ? 1 : cfg.denominator_bound;
  // Favour small denominators so that sums stay readable.
  if (rng.chance(1, 2)) bound = std::min<std::uint64_t>(bound, 16);
  return 1 + rng.below(bound);
}

/// A rational q with 0 <= q <= top and denominator den; the endpoints get extra weight.
Rational rational_below(Rng& rng, const Rational& top, std::uint64_t den) {
  auto roll = rng.below(8);
  if (roll == 0) return 0;
  if (roll == 1) return top;
  mpz_class limit = mpz_class(top * den);  // floor for non-negative top
  if (limit <= 0) return 0;
  std::uint64_t steps = limit.fits_ulong_p() ? limit.get_ui() : std::uint64_t{1} << 40;
  Rational q(mpz_class(static_cast<unsigned long>(rng.below(steps + 1))), mpz_class(static_cast<unsigned long>(den)));
  q.canonicalize();
  return q;
}

Rational rational_free(Rng& rng, std::uint64_t den) {
  std::int64_t d = static_cast<std::int64_t>(den);
  Rational q(mpz_class(static_cast<long>(rng.between(-2 * d, 2 * d))), mpz_class(static_cast<long>(d)));
  q.canonicalize();
  return q;
}

// ---------------------------------------------------------------------------
// Z, Q, D and H(p)

class ScalarGroup final : public LGroup {
 public:
  enum class Kind { integers, rationals, dyadics, hp };

  ScalarGroup(Kind kind, std::int64_t p) : kind_(kind), p_(p) {}

  std::string name() const override {
    switch (kind_) {
      case Kind::integers: return "Z";
      case Kind::rationals: return "Q";
      case Kind::dyadics: return "D";
      case Kind::hp: return "H(" + std::to_string(p_) + ")";
    }
    return "?";
  }
  std::size_t arity() const override { return 1; }
  ArithmeticMode mode() const override { return ArithmeticMode::exact; }

  GroupElement identity() const override { return GroupElement::scalar(0); }
  GroupElement add(const GroupElement& a, const GroupElement& b) const override {
    return GroupElement::scalar(a.exact().at(0) + b.exact().at(0));
  }
  GroupElement neg(const GroupElement& a) const override { return GroupElement::scalar(-a.exact().at(0)); }
  std::partial_ordering order(const GroupElement& a, const GroupElement& b) const override {
    return cmp_q(a.exact().at(0), b.exact().at(0));
  }
  std::optional<GroupElement> halve(const GroupElement& a) const override {
    Rational h = a.exact().at(0) / 2;
    if (!member(h)) return std::nullopt;
    return GroupElement::scalar(h);
  }
  bool two_divisible() const override {
    return kind_ == Kind::rationals || kind_ == Kind::dyadics || (kind_ == Kind::hp && p_ % 2 == 0);
  }
  bool abelian() const override { return true; }
  bool linear() const override { return true; }
  std::optional<CenterVerdict> center_exact(const GroupElement&) const override { return CenterVerdict{}; }

  bool contains(const GroupElement& a) const override {
    return a.is_exact() && a.arity() == 1 && member(a.exact()[0]);
  }

  GroupElement sample_free(Rng& rng, const SamplerConfig& cfg) const override {
    return GroupElement::scalar(rational_free(rng, denominator(rng, cfg)));
  }
  GroupElement sample_below(Rng& rng, const SamplerConfig& cfg, const GroupElement& unit) const override {
    return GroupElement::scalar(rational_below(rng, unit.exact().at(0), denominator(rng, cfg)));
  }

 private:
  bool member(const Rational& q) const {
    switch (kind_) {
      case Kind::integers: return q.get_den() == 1;
      case Kind::rationals: return true;
      case Kind::dyadics: return is_dyadic(q);
      case Kind::hp: return in_hp(p_, q);
    }
    return false;
  }

  std::uint64_t denominator(Rng& rng, const SamplerConfig& cfg) const {
    switch (kind_) {
      case Kind::integers: return 1;
      case Kind::rationals: return pick_denominator(rng, cfg);
      case Kind::dyadics: {
        std::uint64_t d = 1;
        auto top = rng.below(11);
        for (std::uint64_t i = 0; i < top && d * 2 <= std::max<std::uint64_t>(cfg.denominator_bound, 2); ++i) d *= 2;
        return d;
      }
      case Kind::hp: {
        int m = 1 + static_cast<int>(rng.below(3));
        std::int64_t d = p_;
        for (int i = 1; i < m && d * p_ <= static_cast<std::int64_t>(std::max<std::uint64_t>(cfg.denominator_bound, p_)); ++i) {
          d *= p_;
        }
        return static_cast<std::uint64_t>(d);
      }
    }
    return 1;
  }

  Kind kind_;
  std::int64_t p_;
};

// ---------------------------------------------------------------------------
// Heisenberg group over Q

class Heisenberg final : public LGroup {
 public:
  std::string name() const override { return "heis"; }
  std::size_t arity() const override { return 3; }
  ArithmeticMode mode() const override { return ArithmeticMode::exact; }

  GroupElement identity() const override { return GroupElement(GroupElement::Exact{0, 0, 0}); }
  GroupElement add(const GroupElement& x, const GroupElement& y) const override {
    const auto& a = x.exact();
    const auto& b = y.exact();
    return GroupElement(GroupElement::Exact{a[0] + b[0], a[1] + b[1], a[2] + b[2] + a[0] * b[1]});
  }
  GroupElement neg(const GroupElement& x) const override {
    const auto& a = x.exact();
    return GroupElement(GroupElement::Exact{-a[0], -a[1], -a[2] + a[0] * a[1]});
  }
  // The positive cone is invariant under conjugation, so comparing x and y
  // through -x + y reduces to comparing coordinates lexicographically.
  std::partial_ordering order(const GroupElement& x, const GroupElement& y) const override {
    const auto& a = x.exact();
    const auto& b = y.exact();
    for (int i = 0; i < 3; ++i) {
      auto c = cmp_q(a[i], b[i]);
      if (c != 0) return c;
    }
    return std::partial_ordering::equivalent;
  }
  // (x,y,z) + (x,y,z) = (2x, 2y, 2z + xy)
  std::optional<GroupElement> halve(const GroupElement& v) const override {
    const auto& a = v.exact();
    Rational x = a[0] / 2;
    Rational y = a[1] / 2;
    Rational z = (a[2] - x * y) / 2;
    return GroupElement(GroupElement::Exact{x, y, z});
  }
  bool two_divisible() const override { return true; }
  bool abelian() const override { return false; }
  bool linear() const override { return true; }
  std::optional<CenterVerdict> center_exact(const GroupElement& v) const override {
    const auto& a = v.exact();
    if (a[0] == 0 && a[1] == 0) return CenterVerdict{};
    GroupElement w = a[0] != 0 ? GroupElement(GroupElement::Exact{0, 1, 0}) : GroupElement(GroupElement::Exact{1, 0, 0});
    return CenterVerdict{false, true, w};
  }
  bool contains(const GroupElement& v) const override { return v.is_exact() && v.arity() == 3; }

  GroupElement sample_free(Rng& rng, const SamplerConfig& cfg) const override {
    GroupElement::Exact out;
    for (int i = 0; i < 3; ++i) out.push_back(rational_free(rng, pick_denominator(rng, cfg)));
    return GroupElement(std::move(out));
  }
  GroupElement sample_below(Rng& rng, const SamplerConfig& cfg, const GroupElement& unit) const override {
    const auto& u = unit.exact();
    std::size_t lead = 0;
    while (lead < 2 && u[lead] == 0) ++lead;
    GroupElement::Exact out(3, Rational(0));
    out[lead] = rational_below(rng, u[lead], pick_denominator(rng, cfg));
    for (std::size_t i = lead + 1; i < 3; ++i) out[i] = rational_free(rng, pick_denominator(rng, cfg));
    return GroupElement(std::move(out));
  }
};

// ---------------------------------------------------------------------------
// Lexicographic and direct products

class PairGroup : public LGroup {
 public:
  PairGroup(GroupPtr first, GroupPtr second) : first_(std::move(first)), second_(std::move(second)) {
    if (first_->mode() != second_->mode()) throw DomainError("cannot combine exact and float groups");
  }

  std::size_t arity() const override { return first_->arity() + second_->arity(); }
  ArithmeticMode mode() const override { return first_->mode(); }
  double tolerance() const override { return std::max(first_->tolerance(), second_->tolerance()); }

  GroupElement identity() const override { return concat(first_->identity(), second_->identity()); }
  GroupElement add(const GroupElement& a, const GroupElement& b) const override {
    return concat(first_->add(head(a), head(b)), second_->add(tail(a), tail(b)));
  }
  GroupElement neg(const GroupElement& a) const override {
    return concat(first_->neg(head(a)), second_->neg(tail(a)));
  }
  std::optional<GroupElement> halve(const GroupElement& a) const override {
    auto h = first_->halve(head(a));
    auto g = second_->halve(tail(a));
    if (!h || !g) return std::nullopt;
    return concat(*h, *g);
  }
  bool two_divisible() const override { return first_->two_divisible() && second_->two_divisible(); }
  bool abelian() const override { return first_->abelian() && second_->abelian(); }
  std::optional<CenterVerdict> center_exact(const GroupElement& a) const override {
    auto h = first_->center_exact(head(a));
    auto g = second_->center_exact(tail(a));
    if (!h || !g) return std::nullopt;
    if (!h->central) return CenterVerdict{false, true, concat(*h->witness, second_->identity())};
    if (!g->central) return CenterVerdict{false, true, concat(first_->identity(), *g->witness)};
    return CenterVerdict{};
  }
  bool contains(const GroupElement& a) const override {
    if (a.arity() != arity() || a.is_exact() != (mode() == ArithmeticMode::exact)) return false;
    return first_->contains(head(a)) && second_->contains(tail(a));
  }
  GroupElement sample_free(Rng& rng, const SamplerConfig& cfg) const override {
    auto h = first_->sample_free(rng, cfg);
    return concat(h, second_->sample_free(rng, cfg));
  }
  std::string render(const GroupElement& a) const override {
    return "(" + first_->render(head(a)) + "," + second_->render(tail(a)) + ")";
  }

 protected:
  GroupElement head(const GroupElement& a) const { return a.slice(0, first_->arity()); }
  GroupElement tail(const GroupElement& a) const { return a.slice(first_->arity(), second_->arity()); }

  GroupPtr first_;
  GroupPtr second_;
};

class LexGroup final : public PairGroup {
 public:
  LexGroup(GroupPtr first, GroupPtr second) : PairGroup(std::move(first), std::move(second)) {
    if (!first_->linear()) throw DomainError("lex(H,G) needs a linearly ordered H, got " + first_->name());
  }
  std::string name() const override { return "lex(" + first_->name() + "," + second_->name() + ")"; }
  bool linear() const override { return second_->linear(); }

  std::partial_ordering order(const GroupElement& a, const GroupElement& b) const override {
    auto c = first_->order(head(a), head(b));
    if (c != 0) return c;
    return second_->order(tail(a), tail(b));
  }
  GroupElement join(const GroupElement& a, const GroupElement& b) const override {
    auto c = first_->order(head(a), head(b));
    if (c == std::partial_ordering::less) return b;
    if (c == std::partial_ordering::greater) return a;
    return concat(head(a), second_->join(tail(a), tail(b)));
  }
  GroupElement meet(const GroupElement& a, const GroupElement& b) const override {
    auto c = first_->order(head(a), head(b));
    if (c == std::partial_ordering::less) return a;
    if (c == std::partial_ordering::greater) return b;
    return concat(head(a), second_->meet(tail(a), tail(b)));
  }
  GroupElement sample_below(Rng& rng, const SamplerConfig& cfg, const GroupElement& unit) const override {
    auto uh = head(unit);
    if (first_->equal(uh, first_->identity())) {
      return concat(first_->identity(), second_->sample_below(rng, cfg, tail(unit)));
    }
    auto h = first_->sample_below(rng, cfg, uh);
    return concat(h, second_->sample_free(rng, cfg));
  }
};

class DirectProduct final : public PairGroup {
 public:
  using PairGroup::PairGroup;
  std::string name() const override { return "prod(" + first_->name() + "," + second_->name() + ")"; }
  bool linear() const override { return false; }

  std::partial_ordering order(const GroupElement& a, const GroupElement& b) const override {
    auto h = first_->order(head(a), head(b));
    auto g = second_->order(tail(a), tail(b));
    if (h == std::partial_ordering::unordered || g == std::partial_ordering::unordered) {
      return std::partial_ordering::unordered;
    }
    if (h == 0) return g;
    if (g == 0) return h;
    return h == g ? h : std::partial_ordering::unordered;
  }
  GroupElement join(const GroupElement& a, const GroupElement& b) const override {
    return concat(first_->join(head(a), head(b)), second_->join(tail(a), tail(b)));
  }
  GroupElement meet(const GroupElement& a, const GroupElement& b) const override {
    return concat(first_->meet(head(a), head(b)), second_->meet(tail(a), tail(b)));
  }
  GroupElement sample_below(Rng& rng, const SamplerConfig& cfg, const GroupElement& unit) const override {
    auto h = first_->sample_below(rng, cfg, head(unit));
    return concat(h, second_->sample_below(rng, cfg, tail(unit)));
  }
};

// ---------------------------------------------------------------------------
// Float-backed semidirect groups on pairs, both ordered lexicographically.

class NumericPairGroup : public LGroup {
 public:
  explicit NumericPairGroup(double tol) : tol_(tol) {}

  std::size_t arity() const override { return 2; }
  ArithmeticMode mode() const override { return ArithmeticMode::approx; }
  double tolerance() const override { return tol_; }
  bool two_divisible() const override { return true; }
  bool abelian() const override { return false; }
  bool linear() const override { return true; }

  std::partial_ordering order(const GroupElement& a, const GroupElement& b) const override {
    const auto& x = a.approx();
    const auto& y = b.approx();
    auto c = cmp_d(x[0], y[0], tol_);
    if (c != 0) return c;
    return cmp_d(x[1], y[1], tol_);
  }
  bool contains(const GroupElement& a) const override {
    return !a.is_exact() && a.arity() == 2 && std::isfinite(a.approx()[0]) && std::isfinite(a.approx()[1]) &&
           first_ok(a.approx()[0]);
  }
  std::optional<CenterVerdict> center_exact(const GroupElement& a) const override {
    if (equal(a, identity())) return CenterVerdict{};
    return CenterVerdict{false, true, witness(a)};
  }
  GroupElement sample_below(Rng& rng, const SamplerConfig& cfg, const GroupElement& unit) const override {
    double lo = identity().approx()[0];
    double hi = unit.approx()[0];
    auto den = static_cast<std::int64_t>(std::min<std::uint64_t>(std::max<std::uint64_t>(cfg.denominator_bound, 1), 1U << 20));
    double first = 0;
    switch (rng.below(8)) {
      case 0: first = lo; break;
      case 1: first = hi; break;
      default: first = lo + (hi - lo) * static_cast<double>(rng.between(0, den)) / static_cast<double>(den);
    }
    double second = static_cast<double>(rng.between(-den, den)) / static_cast<double>(den);
    return GroupElement(GroupElement::Approx{first, second});
  }

 protected:
  virtual bool first_ok(double) const { return true; }
  virtual GroupElement witness(const GroupElement& a) const = 0;

  double tol_;
};

class SemidirectNumeric final : public NumericPairGroup {
 public:
  using NumericPairGroup::NumericPairGroup;
  std::string name() const override { return "semi_numeric"; }
  GroupElement identity() const override { return GroupElement(GroupElement::Approx{1.0, 0.0}); }
  // (h1,g1)(h2,g2) = (h1 h2, h2 g1 + g2)
  GroupElement add(const GroupElement& a, const GroupElement& b) const override {
    const auto& x = a.approx();
    const auto& y = b.approx();
    return GroupElement(GroupElement::Approx{x[0] * y[0], y[0] * x[1] + y[1]});
  }
  GroupElement neg(const GroupElement& a) const override {
    const auto& x = a.approx();
    return GroupElement(GroupElement::Approx{1.0 / x[0], -x[1] / x[0]});
  }
  // (s,t)(s,t) = (s^2, (s+1)t)
  std::optional<GroupElement> halve(const GroupElement& a) const override {
    const auto& x = a.approx();
    double s = std::sqrt(x[0]);
    return GroupElement(GroupElement::Approx{s, x[1] / (s + 1.0)});
  }
  GroupElement sample_free(Rng& rng, const SamplerConfig&) const override {
    double t = static_cast<double>(rng.between(-64, 64)) / 64.0;
    double g = static_cast<double>(rng.between(-128, 128)) / 64.0;
    return GroupElement(GroupElement::Approx{std::exp2(t), g});
  }

 protected:
  bool first_ok(double h) const override { return h > 0; }
  GroupElement witness(const GroupElement& a) const override {
    if (std::fabs(a.approx()[1]) > tol_) return GroupElement(GroupElement::Approx{2.0, 0.0});
    return GroupElement(GroupElement::Approx{1.0, 1.0});
  }
};

class ExpAction final : public NumericPairGroup {
 public:
  using NumericPairGroup::NumericPairGroup;
  std::string name() const override { return "semi_exp"; }
  GroupElement identity() const override { return GroupElement(GroupElement::Approx{0.0, 0.0}); }
  // (x1,y1)+(x2,y2) = (x1+x2, e^{x2} y1 + y2)
  GroupElement add(const GroupElement& a, const GroupElement& b) const override {
    const auto& x = a.approx();
    const auto& y = b.approx();
    return GroupElement(GroupElement::Approx{x[0] + y[0], std::exp(y[0]) * x[1] + y[1]});
  }
  GroupElement neg(const GroupElement& a) const override {
    const auto& x = a.approx();
    return GroupElement(GroupElement::Approx{-x[0], -std::exp(-x[0]) * x[1]});
  }
  // (s,t)+(s,t) = (2s, (e^s + 1)t)
  std::optional<GroupElement> halve(const GroupElement& a) const override {
    const auto& x = a.approx();
    double s = x[0] / 2.0;
    return GroupElement(GroupElement::Approx{s, x[1] / (std::exp(s) + 1.0)});
  }
  GroupElement sample_free(Rng& rng, const SamplerConfig&) const override {
    double x = static_cast<double>(rng.between(-128, 128)) / 64.0;
    double y = static_cast<double>(rng.between(-128, 128)) / 64.0;
    return GroupElement(GroupElement::Approx{x, y});
  }

 protected:
  GroupElement witness(const GroupElement& a) const override {
    if (std::fabs(a.approx()[1]) > tol_) return GroupElement(GroupElement::Approx{1.0, 0.0});
    return GroupElement(GroupElement::Approx{0.0, 1.0});
  }
};

}  // namespace

// ---------------------------------------------------------------------------
// Catalogue

GroupPtr integers() { return std::make_shared<ScalarGroup>(ScalarGroup::Kind::integers, 0); }
GroupPtr rationals() { return std::make_shared<ScalarGroup>(ScalarGroup::Kind::rationals, 0); }
GroupPtr dyadics() { return std::make_shared<ScalarGroup>(ScalarGroup::Kind::dyadics, 2); }

GroupPtr hp(std::int64_t p) {
  if (p < 2) throw DomainError("H(p) needs p >= 2");
  return std::make_shared<ScalarGroup>(ScalarGroup::Kind::hp, p);
}

GroupPtr heisenberg() { return std::make_shared<Heisenberg>(); }

GroupPtr lex(GroupPtr first, GroupPtr second) {
  return std::make_shared<LexGroup>(std::move(first), std::move(second));
}

GroupPtr direct_product(GroupPtr first, GroupPtr second) {
  return std::make_shared<DirectProduct>(std::move(first), std::move(second));
}

GroupPtr semidirect_numeric(double tolerance) { return std::make_shared<SemidirectNumeric>(tolerance); }
GroupPtr exp_action(double tolerance) { return std::make_shared<ExpAction>(tolerance); }

GroupOps group_ops(const LGroup& g, const GroupElement& a, const GroupElement& b) {
  require_arity(g, a);
  require_arity(g, b);
  return GroupOps{g.add(a, b), g.neg(a), g.join(a, b), g.meet(a, b), g.order(a, b)};
}

// ---------------------------------------------------------------------------
// Unital groups

UnitalLGroup::UnitalLGroup(GroupPtr group, GroupElement unit) : group_(std::move(group)), unit_(std::move(unit)) {
  if (!group_->contains(unit_)) throw DomainError(group_->name() + ": unit " + group_->render(unit_) + " is not a member");
  if (group_->order(unit_, group_->identity()) != std::partial_ordering::greater) {
    throw DomainError(group_->name() + ": unit " + group_->render(unit_) + " is not strictly positive");
  }
}

bool UnitalLGroup::dominated_by_unit(const GroupElement& g, std::uint32_t max_multiple) const {
  // n u increases with n, so testing powers of two up to the ceiling is enough.
  GroupElement m = unit_;
  for (std::uint64_t n = 1; n <= max_multiple; n *= 2) {
    if (group_->leq(g, m)) return true;
    m = group_->add(m, m);
  }
  return false;
}

std::optional<GroupElement> halve(const LGroup& g, const GroupElement& a) {
  require_arity(g, a);
  return g.halve(a);
}

CenterVerdict in_center(const LGroup& g, const GroupElement& a, std::size_t budget, const SamplerConfig& cfg) {
  require_arity(g, a);
  if (g.abelian()) return CenterVerdict{};
  if (auto v = g.center_exact(a)) return *v;
  Rng rng(cfg.seed, 0xC3A7E5ULL);
  for (std::size_t i = 0; i < budget; ++i) {
    auto h = g.sample_free(rng, cfg);
    if (!g.equal(g.add(a, h), g.add(h, a))) return CenterVerdict{false, false, h};
  }
  return CenterVerdict{true, false, std::nullopt};
}

std::int64_t primorial(int n) {
  if (n < 0 || n > 14) throw DomainError("primorial index out of range");
  std::int64_t out = 1;
  int found = 0;
  for (std::int64_t c = 2; found <= n; ++c) {
    bool prime = true;
    for (std::int64_t d = 2; d * d <= c; ++d) {
      if (c % d == 0) {
        prime = false;
        break;
      }
    }
    if (prime) {
      out *= c;
      ++found;
    }
  }
  return out;
}

bool in_hp(std::int64_t p, const Rational& q) {
  if (p < 2) throw DomainError("H(p) needs p >= 2");
  mpz_class d = q.get_den();
  const mpz_class base(static_cast<long>(p));
  while (d != 1) {
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), d.get_mpz_t(), base.get_mpz_t());
    if (g == 1) return false;
    d /= g;
  }
  return true;
}

bool hp_ladder_membership(std::int64_t p, int n, const Rational& q) {
  if (p != primorial(n)) {
    throw DomainError("H(p) ladder needs p = product of the first " + std::to_string(n + 1) + " primes");
  }
  return in_hp(p, q);
}

}  // namespace pmv
