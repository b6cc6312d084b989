#include "pmv/counterexamples.hpp"

#include <algorithm>
#include <cmath>

#include "pmv/gamma.hpp"

namespace pmv {

namespace {

Element point(double a, double b) { return GroupElement(GroupElement::Approx{a, b}); }

const std::vector<double>& coords(const Element& x) { return x.point().approx(); }

double max_gap(const Element& x, const Element& y) {
  double g = 0.0;
  for (std::size_t i = 0; i < coords(x).size(); ++i) g = std::max(g, std::fabs(coords(x)[i] - coords(y)[i]));
  return g;
}

NumericWitness witness(std::string label, const Element& x, const Element& lhs, const Element& rhs, double tol) {
  return NumericWitness{std::move(label), coords(x), coords(lhs), coords(rhs), max_gap(lhs, rhs), tol};
}

// Grid over [lo,hi] x [-1,1] clamped into the interval, then seeded samples.
std::vector<Element> probe_points(const PseudoMV& a, double lo, double hi, std::size_t budget, std::uint64_t stream) {
  std::vector<Element> out;
  for (int i = 0; i <= 4; ++i) {
    for (int j = 0; j <= 4; ++j) {
      GroupElement p(GroupElement::Approx{lo + (hi - lo) * i / 4.0, -1.0 + 0.5 * j});
      out.emplace_back(clamp_to_unit(*a.unital_group(), p));
    }
  }
  auto extra = probe_elements(a, budget, stream);
  out.insert(out.end(), extra.begin(), extra.end());
  return out;
}

template <class F>
Verdict agreement(const PseudoMV& a, const std::vector<Element>& xs, F&& same) {
  Verdict v;
  for (const auto& x : xs) {
    ++v.checked;
    if (!same(x)) {
      v.holds = false;
      if (v.witnesses.size() < 16) v.witnesses.push_back(a.render(x));
    }
  }
  std::sort(v.witnesses.begin(), v.witnesses.end());
  return v;
}

}  // namespace

NumericExample semidirect_scaling_algebra(double tolerance, SamplerConfig sampler) {
  auto a = gamma(UnitalLGroup(semidirect_numeric(tolerance), GroupElement(GroupElement::Approx{2.0, 0.0})), sampler);
  auto r = SqrtMap::custom("(sqrt(2h), 2g/(sqrt(2h)+2))", [](const Element& x) {
    double s = std::sqrt(2.0 * coords(x)[0]);
    return point(s, 2.0 * coords(x)[1] / (s + 2.0));
  });
  return NumericExample{a, r};
}

SemidirectVerdicts semidirect_scaling_verdicts(std::size_t budget, double tolerance, SamplerConfig sampler) {
  auto [a, r] = semidirect_scaling_algebra(tolerance, sampler);
  const LGroup& g = a.unital_group()->group();
  const GroupElement u = a.one().point();
  SemidirectVerdicts out;
  out.report = verify(a, r, budget);
  out.symmetry = is_symmetric(a, budget);
  out.variety = check_variety_identities(a, r, budget);

  const Element r0 = r(a.zero());
  const auto grid = probe_points(a, 1.0, 2.0, 0, 0);
  for (const auto& x : grid) {
    Element rx = r(x);
    auto minus_side = witness("r(x^-) = r(x) -> r(0)", x, r(a.minus(x)), arrow(a, rx, r0), tolerance);
    auto tilde_side = witness("r(x^~) = r(x) ~> r(0)", x, r(a.tilde(x)), squiggle(a, rx, r0), tolerance);
    if (minus_side.failure()) out.sq3.push_back(minus_side);
    if (tilde_side.failure()) out.sq3.push_back(tilde_side);
    auto commute = witness("r(x) (.) r(0) = r(0) (.) r(x)", x, odot(a, rx, r0), odot(a, r0, rx), tolerance);
    if (commute.failure()) out.sq4.push_back(commute);
  }

  const auto xs = probe_points(a, 1.0, 2.0, budget, 601);
  auto half = [&g](const GroupElement& x) { return *g.halve(x); };
  out.agrees_with_weak_form = agreement(a, xs, [&](const Element& x) {
    return a.equal(r(x), Element(g.add(half(g.sub(x.point(), u)), u)));
  });
  out.agrees_with_right_half = agreement(a, xs, [&](const Element& x) {
    return a.equal(r(x), Element(half(g.add(x.point(), u))));
  });
  out.agrees_with_left_half = agreement(a, xs, [&](const Element& x) {
    return a.equal(r(x), Element(half(g.add(u, x.point()))));
  });
  return out;
}

ExponentialExample exponential_action_algebra(double tolerance, SamplerConfig sampler) {
  auto group = exp_action(tolerance);
  auto a = gamma(UnitalLGroup(group, GroupElement(GroupElement::Approx{1.0, 0.0})), sampler);
  auto r = SqrtMap::custom("((x+1)/2, y/(e^((x-1)/2)+1))", [](const Element& p) {
    double x = coords(p)[0];
    return point((x + 1.0) / 2.0, coords(p)[1] / (std::exp((x - 1.0) / 2.0) + 1.0));
  });
  auto rescaled = gamma(UnitalLGroup(group, GroupElement(GroupElement::Approx{std::log(2.0), 0.0})), sampler);
  auto r3 = closed_form(rescaled, ClosedFormVariant::weak());
  auto psi = [](const Element& p) { return point(std::log(coords(p)[0]), coords(p)[1]); };
  return ExponentialExample{a, r, rescaled, r3, psi};
}

ExponentialVerdicts exponential_action_verdicts(std::size_t budget, double tolerance, SamplerConfig sampler) {
  auto ex = exponential_action_algebra(tolerance, sampler);
  const PseudoMV& a = ex.algebra;
  const LGroup& g = a.unital_group()->group();
  const GroupElement u = a.one().point();
  ExponentialVerdicts out;
  out.report = verify(a, ex.root, budget);
  out.symmetry = is_symmetric(a, budget);
  const auto xs = probe_points(a, 0.0, 1.0, budget, 602);
  out.agrees_with_weak_form = agreement(a, xs, [&](const Element& x) {
    return a.equal(ex.root(x), Element(g.add(*g.halve(g.sub(x.point(), u)), u)));
  });

  auto [m, r] = semidirect_scaling_algebra(tolerance, sampler);
  const PseudoMV& b = ex.rescaled;
  const auto ms = probe_points(m, 1.0, 2.0, budget, 603);
  Rng rng(sampler.seed, 604);
  out.psi_homomorphism = agreement(m, ms, [&](const Element& x) {
    Element y = m.sample(rng);
    bool ok = b.equal(ex.psi(m.oplus(x, y)), b.oplus(ex.psi(x), ex.psi(y)));
    ok = ok && b.equal(ex.psi(m.minus(x)), b.minus(ex.psi(x))) && b.equal(ex.psi(m.tilde(x)), b.tilde(ex.psi(x)));
    return ok && b.equal(ex.psi(m.zero()), b.zero()) && b.equal(ex.psi(m.one()), b.one());
  });
  out.psi_conjugates_roots = agreement(m, ms, [&](const Element& x) {
    return b.equal(ex.psi(r(x)), ex.rescaled_root(ex.psi(x)));
  });
  return out;
}

}  // namespace pmv
