#pragma once

#include <functional>
#include <string>
#include <vector>

#include "pmv/core.hpp"
#include "pmv/sqrt.hpp"

namespace pmv {

/// One evaluated instance of an equation on a float backend.
struct NumericWitness {
  std::string label;          ///< which equation, e.g. "r(x^-) = r(x) -> r(0)"
  std::vector<double> input;  ///< coordinates of x
  std::vector<double> lhs;
  std::vector<double> rhs;
  double gap = 0.0;  ///< largest coordinate difference
  double tolerance = 0.0;
  bool failure() const { return gap > tolerance; }
};

struct NumericExample {
  PseudoMV algebra;
  SqrtMap root;
};

/// Gamma(R+ x| R, (2,0)), with (h1,g1)(h2,g2) = (h1 h2, h2 g1 + g2), and
/// r(h,g) = (sqrt(2h), 2g / (sqrt(2h) + 2)).
NumericExample semidirect_scaling_algebra(double tolerance = 1e-9, SamplerConfig sampler = {});

struct SemidirectVerdicts {
  SqrtReport report;
  SymmetryVerdict symmetry;
  VarietyVerdict variety;
  std::vector<NumericWitness> sq3;  ///< grid points where r(x^-) or r(x^~) misses its Sq3 value
  std::vector<NumericWitness> sq4;  ///< grid points where r(x) (.) r(0) != r(0) (.) r(x)
  Verdict agrees_with_weak_form;    ///< r = ((x-u)/2)+u
  Verdict agrees_with_right_half;   ///< r = (x+u)/2
  Verdict agrees_with_left_half;    ///< r = (u+x)/2
};
/// Grid h in {1, 1.25, ..., 2}, g in {-1, -0.5, ..., 1} (clamped into [0,u]) plus `budget` samples.
SemidirectVerdicts semidirect_scaling_verdicts(std::size_t budget, double tolerance = 1e-9,
                                               SamplerConfig sampler = {});

struct ExponentialExample {
  PseudoMV algebra;  ///< Gamma(G2,(1,0)), (x1,y1)+(x2,y2) = (x1+x2, e^{x2} y1 + y2)
  SqrtMap root;      ///< ((x+1)/2, y / (e^{(x-1)/2} + 1))
  PseudoMV rescaled;       ///< Gamma(G2,(ln 2,0))
  SqrtMap rescaled_root;   ///< ((x-u)/2)+u on the rescaled algebra
  std::function<Element(const Element&)> psi;  ///< (h,g) |-> (ln h, g) from the semidirect scaling algebra
};
ExponentialExample exponential_action_algebra(double tolerance = 1e-9, SamplerConfig sampler = {});

struct ExponentialVerdicts {
  SqrtReport report;
  SymmetryVerdict symmetry;
  Verdict agrees_with_weak_form;  ///< root = ((x-u)/2)+u on Gamma(G2,(1,0))
  Verdict psi_homomorphism;       ///< psi preserves (+), ^-, ^~ and the units
  Verdict psi_conjugates_roots;   ///< psi(r(x)) = r3(psi(x))
};
ExponentialVerdicts exponential_action_verdicts(std::size_t budget, double tolerance = 1e-9,
                                                SamplerConfig sampler = {});

}  // namespace pmv
