#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "pmv/core.hpp"
#include "pmv/finite.hpp"

namespace pmv {

/// A candidate (weak) square root. Immutable; evaluation may throw DomainError
/// when the map leaves its algebra or needs a halving the group lacks.
class SqrtMap {
 public:
  enum class Kind { table, closed_sym, closed_weak, mixed, identity, custom_numeric };

  SqrtMap(Kind kind, std::string description, std::function<Element(const Element&)> fn,
          std::optional<Element> witness = std::nullopt);

  static SqrtMap identity();
  static SqrtMap table(std::vector<std::size_t> map);
  static SqrtMap custom(std::string description, std::function<Element(const Element&)> fn);

  Kind kind() const { return kind_; }
  const std::string& describe() const { return description_; }
  /// The Boolean element w of a mixed map.
  const std::optional<Element>& witness() const { return witness_; }

  Element operator()(const Element& x) const { return fn_(x); }

 private:
  Kind kind_;
  std::string description_;
  std::function<Element(const Element&)> fn_;
  std::optional<Element> witness_;
};

std::string kind_name(SqrtMap::Kind kind);

/// Outcome of one quantified check. Witnesses are rendered inputs, sorted, at most 16.
struct Verdict {
  bool holds = true;
  bool skipped = false;
  std::size_t checked = 0;
  std::vector<std::string> witnesses;
};

enum class Classification { boolean, strict, product, not_a_square_root, weak_only };
std::string classification_name(Classification c);

struct SqrtReport {
  Verdict sq1;  ///< r(x) (.) r(x) = x
  Verdict sq2;  ///< y (.) y <= x  implies  y <= r(x)
  Verdict sq3;  ///< r(x^-) = r(x) -> r(0), r(x^~) = r(x) ~> r(0)
  Verdict sq4;  ///< r(x) (.) r(0) = r(0) (.) r(x)
  /// r(x) (.) r(x^-) <= r(0) and r(x^~) (.) r(x) <= r(0); equivalent to sq3 for weak roots.
  Verdict sq3_cross;
  bool strict = false;
  Element r0{std::size_t{0}};
  /// u = r(0)^- (.) r(0)^-, present for square roots.
  std::optional<Element> boolean_witness_u;
  Classification classification = Classification::not_a_square_root;

  bool weak_root() const { return sq1.holds && sq2.holds; }
  bool square_root() const { return weak_root() && sq3.holds; }
};

/// Checks Sq1-Sq4 exhaustively (finite) or on `budget` seeded elements and pairs.
/// Sq2 pairs are drawn as (y, (y (.) y) v z), so every probe satisfies the premise.
SqrtReport verify(const PseudoMV& a, const SqrtMap& r, std::optional<std::size_t> budget = std::nullopt);

struct ClosedFormVariant {
  enum class Kind { sym, weak, mixed };
  Kind kind = Kind::sym;
  std::optional<GroupElement> w;  ///< mixed only

  static ClosedFormVariant sym() { return {Kind::sym, std::nullopt}; }
  static ClosedFormVariant weak() { return {Kind::weak, std::nullopt}; }
  static ClosedFormVariant mixed(GroupElement w) { return {Kind::mixed, std::move(w)}; }
};

/// sym: (x+u)/2; weak: ((x-u)/2)+u; mixed: (x ^ w) v ((x ^ w^-) + w^-)/2.
/// Throws Unsupported off gamma backends, DomainError when halving is unavailable
/// or (sym) u/2 is not central, or (mixed) w is not a Boolean element.
SqrtMap closed_form(const PseudoMV& a, const ClosedFormVariant& variant);

struct StrictVerdict {
  bool strict = false;       ///< r(0) = r(0)^-
  bool tilde_agrees = true;  ///< r(0)^- = r(0)^~
  Element r0{std::size_t{0}};
};
StrictVerdict is_strict(const PseudoMV& a, const SqrtMap& r);

/// u = r(0)^- (.) r(0)^-. Throws AxiomFailure if u is not idempotent, if u v r(0) != r(0)^-,
/// or (finite) if another idempotent satisfies the same equation.
Element boolean_witness(const PseudoMV& a, const SqrtMap& r);

/// r_a(x) = r(x) (.) a on the interval [0,a], in the interval's own coordinates.
SqrtMap relative_root(const PseudoMV& parent, const IntervalAlgebra& part, const Element& top, const SqrtMap& r);

struct Decomposition {
  Classification classification = Classification::boolean;
  Element u{std::size_t{0}};
  std::optional<IntervalAlgebra> boolean_part;  ///< [0,u]
  std::optional<IntervalAlgebra> strict_part;   ///< [0,u^-]
  std::optional<SqrtMap> boolean_root;
  std::optional<SqrtMap> strict_root;
  bool boolean_part_ok = true;  ///< r_u is a square root with r_u(0) = 0 and [0,u] is Boolean
  bool strict_part_ok = true;   ///< r_{u^-} is a strict square root
  Verdict homomorphism;         ///< x |-> (x ^ u, x ^ u^-)

  /// x |-> (x ^ u, x ^ u^-) in the parts' coordinates; only when split.
  std::function<std::pair<Element, Element>(const Element&)> iso;
  bool split() const { return boolean_part.has_value(); }
};
/// Splits along the Boolean witness when it lies strictly between 0 and 1.
/// Requires r to be a square root (AxiomFailure otherwise).
Decomposition decompose(const PseudoMV& a, const SqrtMap& r, std::optional<std::size_t> budget = std::nullopt);

struct InducedAlgebra {
  PseudoMV algebra;  ///< [r(0),1] with a [+] b = r((a.a) (+) (b.b)), a' = a^- (+) r(0), a* = a^~ (+) r(0)
  std::function<Element(const Element&)> f;  ///< x |-> r(x), into the new algebra's coordinates
  AxiomReport axioms;
  Verdict isomorphism;
  Verdict image;  ///< r(M) = [r(0),1]
};
InducedAlgebra induced_interval_algebra(const PseudoMV& a, const SqrtMap& r,
                                        std::optional<std::size_t> budget = std::nullopt);

Element iterate(const SqrtMap& r, const Element& x, unsigned m);
/// (r^m(x))^(2^n) = r^(m-n)(x); throws DomainError for n > m.
bool power_check(const PseudoMV& a, const SqrtMap& r, const Element& x, unsigned m, unsigned n);

struct DyadicRung {
  unsigned k = 0;
  Element value{std::size_t{0}};  ///< u / 2^k
  bool cyclic = false;            ///< the 2^k-fold partial sum is defined and equals 1
};
/// u/2, u/4, ..., u/2^depth built as a_{k+1} = r(a_k) - u/2. Strict gamma roots only; depth <= 20.
std::vector<DyadicRung> dyadic_ladder(const PseudoMV& a, const SqrtMap& r, unsigned depth);

struct VarietyVerdict {
  Verdict squares;      ///< r(x) (.) r(x) = x
  Verdict maximality;   ///< r((y (.) y) v x) ^ y = y
  Verdict negations;    ///< the two Sq3 equations
  bool weak_holds() const { return squares.holds && maximality.holds; }
  bool holds() const { return weak_holds() && negations.holds; }
};
VarietyVerdict check_variety_identities(const PseudoMV& a, const SqrtMap& r,
                                        std::optional<std::size_t> budget = std::nullopt);

struct PropertyItem {
  std::string name;
  bool needs_sq3 = false;
  Verdict verdict;
};
/// Named consequences of being a (weak) square root. Items that need Sq3 are
/// skipped when r is only a weak root; nothing runs unless Sq1 and Sq2 hold.
std::vector<PropertyItem> square_root_properties(const PseudoMV& a, const SqrtMap& r,
                                                 std::optional<std::size_t> budget = std::nullopt);

}  // namespace pmv
