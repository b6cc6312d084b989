#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "pmv/random.hpp"
#include "pmv/rational.hpp"

namespace pmv {

enum class ArithmeticMode { exact, approx };

/// A point of a computable group, stored as a flat coordinate vector.
///
/// Composite groups (lexicographic and direct products) concatenate the
/// coordinates of their factors, so `(1/2,0,0,0)` in Q lex heis is the
/// rational 1/2 followed by a Heisenberg triple. Exact groups use rationals,
/// the two numeric semidirect groups use doubles; the two never mix.
class GroupElement {
 public:
  using Exact = std::vector<Rational>;
  using Approx = std::vector<double>;

  GroupElement() = default;
  explicit GroupElement(Exact coords) : coords_(std::move(coords)) {}
  explicit GroupElement(Approx coords) : coords_(std::move(coords)) {}

  static GroupElement scalar(const Rational& q) { return GroupElement(Exact{q}); }

  bool is_exact() const { return std::holds_alternative<Exact>(coords_); }
  std::size_t arity() const;

  const Exact& exact() const;
  const Approx& approx() const;

  /// Coordinates [offset, offset + length) as a new element.
  GroupElement slice(std::size_t offset, std::size_t length) const;

  friend GroupElement concat(const GroupElement& a, const GroupElement& b);

  /// Structural equality; groups with a tolerance compare through LGroup::equal.
  bool operator==(const GroupElement&) const = default;

 private:
  std::variant<Exact, Approx> coords_;
};

/// Outcome of a center-membership question, with a non-commuting partner when not central.
struct CenterVerdict {
  bool central = true;
  bool exact = true;
  std::optional<GroupElement> witness;
};

/// A lattice-ordered group with computable operations.
///
/// Implementations are immutable and shared through GroupPtr.
class LGroup {
 public:
  virtual ~LGroup() = default;

  /// Constructor-DSL form, e.g. "lex(Q,heis)".
  virtual std::string name() const = 0;
  virtual std::size_t arity() const = 0;
  virtual ArithmeticMode mode() const = 0;
  virtual double tolerance() const { return 0.0; }

  virtual GroupElement identity() const = 0;
  virtual GroupElement add(const GroupElement& a, const GroupElement& b) const = 0;
  virtual GroupElement neg(const GroupElement& a) const = 0;
  virtual std::partial_ordering order(const GroupElement& a, const GroupElement& b) const = 0;
  virtual GroupElement join(const GroupElement& a, const GroupElement& b) const;
  virtual GroupElement meet(const GroupElement& a, const GroupElement& b) const;
  bool equal(const GroupElement& a, const GroupElement& b) const { return order(a, b) == 0; }
  bool leq(const GroupElement& a, const GroupElement& b) const {
    auto o = order(a, b);
    return o == std::partial_ordering::less || o == std::partial_ordering::equivalent;
  }

  /// The unique b with b + b = a, if it lies in the group.
  virtual std::optional<GroupElement> halve(const GroupElement& a) const = 0;

  virtual bool two_divisible() const = 0;
  virtual bool abelian() const = 0;
  virtual bool linear() const = 0;
  /// All built-in groups are subdirect products of linearly ordered groups.
  virtual bool representable() const { return true; }

  /// Exact center membership, or nullopt when only sampling can decide.
  virtual std::optional<CenterVerdict> center_exact(const GroupElement& a) const = 0;

  /// Membership of a coordinate vector of the right arity and mode.
  virtual bool contains(const GroupElement& a) const = 0;

  /// Element with coordinates of magnitude about 2, for commutation probes and free factors.
  virtual GroupElement sample_free(Rng& rng, const SamplerConfig& cfg) const = 0;
  /// Element roughly within [identity, unit]; callers clamp into the interval.
  virtual GroupElement sample_below(Rng& rng, const SamplerConfig& cfg, const GroupElement& unit) const = 0;

  virtual std::string render(const GroupElement& a) const;

  GroupElement sub(const GroupElement& a, const GroupElement& b) const { return add(a, neg(b)); }
};

using GroupPtr = std::shared_ptr<const LGroup>;

// Constructor catalogue.
GroupPtr integers();
GroupPtr rationals();
GroupPtr dyadics();
/// H(p) = { i/p^n : i integer, n >= 1 }.
GroupPtr hp(std::int64_t p);
/// Heisenberg group over Q: (a,b,c)(a',b',c') = (a+a', b+b', c+c'+ab'), lexicographically ordered.
GroupPtr heisenberg();
/// Lexicographic product; the first factor must be linearly ordered.
GroupPtr lex(GroupPtr first, GroupPtr second);
/// Direct product with the componentwise order.
GroupPtr direct_product(GroupPtr first, GroupPtr second);
/// Positive reals acting on R by scaling: (h1,g1)(h2,g2) = (h1 h2, h2 g1 + g2), lex order, floats.
GroupPtr semidirect_numeric(double tolerance = 1e-9);
/// R^2 with (x1,y1)+(x2,y2) = (x1+x2, e^{x2} y1 + y2), lex order, floats.
GroupPtr exp_action(double tolerance = 1e-9);

/// The five group operations on a pair, bundled.
struct GroupOps {
  GroupElement sum;
  GroupElement negation;  ///< of the first argument
  GroupElement join;
  GroupElement meet;
  std::partial_ordering cmp;
};
GroupOps group_ops(const LGroup& g, const GroupElement& a, const GroupElement& b);

/// A group with a designated strong unit.
class UnitalLGroup {
 public:
  /// Throws DomainError unless unit is a strictly positive member.
  UnitalLGroup(GroupPtr group, GroupElement unit);

  const LGroup& group() const { return *group_; }
  const GroupPtr& group_ptr() const { return group_; }
  const GroupElement& unit() const { return unit_; }

  /// g <= n u for some n <= max_multiple (per-element strong-unit check).
  bool dominated_by_unit(const GroupElement& g, std::uint32_t max_multiple = 1u << 20) const;

 private:
  GroupPtr group_;
  GroupElement unit_;
};

std::optional<GroupElement> halve(const LGroup& g, const GroupElement& a);

/// Center membership: exact where the group decides it, else commutation against `budget` samples.
CenterVerdict in_center(const LGroup& g, const GroupElement& a, std::size_t budget = 256,
                        const SamplerConfig& cfg = {});

/// Product of the first n+1 primes (2, 6, 30, 210, ...).
std::int64_t primorial(int n);
/// q in H(p).
bool in_hp(std::int64_t p, const Rational& q);
/// q in H(p) where p must equal primorial(n).
bool hp_ladder_membership(std::int64_t p, int n, const Rational& q);

}  // namespace pmv
