#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "pmv/core.hpp"
#include "pmv/sqrt.hpp"

namespace pmv {

/// An ideal with recomputed flags. Finite algebras carry the member set;
/// gamma algebras carry a predicate and sampled flags.
struct IdealHandle {
  PseudoMV algebra;
  std::vector<std::size_t> members;  ///< sorted indices (finite only)
  std::function<bool(const Element&)> predicate;
  std::string name;
  bool normal = false;
  bool prime = false;          ///< proper and (P1)
  bool boolean_ideal = false;  ///< x ^ x^~ in I for all x
  bool proper = false;
  bool exhaustive = true;      ///< flags checked on every pair (finite) rather than samples

  bool contains(const Element& x) const;
  std::string render() const;
};

/// Throws DomainError naming the failing element or pair when S is not an ideal.
IdealHandle classify_ideal(const PseudoMV& a, std::vector<std::size_t> members);

/// Ideal of a gamma algebra given by membership; flags are checked on `budget` sampled pairs.
/// Downward closure and (+)-closure are sampled as well and throw DomainError on failure.
IdealHandle predicate_ideal(const PseudoMV& a, std::string name, std::function<bool(const Element&)> member,
                            std::size_t budget);

/// Every ideal, ordered by (size, members). At most 12 elements, else CeilingExceeded.
std::vector<IdealHandle> enumerate_ideals(const PseudoMV& a);

struct QuotientResult {
  PseudoMV algebra;
  std::vector<std::size_t> class_of;  ///< element of A -> element of A/I
  std::optional<SqrtMap> root;        ///< r_I(x/I) = r(x)/I
  std::optional<SqrtReport> report;   ///< Sq1-Sq4 re-verified on the quotient
  Verdict compatible;                 ///< x ~_I y implies r(x) ~_I r(y)
};
/// Finite only. Throws DomainError unless I is normal.
QuotientResult quotient(const PseudoMV& a, const IdealHandle& ideal, const std::optional<SqrtMap>& r = std::nullopt);

struct InvarianceVerdict {
  bool invariant = true;                  ///< r(I) within I
  std::optional<std::string> witness;     ///< x in I with r(x) outside
  std::optional<bool> matches_boolean;    ///< normal I only: invariant == boolean_ideal
};
/// Exhaustive on finite ideals, over `budget` sampled members otherwise.
InvarianceVerdict is_r_invariant(const IdealHandle& ideal, const SqrtMap& r, std::size_t budget = 1000);

struct Representability {
  bool representable = true;
  std::optional<Element> witness;  ///< a whose polar is not a normal ideal
};
/// Finite: every polar a^perp is a normal ideal. Gamma: asks the group.
Representability is_representable(const PseudoMV& a);

/// Elements covering 0; finite only.
std::vector<Element> atoms(const PseudoMV& a);

struct AtomlessWitness {
  enum class Status { found, none, inapplicable };
  Status status = Status::none;
  std::optional<Element> y;
  std::optional<Element> value;  ///< y ^ (x (.) y^-)
  bool canonical = false;        ///< y = r(x^-)^~
};
std::string status_name(AtomlessWitness::Status s);

/// Search for 0 < y < x with y ^ (x (.) y^-) != 0. Finite: exhaustive, and
/// "inapplicable" for non-representable algebras. Gamma: the canonical
/// candidate r(x^-)^~ first when a strict root is given, then `budget` samples.
/// Throws DomainError for x = 0.
AtomlessWitness strongly_atomless_witness(const PseudoMV& a, const Element& x, std::size_t budget = 256,
                                          const std::optional<SqrtMap>& r = std::nullopt);

}  // namespace pmv
