#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pmv/core.hpp"

namespace pmv {

/// Cayley-table presentation of a finite algebra. Labels are only used for rendering.
class FiniteTable {
 public:
  std::size_t n = 0;
  std::vector<std::vector<std::size_t>> oplus;
  std::vector<std::size_t> neg;    ///< x^-
  std::vector<std::size_t> tilde;  ///< x^~
  std::size_t zero = 0;
  std::size_t one = 0;
  std::vector<std::string> labels;

  /// Shapes and index ranges; throws DomainError.
  void check_shape() const;
  std::string label(std::size_t i) const { return i < labels.size() ? labels[i] : std::to_string(i); }
};

/// Wraps a table. With `validate`, the axioms are checked exhaustively first and
/// AxiomFailure names the first failing law and triple.
PseudoMV table_algebra(FiniteTable t, std::string name, bool validate = true);

/// The finite algebra on `carrier` (closed under the primitives) as a table, labelled by render().
PseudoMV tabulate(const PseudoMV& a, const std::vector<Element>& carrier, std::string name);

/// Closure of {0, 1} plus `budget` samples under the primitives, as a table.
/// Throws CeilingExceeded past `max_size` elements.
PseudoMV materialize(const PseudoMV& a, std::size_t budget = 0, std::size_t max_size = 64);

struct CatalogueSpec {
  enum class Kind { chain, boolean, product, interval };
  Kind kind = Kind::chain;
  unsigned n = 1;                        ///< chain(n) has n+1 elements; boolean(n) has 2^n
  std::vector<CatalogueSpec> operands;   ///< two for product, one for interval
  std::string element;                   ///< interval top, as an element label of the operand

  /// DSL form, e.g. "interval(product(boolean(1),chain(2)),(1,0))".
  std::string text() const;
  static CatalogueSpec parse(const std::string& text);

  static CatalogueSpec chain(unsigned n);
  static CatalogueSpec boolean(unsigned k);
  static CatalogueSpec product(CatalogueSpec a, CatalogueSpec b);
  static CatalogueSpec interval(CatalogueSpec a, std::string top);
};

PseudoMV build_catalogue(const CatalogueSpec& spec);

/// [0,a] with x^{-a} = x^- ^ a, x^{~a} = x^~ ^ a, and the maps between it and the parent.
struct IntervalAlgebra {
  PseudoMV algebra;
  std::function<Element(const Element&)> from_parent;  ///< x |-> x ^ a
  std::function<Element(const Element&)> to_parent;    ///< inclusion
};
/// Throws DomainError unless a is Boolean.
IntervalAlgebra boolean_interval(const PseudoMV& a, const Element& top);

struct WeakRootSearch {
  enum class Failure { none, no_maximum, square_mismatch };
  std::optional<std::vector<std::size_t>> map;  ///< r as an index table when it exists
  Failure failure = Failure::none;
  std::optional<std::size_t> failing_x;
};
/// For every x, the maximum of {z : z (.) z <= x} if it exists and squares back to x.
WeakRootSearch brute_force_weak_sqrt(const PseudoMV& a);

struct Sq3Check {
  bool holds = true;
  std::vector<std::size_t> violations;  ///< every x breaking either equation
};
Sq3Check check_sq3(const PseudoMV& a, const std::function<Element(const Element&)>& r);

struct SearchRow {
  std::string spec;
  std::size_t size = 0;
  bool weak_root_exists = false;
  bool is_boolean = false;
  WeakRootSearch::Failure failure = WeakRootSearch::Failure::none;
  std::optional<std::string> failing_x;
  bool consistent() const { return weak_root_exists == is_boolean; }
};
/// Chains, Boolean algebras, their binary products and Boolean intervals, closed up to
/// max_size (at most 12) elements; one entry per isomorphism class.
std::vector<std::pair<CatalogueSpec, PseudoMV>> catalogue_closure(std::size_t max_size);

/// One row per catalogue_closure entry.
std::vector<SearchRow> search_square_rootable(std::size_t max_size, std::size_t ceiling = 6);

/// Bijection preserving the primitives, as an index map A -> B. Both sides at most 12 elements.
std::optional<std::vector<std::size_t>> find_isomorphism(const PseudoMV& a, const PseudoMV& b);

bool is_boolean_algebra(const PseudoMV& a);

}  // namespace pmv
