#pragma once

#include <array>
#include <cstddef>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "pmv/error.hpp"
#include "pmv/lgroups.hpp"
#include "pmv/random.hpp"

namespace pmv {

/// A value in an algebra's carrier: a table index or a group point.
class Element {
 public:
  Element(std::size_t index) : v_(index) {}  // NOLINT(google-explicit-constructor)
  Element(GroupElement point) : v_(std::move(point)) {}  // NOLINT(google-explicit-constructor)

  bool is_index() const { return std::holds_alternative<std::size_t>(v_); }
  std::size_t index() const;
  const GroupElement& point() const;

  bool operator==(const Element&) const = default;

 private:
  std::variant<std::size_t, GroupElement> v_;
};

enum class BackendKind { finite_table, gamma_interval };

class FiniteTable;

/// Primitive operations of one concrete carrier. Algebras are built over
/// implementations of this interface and never mutate them.
class AlgebraBackend {
 public:
  virtual ~AlgebraBackend() = default;

  virtual BackendKind kind() const = 0;
  virtual std::string describe() const = 0;
  virtual Element zero() const = 0;
  virtual Element one() const = 0;
  virtual Element oplus(const Element& x, const Element& y) const = 0;
  virtual Element minus(const Element& x) const = 0;  ///< x^-
  virtual Element tilde(const Element& x) const = 0;  ///< x^~
  virtual bool equal(const Element& x, const Element& y) const = 0;
  virtual bool contains(const Element& x) const = 0;
  virtual std::string render(const Element& x) const = 0;

  /// Carrier size; finite backends only.
  virtual std::size_t size() const { return 0; }
  /// Random carrier element; infinite backends only.
  virtual Element sample(Rng& rng, const SamplerConfig& cfg) const;

  virtual double tolerance() const { return 0.0; }
  virtual const UnitalLGroup* unital_group() const { return nullptr; }
  virtual const FiniteTable* table() const { return nullptr; }
};

/// Handle to an immutable pseudo MV-algebra. Cheap to copy; safe to share across threads.
class PseudoMV {
 public:
  explicit PseudoMV(std::shared_ptr<const AlgebraBackend> backend, SamplerConfig sampler = {});

  BackendKind kind() const { return backend_->kind(); }
  bool is_finite() const { return kind() == BackendKind::finite_table; }
  std::string describe() const { return backend_->describe(); }

  Element zero() const { return backend_->zero(); }
  Element one() const { return backend_->one(); }
  Element oplus(const Element& x, const Element& y) const;
  Element minus(const Element& x) const;
  Element tilde(const Element& x) const;
  bool equal(const Element& x, const Element& y) const { return backend_->equal(x, y); }
  bool contains(const Element& x) const;
  std::string render(const Element& x) const { return backend_->render(x); }

  /// 0 = 1.
  bool degenerate() const { return equal(zero(), one()); }

  std::size_t size() const;
  /// Every element, in index order; finite only.
  std::vector<Element> elements() const;
  Element sample(Rng& rng) const { return backend_->sample(rng, sampler_); }

  double tolerance() const { return backend_->tolerance(); }
  bool exact() const { return tolerance() == 0.0; }
  const UnitalLGroup* unital_group() const { return backend_->unital_group(); }
  const FiniteTable* table() const { return backend_->table(); }

  const SamplerConfig& sampler() const { return sampler_; }
  PseudoMV with_sampler(SamplerConfig cfg) const { return PseudoMV(backend_, cfg); }

  const std::shared_ptr<const AlgebraBackend>& backend() const { return backend_; }

 private:
  void check_tag(const Element& x) const;

  std::shared_ptr<const AlgebraBackend> backend_;
  SamplerConfig sampler_;
};

/// An algebra presented by its operations; used for subintervals and induced
/// structures over infinite carriers.
struct AlgebraOps {
  std::string name;
  Element zero{std::size_t{0}};
  Element one{std::size_t{0}};
  std::function<Element(const Element&, const Element&)> oplus;
  std::function<Element(const Element&)> minus;
  std::function<Element(const Element&)> tilde;
  std::function<bool(const Element&, const Element&)> equal;
  std::function<bool(const Element&)> contains;
  std::function<Element(Rng&, const SamplerConfig&)> sample;
  std::function<std::string(const Element&)> render;
  double tolerance = 0.0;
};
PseudoMV make_algebra(AlgebraOps ops, SamplerConfig sampler = {});

// Derived operations. All of them go through the three primitives.

Element odot(const PseudoMV& a, const Element& x, const Element& y);
/// x -> y = x^- (+) y
Element arrow(const PseudoMV& a, const Element& x, const Element& y);
/// x ~> y = y (+) x^~
Element squiggle(const PseudoMV& a, const Element& x, const Element& y);
std::pair<Element, Element> arrows(const PseudoMV& a, const Element& x, const Element& y);
Element join(const PseudoMV& a, const Element& x, const Element& y);
Element meet(const PseudoMV& a, const Element& x, const Element& y);
/// (join, meet)
std::pair<Element, Element> lattice(const PseudoMV& a, const Element& x, const Element& y);
bool leq(const PseudoMV& a, const Element& x, const Element& y);
/// x + y when x <= y^-; nullopt stands for "undefined".
std::optional<Element> partial_add(const PseudoMV& a, const Element& x, const Element& y);
/// (n.x, nx): the (+)-multiple and the partial-sum multiple (nullopt if some step is undefined).
std::pair<Element, std::optional<Element>> multiples(const PseudoMV& a, const Element& x, unsigned n);
/// x (.) x (.) ... (.) x with 2^n factors, by repeated squaring.
Element power2(const PseudoMV& a, const Element& x, unsigned n);
bool is_idempotent(const PseudoMV& a, const Element& x);

/// Result of checking one universally quantified law.
struct LawCheck {
  std::string name;
  bool passed = true;
  std::size_t checked = 0;
  std::optional<std::string> counterexample;
};

struct AxiomReport {
  bool exhaustive = false;
  std::vector<LawCheck> laws;  ///< A1..A8, then closure and lattice laws
  bool all_passed() const;
  const LawCheck& law(const std::string& name) const;
};

/// Exhaustive over all triples for finite algebras; `budget` seeded triples otherwise.
AxiomReport check_axioms(const PseudoMV& a, std::optional<std::size_t> budget = std::nullopt);

/// {x : x (+) x = x}; finite only. Throws if the result fails to be a subalgebra.
std::vector<Element> boolean_skeleton(const PseudoMV& a);

struct SymmetryVerdict {
  bool symmetric = true;
  std::optional<Element> witness;
};
/// x^- = x^~ for all (finite) or sampled elements.
SymmetryVerdict is_symmetric(const PseudoMV& a, std::optional<std::size_t> budget = std::nullopt);

/// Enumerates tuples for a quantified check: every tuple when the algebra is finite,
/// otherwise the 2^N corner tuples over {0,1} followed by seeded random tuples.
/// Random coordinates are 0 or 1 with probability 1/16 each.
template <std::size_t N, class Pred>
std::optional<std::array<Element, N>> find_counterexample(const PseudoMV& a, std::size_t budget,
                                                          std::uint64_t stream, Pred&& holds,
                                                          std::size_t* checked = nullptr);

/// Elements probed by single-variable checks: the whole carrier, or {0, 1} plus `budget` samples.
std::vector<Element> probe_elements(const PseudoMV& a, std::size_t budget, std::uint64_t stream);

// ---------------------------------------------------------------------------

namespace detail {
Element random_probe(const PseudoMV& a, Rng& rng);
}

template <std::size_t N, class Pred>
std::optional<std::array<Element, N>> find_counterexample(const PseudoMV& a, std::size_t budget,
                                                          std::uint64_t stream, Pred&& holds,
                                                          std::size_t* checked) {
  std::size_t count = 0;
  std::optional<std::array<Element, N>> found;
  auto visit = [&](const std::array<Element, N>& t) {
    ++count;
    if (!holds(t)) {
      found = t;
      return false;
    }
    return true;
  };
  if (a.is_finite()) {
    const std::size_t n = a.size();
    std::array<std::size_t, N> idx{};
    std::size_t total = 1;
    for (std::size_t i = 0; i < N; ++i) total *= n;
    for (std::size_t k = 0; k < total; ++k) {
      std::size_t rem = k;
      for (std::size_t i = N; i-- > 0;) {
        idx[i] = rem % n;
        rem /= n;
      }
      std::array<Element, N> t = [&]<std::size_t... I>(std::index_sequence<I...>) {
        return std::array<Element, N>{Element(idx[I])...};
      }(std::make_index_sequence<N>{});
      if (!visit(t)) break;
    }
  } else {
    const Element z = a.zero();
    const Element o = a.one();
    bool stop = false;
    for (std::size_t mask = 0; mask < (std::size_t{1} << N) && !stop; ++mask) {
      std::array<Element, N> t = [&]<std::size_t... I>(std::index_sequence<I...>) {
        return std::array<Element, N>{((mask >> I) & 1U ? o : z)...};
      }(std::make_index_sequence<N>{});
      stop = !visit(t);
    }
    Rng rng(a.sampler().seed, stream);
    for (std::size_t k = 0; k < budget && !stop; ++k) {
      std::array<Element, N> t = [&]<std::size_t... I>(std::index_sequence<I...>) {
        return std::array<Element, N>{((void)I, detail::random_probe(a, rng))...};
      }(std::make_index_sequence<N>{});
      stop = !visit(t);
    }
  }
  if (checked != nullptr) *checked = count;
  return found;
}

}  // namespace pmv
