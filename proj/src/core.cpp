#include "pmv/core.hpp"

#include <algorithm>

namespace pmv {

std::size_t Element::index() const {
  if (!is_index()) throw BackendMismatch("expected a table index, got a group point");
  return std::get<std::size_t>(v_);
}

const GroupElement& Element::point() const {
  if (is_index()) throw BackendMismatch("expected a group point, got a table index");
  return std::get<GroupElement>(v_);
}

Element AlgebraBackend::sample(Rng&, const SamplerConfig&) const {
  throw Unsupported(describe() + ": sampling is only defined for infinite carriers");
}

// ---------------------------------------------------------------------------
// PseudoMV

PseudoMV::PseudoMV(std::shared_ptr<const AlgebraBackend> backend, SamplerConfig sampler)
    : backend_(std::move(backend)), sampler_(sampler) {
  if (!backend_) throw DomainError("null algebra backend");
  if (sampler_.denominator_bound == 0 || sampler_.sample_count == 0) {
    throw DomainError("sampler bounds must be positive");
  }
}

void PseudoMV::check_tag(const Element& x) const {
  if (is_finite()) {
    if (!x.is_index()) throw BackendMismatch(describe() + ": group point passed to a finite algebra");
    if (x.index() >= backend_->size()) throw BackendMismatch(describe() + ": index out of range");
  } else if (x.is_index()) {
    throw BackendMismatch(describe() + ": table index passed to an interval algebra");
  }
}

Element PseudoMV::oplus(const Element& x, const Element& y) const {
  check_tag(x);
  check_tag(y);
  return backend_->oplus(x, y);
}

Element PseudoMV::minus(const Element& x) const {
  check_tag(x);
  return backend_->minus(x);
}

Element PseudoMV::tilde(const Element& x) const {
  check_tag(x);
  return backend_->tilde(x);
}

bool PseudoMV::contains(const Element& x) const {
  if (is_finite()) return x.is_index() && x.index() < backend_->size();
  return !x.is_index() && backend_->contains(x);
}

std::size_t PseudoMV::size() const {
  if (!is_finite()) throw Unsupported(describe() + ": infinite carrier has no size");
  return backend_->size();
}

std::vector<Element> PseudoMV::elements() const {
  std::vector<Element> out;
  const std::size_t n = size();
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.emplace_back(i);
  return out;
}

// ---------------------------------------------------------------------------
// Algebras given by operation closures

namespace {

class OpsBackend final : public AlgebraBackend {
 public:
  explicit OpsBackend(AlgebraOps ops) : ops_(std::move(ops)) {}

  BackendKind kind() const override { return BackendKind::gamma_interval; }
  std::string describe() const override { return ops_.name; }
  Element zero() const override { return ops_.zero; }
  Element one() const override { return ops_.one; }
  Element oplus(const Element& x, const Element& y) const override { return ops_.oplus(x, y); }
  Element minus(const Element& x) const override { return ops_.minus(x); }
  Element tilde(const Element& x) const override { return ops_.tilde(x); }
  bool equal(const Element& x, const Element& y) const override { return ops_.equal(x, y); }
  bool contains(const Element& x) const override { return ops_.contains(x); }
  std::string render(const Element& x) const override { return ops_.render(x); }
  Element sample(Rng& rng, const SamplerConfig& cfg) const override { return ops_.sample(rng, cfg); }
  double tolerance() const override { return ops_.tolerance; }

 private:
  AlgebraOps ops_;
};

}  // namespace

PseudoMV make_algebra(AlgebraOps ops, SamplerConfig sampler) {
  if (!ops.oplus || !ops.minus || !ops.tilde || !ops.equal || !ops.contains || !ops.sample || !ops.render) {
    throw DomainError("make_algebra: every operation must be provided");
  }
  return PseudoMV(std::make_shared<OpsBackend>(std::move(ops)), sampler);
}

// ---------------------------------------------------------------------------
// Derived operations

Element odot(const PseudoMV& a, const Element& x, const Element& y) {
  return a.tilde(a.oplus(a.minus(y), a.minus(x)));
}

Element arrow(const PseudoMV& a, const Element& x, const Element& y) { return a.oplus(a.minus(x), y); }

Element squiggle(const PseudoMV& a, const Element& x, const Element& y) { return a.oplus(y, a.tilde(x)); }

std::pair<Element, Element> arrows(const PseudoMV& a, const Element& x, const Element& y) {
  return {arrow(a, x, y), squiggle(a, x, y)};
}

Element join(const PseudoMV& a, const Element& x, const Element& y) {
  return a.oplus(x, odot(a, a.tilde(x), y));
}

Element meet(const PseudoMV& a, const Element& x, const Element& y) {
  return odot(a, x, a.oplus(a.minus(x), y));
}

std::pair<Element, Element> lattice(const PseudoMV& a, const Element& x, const Element& y) {
  return {join(a, x, y), meet(a, x, y)};
}

bool leq(const PseudoMV& a, const Element& x, const Element& y) { return a.equal(meet(a, x, y), x); }

std::optional<Element> partial_add(const PseudoMV& a, const Element& x, const Element& y) {
  if (!leq(a, x, a.minus(y))) return std::nullopt;
  return a.oplus(x, y);
}

std::pair<Element, std::optional<Element>> multiples(const PseudoMV& a, const Element& x, unsigned n) {
  Element dot = a.zero();
  std::optional<Element> sum = a.zero();
  for (unsigned i = 0; i < n; ++i) {
    dot = a.oplus(dot, x);
    if (sum) sum = partial_add(a, *sum, x);
  }
  return {dot, sum};
}

Element power2(const PseudoMV& a, const Element& x, unsigned n) {
  Element p = x;
  for (unsigned i = 0; i < n; ++i) p = odot(a, p, p);
  return p;
}

bool is_idempotent(const PseudoMV& a, const Element& x) { return a.equal(a.oplus(x, x), x); }

// ---------------------------------------------------------------------------
// Axioms

bool AxiomReport::all_passed() const {
  return std::all_of(laws.begin(), laws.end(), [](const LawCheck& l) { return l.passed; });
}

const LawCheck& AxiomReport::law(const std::string& name) const {
  for (const auto& l : laws) {
    if (l.name == name) return l;
  }
  throw DomainError("no law named " + name);
}

namespace detail {

Element random_probe(const PseudoMV& a, Rng& rng) {
  auto roll = rng.below(16);
  if (roll == 0) return a.zero();
  if (roll == 1) return a.one();
  return a.sample(rng);
}

}  // namespace detail

std::vector<Element> probe_elements(const PseudoMV& a, std::size_t budget, std::uint64_t stream) {
  if (a.is_finite()) return a.elements();
  std::vector<Element> out{a.zero(), a.one()};
  Rng rng(a.sampler().seed, stream);
  for (std::size_t i = 0; i < budget; ++i) out.push_back(a.sample(rng));
  return out;
}

namespace {

template <std::size_t N>
std::string render_tuple(const PseudoMV& a, const std::array<Element, N>& t) {
  std::string out = "(";
  for (std::size_t i = 0; i < N; ++i) out += (i ? ", " : "") + a.render(t[i]);
  return out + ")";
}

template <std::size_t N, class Pred>
LawCheck law(const PseudoMV& a, std::string name, std::size_t budget, std::uint64_t stream, Pred&& holds) {
  LawCheck out;
  out.name = std::move(name);
  auto bad = find_counterexample<N>(a, budget, stream, holds, &out.checked);
  if (bad) {
    out.passed = false;
    out.counterexample = render_tuple(a, *bad);
  }
  return out;
}

}  // namespace

AxiomReport check_axioms(const PseudoMV& a, std::optional<std::size_t> budget) {
  const std::size_t n = budget.value_or(a.sampler().sample_count);
  AxiomReport report;
  report.exhaustive = a.is_finite();
  const Element zero = a.zero();
  const Element one = a.one();
  auto eq = [&](const Element& x, const Element& y) { return a.equal(x, y); };

  report.laws.push_back(law<3>(a, "A1", n, 101, [&](const auto& t) {
    const auto& [x, y, z] = t;
    return eq(a.oplus(x, a.oplus(y, z)), a.oplus(a.oplus(x, y), z));
  }));
  report.laws.push_back(law<1>(a, "A2", n, 102, [&](const auto& t) {
    const auto& x = t[0];
    return eq(a.oplus(x, zero), x) && eq(a.oplus(zero, x), x);
  }));
  report.laws.push_back(law<1>(a, "A3", n, 103, [&](const auto& t) {
    const auto& x = t[0];
    return eq(a.oplus(x, one), one) && eq(a.oplus(one, x), one);
  }));
  report.laws.push_back(law<1>(a, "A4", 0, 104, [&](const auto&) {
    return eq(a.minus(one), zero) && eq(a.tilde(one), zero);
  }));
  report.laws.push_back(law<2>(a, "A5", n, 105, [&](const auto& t) {
    const auto& [x, y] = t;
    return eq(a.tilde(a.oplus(a.minus(x), a.minus(y))), a.minus(a.oplus(a.tilde(x), a.tilde(y))));
  }));
  report.laws.push_back(law<2>(a, "A6", n, 106, [&](const auto& t) {
    const auto& [x, y] = t;
    Element v = a.oplus(x, odot(a, a.tilde(x), y));
    return eq(v, a.oplus(y, odot(a, a.tilde(y), x))) && eq(v, a.oplus(odot(a, x, a.minus(y)), y)) &&
           eq(v, a.oplus(odot(a, y, a.minus(x)), x));
  }));
  report.laws.push_back(law<2>(a, "A7", n, 107, [&](const auto& t) {
    const auto& [x, y] = t;
    return eq(odot(a, x, a.oplus(a.minus(x), y)), odot(a, a.oplus(x, a.tilde(y)), y));
  }));
  report.laws.push_back(law<1>(a, "A8", n, 108, [&](const auto& t) {
    const auto& x = t[0];
    return eq(a.tilde(a.minus(x)), x);
  }));
  report.laws.push_back(law<2>(a, "closure", n, 109, [&](const auto& t) {
    const auto& [x, y] = t;
    return a.contains(a.oplus(x, y)) && a.contains(a.minus(x)) && a.contains(a.tilde(x));
  }));
  report.laws.push_back(law<3>(a, "lattice", n, 110, [&](const auto& t) {
    const auto& [x, y, z] = t;
    auto [j, m] = lattice(a, x, y);
    bool ok = eq(join(a, x, y), join(a, y, x)) && eq(m, meet(a, y, x));
    ok = ok && eq(join(a, x, m), x) && eq(meet(a, x, j), x);  // absorption
    ok = ok && eq(meet(a, x, zero), zero) && eq(join(a, x, one), one);
    ok = ok && eq(meet(a, x, join(a, y, z)), join(a, meet(a, x, y), meet(a, x, z)));
    return ok;
  }));
  return report;
}

std::vector<Element> boolean_skeleton(const PseudoMV& a) {
  if (!a.is_finite()) throw Unsupported(a.describe() + ": Boolean skeleton needs a finite carrier");
  std::vector<Element> out;
  for (const auto& x : a.elements()) {
    if (is_idempotent(a, x)) out.push_back(x);
  }
  auto in = [&](const Element& x) {
    return std::any_of(out.begin(), out.end(), [&](const Element& b) { return a.equal(b, x); });
  };
  if (!in(a.zero()) || !in(a.one())) throw AxiomFailure(a.describe() + ": skeleton misses 0 or 1");
  for (const auto& x : out) {
    if (!in(a.minus(x)) || !in(a.tilde(x))) throw AxiomFailure(a.describe() + ": skeleton not closed under negation");
    for (const auto& y : out) {
      if (!in(a.oplus(x, y))) throw AxiomFailure(a.describe() + ": skeleton not closed under (+)");
    }
  }
  return out;
}

SymmetryVerdict is_symmetric(const PseudoMV& a, std::optional<std::size_t> budget) {
  for (const auto& x : probe_elements(a, budget.value_or(a.sampler().sample_count), 120)) {
    if (!a.equal(a.minus(x), a.tilde(x))) return SymmetryVerdict{false, x};
  }
  return SymmetryVerdict{};
}

}  // namespace pmv
