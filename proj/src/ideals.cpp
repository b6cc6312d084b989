#include "pmv/ideals.hpp"

#include <algorithm>

#include "pmv/finite.hpp"

namespace pmv {

namespace {

constexpr std::size_t kIdealCeiling = 12;

std::vector<bool> mask_of(std::size_t n, const std::vector<std::size_t>& members) {
  std::vector<bool> m(n, false);
  for (auto i : members) {
    if (i >= n) throw DomainError("ideal member " + std::to_string(i) + " out of range");
    m[i] = true;
  }
  return m;
}

// Ideal axioms on a mask; returns the failure description.
std::optional<std::string> ideal_failure(const PseudoMV& a, const std::vector<bool>& in) {
  const std::size_t n = a.size();
  if (!in[a.zero().index()]) return "0 is not a member";
  for (std::size_t x = 0; x < n; ++x) {
    if (!in[x]) continue;
    for (std::size_t y = 0; y < n; ++y) {
      if (!in[y] && leq(a, y, x)) return "not a downset: " + a.render(y) + " <= " + a.render(x);
      if (in[y] && !in[a.oplus(x, y).index()]) {
        return "not closed under (+): " + a.render(x) + " (+) " + a.render(y);
      }
    }
  }
  return std::nullopt;
}

struct Flags {
  bool normal = true;
  bool prime = true;
  bool p2 = true;
  bool boolean_ideal = true;
};

template <class In>
Flags pair_flags(const PseudoMV& a, In&& in, std::size_t budget, std::uint64_t stream) {
  Flags f;
  find_counterexample<2>(a, budget, stream, [&](const std::array<Element, 2>& t) {
    const auto& x = t[0];
    const auto& y = t[1];
    if (in(odot(a, x, a.minus(y))) != in(odot(a, a.tilde(y), x))) f.normal = false;
    if (!in(odot(a, x, a.minus(y))) && !in(odot(a, y, a.minus(x)))) f.prime = false;
    if (!in(odot(a, x, a.tilde(y))) && !in(odot(a, y, a.tilde(x)))) f.p2 = false;
    if (!in(meet(a, x, a.tilde(x)))) f.boolean_ideal = false;
    return true;
  });
  return f;
}

}  // namespace

bool IdealHandle::contains(const Element& x) const {
  if (algebra.is_finite()) return std::binary_search(members.begin(), members.end(), x.index());
  return predicate(x);
}

std::string IdealHandle::render() const {
  if (!algebra.is_finite()) return name;
  std::string s = "{";
  for (std::size_t i = 0; i < members.size(); ++i) {
    if (i > 0) s += ", ";
    s += algebra.render(members[i]);
  }
  return s + "}";
}

IdealHandle classify_ideal(const PseudoMV& a, std::vector<std::size_t> members) {
  if (!a.is_finite()) throw Unsupported("classify_ideal: finite algebras only");
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  const auto in = mask_of(a.size(), members);
  if (auto why = ideal_failure(a, in)) throw DomainError("not an ideal: " + *why);

  IdealHandle h{a, members, nullptr, "", false, false, false, false, true};
  h.predicate = [in](const Element& x) { return bool(in[x.index()]); };
  h.proper = !in[a.one().index()];
  auto f = pair_flags(a, h.predicate, 0, 0);
  // (P1) and (P2) characterise the same primes.
  if (f.prime != f.p2) throw AxiomFailure("prime conditions P1 and P2 disagree on " + h.render());
  h.normal = f.normal;
  h.prime = h.proper && f.prime;
  h.boolean_ideal = f.boolean_ideal;
  h.name = h.render();
  return h;
}

IdealHandle predicate_ideal(const PseudoMV& a, std::string name, std::function<bool(const Element&)> member,
                            std::size_t budget) {
  if (a.is_finite()) {
    std::vector<std::size_t> m;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (member(i)) m.push_back(i);
    }
    return classify_ideal(a, std::move(m));
  }
  if (!member(a.zero())) throw DomainError(name + ": 0 is not a member");
  auto bad = find_counterexample<2>(a, budget, 501, [&](const std::array<Element, 2>& t) {
    if (!member(t[0])) return true;
    return member(meet(a, t[0], t[1])) && (!member(t[1]) || member(a.oplus(t[0], t[1])));
  });
  if (bad) throw DomainError(name + ": ideal laws fail at (" + a.render((*bad)[0]) + ", " + a.render((*bad)[1]) + ")");
  IdealHandle h{a, {}, member, std::move(name), false, false, false, false, false};
  h.proper = !member(a.one());
  auto f = pair_flags(a, member, budget, 502);
  h.normal = f.normal;
  h.prime = h.proper && f.prime;
  h.boolean_ideal = f.boolean_ideal;
  return h;
}

std::vector<IdealHandle> enumerate_ideals(const PseudoMV& a) {
  if (!a.is_finite()) throw Unsupported("enumerate_ideals: finite algebras only");
  const std::size_t n = a.size();
  if (n > kIdealCeiling) throw CeilingExceeded("enumerate_ideals: more than 12 elements");
  const std::size_t z = a.zero().index();
  std::vector<IdealHandle> out;
  for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
    if (((mask >> z) & 1U) == 0) continue;
    std::vector<bool> in(n);
    std::vector<std::size_t> members;
    for (std::size_t i = 0; i < n; ++i) {
      in[i] = ((mask >> i) & 1U) != 0;
      if (in[i]) members.push_back(i);
    }
    if (ideal_failure(a, in)) continue;
    out.push_back(classify_ideal(a, std::move(members)));
  }
  std::sort(out.begin(), out.end(), [](const IdealHandle& x, const IdealHandle& y) {
    if (x.members.size() != y.members.size()) return x.members.size() < y.members.size();
    return x.members < y.members;
  });
  return out;
}

QuotientResult quotient(const PseudoMV& a, const IdealHandle& ideal, const std::optional<SqrtMap>& r) {
  if (!a.is_finite()) throw Unsupported("quotient: finite algebras only");
  if (!ideal.normal) throw DomainError("quotient: " + ideal.render() + " is not normal");
  const std::size_t n = a.size();
  auto related = [&](std::size_t x, std::size_t y) {
    return ideal.contains(odot(a, x, a.minus(y))) && ideal.contains(odot(a, y, a.minus(x)));
  };

  std::vector<std::size_t> class_of(n);
  std::vector<std::size_t> reps;
  for (std::size_t x = 0; x < n; ++x) {
    auto it = std::find_if(reps.begin(), reps.end(), [&](std::size_t rep) { return related(rep, x); });
    if (it == reps.end()) {
      class_of[x] = reps.size();
      reps.push_back(x);
    } else {
      class_of[x] = static_cast<std::size_t>(it - reps.begin());
    }
  }

  FiniteTable t;
  t.n = reps.size();
  t.oplus.assign(t.n, std::vector<std::size_t>(t.n));
  for (std::size_t i = 0; i < t.n; ++i) {
    for (std::size_t j = 0; j < t.n; ++j) t.oplus[i][j] = class_of[a.oplus(reps[i], reps[j]).index()];
    t.neg.push_back(class_of[a.minus(reps[i]).index()]);
    t.tilde.push_back(class_of[a.tilde(reps[i]).index()]);
    t.labels.push_back(a.render(reps[i]));
  }
  t.zero = class_of[a.zero().index()];
  t.one = class_of[a.one().index()];
  QuotientResult out{table_algebra(std::move(t), a.describe() + "/" + ideal.render()), class_of, std::nullopt,
                     std::nullopt, Verdict{}};
  if (!r) return out;

  std::vector<std::size_t> rmap(n);
  for (std::size_t x = 0; x < n; ++x) rmap[x] = (*r)(x).index();
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      ++out.compatible.checked;
      if (class_of[x] == class_of[y] && class_of[rmap[x]] != class_of[rmap[y]]) {
        out.compatible.holds = false;
        if (out.compatible.witnesses.size() < 16) {
          out.compatible.witnesses.push_back("(" + a.render(x) + ", " + a.render(y) + ")");
        }
      }
    }
  }
  std::vector<std::size_t> ri(reps.size());
  for (std::size_t i = 0; i < reps.size(); ++i) ri[i] = class_of[rmap[reps[i]]];
  out.root = SqrtMap::table(ri);
  out.report = verify(out.algebra, *out.root);
  return out;
}

InvarianceVerdict is_r_invariant(const IdealHandle& ideal, const SqrtMap& r, std::size_t budget) {
  const PseudoMV& a = ideal.algebra;
  InvarianceVerdict v;
  auto test = [&](const Element& x) {
    if (!ideal.contains(x) || ideal.contains(r(x))) return;
    if (v.invariant) v.witness = a.render(x);
    v.invariant = false;
  };
  if (a.is_finite()) {
    for (auto i : ideal.members) test(i);
  } else {
    // Uniform samples rarely land in small ideals, so squares are tried as well.
    for (const auto& x : probe_elements(a, budget, 503)) {
      test(x);
      test(odot(a, x, x));
    }
  }
  if (ideal.normal) v.matches_boolean = v.invariant == ideal.boolean_ideal;
  return v;
}

Representability is_representable(const PseudoMV& a) {
  Representability out;
  if (!a.is_finite()) {
    const auto* ug = a.unital_group();
    if (ug == nullptr) throw Unsupported("is_representable: finite or gamma algebras only");
    out.representable = ug->group().representable();
    return out;
  }
  for (auto x : a.elements()) {
    std::vector<std::size_t> polar;
    for (std::size_t y = 0; y < a.size(); ++y) {
      if (a.equal(meet(a, x, y), a.zero())) polar.push_back(y);
    }
    if (!classify_ideal(a, polar).normal) {
      out.representable = false;
      out.witness = x;
      return out;
    }
  }
  return out;
}

std::vector<Element> atoms(const PseudoMV& a) {
  if (!a.is_finite()) throw Unsupported("atoms: finite algebras only");
  std::vector<Element> out;
  const auto all = a.elements();
  auto strictly_between = [&](const Element& y, const Element& x) {
    return !a.equal(y, a.zero()) && !a.equal(y, x) && leq(a, y, x);
  };
  for (const auto& x : all) {
    if (a.equal(x, a.zero())) continue;
    if (std::none_of(all.begin(), all.end(), [&](const Element& y) { return strictly_between(y, x); })) {
      out.push_back(x);
    }
  }
  return out;
}

std::string status_name(AtomlessWitness::Status s) {
  switch (s) {
    case AtomlessWitness::Status::found: return "found";
    case AtomlessWitness::Status::none: return "none";
    case AtomlessWitness::Status::inapplicable: return "inapplicable";
  }
  return "?";
}

AtomlessWitness strongly_atomless_witness(const PseudoMV& a, const Element& x, std::size_t budget,
                                          const std::optional<SqrtMap>& r) {
  if (a.equal(x, a.zero())) throw DomainError("strongly_atomless_witness: x must be nonzero");
  AtomlessWitness out;
  if (!is_representable(a).representable) {
    out.status = AtomlessWitness::Status::inapplicable;
    return out;
  }
  auto attempt = [&](const Element& y) {
    if (a.equal(y, a.zero()) || a.equal(y, x) || !leq(a, y, x)) return false;
    Element value = meet(a, y, odot(a, x, a.minus(y)));
    if (a.equal(value, a.zero())) return false;
    out.status = AtomlessWitness::Status::found;
    out.y = y;
    out.value = value;
    return true;
  };

  if (r) {
    Element r0 = (*r)(a.zero());
    if (a.equal(r0, a.minus(r0)) && attempt(a.tilde((*r)(a.minus(x))))) {
      out.canonical = true;
      return out;
    }
  }
  if (a.is_finite()) {
    for (const auto& y : a.elements()) {
      if (attempt(y)) return out;
    }
    return out;
  }
  for (const auto& s : probe_elements(a, budget, 504)) {
    if (attempt(meet(a, s, x))) return out;
  }
  return out;
}

}  // namespace pmv
