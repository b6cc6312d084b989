#include "pmv/finite.hpp"

#include <algorithm>
#include <cctype>
#include <map>

namespace pmv {

void FiniteTable::check_shape() const {
  if (n == 0) throw DomainError("finite table must have at least one element");
  if (oplus.size() != n || neg.size() != n || tilde.size() != n) throw DomainError("table shape does not match n");
  for (const auto& row : oplus) {
    if (row.size() != n) throw DomainError("oplus table must be n x n");
    for (auto v : row) {
      if (v >= n) throw DomainError("oplus entry out of range");
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (neg[i] >= n || tilde[i] >= n) throw DomainError("negation entry out of range");
  }
  if (zero >= n || one >= n) throw DomainError("constant out of range");
  if (!labels.empty() && labels.size() != n) throw DomainError("label count does not match n");
}

namespace {

class TableBackend final : public AlgebraBackend {
 public:
  TableBackend(FiniteTable t, std::string name) : t_(std::move(t)), name_(std::move(name)) {}

  BackendKind kind() const override { return BackendKind::finite_table; }
  std::string describe() const override { return name_; }
  Element zero() const override { return t_.zero; }
  Element one() const override { return t_.one; }
  Element oplus(const Element& x, const Element& y) const override { return t_.oplus[x.index()][y.index()]; }
  Element minus(const Element& x) const override { return t_.neg[x.index()]; }
  Element tilde(const Element& x) const override { return t_.tilde[x.index()]; }
  bool equal(const Element& x, const Element& y) const override { return x.index() == y.index(); }
  bool contains(const Element& x) const override { return x.is_index() && x.index() < t_.n; }
  std::string render(const Element& x) const override { return t_.label(x.index()); }
  std::size_t size() const override { return t_.n; }
  const FiniteTable* table() const override { return &t_; }

 private:
  FiniteTable t_;
  std::string name_;
};

std::size_t find_in(const PseudoMV& a, const std::vector<Element>& carrier, const Element& x) {
  for (std::size_t i = 0; i < carrier.size(); ++i) {
    if (a.equal(carrier[i], x)) return i;
  }
  return carrier.size();
}

}  // namespace

PseudoMV table_algebra(FiniteTable t, std::string name, bool validate) {
  t.check_shape();
  PseudoMV a(std::make_shared<TableBackend>(std::move(t), std::move(name)));
  if (validate) {
    auto report = check_axioms(a);
    for (const auto& l : report.laws) {
      if (!l.passed) throw AxiomFailure(a.describe() + ": " + l.name + " fails at " + l.counterexample.value_or("?"));
    }
  }
  return a;
}

PseudoMV tabulate(const PseudoMV& a, const std::vector<Element>& carrier, std::string name) {
  FiniteTable t;
  t.n = carrier.size();
  auto at = [&](const Element& x) {
    auto i = find_in(a, carrier, x);
    if (i == carrier.size()) throw DomainError(name + ": carrier not closed at " + a.render(x));
    return i;
  };
  t.oplus.assign(t.n, std::vector<std::size_t>(t.n));
  for (std::size_t i = 0; i < t.n; ++i) {
    for (std::size_t j = 0; j < t.n; ++j) t.oplus[i][j] = at(a.oplus(carrier[i], carrier[j]));
    t.neg.push_back(at(a.minus(carrier[i])));
    t.tilde.push_back(at(a.tilde(carrier[i])));
    t.labels.push_back(a.render(carrier[i]));
  }
  t.zero = at(a.zero());
  t.one = at(a.one());
  return table_algebra(std::move(t), std::move(name));
}

PseudoMV materialize(const PseudoMV& a, std::size_t budget, std::size_t max_size) {
  if (a.is_finite()) return a;
  std::vector<Element> carrier;
  auto add = [&](const Element& x) {
    if (find_in(a, carrier, x) == carrier.size()) {
      if (carrier.size() >= max_size) throw CeilingExceeded(a.describe() + ": closure exceeds " + std::to_string(max_size));
      carrier.push_back(x);
    }
  };
  add(a.zero());
  add(a.one());
  Rng rng(a.sampler().seed, 201);
  for (std::size_t i = 0; i < budget; ++i) add(a.sample(rng));
  for (std::size_t done = 0; done < carrier.size(); ++done) {
    // Close under the primitives; new elements are appended and revisited.
    Element x = carrier[done];
    add(a.minus(x));
    add(a.tilde(x));
    for (std::size_t j = 0; j <= done; ++j) {
      Element y = carrier[j];
      add(a.oplus(x, y));
      add(a.oplus(y, x));
    }
  }
  return tabulate(a, carrier, a.describe());
}

// ---------------------------------------------------------------------------
// Catalogue

CatalogueSpec CatalogueSpec::chain(unsigned n) {
  CatalogueSpec s;
  s.kind = Kind::chain;
  s.n = n;
  return s;
}

CatalogueSpec CatalogueSpec::boolean(unsigned k) {
  CatalogueSpec s;
  s.kind = Kind::boolean;
  s.n = k;
  return s;
}

CatalogueSpec CatalogueSpec::product(CatalogueSpec a, CatalogueSpec b) {
  CatalogueSpec s;
  s.kind = Kind::product;
  s.operands = {std::move(a), std::move(b)};
  return s;
}

CatalogueSpec CatalogueSpec::interval(CatalogueSpec a, std::string top) {
  CatalogueSpec s;
  s.kind = Kind::interval;
  s.operands = {std::move(a)};
  s.element = std::move(top);
  return s;
}

std::string CatalogueSpec::text() const {
  switch (kind) {
    case Kind::chain: return "chain(" + std::to_string(n) + ")";
    case Kind::boolean: return "boolean(" + std::to_string(n) + ")";
    case Kind::product: return "product(" + operands.at(0).text() + "," + operands.at(1).text() + ")";
    case Kind::interval: return "interval(" + operands.at(0).text() + "," + element + ")";
  }
  return "?";
}

namespace {

class SpecParser {
 public:
  explicit SpecParser(const std::string& s) {
    for (char c : s) {
      if (std::isspace(static_cast<unsigned char>(c)) == 0) text_ += c;
    }
  }

  CatalogueSpec parse() {
    auto s = spec();
    if (pos_ != text_.size()) fail("trailing text");
    return s;
  }

 private:
  CatalogueSpec spec() {
    std::string word;
    while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_])) != 0) word += text_[pos_++];
    expect('(');
    CatalogueSpec out;
    if (word == "chain" || word == "boolean") {
      unsigned v = number();
      out = word == "chain" ? CatalogueSpec::chain(v) : CatalogueSpec::boolean(v);
    } else if (word == "product") {
      auto a = spec();
      expect(',');
      auto b = spec();
      out = CatalogueSpec::product(std::move(a), std::move(b));
    } else if (word == "interval") {
      auto a = spec();
      expect(',');
      out = CatalogueSpec::interval(std::move(a), balanced());
    } else {
      fail("unknown catalogue kind '" + word + "'");
    }
    expect(')');
    return out;
  }

  unsigned number() {
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])) != 0) ++pos_;
    if (start == pos_ || pos_ - start > 6) fail("expected a small number");
    return static_cast<unsigned>(std::stoul(text_.substr(start, pos_ - start)));
  }

  // An element label: everything up to the closing parenthesis of the enclosing call.
  std::string balanced() {
    std::size_t start = pos_;
    int depth = 0;
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (c == '(') ++depth;
      if (c == ')') {
        if (depth == 0) break;
        --depth;
      }
      ++pos_;
    }
    if (start == pos_) fail("expected an element label");
    return text_.substr(start, pos_ - start);
  }

  void expect(char c) {
    if (pos_ >= text_.size() || text_[pos_] != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("catalogue spec: " + what + " at offset " + std::to_string(pos_) + " in '" + text_ + "'");
  }

  std::string text_;
  std::size_t pos_ = 0;
};

FiniteTable chain_table(unsigned n) {
  FiniteTable t;
  t.n = n + 1;
  t.oplus.assign(t.n, std::vector<std::size_t>(t.n));
  for (std::size_t i = 0; i < t.n; ++i) {
    for (std::size_t j = 0; j < t.n; ++j) t.oplus[i][j] = std::min<std::size_t>(i + j, n);
    t.neg.push_back(n - i);
    t.tilde.push_back(n - i);
    t.labels.push_back(std::to_string(i));
  }
  t.zero = 0;
  t.one = n;
  return t;
}

FiniteTable boolean_table(unsigned k) {
  if (k > 10) throw CeilingExceeded("boolean(k) limited to k <= 10");
  FiniteTable t;
  t.n = std::size_t{1} << k;
  const std::size_t full = t.n - 1;
  t.oplus.assign(t.n, std::vector<std::size_t>(t.n));
  for (std::size_t i = 0; i < t.n; ++i) {
    for (std::size_t j = 0; j < t.n; ++j) t.oplus[i][j] = i | j;
    t.neg.push_back(full & ~i);
    t.tilde.push_back(full & ~i);
    std::string label;
    for (unsigned b = k; b-- > 0;) label += (label.empty() ? "" : ",") + std::to_string((i >> b) & 1U);
    t.labels.push_back(k == 1 ? label : "(" + label + ")");
  }
  t.zero = 0;
  t.one = full;
  return t;
}

FiniteTable product_table(const FiniteTable& a, const FiniteTable& b) {
  FiniteTable t;
  t.n = a.n * b.n;
  t.oplus.assign(t.n, std::vector<std::size_t>(t.n));
  auto idx = [&](std::size_t i, std::size_t j) { return i * b.n + j; };
  for (std::size_t i = 0; i < a.n; ++i) {
    for (std::size_t j = 0; j < b.n; ++j) {
      for (std::size_t k = 0; k < a.n; ++k) {
        for (std::size_t l = 0; l < b.n; ++l) t.oplus[idx(i, j)][idx(k, l)] = idx(a.oplus[i][k], b.oplus[j][l]);
      }
      t.neg.push_back(idx(a.neg[i], b.neg[j]));
      t.tilde.push_back(idx(a.tilde[i], b.tilde[j]));
      t.labels.push_back("(" + a.label(i) + "," + b.label(j) + ")");
    }
  }
  t.zero = idx(a.zero, b.zero);
  t.one = idx(a.one, b.one);
  return t;
}

}  // namespace

CatalogueSpec CatalogueSpec::parse(const std::string& text) { return SpecParser(text).parse(); }

PseudoMV build_catalogue(const CatalogueSpec& spec) {
  switch (spec.kind) {
    case CatalogueSpec::Kind::chain:
      if (spec.n > 64) throw CeilingExceeded("chain(n) limited to n <= 64");
      return table_algebra(chain_table(spec.n), spec.text());
    case CatalogueSpec::Kind::boolean: return table_algebra(boolean_table(spec.n), spec.text());
    case CatalogueSpec::Kind::product: {
      if (spec.operands.size() != 2) throw DomainError("product needs two operands");
      auto a = build_catalogue(spec.operands[0]);
      auto b = build_catalogue(spec.operands[1]);
      if (a.size() * b.size() > 4096) throw CeilingExceeded("product larger than 4096 elements");
      return table_algebra(product_table(*a.table(), *b.table()), spec.text());
    }
    case CatalogueSpec::Kind::interval: {
      if (spec.operands.size() != 1) throw DomainError("interval needs one operand");
      auto a = build_catalogue(spec.operands[0]);
      const auto& labels = a.table()->labels;
      auto it = std::find(labels.begin(), labels.end(), spec.element);
      if (it == labels.end()) throw DomainError(spec.text() + ": no element labelled " + spec.element);
      auto sub = boolean_interval(a, static_cast<std::size_t>(it - labels.begin())).algebra;
      // already validated by boolean_interval
      return table_algebra(*sub.table(), spec.text(), false);
    }
  }
  throw DomainError("unknown catalogue kind");
}

IntervalAlgebra boolean_interval(const PseudoMV& a, const Element& top) {
  if (!a.contains(top)) throw DomainError(a.describe() + ": interval top is not an element");
  if (!is_idempotent(a, top)) throw DomainError(a.describe() + ": interval top " + a.render(top) + " is not Boolean");
  const std::string name = "[0," + a.render(top) + "] of " + a.describe();
  if (a.is_finite()) {
    std::vector<Element> carrier;
    std::vector<std::size_t> position(a.size(), a.size());
    for (const auto& x : a.elements()) {
      if (leq(a, x, top)) {
        position[x.index()] = carrier.size();
        carrier.push_back(x);
      }
    }
    FiniteTable t;
    t.n = carrier.size();
    t.oplus.assign(t.n, std::vector<std::size_t>(t.n));
    for (std::size_t i = 0; i < t.n; ++i) {
      for (std::size_t j = 0; j < t.n; ++j) t.oplus[i][j] = position[a.oplus(carrier[i], carrier[j]).index()];
      t.neg.push_back(position[meet(a, a.minus(carrier[i]), top).index()]);
      t.tilde.push_back(position[meet(a, a.tilde(carrier[i]), top).index()]);
      t.labels.push_back(a.render(carrier[i]));
    }
    t.zero = position[a.zero().index()];
    t.one = position[top.index()];
    auto sub = table_algebra(std::move(t), name);
    return IntervalAlgebra{
        sub,
        [a, top, position](const Element& x) { return Element(position[meet(a, x, top).index()]); },
        [carrier](const Element& x) { return carrier.at(x.index()); },
    };
  }
  AlgebraOps ops;
  ops.name = name;
  ops.zero = a.zero();
  ops.one = top;
  ops.oplus = [a](const Element& x, const Element& y) { return a.oplus(x, y); };
  ops.minus = [a, top](const Element& x) { return meet(a, a.minus(x), top); };
  ops.tilde = [a, top](const Element& x) { return meet(a, a.tilde(x), top); };
  ops.equal = [a](const Element& x, const Element& y) { return a.equal(x, y); };
  ops.contains = [a, top](const Element& x) { return a.contains(x) && leq(a, x, top); };
  ops.sample = [a, top](Rng& rng, const SamplerConfig&) { return meet(a, a.sample(rng), top); };
  ops.render = [a](const Element& x) { return a.render(x); };
  ops.tolerance = a.tolerance();
  return IntervalAlgebra{
      make_algebra(std::move(ops), a.sampler()),
      [a, top](const Element& x) { return meet(a, x, top); },
      [](const Element& x) { return x; },
  };
}

// ---------------------------------------------------------------------------
// Square roots by exhaustion

WeakRootSearch brute_force_weak_sqrt(const PseudoMV& a) {
  WeakRootSearch out;
  std::vector<std::size_t> r;
  const auto all = a.elements();
  for (const auto& x : all) {
    std::vector<Element> s;
    for (const auto& z : all) {
      if (leq(a, odot(a, z, z), x)) s.push_back(z);
    }
    // S(x) is never empty (0 is in it); look for a greatest element, not just a maximal one.
    std::optional<Element> top;
    for (const auto& m : s) {
      if (std::all_of(s.begin(), s.end(), [&](const Element& z) { return leq(a, z, m); })) {
        top = m;
        break;
      }
    }
    if (!top) {
      out.failure = WeakRootSearch::Failure::no_maximum;
      out.failing_x = x.index();
      return out;
    }
    if (!a.equal(odot(a, *top, *top), x)) {
      out.failure = WeakRootSearch::Failure::square_mismatch;
      out.failing_x = x.index();
      return out;
    }
    r.push_back(top->index());
  }
  out.map = std::move(r);
  return out;
}

Sq3Check check_sq3(const PseudoMV& a, const std::function<Element(const Element&)>& r) {
  Sq3Check out;
  const Element r0 = r(a.zero());
  for (const auto& x : a.elements()) {
    const Element rx = r(x);
    bool ok = a.equal(r(a.minus(x)), arrow(a, rx, r0)) && a.equal(r(a.tilde(x)), squiggle(a, rx, r0));
    if (!ok) {
      out.holds = false;
      out.violations.push_back(x.index());
    }
  }
  return out;
}

bool is_boolean_algebra(const PseudoMV& a) {
  for (const auto& x : probe_elements(a, a.sampler().sample_count, 210)) {
    if (!is_idempotent(a, x)) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Catalogue search

std::vector<std::pair<CatalogueSpec, PseudoMV>> catalogue_closure(std::size_t max_size) {
  if (max_size > 12) throw CeilingExceeded("catalogue closure is limited to 12 elements");
  std::vector<std::pair<CatalogueSpec, PseudoMV>> found;
  auto consider = [&](const CatalogueSpec& spec) {
    auto a = build_catalogue(spec);
    if (a.size() > max_size) return false;
    for (const auto& [s, b] : found) {
      if (find_isomorphism(a, b)) return false;
    }
    found.emplace_back(spec, a);
    return true;
  };
  if (max_size >= 1) consider(CatalogueSpec::chain(0));
  for (unsigned n = 1; n + 1 <= max_size; ++n) consider(CatalogueSpec::chain(n));
  for (unsigned k = 1; (std::size_t{1} << k) <= max_size; ++k) consider(CatalogueSpec::boolean(k));
  // Close under binary products of non-trivial members and Boolean intervals.
  for (bool grew = true; grew;) {
    grew = false;
    const auto snapshot = found;
    for (const auto& [sa, a] : snapshot) {
      for (const auto& [sb, b] : snapshot) {
        if (a.size() < 2 || b.size() < 2 || a.size() * b.size() > max_size) continue;
        grew = consider(CatalogueSpec::product(sa, sb)) || grew;
      }
      for (const auto& x : boolean_skeleton(a)) {
        if (a.equal(x, a.zero())) continue;
        grew = consider(CatalogueSpec::interval(sa, a.render(x))) || grew;
      }
    }
  }
  return found;
}

std::vector<SearchRow> search_square_rootable(std::size_t max_size, std::size_t ceiling) {
  if (max_size > ceiling) {
    throw CeilingExceeded("search size " + std::to_string(max_size) + " exceeds ceiling " + std::to_string(ceiling));
  }
  std::vector<SearchRow> rows;
  for (const auto& [spec, a] : catalogue_closure(max_size)) {
    SearchRow row;
    row.spec = spec.text();
    row.size = a.size();
    auto w = brute_force_weak_sqrt(a);
    row.weak_root_exists = w.map.has_value();
    row.failure = w.failure;
    if (w.failing_x) row.failing_x = a.render(*w.failing_x);
    row.is_boolean = is_boolean_algebra(a);
    rows.push_back(std::move(row));
  }
  return rows;
}

// ---------------------------------------------------------------------------
// Isomorphism

namespace {

struct Profile {
  bool idempotent;
  std::size_t below;
  std::size_t above;
  bool symmetric;
  auto operator<=>(const Profile&) const = default;
};

std::vector<Profile> profiles(const PseudoMV& a) {
  const auto all = a.elements();
  std::vector<Profile> out;
  for (const auto& x : all) {
    Profile p{is_idempotent(a, x), 0, 0, a.equal(a.minus(x), a.tilde(x))};
    for (const auto& y : all) {
      if (leq(a, y, x)) ++p.below;
      if (leq(a, x, y)) ++p.above;
    }
    out.push_back(p);
  }
  return out;
}

}  // namespace

std::optional<std::vector<std::size_t>> find_isomorphism(const PseudoMV& a, const PseudoMV& b) {
  if (!a.is_finite() || !b.is_finite()) throw Unsupported("isomorphism search needs finite algebras");
  if (a.size() > 12 || b.size() > 12) throw CeilingExceeded("isomorphism search limited to 12 elements");
  if (a.size() != b.size()) return std::nullopt;
  const std::size_t n = a.size();
  const auto& ta = *a.table();
  const auto& tb = *b.table();
  const auto pa = profiles(a);
  const auto pb = profiles(b);
  {
    auto sa = pa;
    auto sb = pb;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return std::nullopt;
  }
  constexpr std::size_t unset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> f(n, unset);
  std::vector<bool> used(n, false);

  auto consistent = [&](std::size_t x) {
    auto check = [&](std::size_t from, std::size_t to) { return f[from] == unset || f[from] == to; };
    if (!check(ta.neg[x], tb.neg[f[x]]) || !check(ta.tilde[x], tb.tilde[f[x]])) return false;
    for (std::size_t y = 0; y < n; ++y) {
      if (f[y] == unset) continue;
      if (!check(ta.oplus[x][y], tb.oplus[f[x]][f[y]]) || !check(ta.oplus[y][x], tb.oplus[f[y]][f[x]])) return false;
    }
    // Images already fixed must agree with the constraints they impose on x.
    for (std::size_t y = 0; y < n; ++y) {
      if (f[y] == unset) continue;
      if (ta.neg[y] == x && tb.neg[f[y]] != f[x]) return false;
      if (ta.tilde[y] == x && tb.tilde[f[y]] != f[x]) return false;
    }
    return true;
  };

  f[ta.zero] = tb.zero;
  used[tb.zero] = true;
  if (ta.one != ta.zero) {
    if (used[tb.one]) return std::nullopt;
    f[ta.one] = tb.one;
    used[tb.one] = true;
  }
  // Fixed constants are skipped by the recursion.
  std::function<bool(std::size_t)> walk = [&](std::size_t x) -> bool {
    if (x == n) return true;
    if (f[x] != unset) return consistent(x) && walk(x + 1);
    for (std::size_t y = 0; y < n; ++y) {
      if (used[y] || pa[x] != pb[y]) continue;
      f[x] = y;
      used[y] = true;
      if (consistent(x) && walk(x + 1)) return true;
      used[y] = false;
      f[x] = unset;
    }
    return false;
  };
  if (!walk(0)) return std::nullopt;
  // Final full check.
  for (std::size_t x = 0; x < n; ++x) {
    if (f[ta.neg[x]] != tb.neg[f[x]] || f[ta.tilde[x]] != tb.tilde[f[x]]) return std::nullopt;
    for (std::size_t y = 0; y < n; ++y) {
      if (f[ta.oplus[x][y]] != tb.oplus[f[x]][f[y]]) return std::nullopt;
    }
  }
  return f;
}

}  // namespace pmv
