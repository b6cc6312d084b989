#include "pmv/report.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>

#include "pmv/counterexamples.hpp"
#include "pmv/gamma.hpp"
#include "pmv/ideals.hpp"

namespace pmv {

using nlohmann::json;

SamplerConfig RunOptions::sampler() const {
  SamplerConfig cfg;
  cfg.seed = seed;
  cfg.sample_count = samples;
  return cfg;
}

// ---------------------------------------------------------------------------
// DSL

namespace {

class Lexer {
 public:
  explicit Lexer(std::string_view s) : s_(s) {}

  void skip() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_])) != 0) ++i_;
  }
  bool done() {
    skip();
    return i_ == s_.size();
  }
  bool accept(char c) {
    skip();
    if (i_ < s_.size() && s_[i_] == c) {
      ++i_;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }
  std::string word() {
    skip();
    std::size_t start = i_;
    while (i_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[i_])) != 0 || s_[i_] == '_')) ++i_;
    if (start == i_) fail("expected a name");
    return std::string(s_.substr(start, i_ - start));
  }
  std::string number() {
    skip();
    std::size_t start = i_;
    while (i_ < s_.size() && std::string_view("+-0123456789./eE").find(s_[i_]) != std::string_view::npos) ++i_;
    if (start == i_) fail("expected a number");
    return std::string(s_.substr(start, i_ - start));
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what + " at offset " + std::to_string(i_) + " in '" + std::string(s_) + "'");
  }

 private:
  std::string_view s_;
  std::size_t i_ = 0;
};

GroupPtr group_term(Lexer& lx, double tol) {
  const std::string w = lx.word();
  if (w == "Z") return integers();
  if (w == "Q") return rationals();
  if (w == "D") return dyadics();
  if (w == "heis") return heisenberg();
  if (w == "semi_numeric") return semidirect_numeric(tol);
  if (w == "semi_exp") return exp_action(tol);
  if (w == "H") {
    lx.expect('(');
    std::string p = lx.number();
    lx.expect(')');
    std::int64_t v = 0;
    auto [ptr, ec] = std::from_chars(p.data(), p.data() + p.size(), v);
    if (ec != std::errc() || ptr != p.data() + p.size()) lx.fail("bad H(p) parameter");
    try {
      return hp(v);
    } catch (const DomainError& e) {
      throw ParseError(e.what());
    }
  }
  if (w == "lex" || w == "prod") {
    lx.expect('(');
    GroupPtr a = group_term(lx, tol);
    lx.expect(',');
    GroupPtr b = group_term(lx, tol);
    lx.expect(')');
    try {
      return w == "lex" ? lex(a, b) : direct_product(a, b);
    } catch (const DomainError& e) {
      throw ParseError(e.what());
    }
  }
  lx.fail("unknown group constructor '" + w + "'");
}

void literal_term(Lexer& lx, std::vector<std::string>& out) {
  if (lx.accept('(')) {
    do literal_term(lx, out);
    while (lx.accept(','));
    lx.expect(')');
    return;
  }
  out.push_back(lx.number());
}

double parse_double(const std::string& s) {
  if (s.find('/') != std::string::npos) return to_double(parse_rational(s));
  double v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) throw ParseError("bad number: " + s);
  return v;
}

std::string strip_comments(std::string_view text) {
  std::string out;
  std::istringstream in{std::string(text)};
  for (std::string line; std::getline(in, line);) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    out += line + "\n";
  }
  return out;
}

std::string trim(std::string s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())) != 0) s.pop_back();
  std::size_t i = 0;
  while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i])) != 0) ++i;
  return s.substr(i);
}

CatalogueSpec catalogue_from_json(const json& j) {
  if (j.contains("spec")) return CatalogueSpec::parse(j.at("spec").get<std::string>());
  const auto kind = j.at("kind").get<std::string>();
  const json params = j.value("params", json::object());
  if (kind == "chain") return CatalogueSpec::chain(params.at("n").get<unsigned>());
  if (kind == "boolean") return CatalogueSpec::boolean(params.at("n").get<unsigned>());
  if (kind == "product") {
    return CatalogueSpec::product(catalogue_from_json(params.at("left")), catalogue_from_json(params.at("right")));
  }
  if (kind == "interval") {
    return CatalogueSpec::interval(catalogue_from_json(params.at("of")), params.at("top").get<std::string>());
  }
  throw ParseError("unknown catalogue kind '" + kind + "'");
}

AlgebraInput gamma_input(const std::string& group, const std::string& unit, const RunOptions& opts) {
  GroupPtr g = parse_group(group, opts.tolerance);
  GroupElement u = parse_element(*g, unit);
  try {
    return {gamma(UnitalLGroup(g, u), opts.sampler()), "gamma"};
  } catch (const DomainError& e) {
    throw ParseError(e.what());
  }
}

}  // namespace

GroupPtr parse_group(std::string_view text, double tolerance) {
  Lexer lx(text);
  GroupPtr g = group_term(lx, tolerance);
  if (!lx.done()) lx.fail("trailing input");
  return g;
}

GroupElement parse_element(const LGroup& g, std::string_view text) {
  Lexer lx(text);
  std::vector<std::string> parts;
  literal_term(lx, parts);
  if (!lx.done()) lx.fail("trailing input");
  if (parts.size() != g.arity()) {
    throw ParseError("element " + std::string(text) + " has " + std::to_string(parts.size()) + " coordinates, " +
                     g.name() + " needs " + std::to_string(g.arity()));
  }
  GroupElement out;
  if (g.mode() == ArithmeticMode::exact) {
    GroupElement::Exact v;
    for (const auto& p : parts) v.push_back(parse_rational(p));
    out = GroupElement(std::move(v));
  } else {
    GroupElement::Approx v;
    for (const auto& p : parts) v.push_back(parse_double(p));
    out = GroupElement(std::move(v));
  }
  if (!g.contains(out)) throw ParseError("element " + std::string(text) + " is not in " + g.name());
  return out;
}

AlgebraInput parse_algebra_json(const json& j, const RunOptions& opts) {
  try {
    if (!j.is_object() || j.size() != 1) throw ParseError("expected exactly one of finite, gamma, catalogue");
    if (j.contains("finite")) {
      const json& f = j.at("finite");
      FiniteTable t;
      t.n = f.at("n").get<std::size_t>();
      t.oplus = f.at("oplus").get<std::vector<std::vector<std::size_t>>>();
      t.neg = f.at("neg").get<std::vector<std::size_t>>();
      t.tilde = f.at("tilde").get<std::vector<std::size_t>>();
      t.zero = f.at("zero").get<std::size_t>();
      t.one = f.at("one").get<std::size_t>();
      if (f.contains("labels")) t.labels = f.at("labels").get<std::vector<std::string>>();
      std::string name = f.value("name", "finite(" + std::to_string(t.n) + ")");
      try {
        t.check_shape();
      } catch (const DomainError& e) {
        throw ParseError(e.what());
      }
      return {table_algebra(std::move(t), name, false), "finite"};
    }
    if (j.contains("gamma")) {
      const json& g = j.at("gamma");
      return gamma_input(g.at("group").get<std::string>(), g.at("unit").get<std::string>(), opts);
    }
    if (j.contains("catalogue")) {
      try {
        return {build_catalogue(catalogue_from_json(j.at("catalogue"))), "catalogue"};
      } catch (const DomainError& e) {
        throw ParseError(e.what());
      }
    }
    throw ParseError("expected one of finite, gamma, catalogue");
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed algebra JSON: ") + e.what());
  }
}

AlgebraInput parse_algebra_text(std::string_view text, const RunOptions& opts) {
  std::string body = trim(strip_comments(text));
  if (body.empty()) throw ParseError("empty algebra description");
  for (const char* head : {"chain(", "boolean(", "product(", "interval("}) {
    if (body.rfind(head, 0) == 0) {
      try {
        return {build_catalogue(CatalogueSpec::parse(body)), "catalogue"};
      } catch (const DomainError& e) {
        throw ParseError(e.what());
      }
    }
  }
  auto at = body.find("unit=");
  if (at == std::string::npos) throw ParseError("expected '<group> unit=<element>' or a catalogue term");
  return gamma_input(trim(body.substr(0, at)), trim(body.substr(at + 5)), opts);
}

AlgebraInput load_algebra(const std::string& path, const RunOptions& opts) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  const std::string text = buf.str();
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') {
    json j;
    try {
      j = json::parse(text);
    } catch (const json::parse_error& e) {
      throw ParseError(path + ": " + e.what());
    }
    return parse_algebra_json(j, opts);
  }
  return parse_algebra_text(text, opts);
}

json finite_to_json(const PseudoMV& a) {
  const FiniteTable* t = a.table();
  if (t == nullptr) throw Unsupported("finite_to_json: finite algebras only");
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < t->n; ++i) labels.push_back(t->label(i));
  return json{{"finite",
               {{"n", t->n},
                {"name", a.describe()},
                {"oplus", t->oplus},
                {"neg", t->neg},
                {"tilde", t->tilde},
                {"zero", t->zero},
                {"one", t->one},
                {"labels", labels}}}};
}

// ---------------------------------------------------------------------------
// Serialization

namespace {

// 12 significant digits, so reports do not depend on the last bits of a float.
double rounded(double v) { return std::stod(render_double(v)); }

json doubles(const std::vector<double>& v) {
  json out = json::array();
  for (double x : v) out.push_back(rounded(x));
  return out;
}

json to_json(const NumericWitness& w) {
  return json{{"label", w.label},     {"input", doubles(w.input)}, {"lhs", doubles(w.lhs)},
              {"rhs", doubles(w.rhs)}, {"gap", rounded(w.gap)},     {"tolerance", w.tolerance}};
}

json witnesses(const std::vector<NumericWitness>& ws) {
  json out = json::array();
  for (const auto& w : ws) out.push_back(to_json(w));
  return out;
}

json symmetry_json(const PseudoMV& a, const SymmetryVerdict& s) {
  json out{{"symmetric", s.symmetric}, {"witness", nullptr}};
  if (s.witness) out["witness"] = a.render(*s.witness);
  return out;
}

json properties_json(const PseudoMV& a, const SqrtMap& r, std::optional<std::size_t> budget) {
  json out = json::object();
  for (const auto& item : square_root_properties(a, r, budget)) {
    json v = to_json(item.verdict);
    v["needs_sq3"] = item.needs_sq3;
    out[item.name] = v;
  }
  return out;
}

json ideal_json(const IdealHandle& h) {
  json members = json::array();
  for (auto i : h.members) members.push_back(h.algebra.render(i));
  return json{{"members", members},
              {"normal", h.normal},
              {"prime", h.prime},
              {"boolean_ideal", h.boolean_ideal},
              {"proper", h.proper}};
}

std::string failure_name(WeakRootSearch::Failure f) {
  switch (f) {
    case WeakRootSearch::Failure::none: return "none";
    case WeakRootSearch::Failure::no_maximum: return "no_maximum";
    case WeakRootSearch::Failure::square_mismatch: return "square_mismatch";
  }
  return "?";
}

std::optional<std::size_t> budget_for(const PseudoMV& a, const RunOptions& opts) {
  if (a.is_finite()) return std::nullopt;
  return opts.samples;
}

// The first closed form that is a weak root; nullopt when neither applies.
std::optional<SqrtMap> detect_closed_form(const PseudoMV& a, const RunOptions& opts) {
  for (const auto& v : {ClosedFormVariant::sym(), ClosedFormVariant::weak()}) {
    try {
      SqrtMap m = closed_form(a, v);
      if (verify(a, m, opts.samples).weak_root()) return m;
    } catch (const Error&) {
    }
  }
  return std::nullopt;
}

json decomposition_json(const PseudoMV& a, const SqrtMap& r, const RunOptions& opts) {
  Decomposition d = decompose(a, r, budget_for(a, opts));
  json out{{"classification", classification_name(d.classification)},
           {"u", a.render(d.u)},
           {"split", d.split()},
           {"boolean_part_ok", d.boolean_part_ok},
           {"strict_part_ok", d.strict_part_ok},
           {"homomorphism", to_json(d.homomorphism)},
           {"boolean_part", nullptr},
           {"strict_part", nullptr}};
  if (d.split()) {
    auto part = [](const IntervalAlgebra& p) {
      json j{{"description", p.algebra.describe()}, {"size", nullptr}};
      if (p.algebra.is_finite()) j["size"] = p.algebra.size();
      return j;
    };
    out["boolean_part"] = part(*d.boolean_part);
    out["strict_part"] = part(*d.strict_part);
  }
  return out;
}

json ideals_json(const PseudoMV& a, const std::optional<SqrtMap>& root) {
  if (!a.is_finite() || a.size() > 12) return nullptr;
  json list = json::array();
  std::size_t normal = 0;
  std::size_t prime = 0;
  std::size_t boolean = 0;
  for (const auto& h : enumerate_ideals(a)) {
    json j = ideal_json(h);
    normal += h.normal ? 1 : 0;
    prime += h.prime ? 1 : 0;
    boolean += h.boolean_ideal ? 1 : 0;
    if (root) {
      auto v = is_r_invariant(h, *root);
      j["r_invariant"] = v.invariant;
    }
    list.push_back(j);
  }
  return json{{"count", list.size()}, {"normal", normal}, {"prime", prime}, {"boolean", boolean}, {"list", list}};
}

json atomless_json(const PseudoMV& a, const std::optional<SqrtMap>& root, const RunOptions& opts) {
  json out = json::object();
  std::size_t found = 0;
  std::size_t tried = 0;
  std::string status = "found";
  std::vector<Element> xs = a.is_finite() ? a.elements() : probe_elements(a, opts.samples, 701);
  json missing = json::array();
  for (const auto& x : xs) {
    if (a.equal(x, a.zero())) continue;
    ++tried;
    auto w = strongly_atomless_witness(a, x, 64, root);
    if (w.status == AtomlessWitness::Status::inapplicable) {
      status = "inapplicable";
      break;
    }
    if (w.status == AtomlessWitness::Status::found) {
      ++found;
    } else if (missing.size() < 16) {
      missing.push_back(a.render(x));
    }
  }
  out["criterion"] = status;
  out["checked"] = tried;
  out["witnessed"] = found;
  out["without_witness"] = missing;
  out["exhaustive"] = a.is_finite();
  if (a.is_finite()) {
    json at = json::array();
    for (const auto& x : atoms(a)) at.push_back(a.render(x));
    out["atoms"] = at;
  } else {
    out["atoms"] = nullptr;
  }
  return out;
}

}  // namespace

json to_json(const Verdict& v) {
  return json{{"status", v.skipped ? "skipped" : (v.holds ? "pass" : "fail")},
              {"checked", v.checked},
              {"witnesses", v.witnesses}};
}

json to_json(const PseudoMV& a, const SqrtReport& r) {
  json out{{"sq1", to_json(r.sq1)},
           {"sq2", to_json(r.sq2)},
           {"sq3", to_json(r.sq3)},
           {"sq4", to_json(r.sq4)},
           {"sq3_cross", to_json(r.sq3_cross)},
           {"weak_root", r.weak_root()},
           {"square_root", r.square_root()},
           {"strict", r.strict},
           {"r0", a.render(r.r0)},
           {"boolean_witness", nullptr},
           {"classification", classification_name(r.classification)}};
  if (r.boolean_witness_u) out["boolean_witness"] = a.render(*r.boolean_witness_u);
  return out;
}

json to_json(const AxiomReport& r) {
  json laws = json::object();
  for (const auto& l : r.laws) {
    laws[l.name] = json{{"passed", l.passed}, {"checked", l.checked}, {"counterexample", nullptr}};
    if (l.counterexample) laws[l.name]["counterexample"] = *l.counterexample;
  }
  return json{{"exhaustive", r.exhaustive}, {"all_passed", r.all_passed()}, {"laws", laws}};
}

AxiomReport require_axioms(const PseudoMV& a, const RunOptions& opts) {
  AxiomReport r = check_axioms(a, budget_for(a, opts));
  for (const auto& l : r.laws) {
    if (!l.passed) throw AxiomFailure(a.describe() + ": " + l.name + " fails at " + l.counterexample.value_or("?"));
  }
  return r;
}

json analyze_report(const AlgebraInput& in, const RunOptions& opts) {
  const PseudoMV& a = in.algebra;
  const auto budget = budget_for(a, opts);
  AxiomReport axioms = require_axioms(a, opts);

  json algebra{{"description", a.describe()},
               {"source", in.source},
               {"backend", a.is_finite() ? "finite" : "gamma"},
               {"size", nullptr},
               {"exact", a.exact()},
               {"symmetry", symmetry_json(a, is_symmetric(a, budget))},
               {"representable", is_representable(a).representable},
               {"axioms", to_json(axioms)}};
  if (a.is_finite()) algebra["size"] = a.size();

  std::optional<SqrtMap> root;
  json sqrt{{"weak_sqrt", "none"}, {"map", nullptr}, {"report", nullptr}, {"search", nullptr}};
  if (a.is_finite()) {
    auto w = brute_force_weak_sqrt(a);
    json search{{"failure", failure_name(w.failure)}, {"failing_x", nullptr}};
    if (w.failing_x) search["failing_x"] = a.render(*w.failing_x);
    sqrt["search"] = search;
    if (w.map) {
      root = SqrtMap::table(*w.map);
      json table = json::object();
      for (std::size_t i = 0; i < a.size(); ++i) table[a.render(i)] = a.render((*w.map)[i]);
      sqrt["table"] = table;
    }
  } else {
    root = detect_closed_form(a, opts);
  }

  json decomposition = nullptr;
  json properties = nullptr;
  if (root) {
    SqrtReport rep = verify(a, *root, budget);
    sqrt["weak_sqrt"] = kind_name(root->kind());
    sqrt["map"] = root->describe();
    sqrt["report"] = to_json(a, rep);
    properties = properties_json(a, *root, budget);
    if (rep.square_root()) decomposition = decomposition_json(a, *root, opts);
  }
  const bool usable_root = root && verify(a, *root, budget).square_root();

  return json{{"tool", {{"name", "pmv"}, {"version", kToolVersion}}},
              {"seed", opts.seed},
              {"samples", opts.samples},
              {"tolerance", opts.tolerance},
              {"algebra", algebra},
              {"sqrt", sqrt},
              {"properties", properties},
              {"decomposition", decomposition},
              {"ideals", ideals_json(a, usable_root ? root : std::nullopt)},
              {"atomless", atomless_json(a, usable_root ? root : std::nullopt, opts)}};
}

json search_report(std::size_t max_size, bool* consistent) {
  json rows = json::array();
  bool ok = true;
  for (const auto& row : search_square_rootable(max_size)) {
    ok = ok && row.consistent();
    json j{{"spec", row.spec},
           {"size", row.size},
           {"weak_root_exists", row.weak_root_exists},
           {"is_boolean", row.is_boolean},
           {"consistent", row.consistent()},
           {"failure", failure_name(row.failure)},
           {"failing_x", nullptr}};
    if (row.failing_x) j["failing_x"] = *row.failing_x;
    rows.push_back(j);
  }
  if (consistent != nullptr) *consistent = ok;
  return json{{"tool", {{"name", "pmv"}, {"version", kToolVersion}}},
              {"max_size", max_size},
              {"consistent", ok},
              {"rows", rows}};
}

json counterexamples_report(const RunOptions& opts) {
  const SamplerConfig cfg = opts.sampler();
  auto semi = semidirect_scaling_algebra(opts.tolerance, cfg);
  auto sv = semidirect_scaling_verdicts(opts.samples, opts.tolerance, cfg);
  json semidirect{{"algebra", semi.algebra.describe()},
                  {"map", semi.root.describe()},
                  {"report", to_json(semi.algebra, sv.report)},
                  {"symmetry", symmetry_json(semi.algebra, sv.symmetry)},
                  {"variety",
                   {{"squares", to_json(sv.variety.squares)},
                    {"maximality", to_json(sv.variety.maximality)},
                    {"negations", to_json(sv.variety.negations)}}},
                  {"sq3_witnesses", witnesses(sv.sq3)},
                  {"sq4_witnesses", witnesses(sv.sq4)},
                  {"agrees_with_weak_form", to_json(sv.agrees_with_weak_form)},
                  {"agrees_with_right_half", to_json(sv.agrees_with_right_half)},
                  {"agrees_with_left_half", to_json(sv.agrees_with_left_half)},
                  {"properties", properties_json(semi.algebra, semi.root, opts.samples)}};

  auto ex = exponential_action_algebra(opts.tolerance, cfg);
  auto ev = exponential_action_verdicts(opts.samples, opts.tolerance, cfg);
  json exponential{{"algebra", ex.algebra.describe()},
                   {"map", ex.root.describe()},
                   {"report", to_json(ex.algebra, ev.report)},
                   {"symmetry", symmetry_json(ex.algebra, ev.symmetry)},
                   {"agrees_with_weak_form", to_json(ev.agrees_with_weak_form)},
                   {"psi_homomorphism", to_json(ev.psi_homomorphism)},
                   {"psi_conjugates_roots", to_json(ev.psi_conjugates_roots)}};

  return json{{"tool", {{"name", "pmv"}, {"version", kToolVersion}}},
              {"seed", opts.seed},
              {"samples", opts.samples},
              {"tolerance", opts.tolerance},
              {"semidirect_scaling", semidirect},
              {"exponential_action", exponential}};
}

json ladder_report(const AlgebraInput& in, unsigned depth, const RunOptions& opts) {
  const PseudoMV& a = in.algebra;
  require_axioms(a, opts);
  auto root = detect_closed_form(a, opts);
  if (!root) throw DomainError(a.describe() + ": no closed-form square root");
  json rungs = json::array();
  for (const auto& r : dyadic_ladder(a, *root, depth)) {
    rungs.push_back(json{{"k", r.k}, {"value", a.render(r.value)}, {"cyclic", r.cyclic}});
  }
  return json{{"tool", {{"name", "pmv"}, {"version", kToolVersion}}},
              {"algebra", a.describe()},
              {"map", root->describe()},
              {"depth", depth},
              {"rungs", rungs}};
}

json quotient_report(const AlgebraInput& in, const std::vector<std::string>& ideal, const RunOptions& opts) {
  const PseudoMV& a = in.algebra;
  if (!a.is_finite()) throw Unsupported("quotient: finite algebras only");
  require_axioms(a, opts);
  std::vector<std::size_t> members;
  for (const auto& label : ideal) {
    std::size_t i = 0;
    while (i < a.size() && a.render(i) != label) ++i;
    if (i == a.size()) throw ParseError("no element labelled '" + label + "' in " + a.describe());
    members.push_back(i);
  }
  IdealHandle h = classify_ideal(a, members);
  std::optional<SqrtMap> root;
  if (auto w = brute_force_weak_sqrt(a); w.map) {
    SqrtMap m = SqrtMap::table(*w.map);
    if (verify(a, m).square_root()) root = m;
  }
  json out{{"tool", {{"name", "pmv"}, {"version", kToolVersion}}},
           {"algebra", a.describe()},
           {"ideal", ideal_json(h)},
           {"quotient", nullptr},
           {"root", nullptr}};
  if (!h.normal) return out;
  QuotientResult q = quotient(a, h, root);
  json qj = finite_to_json(q.algebra);
  qj["axioms"] = to_json(check_axioms(q.algebra));
  json classes = json::object();
  for (std::size_t i = 0; i < a.size(); ++i) classes[a.render(i)] = q.algebra.render(q.class_of[i]);
  qj["class_of"] = classes;
  out["quotient"] = qj;
  if (root) {
    auto v = is_r_invariant(h, *root);
    out["root"] = json{{"map", root->describe()},
                       {"quotient_report", to_json(q.algebra, *q.report)},
                       {"compatible", to_json(q.compatible)},
                       {"r_invariant", v.invariant},
                       {"matches_boolean_ideal", v.matches_boolean.value_or(false)}};
  }
  return out;
}

std::string render_json(const json& j) { return j.dump(2) + "\n"; }

}  // namespace pmv
