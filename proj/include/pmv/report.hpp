#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include <json.hpp>

#include "pmv/core.hpp"
#include "pmv/finite.hpp"
#include "pmv/sqrt.hpp"

namespace pmv {

inline constexpr const char* kToolVersion = "0.3.0";

struct RunOptions {
  std::uint64_t seed = SamplerConfig{}.seed;
  std::size_t samples = 1000;
  double tolerance = 1e-9;
  SamplerConfig sampler() const;
};

/// Group constructor DSL: Z, Q, D, H(p), heis, semi_numeric, semi_exp, lex(G,G), prod(G,G).
/// Throws ParseError.
GroupPtr parse_group(std::string_view text, double tolerance = 1e-9);

/// Element literal: p/q, decimals (float groups only), nested tuples flattened in order.
GroupElement parse_element(const LGroup& g, std::string_view text);

/// An algebra description as read from disk.
struct AlgebraInput {
  PseudoMV algebra;
  std::string source;  ///< "finite", "gamma" or "catalogue"
};

/// JSON object with one of the keys "finite", "gamma", "catalogue". Finite tables are
/// checked for shape only; axioms are left to the caller. Throws ParseError.
AlgebraInput parse_algebra_json(const nlohmann::json& j, const RunOptions& opts);
/// Text form: a catalogue term such as "product(boolean(1),chain(2))", or
/// "<group> unit=<element>". Lines starting with '#' are comments.
AlgebraInput parse_algebra_text(std::string_view text, const RunOptions& opts);
/// Dispatches on the first non-blank character ('{' means JSON).
AlgebraInput load_algebra(const std::string& path, const RunOptions& opts);

/// {"finite": {...}} for a finite algebra, with labels.
nlohmann::json finite_to_json(const PseudoMV& a);

nlohmann::json to_json(const Verdict& v);
nlohmann::json to_json(const PseudoMV& a, const SqrtReport& r);
nlohmann::json to_json(const AxiomReport& r);

/// Throws AxiomFailure naming the first failing law.
AxiomReport require_axioms(const PseudoMV& a, const RunOptions& opts);

nlohmann::json analyze_report(const AlgebraInput& in, const RunOptions& opts);
nlohmann::json search_report(std::size_t max_size, bool* consistent);
nlohmann::json counterexamples_report(const RunOptions& opts);
/// Strict gamma algebras only; uses (x+u)/2 or ((x-u)/2)+u, whichever verifies.
nlohmann::json ladder_report(const AlgebraInput& in, unsigned depth, const RunOptions& opts);
/// Finite only; `ideal` lists element labels.
nlohmann::json quotient_report(const AlgebraInput& in, const std::vector<std::string>& ideal, const RunOptions& opts);

/// Two-space indented, sorted keys, trailing newline.
std::string render_json(const nlohmann::json& j);

}  // namespace pmv
