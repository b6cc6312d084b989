#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace pmv {

/// Exact rational number; GMP keeps it reduced with a positive denominator.
using Rational = mpq_class;

/// Parses "p", "-p", "p/q" or a finite decimal such as "0.375".
Rational parse_rational(std::string_view text);

/// Canonical rendering: "p" for integers, "p/q" otherwise.
std::string render_rational(const Rational& q);

/// Renders a double with 12 significant digits.
std::string render_double(double v);

/// Nearest double to q.
inline double to_double(const Rational& q) { return q.get_d(); }

/// True iff the denominator of q is a power of two.
bool is_dyadic(const Rational& q);

}  // namespace pmv
