#include "pmv/rational.hpp"

#include <cctype>
#include <cstdio>
#include <string>

#include "pmv/error.hpp"

namespace pmv {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (std::isdigit(static_cast<unsigned char>(c)) == 0) return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view s = text;
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())) != 0) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())) != 0) s.remove_suffix(1);
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  Rational q;
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    auto num = s.substr(0, slash);
    auto den = s.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) throw ParseError("bad rational: " + std::string(text));
    mpz_class d(std::string(den), 10);
    if (d == 0) throw ParseError("zero denominator: " + std::string(text));
    q = Rational(mpz_class(std::string(num), 10), d);
  } else if (auto dot = s.find('.'); dot != std::string_view::npos) {
    auto whole = s.substr(0, dot);
    auto frac = s.substr(dot + 1);
    if ((!whole.empty() && !all_digits(whole)) || !all_digits(frac)) {
      throw ParseError("bad decimal: " + std::string(text));
    }
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac.size());
    mpz_class digits(std::string(whole.empty() ? "0" : whole) + std::string(frac), 10);
    q = Rational(digits, scale);
  } else {
    if (!all_digits(s)) throw ParseError("bad rational: " + std::string(text));
    q = Rational(mpz_class(std::string(s), 10));
  }
  q.canonicalize();
  return negative ? Rational(-q) : q;
}

std::string render_rational(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string render_double(double v) {
  if (v == 0.0) return "0";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  std::string out(buf);
  if (out == "-0") out = "0";
  return out;
}

bool is_dyadic(const Rational& q) {
  const mpz_class& d = q.get_den();
  return mpz_popcount(d.get_mpz_t()) == 1;
}

}  // namespace pmv
