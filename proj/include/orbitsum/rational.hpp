#pragma once

#include <gmpxx.h>

#include <cctype>
#include <compare>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace orbitsum {

using Rational = mpq_class;
using Vec = std::vector<Rational>;

/// Parses "n", "-n", "n/d". Decimal points and exponents are rejected so that
/// nothing on the exact path goes through a binary float.
inline Rational parse_rational(std::string_view text)
{
  std::string s;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  }
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  const auto slash = s.find('/');
  auto valid_int = [](std::string_view part, bool allow_sign) {
    std::size_t i = 0;
    if (allow_sign && !part.empty() && (part[0] == '-' || part[0] == '+')) i = 1;
    if (i >= part.size()) return false;
    for (; i < part.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(part[i]))) return false;
    }
    return true;
  };
  const std::string_view sv{s};
  const std::string_view num = sv.substr(0, slash);
  const std::string_view den = slash == std::string::npos ? std::string_view{} : sv.substr(slash + 1);
  if (!valid_int(num, true) || (slash != std::string::npos && !valid_int(den, false))) {
    throw std::invalid_argument("not an exact rational literal: '" + std::string(text) + "'");
  }
  std::string num_str{num};
  if (num_str[0] == '+') num_str.erase(0, 1);
  mpz_class n(num_str, 10);
  mpz_class d = slash == std::string::npos ? mpz_class(1) : mpz_class(std::string(den), 10);
  if (d == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  Rational q(n, d);
  q.canonicalize();
  return q;
}

/// Always "num/den", including integers ("5/1").
inline std::string to_string(const Rational& q)
{
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

/// Compact human form: "5", "-7/2".
inline std::string to_display(const Rational& q)
{
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_str();
}

inline Vec parse_rational_list(std::string_view text)
{
  Vec out;
  std::size_t start = 0;
  while (true) {
    const auto comma = text.find(',', start);
    out.push_back(parse_rational(text.substr(start, comma == std::string_view::npos ? text.size() - start : comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

inline Vec to_vec(std::initializer_list<long> values)
{
  Vec v;
  v.reserve(values.size());
  for (long x : values) v.emplace_back(x);
  return v;
}

inline Vec to_vec(const std::vector<double>& values)
{
  Vec v;
  v.reserve(values.size());
  for (double x : values) v.emplace_back(x);  // exact binary value
  return v;
}

inline std::vector<double> to_doubles(const Vec& v)
{
  std::vector<double> out;
  out.reserve(v.size());
  for (const auto& x : v) out.push_back(x.get_d());
  return out;
}

inline Rational floor_q(const Rational& q)
{
  mpz_class r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return Rational(r);
}

inline Rational ceil_q(const Rational& q)
{
  mpz_class r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return Rational(r);
}

inline std::strong_ordering compare_lex(const Vec& a, const Vec& b)
{
  const std::size_t n = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) {
    const int c = cmp(a[i], b[i]);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
  }
  return a.size() <=> b.size();
}

struct LexLess {
  bool operator()(const Vec& a, const Vec& b) const { return compare_lex(a, b) < 0; }
};

}  // namespace orbitsum
