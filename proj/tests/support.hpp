#pragma once

// Weight suite and independent oracles shared by the tests.
// Also holds the reference cup table of P(1,2,2,3,3,3).

#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "orbimirror/cohomology.hpp"
#include "orbimirror/matrix.hpp"
#include "orbimirror/rational.hpp"

namespace testing {

using orbimirror::BasisClass;
using orbimirror::Rational;
using orbimirror::RationalMatrix;
using orbimirror::Sector;

inline Rational q(const std::string& s) { return orbimirror::parse_rational(s); }

inline BasisClass eta(const std::string& gamma, std::int64_t d) { return BasisClass{Sector(q(gamma)), d}; }

/// The fixed suite of weight vectors used by the mirror acceptance checks.
inline const std::vector<std::vector<std::int64_t>>& suite() {
  static const std::vector<std::vector<std::int64_t>> s{
      {1, 1}, {1, 2}, {1, 3},    {2, 2},       {2, 4},    {3, 3},    {1, 2, 3}, {2, 3, 5},
      {1, 1, 1, 1}, {1, 2, 2, 3, 3, 3}, {1, 1, 1}, {1, 1, 2}, {1, 2, 2}, {2, 3}, {1, 4}};
  return s;
}

/// Number of rational plane curves of degree d through 3d−1 general points,
/// by Kontsevich's recursion.
inline std::vector<mpz_class> kontsevich_numbers(int max_degree) {
  auto binom = [](int n, int k) {
    mpz_class out;
    if (k < 0 || k > n) return mpz_class(0);
    mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return out;
  };
  std::vector<mpz_class> n(max_degree + 1, 0);
  if (max_degree >= 1) n[1] = 1;
  for (int d = 2; d <= max_degree; ++d) {
    mpz_class total = 0;
    for (int d1 = 1; d1 < d; ++d1) {
      const int d2 = d - d1;
      const mpz_class a = binom(3 * d - 4, 3 * d1 - 2) * d1 * d1 * d2 * d2;
      const mpz_class b = binom(3 * d - 4, 3 * d1 - 1) * d1 * d1 * d1 * d2;
      total += n[d1] * n[d2] * (a - b);
    }
    n[d] = total;
  }
  return n;
}

/// det(x·Id − m) at a single point.
inline Rational char_poly_at(const RationalMatrix& m, const Rational& x) {
  RationalMatrix shifted = RationalMatrix::identity(m.rows()).scaled(x) - m;
  return shifted.determinant();
}

/// Whether det(X − m) equals X^μ + c by comparing at μ+1 integer points, which
/// pins a degree-μ polynomial.
inline bool char_poly_is(const RationalMatrix& m, const Rational& constant) {
  const auto mu = static_cast<long>(m.rows());
  for (long x = 0; x <= mu; ++x) {
    Rational px = 1;
    for (long e = 0; e < mu; ++e) px *= x;
    if (char_poly_at(m, Rational(x)) != px + constant) return false;
  }
  return true;
}

/// Upper triangle of the cup table for w = (1,2,2,3,3,3), row by row from the
/// diagonal. Sectors: 1, j = exp(2iπ/3), -1, j2 = j². A cell is "0" or
/// "c*g^d" (c omitted when 1).
inline const std::vector<std::vector<std::string>>& reference_cup_table() {
  static const std::vector<std::vector<std::string>> t{
      {"1^0", "1^1", "1^2", "1^3", "1^4", "1^5", "j^0", "j^1", "j^2", "-1^0", "-1^1", "j2^0", "j2^1", "j2^2"},
      {"1^2", "1^3", "1^4", "1^5", "0", "j^1", "j^2", "0", "-1^1", "0", "j2^1", "j2^2", "0"},
      {"1^4", "1^5", "0", "0", "j^2", "0", "0", "0", "0", "j2^2", "0", "0"},
      {"0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0"},
      {"0", "0", "0", "0", "0", "0", "0", "0", "0", "0"},
      {"0", "0", "0", "0", "0", "0", "0", "0", "0"},
      {"4*j2^2", "0", "0", "0", "0", "4*1^3", "4*1^4", "4*1^5"},
      {"0", "0", "0", "0", "4*1^4", "4*1^5", "0"},
      {"0", "0", "0", "4*1^5", "0", "0"},
      {"27*1^4", "27*1^5", "0", "0", "0"},
      {"0", "0", "0", "0"},
      {"1*j^1", "1*j^2", "0"},
      {"0", "0"},
      {"0"},
  };
  return t;
}

struct ReferenceCell {
  bool zero = true;
  Rational coeff;
  BasisClass out;
};

inline ReferenceCell parse_reference_cell(const std::string& cell) {
  if (cell == "0") return {};
  static const std::map<std::string, std::string> gamma{{"1", "0"}, {"j", "1/3"}, {"-1", "1/2"}, {"j2", "2/3"}};
  std::string body = cell;
  Rational coeff = 1;
  if (const auto star = body.find('*'); star != std::string::npos) {
    coeff = q(body.substr(0, star));
    body = body.substr(star + 1);
  }
  const auto caret = body.find('^');
  return {false, coeff, eta(gamma.at(body.substr(0, caret)), std::stoll(body.substr(caret + 1)))};
}

}  // namespace testing
