#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <json.hpp>

#include <string>
#include <utility>
#include <vector>

namespace hecke {

// Expression templates off: keeps ?: and auto well-behaved.
using BigInt = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>, boost::multiprecision::et_off>;

/// Sparse Laurent polynomial in v with arbitrary-precision integer
/// coefficients, i.e. an element of Z[v, v^-1].
///
/// Terms are kept sorted by exponent and no stored coefficient is zero, so
/// the zero polynomial is the empty term list and equality is structural.
class LaurentPoly {
 public:
  using Term = std::pair<int, BigInt>;

  LaurentPoly() = default;
  LaurentPoly(int constant);  // NOLINT(google-explicit-constructor)
  explicit LaurentPoly(BigInt constant);

  static LaurentPoly monomial(int exponent, BigInt coeff = 1);
  /// Builds from arbitrary (exponent, coefficient) pairs; repeated exponents
  /// are summed and zeros dropped.
  static LaurentPoly from_terms(std::vector<Term> terms);

  const std::vector<Term>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t term_count() const noexcept { return terms_.size(); }

  BigInt coeff(int exponent) const;
  int min_degree() const;  // throws ZeroPolynomial
  int max_degree() const;  // throws ZeroPolynomial

  /// v -> v^-1.
  LaurentPoly bar() const;
  /// Multiplication by v^k.
  LaurentPoly shifted(int k) const;
  /// Terms with exponent < 0.
  LaurentPoly negative_part() const;
  /// Value at v = 1.
  BigInt eval_at_one() const;

  LaurentPoly& operator+=(const LaurentPoly& other);
  LaurentPoly& operator-=(const LaurentPoly& other);
  LaurentPoly& operator*=(const LaurentPoly& other);
  /// this += coeff * other.
  void add_scaled(const LaurentPoly& coeff, const LaurentPoly& other);

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator-(LaurentPoly a);
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) = default;

 private:
  std::vector<Term> terms_;
};

LaurentPoly add(const LaurentPoly& p, const LaurentPoly& q);
LaurentPoly mul(const LaurentPoly& p, const LaurentPoly& q);
LaurentPoly bar(const LaurentPoly& p);

/// Returns r with q * r == p. Throws DivisionByZero for q == 0 and
/// NotDivisible when the quotient is not in Z[v, v^-1].
LaurentPoly exact_div(const LaurentPoly& p, const LaurentPoly& q);

struct Extremal {
  int min_degree;
  BigInt min_coeff;
  int max_degree;
  BigInt max_coeff;
};

/// Lowest and highest terms; throws ZeroPolynomial for p == 0.
Extremal extremal(const LaurentPoly& p);

/// v^e - v^-e, the factor appearing in the quadratic relation.
LaurentPoly v_minus_vinv(int e);
/// v^e + v^-e.
LaurentPoly v_plus_vinv(int e);

/// "-v^-2 + 3 + 2·v^3": ascending exponents, explicit signs.
std::string to_string(const LaurentPoly& p);
/// [[exponent, "coefficient"], ...] sorted by exponent.
nlohmann::json to_json(const LaurentPoly& p);
LaurentPoly laurent_from_json(const nlohmann::json& j);

}  // namespace hecke
