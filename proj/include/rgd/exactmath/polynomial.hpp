#pragma once

#include <span>
#include <string>
#include <vector>

#include "rgd/exactmath/bigint.hpp"

namespace rgd {

/// Dense univariate polynomial with arbitrary-precision integer coefficients.
/// coeffs()[i] is the coefficient of x^i; the zero polynomial has no coefficients.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<BigInt> coeffs);
  IntPolynomial(std::initializer_list<long> coeffs);

  static IntPolynomial constant(const BigInt& c);
  static IntPolynomial monomial(const BigInt& c, std::size_t degree);

  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  std::span<const BigInt> coeffs() const { return coeffs_; }
  /// Coefficient of x^i; zero past the degree.
  BigInt coeff(std::size_t i) const;
  const BigInt& leading() const;

  IntPolynomial derivative() const;
  BigInt evaluate(const BigInt& x) const;
  BigRational evaluate(const BigRational& x) const;
  /// Sign of p(x) without building the full rational value.
  int sign_at(const BigRational& x) const;

  /// gcd of the coefficients (non-negative); zero for the zero polynomial.
  BigInt content() const;
  /// p / content(p), normalized to a positive leading coefficient.
  IntPolynomial primitive_part() const;

  IntPolynomial& operator+=(const IntPolynomial& rhs);
  IntPolynomial& operator-=(const IntPolynomial& rhs);
  IntPolynomial& operator*=(const BigInt& c);

  friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) { return a += b; }
  friend IntPolynomial operator-(IntPolynomial a, const IntPolynomial& b) { return a -= b; }
  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator*(IntPolynomial a, const BigInt& c) { return a *= c; }
  friend IntPolynomial operator-(IntPolynomial a);
  friend bool operator==(const IntPolynomial& a, const IntPolynomial& b) = default;

  std::string to_string() const;

 private:
  void normalize();
  std::vector<BigInt> coeffs_;
};

/// Pseudo-remainder scaled by |lc(b)|^e so that it is a positive multiple of rem(a, b).
IntPolynomial signed_pseudo_remainder(const IntPolynomial& a, const IntPolynomial& b);

/// Exact quotient a / b over the integers; throws InternalError if b does not divide a.
IntPolynomial exact_quotient(const IntPolynomial& a, const IntPolynomial& b);

/// Primitive gcd with positive leading coefficient. gcd(0, 0) is zero.
IntPolynomial gcd(const IntPolynomial& a, const IntPolynomial& b);

/// Primitive square-free part p / gcd(p, p').
IntPolynomial square_free_part(const IntPolynomial& p);

/// Yun decomposition: factors[i] is the primitive product of the irreducible
/// factors of multiplicity i + 1 (up to a constant).
std::vector<IntPolynomial> square_free_factorization(const IntPolynomial& p);

/// Product of the square-free factors of odd multiplicity: the roots where p changes sign.
IntPolynomial odd_multiplicity_part(const IntPolynomial& p);

}  // namespace rgd
