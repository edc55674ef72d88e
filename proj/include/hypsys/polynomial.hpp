#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace hypsys {

/// Dense integer polynomial, ascending coefficients. The zero polynomial has
/// no coefficients; otherwise the last coefficient is nonzero.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<mpz_class> ascending);
  IntPolynomial(std::initializer_list<long> ascending);

  static IntPolynomial monomial(int degree, const mpz_class& coeff = 1);
  static IntPolynomial from_descending(const std::vector<long>& descending);

  bool is_zero() const { return c_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const mpz_class& leading() const { return c_.back(); }
  mpz_class coeff(int i) const;
  const std::vector<mpz_class>& coefficients() const { return c_; }

  IntPolynomial derivative() const;
  IntPolynomial operator-() const;
  IntPolynomial& operator+=(const IntPolynomial& o);
  IntPolynomial& operator-=(const IntPolynomial& o);
  IntPolynomial& operator*=(const mpz_class& s);

  friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) { return a += b; }
  friend IntPolynomial operator-(IntPolynomial a, const IntPolynomial& b) { return a -= b; }
  friend IntPolynomial operator*(IntPolynomial a, const mpz_class& s) { return a *= s; }
  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
  friend bool operator==(const IntPolynomial& a, const IntPolynomial& b) { return a.c_ == b.c_; }

  /// Sign of p(x) for rational x, exact.
  int sign_at(const mpq_class& x) const;
  mpq_class evaluate(const mpq_class& x) const;
  double evaluate(double x) const;

  mpz_class content() const;
  /// Content removed, leading coefficient made positive.
  IntPolynomial primitive_part() const;

  /// c_i = c_{d-i} for all i.
  bool is_reciprocal() const;
  /// c_i = -c_{d-i} for all i.
  bool is_antireciprocal() const;

  /// Ascending integers "c0 c1 ... cd" ("0" for the zero polynomial).
  std::string ascending_string() const;
  /// Human form, descending: "X^5 - 2X^3 - 2X^2 + 1".
  std::string to_string() const;

  /// Stable hash of the coefficient list.
  std::size_t hash() const;

 private:
  void trim();
  std::vector<mpz_class> c_;
};

/// a / b when b divides a over Z. Throws InternalInconsistency on a nonzero
/// remainder or a non-integral quotient.
IntPolynomial divide_exact(const IntPolynomial& a, const IntPolynomial& b);

/// lc(b)^(deg a - deg b + 1) * a mod b.
IntPolynomial pseudo_remainder(const IntPolynomial& a, const IntPolynomial& b);

/// Primitive gcd with positive leading coefficient. gcd(0, 0) = 0.
IntPolynomial gcd(const IntPolynomial& a, const IntPolynomial& b);

/// Product of the distinct irreducible factors, primitive.
IntPolynomial squarefree_part(const IntPolynomial& p);

/// Parses an ascending list "1 0 -2 -2 0 1".
IntPolynomial parse_ascending(const std::string& text);

}  // namespace hypsys
