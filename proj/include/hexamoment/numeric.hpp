#ifndef HEXAMOMENT_NUMERIC_HPP
#define HEXAMOMENT_NUMERIC_HPP

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

#include "hexamoment/errors.hpp"

namespace hexamoment {

// Arbitrary-magnitude signed integer.
using BigInt = mpz_class;

std::string to_string(const BigInt& v);
BigInt binomial(int n, int k);

// Exact rational, always in lowest terms with positive denominator.
// Equality is structural, which for canonical values coincides with
// numeric equality.
class Rational {
 public:
  Rational() : q_(0) {}
  Rational(int v) : q_(v) {}  // NOLINT: implicit by design
  Rational(const BigInt& v) : q_(v) {}
  Rational(const BigInt& num, const BigInt& den);
  Rational(std::int64_t num, std::int64_t den);

  BigInt num() const { return q_.get_num(); }
  BigInt den() const { return q_.get_den(); }
  bool is_integer() const { return q_.get_den() == 1; }

  Rational operator-() const;
  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.q_ != b.q_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.q_ < b.q_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.q_ <= b.q_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.q_ > b.q_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.q_ >= b.q_; }

  // "num/den"; the "/den" part is omitted for integers.
  std::string str() const;
  double to_double() const { return q_.get_d(); }

 private:
  mpq_class q_;  // kept canonical at all times
};

// Integer-coefficient polynomial in q. Coefficient k is the coefficient of
// q^k. No trailing zero coefficients are stored; the zero polynomial has
// degree() == -1, standing in for minus infinity.
class QPolynomial {
 public:
  QPolynomial() = default;  // zero polynomial
  explicit QPolynomial(std::vector<BigInt> coeffs);

  static QPolynomial one();
  static QPolynomial monomial(const BigInt& coeff, int power);

  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  BigInt coeff(int k) const;
  const std::vector<BigInt>& coeffs() const { return coeffs_; }

  friend QPolynomial operator+(const QPolynomial& a, const QPolynomial& b);
  friend QPolynomial operator-(const QPolynomial& a, const QPolynomial& b);
  friend QPolynomial operator*(const QPolynomial& a, const QPolynomial& b);
  friend bool operator==(const QPolynomial& a, const QPolynomial& b) {
    return a.coeffs_ == b.coeffs_;
  }
  friend bool operator!=(const QPolynomial& a, const QPolynomial& b) {
    return a.coeffs_ != b.coeffs_;
  }

  BigInt eval_at_one() const;        // sum of coefficients
  BigInt derivative_at_one() const;  // sum of k * coeff(k)

  std::string str() const;

 private:
  void normalize();
  std::vector<BigInt> coeffs_;
};

// Exact quotient in Z[q]; throws NotDivisibleError if the remainder is
// nonzero or the divisor is zero.
QPolynomial div_exact(const QPolynomial& p, const QPolynomial& r);

}  // namespace hexamoment

#endif  // HEXAMOMENT_NUMERIC_HPP
