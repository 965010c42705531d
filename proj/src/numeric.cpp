#include "hexamoment/numeric.hpp"

#include <utility>

namespace hexamoment {

std::string to_string(const BigInt& v) { return v.get_str(); }

BigInt binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

Rational::Rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw Error("rational with zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

Rational::Rational(std::int64_t num, std::int64_t den)
    : Rational(BigInt(static_cast<long>(num)), BigInt(static_cast<long>(den))) {}

Rational Rational::operator-() const {
  Rational r;
  r.q_ = -q_;
  return r;
}

Rational& Rational::operator+=(const Rational& o) {
  q_ += o.q_;
  return *this;
}

Rational& Rational::operator-=(const Rational& o) {
  q_ -= o.q_;
  return *this;
}

Rational& Rational::operator*=(const Rational& o) {
  q_ *= o.q_;
  return *this;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.q_ == 0) throw Error("rational division by zero");
  q_ /= o.q_;
  return *this;
}

std::string Rational::str() const {
  if (is_integer()) return q_.get_num().get_str();
  return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

QPolynomial::QPolynomial(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) {
  normalize();
}

void QPolynomial::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

QPolynomial QPolynomial::one() { return QPolynomial({BigInt(1)}); }

QPolynomial QPolynomial::monomial(const BigInt& coeff, int power) {
  if (coeff == 0) return QPolynomial();
  std::vector<BigInt> c(static_cast<std::size_t>(power) + 1, BigInt(0));
  c.back() = coeff;
  return QPolynomial(std::move(c));
}

BigInt QPolynomial::coeff(int k) const {
  if (k < 0 || k > degree()) return 0;
  return coeffs_[static_cast<std::size_t>(k)];
}

QPolynomial operator+(const QPolynomial& a, const QPolynomial& b) {
  std::vector<BigInt> c(std::max(a.coeffs_.size(), b.coeffs_.size()), BigInt(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) c[i] += a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) c[i] += b.coeffs_[i];
  return QPolynomial(std::move(c));
}

QPolynomial operator-(const QPolynomial& a, const QPolynomial& b) {
  std::vector<BigInt> c(std::max(a.coeffs_.size(), b.coeffs_.size()), BigInt(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) c[i] += a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) c[i] -= b.coeffs_[i];
  return QPolynomial(std::move(c));
}

QPolynomial operator*(const QPolynomial& a, const QPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return QPolynomial();
  std::vector<BigInt> c(a.coeffs_.size() + b.coeffs_.size() - 1, BigInt(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return QPolynomial(std::move(c));
}

BigInt QPolynomial::eval_at_one() const {
  BigInt s = 0;
  for (const BigInt& c : coeffs_) s += c;
  return s;
}

BigInt QPolynomial::derivative_at_one() const {
  BigInt s = 0;
  for (std::size_t k = 1; k < coeffs_.size(); ++k) s += static_cast<long>(k) * coeffs_[k];
  return s;
}

std::string QPolynomial::str() const {
  if (is_zero()) return "0";
  std::string out;
  for (int k = 0; k <= degree(); ++k) {
    if (coeffs_[static_cast<std::size_t>(k)] == 0) continue;
    if (!out.empty()) out += " + ";
    out += coeffs_[static_cast<std::size_t>(k)].get_str();
    if (k > 0) out += "*q^" + std::to_string(k);
  }
  return out;
}

QPolynomial div_exact(const QPolynomial& p, const QPolynomial& r) {
  if (r.is_zero()) throw NotDivisibleError("division by the zero polynomial");
  if (p.is_zero()) return QPolynomial();
  if (p.degree() < r.degree())
    throw NotDivisibleError("quotient degree would be negative: " + p.str() + " by " + r.str());

  std::vector<BigInt> rem = p.coeffs();
  const std::vector<BigInt>& d = r.coeffs();
  const BigInt& lead = d.back();
  std::vector<BigInt> quot(rem.size() - d.size() + 1, BigInt(0));
  for (std::size_t k = quot.size(); k-- > 0;) {
    BigInt& top = rem[k + d.size() - 1];
    if (top == 0) continue;
    if (top % lead != 0)
      throw NotDivisibleError("leading coefficient does not divide: " + p.str() + " by " + r.str());
    BigInt q = top / lead;
    quot[k] = q;
    for (std::size_t i = 0; i < d.size(); ++i) rem[k + i] -= q * d[i];
  }
  for (const BigInt& c : rem)
    if (c != 0) throw NotDivisibleError("nonzero remainder: " + p.str() + " by " + r.str());
  return QPolynomial(std::move(quot));
}

}  // namespace hexamoment
