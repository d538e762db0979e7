#pragma once

#include <gmpxx.h>

#include <compare>
#include <stdexcept>
#include <string>

namespace gqs {

class DivisionByZero : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Element rat + surd*sqrt(2) of Q(sqrt 2). Both parts are kept canonical
// (lowest terms, positive denominator) after every operation.
class ExactScalar {
 public:
  ExactScalar() = default;
  ExactScalar(long value) : rat_(value) {}  // NOLINT(google-explicit-constructor)
  ExactScalar(mpq_class rat, mpq_class surd);
  explicit ExactScalar(mpq_class rat) : ExactScalar(std::move(rat), 0) {}

  static ExactScalar fraction(long num, long den);
  static ExactScalar sqrt2() { return ExactScalar(0, 1); }

  const mpq_class& rat() const { return rat_; }
  const mpq_class& surd() const { return surd_; }

  bool is_zero() const { return sgn(rat_) == 0 && sgn(surd_) == 0; }
  bool is_rational() const { return sgn(surd_) == 0; }

  ExactScalar inverse() const;

  ExactScalar operator-() const { return ExactScalar(-rat_, -surd_); }
  ExactScalar& operator+=(const ExactScalar& o);
  ExactScalar& operator-=(const ExactScalar& o);
  ExactScalar& operator*=(const ExactScalar& o);
  ExactScalar& operator/=(const ExactScalar& o) { return *this *= o.inverse(); }

  friend ExactScalar operator+(ExactScalar a, const ExactScalar& b) { return a += b; }
  friend ExactScalar operator-(ExactScalar a, const ExactScalar& b) { return a -= b; }
  friend ExactScalar operator*(ExactScalar a, const ExactScalar& b) { return a *= b; }
  friend ExactScalar operator/(ExactScalar a, const ExactScalar& b) { return a /= b; }

  friend bool operator==(const ExactScalar& a, const ExactScalar& b) {
    return a.rat_ == b.rat_ && a.surd_ == b.surd_;
  }
  // Structural order on (rat, surd); only used to make containers deterministic.
  friend bool structural_less(const ExactScalar& a, const ExactScalar& b) {
    if (a.rat_ != b.rat_) return a.rat_ < b.rat_;
    return a.surd_ < b.surd_;
  }

  // "p", "q√2" or "p+q√2"; non-integer surd coefficients are parenthesized.
  std::string str() const;
  // Plain-ASCII variant ("sqrt2") for LaTeX and terminals without UTF-8.
  std::string latex() const;

 private:
  mpq_class rat_{0};
  mpq_class surd_{0};
};

ExactScalar add(const ExactScalar& a, const ExactScalar& b);
ExactScalar mul(const ExactScalar& a, const ExactScalar& b);
ExactScalar inv(const ExactScalar& a);

std::string rational_string(const mpq_class& q);

}  // namespace gqs
