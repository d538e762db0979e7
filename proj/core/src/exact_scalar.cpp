#include "gqs/exact_scalar.hpp"

namespace gqs {

ExactScalar::ExactScalar(mpq_class rat, mpq_class surd) : rat_(std::move(rat)), surd_(std::move(surd)) {
  rat_.canonicalize();
  surd_.canonicalize();
}

ExactScalar ExactScalar::fraction(long num, long den) {
  if (den == 0) throw DivisionByZero("zero denominator");
  mpq_class q(num, den);
  q.canonicalize();
  return ExactScalar(q);
}

ExactScalar& ExactScalar::operator+=(const ExactScalar& o) {
  rat_ += o.rat_;
  surd_ += o.surd_;
  return *this;
}

ExactScalar& ExactScalar::operator-=(const ExactScalar& o) {
  rat_ -= o.rat_;
  surd_ -= o.surd_;
  return *this;
}

ExactScalar& ExactScalar::operator*=(const ExactScalar& o) {
  mpq_class r = rat_ * o.rat_ + 2 * surd_ * o.surd_;
  mpq_class s = rat_ * o.surd_ + surd_ * o.rat_;
  rat_ = std::move(r);
  surd_ = std::move(s);
  return *this;
}

ExactScalar ExactScalar::inverse() const {
  if (is_zero()) throw DivisionByZero("inverse of zero in Q(sqrt2)");
  // p^2 - 2q^2 is nonzero for (p,q) != 0 because sqrt2 is irrational.
  mpq_class norm = rat_ * rat_ - 2 * surd_ * surd_;
  return ExactScalar(rat_ / norm, -surd_ / norm);
}

std::string rational_string(const mpq_class& q) { return q.get_str(); }

namespace {

std::string render(const ExactScalar& x, const std::string& root) {
  const mpq_class& p = x.rat();
  const mpq_class& q = x.surd();
  if (sgn(q) == 0) return p.get_str();
  std::string coeff;
  mpq_class aq = abs(q);
  if (aq == 1) {
    coeff = "";
  } else if (aq.get_den() == 1) {
    coeff = aq.get_str();
  } else {
    coeff = "(" + aq.get_str() + ")";
  }
  std::string surd = coeff + root;
  if (sgn(p) == 0) return (sgn(q) < 0 ? "-" : "") + surd;
  return p.get_str() + (sgn(q) < 0 ? "-" : "+") + surd;
}

}  // namespace

std::string ExactScalar::str() const { return render(*this, "√2"); }

std::string ExactScalar::latex() const { return render(*this, "\\sqrt{2}"); }

ExactScalar add(const ExactScalar& a, const ExactScalar& b) { return a + b; }
ExactScalar mul(const ExactScalar& a, const ExactScalar& b) { return a * b; }
ExactScalar inv(const ExactScalar& a) { return a.inverse(); }

}  // namespace gqs
