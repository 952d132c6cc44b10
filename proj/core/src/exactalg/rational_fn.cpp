#include "qschur/exactalg/rational_fn.hpp"

#include <ostream>
#include <stdexcept>

namespace qschur::exactalg {

RationalFn::RationalFn(LaurentPoly num, LaurentPoly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw std::domain_error("RationalFn: zero denominator");
  normalize();
}

void RationalFn::fix_denominator() {
  // Move q-powers of the denominator into the numerator and fix the sign.
  const int shift = den_.min_exp();
  if (shift != 0) {
    den_ = den_.shifted(-shift);
    num_ = num_.shifted(-shift);
  }
  if (den_.leading_coeff() < 0) {
    den_ = -den_;
    num_ = -num_;
  }
}

void RationalFn::normalize() {
  if (num_.is_zero()) {
    den_ = LaurentPoly(1L);
    return;
  }
  if (!den_.is_one()) {
    LaurentPoly g = gcd(num_, den_);
    if (!g.is_one()) {
      num_ = num_.exact_div(g);
      den_ = den_.exact_div(g);
    }
    fix_denominator();
  }
}

LaurentPoly RationalFn::as_laurent() const {
  if (!den_.is_unit()) throw std::domain_error("RationalFn::as_laurent: non-unit denominator " + to_string());
  return num_.exact_div(den_);
}

RationalFn RationalFn::operator-() const { return {-num_, den_, Reduced{}}; }

RationalFn& RationalFn::operator+=(const RationalFn& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  if (den_ == o.den_) {
    num_ += o.num_;
    normalize();
    return *this;
  }
  if (den_.is_one()) {
    num_ = num_ * o.den_ + o.num_;
    den_ = o.den_;
    return *this;  // gcd(n*d + m, d) = gcd(m, d) = 1
  }
  if (o.den_.is_one()) {
    num_ += o.num_ * den_;
    return *this;
  }
  LaurentPoly g = gcd(den_, o.den_);
  LaurentPoly d1 = den_.exact_div(g);
  LaurentPoly d2 = o.den_.exact_div(g);
  num_ = num_ * d2 + o.num_ * d1;
  den_ = den_ * d2;
  normalize();
  return *this;
}

RationalFn& RationalFn::operator-=(const RationalFn& o) { return *this += -o; }

RationalFn& RationalFn::operator*=(const RationalFn& o) {
  if (is_zero() || o.is_zero()) return *this = RationalFn();
  if (den_.is_one() && o.den_.is_one()) {
    num_ *= o.num_;
    return *this;
  }
  // Cross-cancel so the product is already reduced.
  LaurentPoly g1 = gcd(num_, o.den_);
  LaurentPoly g2 = gcd(o.num_, den_);
  LaurentPoly a = g1.is_one() ? num_ : num_.exact_div(g1);
  LaurentPoly d = g1.is_one() ? o.den_ : o.den_.exact_div(g1);
  LaurentPoly c = g2.is_one() ? o.num_ : o.num_.exact_div(g2);
  LaurentPoly b = g2.is_one() ? den_ : den_.exact_div(g2);
  num_ = a * c;
  den_ = b * d;
  fix_denominator();
  return *this;
}

RationalFn RationalFn::inverse() const {
  if (is_zero()) throw std::domain_error("RationalFn: inverse of zero");
  RationalFn r(den_, num_, Reduced{});
  r.fix_denominator();
  return r;
}

RationalFn& RationalFn::operator/=(const RationalFn& o) { return *this *= o.inverse(); }

RationalFn RationalFn::bar() const { return {num_.bar(), den_.bar()}; }

std::string RationalFn::to_string() const {
  if (den_.is_one()) return num_.to_string();
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

std::ostream& operator<<(std::ostream& os, const RationalFn& f) { return os << f.to_string(); }

}  // namespace qschur::exactalg
