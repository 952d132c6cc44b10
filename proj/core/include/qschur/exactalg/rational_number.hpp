#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

#include "qschur/exactalg/laurent_poly.hpp"

namespace qschur::exactalg {

/// Element of Q; field wrapper over mpq_class for the generic elimination code.
class Rational {
 public:
  Rational() = default;
  Rational(long v) : v_(v) {}  // NOLINT(google-explicit-constructor)
  explicit Rational(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

  const mpq_class& value() const { return v_; }
  bool is_zero() const { return sgn(v_) == 0; }
  Rational operator-() const { return Rational(mpq_class(-v_)); }
  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("Rational: division by zero");
    v_ /= o.v_;
    return *this;
  }
  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  bool operator==(const Rational& o) const { return v_ == o.v_; }
  Rational inverse() const { return Rational(1) / *this; }
  std::string to_string() const { return v_.get_str(); }

 private:
  mpq_class v_;
};

/// Evaluation Z[q,q^-1] -> Q at a nonzero rational point.
class RationalSpecialization {
 public:
  explicit RationalSpecialization(mpq_class point) : point_(std::move(point)) {
    if (sgn(point_) == 0) throw std::invalid_argument("RationalSpecialization: q must be nonzero");
  }
  Rational operator()(const LaurentPoly& p) const {
    mpq_class acc = 0;
    for (const auto& t : p.terms()) {
      mpq_class power = 1;
      const mpq_class base = t.exp >= 0 ? point_ : mpq_class(1 / point_);
      for (int i = 0; i < (t.exp >= 0 ? t.exp : -t.exp); ++i) power *= base;
      acc += mpq_class(t.coeff) * power;
    }
    return Rational(acc);
  }

 private:
  mpq_class point_;
};

}  // namespace qschur::exactalg
