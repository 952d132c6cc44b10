#pragma once

#include <string>

#include "qschur/exactalg/laurent_poly.hpp"

namespace qschur::exactalg {

/// Element of Q(q) as a reduced fraction of Laurent polynomials.
///
/// Normal form: gcd(num, den) = 1, the denominator has lowest exponent 0 and a
/// positive leading coefficient. With this convention two fractions are equal
/// iff their numerators and denominators are equal term by term.
class RationalFn {
 public:
  RationalFn() : den_(1L) {}
  RationalFn(long c) : num_(c), den_(1L) {}                 // NOLINT(google-explicit-constructor)
  RationalFn(LaurentPoly p) : num_(std::move(p)), den_(1L) {}  // NOLINT(google-explicit-constructor)
  RationalFn(LaurentPoly num, LaurentPoly den);

  const LaurentPoly& num() const { return num_; }
  const LaurentPoly& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.is_one(); }
  /// True when the denominator is a unit +-q^k of Z[q,q^-1] (after normalization: 1).
  bool has_unit_denominator() const { return den_.is_unit(); }
  /// Numerator as a Laurent polynomial; throws if the denominator is not a unit.
  LaurentPoly as_laurent() const;

  RationalFn operator-() const;
  RationalFn& operator+=(const RationalFn& o);
  RationalFn& operator-=(const RationalFn& o);
  RationalFn& operator*=(const RationalFn& o);
  RationalFn& operator/=(const RationalFn& o);
  friend RationalFn operator+(RationalFn a, const RationalFn& b) { return a += b; }
  friend RationalFn operator-(RationalFn a, const RationalFn& b) { return a -= b; }
  friend RationalFn operator*(RationalFn a, const RationalFn& b) { return a *= b; }
  friend RationalFn operator/(RationalFn a, const RationalFn& b) { return a /= b; }
  bool operator==(const RationalFn& o) const { return num_ == o.num_ && den_ == o.den_; }
  bool operator!=(const RationalFn& o) const { return !(*this == o); }

  RationalFn inverse() const;
  RationalFn bar() const;

  std::string to_string() const;

 private:
  struct Reduced {};
  RationalFn(LaurentPoly num, LaurentPoly den, Reduced) : num_(std::move(num)), den_(std::move(den)) {}
  void normalize();
  void fix_denominator();

  LaurentPoly num_;
  LaurentPoly den_;
};

std::ostream& operator<<(std::ostream& os, const RationalFn& f);

}  // namespace qschur::exactalg
