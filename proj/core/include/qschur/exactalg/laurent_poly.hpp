#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace qschur::exactalg {

using BigInt = mpz_class;

/// Element of Z[q, q^-1] stored as a sparse, exponent-sorted list of terms.
/// No stored coefficient is ever zero, so structural equality is equality.
class LaurentPoly {
 public:
  struct Term {
    int exp;
    BigInt coeff;
    bool operator==(const Term& o) const { return exp == o.exp && coeff == o.coeff; }
  };

  LaurentPoly() = default;
  LaurentPoly(long c);  // NOLINT(google-explicit-constructor): integers embed as constants
  explicit LaurentPoly(const BigInt& c);

  static LaurentPoly monomial(const BigInt& c, int exp);
  /// q^e
  static LaurentPoly q_pow(int e);
  /// (-q)^e
  static LaurentPoly neg_q_pow(int e);
  /// Builds from unsorted terms; merges duplicates and drops zeros.
  static LaurentPoly from_terms(std::vector<Term> terms);

  bool is_zero() const { return terms_.empty(); }
  bool is_one() const;
  /// True for +-q^k.
  bool is_unit() const;
  bool is_monomial() const { return terms_.size() == 1; }
  std::size_t term_count() const { return terms_.size(); }
  int min_exp() const;
  int max_exp() const;
  const std::vector<Term>& terms() const { return terms_; }
  BigInt coeff(int exp) const;
  const BigInt& leading_coeff() const;

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  bool operator==(const LaurentPoly& o) const { return terms_ == o.terms_; }
  bool operator!=(const LaurentPoly& o) const { return !(*this == o); }
  /// Total order used only for deterministic containers.
  bool operator<(const LaurentPoly& o) const;

  /// Multiplies by q^e.
  LaurentPoly shifted(int e) const;
  LaurentPoly pow(unsigned e) const;
  /// Image under q -> q^-1.
  LaurentPoly bar() const;
  /// Value at q = 1.
  BigInt at_one() const;
  /// Positive gcd of the integer coefficients (0 for the zero polynomial).
  BigInt content() const;
  LaurentPoly div_integer(const BigInt& d) const;

  /// Exact quotient in Z[q,q^-1]; nullopt when `d` does not divide `*this`.
  std::optional<LaurentPoly> try_div(const LaurentPoly& d) const;
  /// Exact quotient; throws std::domain_error if the division is not exact.
  LaurentPoly exact_div(const LaurentPoly& d) const;

  std::string to_string() const;

 private:
  std::vector<Term> terms_;
};

/// Greatest common divisor in Z[q,q^-1], normalized to lowest exponent 0 and
/// positive leading coefficient. gcd(0, 0) = 0.
LaurentPoly gcd(const LaurentPoly& a, const LaurentPoly& b);

/// Balanced quantum integer [l]_q = sum_{i=0}^{l-1} q^{2i-l+1}.
LaurentPoly quantum_integer(int l);
/// [l]_q! = [l]_q [l-1]_q ... [1]_q
LaurentPoly quantum_factorial(int l);

std::ostream& operator<<(std::ostream& os, const LaurentPoly& p);

}  // namespace qschur::exactalg
