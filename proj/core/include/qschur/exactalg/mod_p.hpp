#pragma once

#include <cstdint>
#include <string>

#include "qschur/exactalg/laurent_poly.hpp"

namespace qschur::exactalg {

/// Element of F_p with p = 2^61 - 1. Used for specializations q -> q0 of
/// Laurent-polynomial data; ranks can only drop under such a specialization.
class ModP {
 public:
  static constexpr std::uint64_t kModulus = (std::uint64_t{1} << 61) - 1;

  constexpr ModP() = default;
  constexpr explicit ModP(std::uint64_t v) : v_(reduce(v)) {}
  static ModP from_signed(std::int64_t v);
  static ModP from_bigint(const BigInt& v);

  std::uint64_t value() const { return v_; }
  bool is_zero() const { return v_ == 0; }

  ModP operator-() const { return ModP(v_ == 0 ? 0 : kModulus - v_); }
  ModP& operator+=(ModP o) {
    v_ += o.v_;
    if (v_ >= kModulus) v_ -= kModulus;
    return *this;
  }
  ModP& operator-=(ModP o) { return *this += -o; }
  ModP& operator*=(ModP o) {
    const unsigned __int128 prod = static_cast<unsigned __int128>(v_) * o.v_;
    std::uint64_t lo = static_cast<std::uint64_t>(prod & kModulus);
    std::uint64_t hi = static_cast<std::uint64_t>(prod >> 61);
    v_ = reduce(lo + hi);
    return *this;
  }
  ModP& operator/=(ModP o) { return *this *= o.inverse(); }
  friend ModP operator+(ModP a, ModP b) { return a += b; }
  friend ModP operator-(ModP a, ModP b) { return a -= b; }
  friend ModP operator*(ModP a, ModP b) { return a *= b; }
  friend ModP operator/(ModP a, ModP b) { return a /= b; }
  bool operator==(const ModP&) const = default;

  ModP pow(std::uint64_t e) const;
  ModP inverse() const;
  std::string to_string() const { return std::to_string(v_); }

 private:
  static constexpr std::uint64_t reduce(std::uint64_t v) {
    v = (v & kModulus) + (v >> 61);
    return v >= kModulus ? v - kModulus : v;
  }
  std::uint64_t v_ = 0;
};

/// Ring homomorphism Z[q,q^-1] -> F_p sending q to a fixed invertible point.
class Specialization {
 public:
  explicit Specialization(std::uint64_t point);
  ModP operator()(const LaurentPoly& p) const;
  std::uint64_t point() const { return point_.value(); }

 private:
  ModP point_;
  ModP inv_point_;
};

/// Deterministic default evaluation point, far from roots of unity of small order.
inline constexpr std::uint64_t kDefaultSpecializationPoint = 1000000007ULL;

}  // namespace qschur::exactalg
