#include "qschur/exactalg/mod_p.hpp"

#include <stdexcept>

namespace qschur::exactalg {

ModP ModP::from_signed(std::int64_t v) {
  if (v >= 0) return ModP(static_cast<std::uint64_t>(v));
  return -ModP(static_cast<std::uint64_t>(-(v + 1)) + 1);
}

ModP ModP::from_bigint(const BigInt& v) {
  BigInt r;
  static const BigInt modulus(std::to_string(kModulus));
  mpz_fdiv_r(r.get_mpz_t(), v.get_mpz_t(), modulus.get_mpz_t());
  return ModP(static_cast<std::uint64_t>(std::stoull(r.get_str())));
}

ModP ModP::pow(std::uint64_t e) const {
  ModP result(1);
  ModP base = *this;
  while (e != 0) {
    if (e & 1U) result *= base;
    base *= base;
    e >>= 1U;
  }
  return result;
}

ModP ModP::inverse() const {
  if (v_ == 0) throw std::domain_error("ModP: inverse of zero");
  return pow(kModulus - 2);
}

Specialization::Specialization(std::uint64_t point) : point_(point) {
  if (point_.is_zero()) throw std::invalid_argument("Specialization: q must be invertible");
  inv_point_ = point_.inverse();
}

ModP Specialization::operator()(const LaurentPoly& p) const {
  ModP acc;
  for (const auto& t : p.terms()) {
    const ModP base = t.exp >= 0 ? point_ : inv_point_;
    const auto e = static_cast<std::uint64_t>(t.exp >= 0 ? t.exp : -t.exp);
    ModP c = t.coeff.fits_slong_p() ? ModP::from_signed(t.coeff.get_si()) : ModP::from_bigint(t.coeff);
    acc += c * base.pow(e);
  }
  return acc;
}

}  // namespace qschur::exactalg
