#include "qschur/exactalg/laurent_poly.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace qschur::exactalg {

namespace {

// Dense polynomial in q with nonnegative exponents; index = degree.
using Dense = std::vector<BigInt>;

void trim(Dense& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

int degree(const Dense& p) { return static_cast<int>(p.size()) - 1; }

Dense to_dense(const LaurentPoly& a, int shift) {
  Dense out;
  if (a.is_zero()) return out;
  out.assign(static_cast<std::size_t>(a.max_exp() - shift + 1), BigInt(0));
  for (const auto& t : a.terms()) out[static_cast<std::size_t>(t.exp - shift)] = t.coeff;
  return out;
}

LaurentPoly from_dense(const Dense& p, int shift) {
  std::vector<LaurentPoly::Term> terms;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] != 0) terms.push_back({static_cast<int>(i) + shift, p[i]});
  }
  return LaurentPoly::from_terms(std::move(terms));
}

BigInt dense_content(const Dense& p) {
  BigInt g = 0;
  for (const auto& c : p) {
    if (c != 0) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

void dense_div_scalar(Dense& p, const BigInt& d) {
  for (auto& c : p) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), d.get_mpz_t());
}

// Exact division of polynomials over Z; false if not exact.
bool dense_exact_div(Dense num, const Dense& den, Dense& quot) {
  trim(num);
  const int dn = degree(num);
  const int dd = degree(den);
  quot.clear();
  if (dn < 0) return true;
  if (dn < dd) return false;
  quot.assign(static_cast<std::size_t>(dn - dd + 1), BigInt(0));
  const BigInt& lc = den.back();
  BigInt qcoef;
  for (int k = dn - dd; k >= 0; --k) {
    BigInt& top = num[static_cast<std::size_t>(k + dd)];
    if (top == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), lc.get_mpz_t())) return false;
    mpz_divexact(qcoef.get_mpz_t(), top.get_mpz_t(), lc.get_mpz_t());
    quot[static_cast<std::size_t>(k)] = qcoef;
    for (int j = 0; j <= dd; ++j) {
      BigInt& slot = num[static_cast<std::size_t>(k + j)];
      mpz_submul(slot.get_mpz_t(), qcoef.get_mpz_t(), den[static_cast<std::size_t>(j)].get_mpz_t());
    }
  }
  for (const auto& c : num) {
    if (c != 0) return false;
  }
  return true;
}

// Pseudo-remainder of a by b (deg b >= 0).
Dense pseudo_rem(Dense a, const Dense& b) {
  const int db = degree(b);
  const BigInt& lc = b.back();
  while (degree(a) >= db) {
    const int shift = degree(a) - db;
    BigInt lead = a.back();
    for (auto& c : a) c *= lc;
    for (int j = 0; j <= db; ++j) {
      BigInt& slot = a[static_cast<std::size_t>(shift + j)];
      mpz_submul(slot.get_mpz_t(), lead.get_mpz_t(), b[static_cast<std::size_t>(j)].get_mpz_t());
    }
    trim(a);
  }
  return a;
}

Dense dense_gcd(Dense a, Dense b) {
  trim(a);
  trim(b);
  if (a.empty()) return b;
  if (b.empty()) return a;
  BigInt ca = dense_content(a);
  BigInt cb = dense_content(b);
  BigInt c;
  mpz_gcd(c.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
  dense_div_scalar(a, ca);
  dense_div_scalar(b, cb);
  if (degree(a) < degree(b)) std::swap(a, b);
  while (!b.empty() && degree(b) > 0) {
    Dense r = pseudo_rem(a, b);
    a = std::move(b);
    if (r.empty()) {
      b.clear();
      break;
    }
    BigInt cr = dense_content(r);
    dense_div_scalar(r, cr);
    b = std::move(r);
  }
  if (!b.empty()) {
    // b is a nonzero constant: the primitive gcd is 1.
    a.assign(1, BigInt(1));
  }
  if (a.back() < 0) {
    for (auto& x : a) x = -x;
  }
  for (auto& x : a) x *= c;
  return a;
}

}  // namespace

LaurentPoly::LaurentPoly(long c) {
  if (c != 0) terms_.push_back({0, BigInt(c)});
}

LaurentPoly::LaurentPoly(const BigInt& c) {
  if (c != 0) terms_.push_back({0, c});
}

LaurentPoly LaurentPoly::monomial(const BigInt& c, int exp) {
  LaurentPoly p;
  if (c != 0) p.terms_.push_back({exp, c});
  return p;
}

LaurentPoly LaurentPoly::q_pow(int e) { return monomial(BigInt(1), e); }

LaurentPoly LaurentPoly::neg_q_pow(int e) { return monomial(BigInt((e % 2 == 0) ? 1 : -1), e); }

LaurentPoly LaurentPoly::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return a.exp < b.exp; });
  LaurentPoly p;
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().exp == t.exp) {
      p.terms_.back().coeff += t.coeff;
    } else {
      if (!p.terms_.empty() && p.terms_.back().coeff == 0) p.terms_.pop_back();
      p.terms_.push_back(std::move(t));
    }
  }
  if (!p.terms_.empty() && p.terms_.back().coeff == 0) p.terms_.pop_back();
  return p;
}

bool LaurentPoly::is_one() const { return terms_.size() == 1 && terms_[0].exp == 0 && terms_[0].coeff == 1; }

bool LaurentPoly::is_unit() const {
  return terms_.size() == 1 && (terms_[0].coeff == 1 || terms_[0].coeff == -1);
}

int LaurentPoly::min_exp() const {
  if (terms_.empty()) throw std::domain_error("min_exp of zero polynomial");
  return terms_.front().exp;
}

int LaurentPoly::max_exp() const {
  if (terms_.empty()) throw std::domain_error("max_exp of zero polynomial");
  return terms_.back().exp;
}

BigInt LaurentPoly::coeff(int exp) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), exp,
                             [](const Term& t, int e) { return t.exp < e; });
  if (it != terms_.end() && it->exp == exp) return it->coeff;
  return 0;
}

const BigInt& LaurentPoly::leading_coeff() const {
  if (terms_.empty()) throw std::domain_error("leading_coeff of zero polynomial");
  return terms_.back().coeff;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r = *this;
  for (auto& t : r.terms_) t.coeff = -t.coeff;
  return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  if (o.terms_.empty()) return *this;
  if (terms_.empty()) return *this = o;
  std::vector<Term> out;
  out.reserve(terms_.size() + o.terms_.size());
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < terms_.size() || j < o.terms_.size()) {
    if (j == o.terms_.size() || (i < terms_.size() && terms_[i].exp < o.terms_[j].exp)) {
      out.push_back(std::move(terms_[i++]));
    } else if (i == terms_.size() || o.terms_[j].exp < terms_[i].exp) {
      out.push_back(o.terms_[j++]);
    } else {
      BigInt c = terms_[i].coeff + o.terms_[j].coeff;
      if (c != 0) out.push_back({terms_[i].exp, std::move(c)});
      ++i;
      ++j;
    }
  }
  terms_ = std::move(out);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) { return *this += -o; }

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (b.terms_.size() == 1) {
    LaurentPoly r = a;
    for (auto& t : r.terms_) {
      t.exp += b.terms_[0].exp;
      t.coeff *= b.terms_[0].coeff;
    }
    return r;
  }
  if (a.terms_.size() == 1) return b * a;
  const int lo = a.min_exp() + b.min_exp();
  const int hi = a.max_exp() + b.max_exp();
  Dense acc(static_cast<std::size_t>(hi - lo + 1), BigInt(0));
  for (const auto& x : a.terms_) {
    for (const auto& y : b.terms_) {
      BigInt& slot = acc[static_cast<std::size_t>(x.exp + y.exp - lo)];
      mpz_addmul(slot.get_mpz_t(), x.coeff.get_mpz_t(), y.coeff.get_mpz_t());
    }
  }
  return from_dense(acc, lo);
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) { return *this = *this * o; }

bool LaurentPoly::operator<(const LaurentPoly& o) const {
  const std::size_t n = std::min(terms_.size(), o.terms_.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (terms_[i].exp != o.terms_[i].exp) return terms_[i].exp < o.terms_[i].exp;
    if (terms_[i].coeff != o.terms_[i].coeff) return terms_[i].coeff < o.terms_[i].coeff;
  }
  return terms_.size() < o.terms_.size();
}

LaurentPoly LaurentPoly::shifted(int e) const {
  LaurentPoly r = *this;
  for (auto& t : r.terms_) t.exp += e;
  return r;
}

LaurentPoly LaurentPoly::pow(unsigned e) const {
  LaurentPoly result(1L);
  LaurentPoly base = *this;
  while (e != 0) {
    if (e & 1U) result *= base;
    e >>= 1U;
    if (e != 0) base = base * base;
  }
  return result;
}

LaurentPoly LaurentPoly::bar() const {
  std::vector<Term> terms;
  terms.reserve(terms_.size());
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) terms.push_back({-it->exp, it->coeff});
  LaurentPoly r;
  r.terms_ = std::move(terms);
  return r;
}

BigInt LaurentPoly::at_one() const {
  BigInt s = 0;
  for (const auto& t : terms_) s += t.coeff;
  return s;
}

BigInt LaurentPoly::content() const {
  BigInt g = 0;
  for (const auto& t : terms_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.coeff.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

LaurentPoly LaurentPoly::div_integer(const BigInt& d) const {
  LaurentPoly r = *this;
  for (auto& t : r.terms_) {
    if (!mpz_divisible_p(t.coeff.get_mpz_t(), d.get_mpz_t())) {
      throw std::domain_error("div_integer: not exact");
    }
    mpz_divexact(t.coeff.get_mpz_t(), t.coeff.get_mpz_t(), d.get_mpz_t());
  }
  return r;
}

std::optional<LaurentPoly> LaurentPoly::try_div(const LaurentPoly& d) const {
  if (d.is_zero()) throw std::domain_error("division by zero polynomial");
  if (is_zero()) return LaurentPoly{};
  if (d.terms_.size() == 1) {
    const auto& dt = d.terms_[0];
    LaurentPoly r = *this;
    for (auto& t : r.terms_) {
      if (!mpz_divisible_p(t.coeff.get_mpz_t(), dt.coeff.get_mpz_t())) return std::nullopt;
      mpz_divexact(t.coeff.get_mpz_t(), t.coeff.get_mpz_t(), dt.coeff.get_mpz_t());
      t.exp -= dt.exp;
    }
    return r;
  }
  const int sa = min_exp();
  const int sd = d.min_exp();
  Dense quot;
  if (!dense_exact_div(to_dense(*this, sa), to_dense(d, sd), quot)) return std::nullopt;
  return from_dense(quot, sa - sd);
}

LaurentPoly LaurentPoly::exact_div(const LaurentPoly& d) const {
  auto r = try_div(d);
  if (!r) throw std::domain_error("exact_div: " + to_string() + " is not divisible by " + d.to_string());
  return *std::move(r);
}

std::string LaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    BigInt c = it->coeff;
    if (!first) {
      os << (c < 0 ? " - " : " + ");
      if (c < 0) c = -c;
    } else if (c < 0) {
      os << "-";
      c = -c;
    }
    first = false;
    const bool unit = (c == 1);
    if (it->exp == 0) {
      os << c.get_str();
      continue;
    }
    if (!unit) os << c.get_str() << "*";
    os << "q";
    if (it->exp != 1) os << "^" << (it->exp < 0 ? "(" : "") << it->exp << (it->exp < 0 ? ")" : "");
  }
  return os.str();
}

LaurentPoly gcd(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() && b.is_zero()) return {};
  if (a.is_zero()) return gcd(b, b);
  if (b.is_zero()) {
    Dense d = dense_gcd(to_dense(a, a.min_exp()), Dense{});
    if (d.back() < 0) {
      for (auto& x : d) x = -x;
    }
    return from_dense(d, 0);
  }
  if (a.is_monomial() || b.is_monomial()) {
    BigInt g;
    BigInt ca = a.content();
    BigInt cb = b.content();
    mpz_gcd(g.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
    return LaurentPoly(g);
  }
  return from_dense(dense_gcd(to_dense(a, a.min_exp()), to_dense(b, b.min_exp())), 0);
}

LaurentPoly quantum_integer(int l) {
  if (l < 0) throw std::invalid_argument("quantum_integer: negative argument");
  std::vector<LaurentPoly::Term> terms;
  for (int i = 0; i < l; ++i) terms.push_back({2 * i - l + 1, BigInt(1)});
  return LaurentPoly::from_terms(std::move(terms));
}

LaurentPoly quantum_factorial(int l) {
  LaurentPoly r(1L);
  for (int i = 2; i <= l; ++i) r *= quantum_integer(i);
  return r;
}

std::ostream& operator<<(std::ostream& os, const LaurentPoly& p) { return os << p.to_string(); }

}  // namespace qschur::exactalg
