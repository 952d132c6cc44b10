#include "qschur/mixedalg/mixed_elem.hpp"

#include <memory>
#include <mutex>
#include <stdexcept>

namespace qschur::mixedalg {

using qmatrix::Letter;
using qmatrix::make_letter;

MixedElem MixedElem::one() { return monomial(MixedWord{}); }

MixedElem MixedElem::monomial(MixedWord w, LaurentPoly c) {
  MixedElem a;
  if (!c.is_zero()) a.terms_.emplace(std::move(w), std::move(c));
  return a;
}

MixedElem MixedElem::tensor(const AlgebraElem& plain, const AlgebraElem& starred) {
  MixedElem out;
  for (const auto& [p, c] : plain.terms()) {
    for (const auto& [s, d] : starred.terms()) out.add_term(MixedWord{p, s}, c * d);
  }
  return out;
}

LaurentPoly MixedElem::coeff(const MixedWord& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? LaurentPoly() : it->second;
}

std::pair<int, int> MixedElem::degree() const {
  if (terms_.empty()) return {-1, -1};
  const auto d = std::make_pair(terms_.begin()->first.plain_degree(), terms_.begin()->first.starred_degree());
  for (const auto& [w, c] : terms_) {
    if (w.plain_degree() != d.first || w.starred_degree() != d.second) return {-1, -1};
  }
  return d;
}

void MixedElem::add_term(const MixedWord& w, const LaurentPoly& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

MixedElem& MixedElem::operator+=(const MixedElem& o) {
  for (const auto& [w, c] : o.terms_) add_term(w, c);
  return *this;
}

MixedElem& MixedElem::operator-=(const MixedElem& o) {
  for (const auto& [w, c] : o.terms_) add_term(w, -c);
  return *this;
}

MixedElem& MixedElem::operator*=(const LaurentPoly& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [w, x] : terms_) x *= c;
  return *this;
}

MixedElem MixedElem::operator-() const {
  MixedElem out = *this;
  for (auto& [w, x] : out.terms_) x = -x;
  return out;
}

std::string MixedElem::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& [w, c] : terms_) {
    if (!s.empty()) s += " + ";
    s += "(" + c.to_string() + ")";
    for (const auto& [i, j] : qmatrix::to_ncword(w.plain)) s += "*x" + std::to_string(i) + std::to_string(j);
    for (const auto& [i, j] : qmatrix::to_ncword(w.starred)) s += "*y" + std::to_string(i) + std::to_string(j);
  }
  return s;
}

MixedAlgebra::MixedAlgebra(int n)
    : n_(n), plain_(n, qmatrix::Variant::Plain), starred_(n, qmatrix::Variant::Starred) {}

MixedElem MixedAlgebra::generator(int i, int j) const {
  if (i < 1 || j < 1 || i > n_ || j > n_) throw std::out_of_range("MixedAlgebra::generator: index out of range");
  return MixedElem::monomial(MixedWord{Word(1, static_cast<char>(make_letter(i, j))), Word()});
}

MixedElem MixedAlgebra::starred_generator(int i, int j) const {
  if (i < 1 || j < 1 || i > n_ || j > n_) throw std::out_of_range("MixedAlgebra::starred_generator: index out of range");
  return MixedElem::monomial(MixedWord{Word(), Word(1, static_cast<char>(make_letter(i, j)))});
}

MixedElem MixedAlgebra::normal_form(const MixedWord& w) const {
  return MixedElem::tensor(plain_.normal_form(w.plain), starred_.normal_form(w.starred));
}

MixedElem MixedAlgebra::normal_form(const MixedElem& a) const {
  MixedElem out;
  for (const auto& [w, c] : a.terms()) out += c * normal_form(w);
  return out;
}

MixedElem MixedAlgebra::multiply(const MixedElem& a, const MixedElem& b) const {
  MixedElem out;
  for (const auto& [u, c] : a.terms()) {
    for (const auto& [v, d] : b.terms()) out += (c * d) * normal_form(MixedWord{u.plain + v.plain, u.starred + v.starred});
  }
  return out;
}

MixedElem MixedAlgebra::sandwich(const MixedWord& h1, Letter x, Letter xs, const MixedWord& h3) const {
  return normal_form(MixedWord{h1.plain + static_cast<char>(x) + h3.plain, h1.starred + static_cast<char>(xs) + h3.starred});
}

const MixedAlgebra& mixed_algebra(int n) {
  static std::mutex mutex;
  static std::map<int, std::unique_ptr<MixedAlgebra>> instances;
  std::lock_guard<std::mutex> lock(mutex);
  auto& slot = instances[n];
  if (!slot) slot = std::make_unique<MixedAlgebra>(n);
  return *slot;
}

std::vector<MixedWord> mixed_monomial_basis(int n, int r, int s) {
  const auto plain = qmatrix::monomial_basis(n, r);
  const auto starred = qmatrix::monomial_basis(n, s);
  std::vector<MixedWord> out;
  out.reserve(plain.size() * starred.size());
  for (const auto& p : plain) {
    for (const auto& t : starred) out.push_back(MixedWord{p, t});
  }
  return out;
}

}  // namespace qschur::mixedalg
