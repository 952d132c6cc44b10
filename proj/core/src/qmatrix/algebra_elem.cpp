#include "qschur/qmatrix/algebra_elem.hpp"

#include <stdexcept>

namespace qschur::qmatrix {

Letter make_letter(int i, int j) {
  if (i < 1 || j < 1 || i > kMaxIndex || j > kMaxIndex) throw std::out_of_range("make_letter: index out of range");
  return static_cast<Letter>(16 * i + j);
}

Word to_word(const NCWord& w) {
  Word out;
  out.reserve(w.size());
  for (const auto& [i, j] : w) out.push_back(static_cast<char>(make_letter(i, j)));
  return out;
}

NCWord to_ncword(const Word& w) {
  NCWord out;
  out.reserve(w.size());
  for (std::size_t k = 0; k < w.size(); ++k) out.emplace_back(letter_row(letter_at(w, k)), letter_col(letter_at(w, k)));
  return out;
}

AlgebraElem AlgebraElem::one() { return monomial(Word()); }

AlgebraElem AlgebraElem::monomial(Word w, LaurentPoly c) {
  AlgebraElem a;
  if (!c.is_zero()) a.terms_.emplace(std::move(w), std::move(c));
  return a;
}

LaurentPoly AlgebraElem::coeff(const Word& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? LaurentPoly() : it->second;
}

int AlgebraElem::degree() const {
  if (terms_.empty()) return -1;
  const auto d = terms_.begin()->first.size();
  for (const auto& [w, c] : terms_) {
    if (w.size() != d) return -1;
  }
  return static_cast<int>(d);
}

void AlgebraElem::add_term(const Word& w, const LaurentPoly& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

AlgebraElem& AlgebraElem::operator+=(const AlgebraElem& o) {
  for (const auto& [w, c] : o.terms_) add_term(w, c);
  return *this;
}

AlgebraElem& AlgebraElem::operator-=(const AlgebraElem& o) {
  for (const auto& [w, c] : o.terms_) add_term(w, -c);
  return *this;
}

AlgebraElem& AlgebraElem::operator*=(const LaurentPoly& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [w, x] : terms_) x *= c;
  return *this;
}

AlgebraElem AlgebraElem::operator-() const {
  AlgebraElem out = *this;
  for (auto& [w, x] : out.terms_) x = -x;
  return out;
}

std::string AlgebraElem::to_string(const std::string& symbol) const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& [w, c] : terms_) {
    if (!s.empty()) s += " + ";
    s += "(" + c.to_string() + ")";
    for (const auto& [i, j] : to_ncword(w)) s += "*" + symbol + std::to_string(i) + std::to_string(j);
  }
  return s;
}

std::pair<std::vector<int>, std::vector<int>> word_content(const Word& w, int n) {
  std::vector<int> alpha(n, 0);
  std::vector<int> beta(n, 0);
  for (std::size_t k = 0; k < w.size(); ++k) {
    ++alpha.at(letter_row(letter_at(w, k)) - 1);
    ++beta.at(letter_col(letter_at(w, k)) - 1);
  }
  return {alpha, beta};
}

}  // namespace qschur::qmatrix
