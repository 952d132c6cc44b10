#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "qschur/exactalg/laurent_poly.hpp"

namespace qschur::qmatrix {

using exactalg::LaurentPoly;

/// Letter x_{ij} encoded as 16*i + j, so byte order is row-major order on (i, j).
using Letter = std::uint8_t;
/// Word of letters; std::string gives hashing and unsigned lexicographic order for free.
using Word = std::string;
/// Word given by explicit index pairs (i, j), 1 <= i, j <= n.
using NCWord = std::vector<std::pair<int, int>>;

inline constexpr int kMaxIndex = 15;

Letter make_letter(int i, int j);
inline int letter_row(Letter c) { return c >> 4; }
inline int letter_col(Letter c) { return c & 15; }
inline Letter letter_at(const Word& w, std::size_t k) { return static_cast<Letter>(w[k]); }
Word to_word(const NCWord& w);
NCWord to_ncword(const Word& w);

/// Sparse linear combination of words with Laurent coefficients.
/// Elements produced by an algebra hold normal (sorted) words only.
class AlgebraElem {
 public:
  using Terms = std::map<Word, LaurentPoly>;

  AlgebraElem() = default;
  static AlgebraElem one();
  static AlgebraElem monomial(Word w, LaurentPoly c = LaurentPoly(1L));

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  /// Coefficient of w (zero if absent).
  LaurentPoly coeff(const Word& w) const;
  /// Common degree of all words; -1 if zero or inhomogeneous.
  int degree() const;

  void add_term(const Word& w, const LaurentPoly& c);
  AlgebraElem& operator+=(const AlgebraElem& o);
  AlgebraElem& operator-=(const AlgebraElem& o);
  AlgebraElem& operator*=(const LaurentPoly& c);
  friend AlgebraElem operator+(AlgebraElem a, const AlgebraElem& b) { return a += b; }
  friend AlgebraElem operator-(AlgebraElem a, const AlgebraElem& b) { return a -= b; }
  friend AlgebraElem operator*(const LaurentPoly& c, AlgebraElem a) { return a *= c; }
  AlgebraElem operator-() const;
  bool operator==(const AlgebraElem& o) const { return terms_ == o.terms_; }
  bool operator!=(const AlgebraElem& o) const { return !(*this == o); }

  std::string to_string(const std::string& symbol = "x") const;

 private:
  Terms terms_;
};

/// Content (alpha, beta) of a word: multiplicities of row and column indices.
std::pair<std::vector<int>, std::vector<int>> word_content(const Word& w, int n);

}  // namespace qschur::qmatrix
