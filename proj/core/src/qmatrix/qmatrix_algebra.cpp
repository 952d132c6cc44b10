#include "qschur/qmatrix/qmatrix_algebra.hpp"

#include <algorithm>
#include <stdexcept>

#include "qschur/combinat/perm.hpp"

namespace qschur::qmatrix {

QMatrixAlgebra::QMatrixAlgebra(int n, Variant variant)
    : n_(n),
      variant_(variant),
      qp_(LaurentPoly::q_pow(variant == Variant::Plain ? 1 : -1)),
      qp_inv_(LaurentPoly::q_pow(variant == Variant::Plain ? -1 : 1)),
      qp_diff_(qp_ - qp_inv_) {
  if (n < 1 || n > kMaxIndex) throw std::invalid_argument("QMatrixAlgebra: n out of range");
}

void QMatrixAlgebra::check_index(int i) const {
  if (i < 1 || i > n_) throw std::out_of_range("QMatrixAlgebra: index out of range");
}

AlgebraElem QMatrixAlgebra::generator(int i, int j) const {
  check_index(i);
  check_index(j);
  return AlgebraElem::monomial(Word(1, static_cast<char>(make_letter(i, j))));
}

std::size_t QMatrixAlgebra::cache_size() const {
  std::lock_guard<std::mutex> lock(mutex_);
  return cache_.size();
}

AlgebraElem QMatrixAlgebra::mul_letter(const Word& w, Letter x) const {
  if (w.empty() || letter_at(w, w.size() - 1) <= x) {
    Word out = w;
    out.push_back(static_cast<char>(x));
    return AlgebraElem::monomial(std::move(out));
  }
  Word key = w;
  key.push_back(static_cast<char>(x));
  {
    std::lock_guard<std::mutex> lock(mutex_);
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
  }
  const Letter y = letter_at(w, w.size() - 1);
  const Word prefix = w.substr(0, w.size() - 1);
  const int a = letter_row(y), b = letter_col(y), c = letter_row(x), d = letter_col(x);

  // w x = prefix (y x), and y x is rewritten into sorted pairs.
  AlgebraElem result;
  auto append_pair = [&](const LaurentPoly& coeff, Letter first, Letter second) {
    const AlgebraElem left = mul_letter(prefix, first);
    for (const auto& [u, cu] : left.terms()) {
      AlgebraElem part = mul_letter(u, second);
      part *= coeff * cu;
      result += part;
    }
  };
  if (a == c || b == d) {
    append_pair(qp_inv_, x, y);
  } else if (b < d) {
    append_pair(LaurentPoly(1L), x, y);
  } else {
    append_pair(LaurentPoly(1L), x, y);
    append_pair(-qp_diff_, make_letter(c, b), make_letter(a, d));
  }
  std::lock_guard<std::mutex> lock(mutex_);
  cache_.emplace(std::move(key), result);
  return result;
}

AlgebraElem QMatrixAlgebra::multiply_letter(const AlgebraElem& a, Letter x) const {
  AlgebraElem out;
  for (const auto& [w, c] : a.terms()) {
    AlgebraElem part = mul_letter(w, x);
    part *= c;
    out += part;
  }
  return out;
}

AlgebraElem QMatrixAlgebra::multiply_letter_left(Letter x, const AlgebraElem& a) const {
  AlgebraElem out;
  for (const auto& [w, c] : a.terms()) {
    AlgebraElem part = AlgebraElem::monomial(Word(1, static_cast<char>(x)), c);
    for (std::size_t k = 0; k < w.size(); ++k) part = multiply_letter(part, letter_at(w, k));
    out += part;
  }
  return out;
}

AlgebraElem QMatrixAlgebra::normal_form(const Word& w) const {
  AlgebraElem out = AlgebraElem::one();
  for (std::size_t k = 0; k < w.size(); ++k) {
    const Letter x = letter_at(w, k);
    check_index(letter_row(x));
    check_index(letter_col(x));
    out = multiply_letter(out, x);
  }
  return out;
}

AlgebraElem QMatrixAlgebra::normal_form(const AlgebraElem& a) const {
  AlgebraElem out;
  for (const auto& [w, c] : a.terms()) out += c * normal_form(w);
  return out;
}

AlgebraElem QMatrixAlgebra::multiply(const AlgebraElem& a, const AlgebraElem& b) const {
  AlgebraElem out;
  for (const auto& [u, d] : b.terms()) {
    AlgebraElem part = a;
    for (std::size_t k = 0; k < u.size(); ++k) part = multiply_letter(part, letter_at(u, k));
    out += d * part;
  }
  return out;
}

AlgebraElem QMatrixAlgebra::power(const AlgebraElem& a, int e) const {
  if (e < 0) throw std::invalid_argument("QMatrixAlgebra::power: negative exponent");
  AlgebraElem out = AlgebraElem::one();
  for (int i = 0; i < e; ++i) out = multiply(out, a);
  return out;
}

namespace {

bool has_repeat(std::vector<int> v) {
  std::sort(v.begin(), v.end());
  return std::adjacent_find(v.begin(), v.end()) != v.end();
}

}  // namespace

AlgebraElem QMatrixAlgebra::right_minor(const std::vector<int>& rows, const std::vector<int>& cols) const {
  if (rows.size() != cols.size()) throw std::invalid_argument("right_minor: length mismatch");
  for (int i : rows) check_index(i);
  for (int j : cols) check_index(j);
  if (has_repeat(rows)) return {};
  const int k = static_cast<int>(rows.size());
  std::vector<int> sorted_rows = rows;
  std::sort(sorted_rows.begin(), sorted_rows.end());
  const LaurentPoly sign = (-qp_inv_).pow(static_cast<unsigned>(combinat::inversions(rows)));
  AlgebraElem out;
  for (const auto& w : combinat::all_perms(k)) {
    NCWord word;
    for (int t = 1; t <= k; ++t) word.emplace_back(sorted_rows[w(t) - 1], cols[t - 1]);
    out += (-qp_).pow(static_cast<unsigned>(w.length())) * normal_form(word);
  }
  out *= sign;
  return out;
}

AlgebraElem QMatrixAlgebra::left_minor(const std::vector<int>& rows, const std::vector<int>& cols) const {
  if (rows.size() != cols.size()) throw std::invalid_argument("left_minor: length mismatch");
  for (int i : rows) check_index(i);
  for (int j : cols) check_index(j);
  if (has_repeat(cols)) return {};
  const int k = static_cast<int>(rows.size());
  std::vector<int> sorted_cols = cols;
  std::sort(sorted_cols.begin(), sorted_cols.end());
  const LaurentPoly sign = (-qp_inv_).pow(static_cast<unsigned>(combinat::inversions(cols)));
  AlgebraElem out;
  for (const auto& w : combinat::all_perms(k)) {
    NCWord word;
    for (int t = 1; t <= k; ++t) word.emplace_back(rows[t - 1], sorted_cols[w(t) - 1]);
    out += (-qp_).pow(static_cast<unsigned>(w.length())) * normal_form(word);
  }
  out *= sign;
  return out;
}

AlgebraElem QMatrixAlgebra::minor(MinorSide side, const std::vector<int>& rows, const std::vector<int>& cols) const {
  return side == MinorSide::Right ? right_minor(rows, cols) : left_minor(rows, cols);
}

AlgebraElem QMatrixAlgebra::det() const {
  std::vector<int> idx(n_);
  for (int i = 0; i < n_; ++i) idx[i] = i + 1;
  return right_minor(idx, idx);
}

AlgebraElem QMatrixAlgebra::bideterminant(const combinat::Tableau& t, const combinat::Tableau& t2, RowOrder order) const {
  if (!(t.shape() == t2.shape())) throw std::invalid_argument("bideterminant: shape mismatch");
  AlgebraElem out = AlgebraElem::one();
  const int k = t.row_count();
  for (int s = 0; s < k; ++s) {
    const int row = order == RowOrder::Reversed ? k - 1 - s : s;
    out = multiply(out, right_minor(t.row(row), t2.row(row)));
    if (out.is_zero()) break;
  }
  return out;
}

namespace {

void words_rec(const std::vector<Letter>& letters, std::size_t start, int remaining, Word& cur, std::vector<Word>& out) {
  if (remaining == 0) {
    out.push_back(cur);
    return;
  }
  for (std::size_t k = start; k < letters.size(); ++k) {
    cur.push_back(static_cast<char>(letters[k]));
    words_rec(letters, k, remaining - 1, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<Word> monomial_basis(int n, int m) {
  std::vector<Letter> letters;
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) letters.push_back(make_letter(i, j));
  }
  std::vector<Word> out;
  Word cur;
  words_rec(letters, 0, m, cur, out);
  return out;
}

std::vector<LaplaceTerm> laplace_expand(const std::vector<int>& rows, const std::vector<int>& cols, int l, MinorSide side,
                                        const LaurentPoly& q) {
  if (rows.size() != cols.size()) throw std::invalid_argument("laplace_expand: length mismatch");
  const int k = static_cast<int>(rows.size());
  if (k == 0 || l < 1 || l > k) throw std::invalid_argument("laplace_expand: split position out of range");
  const auto& ordered = side == MinorSide::Left ? cols : rows;
  for (int t = 1; t < k; ++t) {
    if (ordered[t - 1] >= ordered[t]) throw std::invalid_argument("laplace_expand: indices must be strictly increasing");
  }
  std::vector<LaplaceTerm> out;
  for (const auto& w : combinat::shuffles(k, l)) {
    std::vector<int> permuted(k);
    for (int t = 1; t <= k; ++t) permuted[t - 1] = ordered[w(t) - 1];
    LaplaceTerm term{(-q).pow(static_cast<unsigned>(w.length())), {}, {}};
    const std::vector<int> head(permuted.begin(), permuted.begin() + l);
    const std::vector<int> tail(permuted.begin() + l, permuted.end());
    const std::vector<int> fixed_head(side == MinorSide::Left ? rows.begin() : cols.begin(),
                                      (side == MinorSide::Left ? rows.begin() : cols.begin()) + l);
    const std::vector<int> fixed_tail((side == MinorSide::Left ? rows.begin() : cols.begin()) + l,
                                      side == MinorSide::Left ? rows.end() : cols.end());
    if (side == MinorSide::Left) {
      term.first = {fixed_head, head};
      term.second = {fixed_tail, tail};
    } else {
      term.first = {head, fixed_head};
      term.second = {tail, fixed_tail};
    }
    out.push_back(std::move(term));
  }
  return out;
}

}  // namespace qschur::qmatrix
