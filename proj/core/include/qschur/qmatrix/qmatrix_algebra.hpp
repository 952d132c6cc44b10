#pragma once

#include <mutex>
#include <unordered_map>
#include <vector>

#include "qschur/combinat/tableau.hpp"
#include "qschur/qmatrix/algebra_elem.hpp"

namespace qschur::qmatrix {

/// Which quantum matrix algebra: A_q(n), or A_{q^-1}(n) for the starred letters.
enum class Variant { Plain, Starred };
/// Row order of the minors in a bideterminant product.
enum class RowOrder { Reversed, Forward };
enum class MinorSide { Right, Left };

/// The quantum matrix algebra A_q(n) (or A_{q^-1}(n)) with PBW normal forms.
///
/// Normal words are nondecreasing in the row-major order on (i, j). A
/// descending pair y = x_{ab} > x = x_{cd} is rewritten as
///   a == c or b == d:  y x = q^-1 x y
///   a > c, b < d:      y x = x y
///   a > c, b > d:      y x = x y - (q - q^-1) x_{cb} x_{ad}
/// with q replaced by q^-1 for the starred variant. Products of a normal word
/// with a letter are memoized; the cache is guarded for concurrent use.
class QMatrixAlgebra {
 public:
  explicit QMatrixAlgebra(int n, Variant variant = Variant::Plain);
  QMatrixAlgebra(const QMatrixAlgebra&) = delete;
  QMatrixAlgebra& operator=(const QMatrixAlgebra&) = delete;

  int n() const { return n_; }
  Variant variant() const { return variant_; }
  /// The deformation parameter of this algebra: q, or q^-1 when starred.
  const LaurentPoly& param() const { return qp_; }

  AlgebraElem generator(int i, int j) const;
  AlgebraElem normal_form(const Word& w) const;
  AlgebraElem normal_form(const NCWord& w) const { return normal_form(to_word(w)); }
  /// Normal form of an arbitrary combination of (possibly unsorted) words.
  AlgebraElem normal_form(const AlgebraElem& a) const;
  AlgebraElem multiply(const AlgebraElem& a, const AlgebraElem& b) const;
  AlgebraElem multiply_letter(const AlgebraElem& a, Letter x) const;
  AlgebraElem multiply_letter_left(Letter x, const AlgebraElem& a) const;
  AlgebraElem power(const AlgebraElem& a, int e) const;

  /// Right quantum minor; unsorted rows are sorted with a factor -q^-1 per swap.
  AlgebraElem right_minor(const std::vector<int>& rows, const std::vector<int>& cols) const;
  /// Left quantum minor; unsorted columns are sorted with a factor -q^-1 per swap.
  AlgebraElem left_minor(const std::vector<int>& rows, const std::vector<int>& cols) const;
  AlgebraElem minor(MinorSide side, const std::vector<int>& rows, const std::vector<int>& cols) const;
  AlgebraElem det() const;

  /// Product of right row minors; Reversed gives (t_k|t'_k)...(t_1|t'_1).
  AlgebraElem bideterminant(const combinat::Tableau& t, const combinat::Tableau& t2,
                            RowOrder order = RowOrder::Reversed) const;

  std::size_t cache_size() const;

 private:
  AlgebraElem mul_letter(const Word& w, Letter x) const;
  void check_index(int i) const;

  int n_;
  Variant variant_;
  LaurentPoly qp_;
  LaurentPoly qp_inv_;
  LaurentPoly qp_diff_;  // qp - qp^-1
  mutable std::mutex mutex_;
  mutable std::unordered_map<Word, AlgebraElem> cache_;
};

/// All normal words of degree m, in lexicographic order; C(n^2+m-1, m) of them.
std::vector<Word> monomial_basis(int n, int m);

struct MinorIndex {
  std::vector<int> rows;
  std::vector<int> cols;
  bool operator==(const MinorIndex& o) const { return rows == o.rows && cols == o.cols; }
};

struct LaplaceTerm {
  LaurentPoly coeff;
  MinorIndex first;
  MinorIndex second;
};

/// Laplace expansion of a k-minor split after position l (1 <= l < k; l = k gives the trivial term).
/// Left side: columns must increase; the shuffle acts on columns, factors are left minors.
/// Right side: rows must increase; the shuffle acts on rows, factors are right minors.
std::vector<LaplaceTerm> laplace_expand(const std::vector<int>& rows, const std::vector<int>& cols, int l,
                                        MinorSide side, const LaurentPoly& q = LaurentPoly::q_pow(1));

}  // namespace qschur::qmatrix
