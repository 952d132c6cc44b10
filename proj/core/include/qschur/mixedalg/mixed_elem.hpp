#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "qschur/qmatrix/qmatrix_algebra.hpp"

namespace qschur::mixedalg {

using exactalg::LaurentPoly;
using qmatrix::AlgebraElem;
using qmatrix::Word;

/// Monomial x_{i_1 j_1}...x_{i_r j_r} x*_{k_1 l_1}...x*_{k_s l_s} of F(n,r) (x) F_*(n,s).
struct MixedWord {
  Word plain;
  Word starred;

  int plain_degree() const { return static_cast<int>(plain.size()); }
  int starred_degree() const { return static_cast<int>(starred.size()); }
  bool operator==(const MixedWord& o) const { return plain == o.plain && starred == o.starred; }
  bool operator<(const MixedWord& o) const { return plain == o.plain ? starred < o.starred : plain < o.plain; }
};

/// Linear combination of mixed words with Laurent coefficients.
class MixedElem {
 public:
  using Terms = std::map<MixedWord, LaurentPoly>;

  MixedElem() = default;
  static MixedElem one();
  static MixedElem monomial(MixedWord w, LaurentPoly c = LaurentPoly(1L));
  /// p (x) s for elements of the two factors.
  static MixedElem tensor(const AlgebraElem& plain, const AlgebraElem& starred);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  LaurentPoly coeff(const MixedWord& w) const;
  /// (plain degree, starred degree) shared by all terms; (-1, -1) if zero or inhomogeneous.
  std::pair<int, int> degree() const;

  void add_term(const MixedWord& w, const LaurentPoly& c);
  MixedElem& operator+=(const MixedElem& o);
  MixedElem& operator-=(const MixedElem& o);
  MixedElem& operator*=(const LaurentPoly& c);
  friend MixedElem operator+(MixedElem a, const MixedElem& b) { return a += b; }
  friend MixedElem operator-(MixedElem a, const MixedElem& b) { return a -= b; }
  friend MixedElem operator*(const LaurentPoly& c, MixedElem a) { return a *= c; }
  MixedElem operator-() const;
  bool operator==(const MixedElem& o) const { return terms_ == o.terms_; }
  bool operator!=(const MixedElem& o) const { return !(*this == o); }

  std::string to_string() const;

 private:
  Terms terms_;
};

/// A_q(n) (x) A_{q^-1}(n): plain letters satisfy the relations of A_q(n),
/// starred letters those of A_{q^-1}(n), and the two factors commute.
class MixedAlgebra {
 public:
  explicit MixedAlgebra(int n);
  MixedAlgebra(const MixedAlgebra&) = delete;
  MixedAlgebra& operator=(const MixedAlgebra&) = delete;

  int n() const { return n_; }
  const qmatrix::QMatrixAlgebra& plain() const { return plain_; }
  const qmatrix::QMatrixAlgebra& starred() const { return starred_; }

  MixedElem generator(int i, int j) const;
  MixedElem starred_generator(int i, int j) const;
  MixedElem normal_form(const MixedWord& w) const;
  MixedElem normal_form(const MixedElem& a) const;
  MixedElem multiply(const MixedElem& a, const MixedElem& b) const;
  /// Normal form of h1 * (x_{ij} (x) x*_{kl}) * h3 for normal words.
  MixedElem sandwich(const MixedWord& h1, qmatrix::Letter x, qmatrix::Letter xs, const MixedWord& h3) const;

 private:
  int n_;
  qmatrix::QMatrixAlgebra plain_;
  qmatrix::QMatrixAlgebra starred_;
};

/// Shared instance per n; lives for the whole process.
const MixedAlgebra& mixed_algebra(int n);

/// Normal mixed words of bidegree (r, s), ordered by plain word then starred word.
std::vector<MixedWord> mixed_monomial_basis(int n, int r, int s);

}  // namespace qschur::mixedalg
