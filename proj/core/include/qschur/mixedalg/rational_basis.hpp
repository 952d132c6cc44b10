#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "qschur/combinat/rational_tableau.hpp"
#include "qschur/mixedalg/quotient.hpp"
#include "qschur/qmatrix/standard_basis.hpp"

namespace qschur::mixedalg {

using combinat::RationalTableau;
using combinat::Tableau;

/// det^{(1)} = sum_l x_{1l} x*_{1l}; det^{(k)} = sum_l x_{1l} det^{(k-1)} x*_{1l}.
MixedElem det_frak(int k, int n);

/// (t_1|t'_1)*_r (t_2|t'_2)*_r ... with the minors of A_{q^-1}(n).
MixedElem starred_bideterminant(const Tableau& t, const Tableau& t2, int n);

/// ((r,s)|(r',s')) = (r|r') det^{(k)} (s|s')*.
MixedElem rational_bideterminant(const RationalTableau& rt, const RationalTableau& rt2, int k, int n);

struct RationalBitableau {
  int k = 0;
  RationalTableau rt;
  RationalTableau rt2;

  bool operator==(const RationalBitableau& o) const { return k == o.k && rt == o.rt && rt2 == o.rt2; }
  bool operator<(const RationalBitableau& o) const {
    if (k != o.k) return k < o.k;
    return rt == o.rt ? rt2 < o.rt2 : rt < o.rt;
  }
};

/// Pairs of standard rational tableaux of equal shape, k ascending.
std::vector<RationalBitableau> standard_rational_bitableaux(int n, int r, int s);

/// Shared standard bideterminant basis of A_q(n, m).
const qmatrix::StandardBasis& plain_standard_basis(int n, int m);

/// The standard rational bideterminants of A_q(n;r,s) as a basis of the quotient.
///
/// Rational bideterminants are homogeneous for the quotient grading, so the
/// expansion is solved block by block in quotient coordinates.
class RationalBasis {
 public:
  RationalBasis(int n, int r, int s);

  int n() const { return n_; }
  int r() const { return r_; }
  int s() const { return s_; }
  const std::vector<RationalBitableau>& bitableaux() const { return basis_; }
  std::optional<std::size_t> index_of(const RationalBitableau& b) const;
  const MixedElem& element(std::size_t idx) const { return elements_.at(idx); }

  /// Rank of the standard rational bideterminants in the quotient.
  std::size_t rank() const { return rank_; }
  /// True when they are independent and span the quotient.
  bool is_basis() const;

  /// Unique expansion of a + Y; throws std::logic_error if a + Y is outside the span.
  exactalg::SparseVec<RationalFn> straighten(const MixedElem& a) const;

  /// c with iota(element(idx)) = (-q)^c (t|t') for the bijection images t, t'.
  int c_exponent(std::size_t idx) const;

 private:
  struct Block {
    std::vector<std::uint32_t> members;        // basis indices
    std::map<std::uint32_t, std::uint32_t> column;  // quotient coordinate -> local column
    std::unique_ptr<exactalg::FieldEchelon<RationalFn>> echelon;
  };

  int n_;
  int r_;
  int s_;
  const MixedQuotient& quotient_;
  std::vector<RationalBitableau> basis_;
  std::map<RationalBitableau, std::size_t> index_;
  std::vector<MixedElem> elements_;
  std::vector<MixedQuotient::Key> coord_key_;
  std::map<MixedQuotient::Key, Block> blocks_;
  std::size_t rank_ = 0;
  mutable std::mutex mutex_;
  mutable std::map<std::size_t, int> c_cache_;
};

/// Shared rational basis per (n, r, s).
const RationalBasis& rational_basis(int n, int r, int s);

/// Coefficients of a + Y over rational_basis(n, r, s).bitableaux().
exactalg::SparseVec<RationalFn> rational_straighten(const MixedElem& a, int n, int r, int s);

/// c(t,t') for a standard rational bitableau; throws std::logic_error if
/// iota of its bideterminant is not (-q)^c times a single standard bideterminant.
int c_exponent(const RationalTableau& rt, const RationalTableau& rt2, int n, int r, int s);

/// phi on A_q(n, r+(n-1)s), as coefficients over rational_basis(n, r, s).
exactalg::SparseVec<RationalFn> phi_rational(const AlgebraElem& a, int n, int r, int s);
/// phi in the complement coordinates of quotient(n, r, s).
CosetCoords phi(const AlgebraElem& a, int n, int r, int s);

}  // namespace qschur::mixedalg
