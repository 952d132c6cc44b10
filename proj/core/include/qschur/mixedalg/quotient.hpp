#pragma once

#include <functional>
#include <map>
#include <memory>
#include <vector>

#include "qschur/exactalg/echelon.hpp"
#include "qschur/exactalg/rational_fn.hpp"
#include "qschur/mixedalg/mixed_elem.hpp"

namespace qschur::mixedalg {

using exactalg::RationalFn;

/// Coordinates of a coset in the complement basis of a MixedQuotient.
using CosetCoords = exactalg::SparseVec<RationalFn>;

/// The degree (1,1) cross relations:
///   sum_k x_{ik} x*_{jk}                                  (i != j)
///   sum_k q^{2k} x_{ki} x*_{kj}                           (i != j)
///   sum_k q^{2k-2i} x_{ki} x*_{ki} - sum_k x_{jk} x*_{jk}  (all i, j)
std::vector<MixedElem> cross_relations(int n);

/// sum_l x_{1l} x*_{1l}
MixedElem det_frak_one(int n);

/// All h1 * h2 * h3 with h2 a cross relation, h1 a normal plain monomial of
/// degree r-1 and h3 a normal starred monomial of degree s-1, so h2 sits on
/// the last plain and first starred tensor position; empty when r = 0 or s = 0.
std::vector<MixedElem> cross_relation_generators(int n, int r, int s);

/// Calls f on every h1 * rel * h3 of bidegree (r, s) as above, with rel in `middle`.
void for_each_sandwich(int n, int r, int s, const std::vector<MixedElem>& middle,
                       const std::function<void(const MixedElem&)>& f);

/// A_q(n;r,s) as the normal mixed monomials of bidegree (r,s) modulo the span Y
/// of the cross relation sandwiches (optionally also modulo the sandwiches of
/// det^{(1)}).
///
/// Both generators and monomials are homogeneous for the grading by
/// (row content - starred row content, column content - starred column
/// content), so Y is echelonized block by block. The complement basis consists
/// of the non-pivot monomials in the global monomial order. Immutable once
/// constructed.
class MixedQuotient {
 public:
  MixedQuotient(int n, int r, int s, bool modulo_det = false);

  int n() const { return n_; }
  int r() const { return r_; }
  int s() const { return s_; }
  bool modulo_det() const { return modulo_det_; }

  const std::vector<MixedWord>& monomials() const { return monomials_; }
  /// Monomials representing the complement basis, in coordinate order.
  const std::vector<MixedWord>& complement_basis() const { return complement_; }
  std::size_t dim() const { return complement_.size(); }
  std::size_t relation_rank() const { return monomials_.size() - complement_.size(); }
  std::size_t generator_count() const { return generators_; }
  std::size_t block_count() const { return blocks_.size(); }

  /// Coordinates of a + Y; throws std::invalid_argument on a bidegree mismatch.
  CosetCoords coords(const MixedElem& a) const;
  bool is_zero(const MixedElem& a) const { return coords(a).empty(); }

  using Key = std::pair<std::vector<int>, std::vector<int>>;
  Key key_of(const MixedWord& w) const;

 private:
  struct Block {
    std::vector<std::uint32_t> members;  // global monomial ids, increasing
    std::unique_ptr<exactalg::FieldEchelon<RationalFn>> echelon;
  };

  exactalg::SparseVec<RationalFn> local_vector(const MixedElem& a, const Key& key) const;

  int n_;
  int r_;
  int s_;
  bool modulo_det_;
  std::size_t generators_ = 0;
  std::vector<MixedWord> monomials_;
  std::map<MixedWord, std::uint32_t> index_;
  std::vector<std::uint32_t> local_;
  std::map<Key, Block> blocks_;
  std::vector<MixedWord> complement_;
  std::map<std::uint32_t, std::uint32_t> coord_of_;
};

/// Shared quotient per (n, r, s, modulo_det), built on first use.
const MixedQuotient& quotient(int n, int r, int s, bool modulo_det = false);

/// Coordinates of a + Y in the complement basis of quotient(n, r, s).
CosetCoords canonical_coords(const MixedElem& a, int n, int r, int s);

}  // namespace qschur::mixedalg
