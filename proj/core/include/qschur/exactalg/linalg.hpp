#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "qschur/exactalg/echelon.hpp"
#include "qschur/exactalg/mod_p.hpp"
#include "qschur/exactalg/rational_fn.hpp"
#include "qschur/exactalg/rational_number.hpp"
#include "qschur/exactalg/sparse.hpp"

namespace qschur::exactalg {

using Matrix = SparseMat<RationalFn>;
using Vector = std::vector<RationalFn>;

SparseVec<RationalFn> to_sparse(const Vector& v);
Vector to_dense(const SparseVec<RationalFn>& v, std::size_t size);

/// Rank over Q(q) by fraction-free Bareiss elimination on Z[q,q^-1].
/// Rows are cleared of denominators first; the pivot is the entry with the
/// fewest terms in the remaining block.
std::size_t mat_rank(const Matrix& m);

/// Coefficients c (one per row) with sum_i c_i row_i = v, or nullopt.
/// Dependent rows receive coefficient 0.
std::optional<Vector> mat_solve_membership(const Matrix& basis_rows, const Vector& v);

/// Basis of the right nullspace {x : m x = 0}; size is cols - rank.
std::vector<Vector> mat_nullspace(const Matrix& m);

/// Rank over a field by incremental echelon form.
template <typename F>
std::size_t field_rank(const SparseMat<F>& m) {
  FieldEchelon<F> ech(m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) ech.insert(m.row(r));
  return ech.rank();
}

/// Image under q -> point; throws std::domain_error if a denominator vanishes there.
ModP specialize(const RationalFn& f, const Specialization& at);
SparseMat<ModP> specialize(const Matrix& m, const Specialization& at);
Rational specialize(const RationalFn& f, const RationalSpecialization& at);
SparseMat<Rational> specialize(const Matrix& m, const RationalSpecialization& at);

}  // namespace qschur::exactalg
