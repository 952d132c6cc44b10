#include "qschur/exactalg/linalg.hpp"

#include <stdexcept>

namespace qschur::exactalg {

SparseVec<RationalFn> to_sparse(const Vector& v) {
  SparseVec<RationalFn> out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!v[i].is_zero()) out.emplace_back(static_cast<std::uint32_t>(i), v[i]);
  }
  return out;
}

Vector to_dense(const SparseVec<RationalFn>& v, std::size_t size) {
  Vector out(size);
  for (const auto& [i, x] : v) out.at(i) = x;
  return out;
}

namespace {

// Multiplies a row by the product of its distinct denominators.
std::vector<LaurentPoly> clear_denominators(const SparseVec<RationalFn>& row, std::size_t cols) {
  LaurentPoly lcm(1L);
  for (const auto& [c, x] : row) {
    if (x.den().is_one()) continue;
    const LaurentPoly g = gcd(lcm, x.den());
    lcm = lcm * x.den().exact_div(g);
  }
  std::vector<LaurentPoly> out(cols);
  for (const auto& [c, x] : row) out[c] = x.num() * lcm.exact_div(x.den());
  return out;
}

}  // namespace

std::size_t mat_rank(const Matrix& m) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::vector<std::vector<LaurentPoly>> a;
  a.reserve(rows);
  for (std::size_t r = 0; r < rows; ++r) {
    if (!m.row(r).empty()) a.push_back(clear_denominators(m.row(r), cols));
  }
  std::vector<std::size_t> col_of(cols);
  for (std::size_t c = 0; c < cols; ++c) col_of[c] = c;

  LaurentPoly prev(1L);
  std::size_t rank = 0;
  while (rank < a.size() && rank < cols) {
    // Pivot with the fewest terms in the remaining block.
    std::size_t best_r = 0;
    std::size_t best_c = 0;
    std::size_t best_size = 0;
    for (std::size_t r = rank; r < a.size(); ++r) {
      for (std::size_t c = rank; c < cols; ++c) {
        const auto& x = a[r][col_of[c]];
        if (x.is_zero()) continue;
        if (best_size == 0 || x.term_count() < best_size) {
          best_size = x.term_count();
          best_r = r;
          best_c = c;
        }
      }
    }
    if (best_size == 0) break;
    std::swap(a[rank], a[best_r]);
    std::swap(col_of[rank], col_of[best_c]);
    const std::size_t pc = col_of[rank];
    const LaurentPoly pivot = a[rank][pc];
    for (std::size_t r = rank + 1; r < a.size(); ++r) {
      const LaurentPoly factor = a[r][pc];
      for (std::size_t c = rank + 1; c < cols; ++c) {
        const std::size_t cc = col_of[c];
        LaurentPoly v = pivot * a[r][cc];
        if (!factor.is_zero() && !a[rank][cc].is_zero()) v -= factor * a[rank][cc];
        a[r][cc] = v.is_zero() ? v : v.exact_div(prev);
      }
      a[r][pc] = LaurentPoly();
    }
    prev = pivot;
    ++rank;
  }
  return rank;
}

std::optional<Vector> mat_solve_membership(const Matrix& basis_rows, const Vector& v) {
  if (v.size() != basis_rows.cols()) throw std::invalid_argument("mat_solve_membership: length mismatch");
  FieldEchelon<RationalFn> ech(basis_rows.cols(), true);
  for (std::size_t r = 0; r < basis_rows.rows(); ++r) ech.insert(basis_rows.row(r));
  auto sol = ech.solve(to_sparse(v));
  if (!sol) return std::nullopt;
  return to_dense(*sol, basis_rows.rows());
}

std::vector<Vector> mat_nullspace(const Matrix& m) {
  FieldEchelon<RationalFn> ech(m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) ech.insert(m.row(r));
  std::vector<Vector> out;
  for (const auto& v : ech.nullspace()) out.push_back(to_dense(v, m.cols()));
  return out;
}

ModP specialize(const RationalFn& f, const Specialization& at) {
  const ModP den = at(f.den());
  if (den.is_zero()) throw std::domain_error("specialize: denominator vanishes at the evaluation point");
  return at(f.num()) / den;
}

SparseMat<ModP> specialize(const Matrix& m, const Specialization& at) {
  return m.map([&](const RationalFn& x) { return specialize(x, at); });
}

Rational specialize(const RationalFn& f, const RationalSpecialization& at) {
  const Rational den = at(f.den());
  if (den.is_zero()) throw std::domain_error("specialize: denominator vanishes at the evaluation point");
  return at(f.num()) / den;
}

SparseMat<Rational> specialize(const Matrix& m, const RationalSpecialization& at) {
  return m.map([&](const RationalFn& x) { return specialize(x, at); });
}

}  // namespace qschur::exactalg
