#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "qschur/exactalg/sparse.hpp"

namespace qschur::exactalg {

/// Incremental row echelon form over a field F.
///
/// Each stored row has leading entry 1 in its pivot column. Vectors are
/// reduced by eliminating pivot columns in increasing order, so a fully
/// reduced remainder is supported on non-pivot columns only and is unique.
/// With tracking enabled every stored row remembers its expression in terms
/// of the inserted vectors (numbered by insertion order), which turns
/// reduction into a membership solver.
///
/// F needs: default (zero), F(1L), is_zero(), +, -, *, unary -, inverse().
template <typename F>
class FieldEchelon {
 public:
  struct Reduction {
    SparseVec<F> remainder;
    /// v - remainder = sum_i combination[i] * inserted_i (only with tracking).
    SparseVec<F> combination;
  };

  explicit FieldEchelon(std::size_t cols, bool track = false)
      : cols_(cols), track_(track), pivot_row_(cols, -1) {}

  std::size_t cols() const { return cols_; }
  std::size_t rank() const { return rows_.size(); }
  std::size_t inserted() const { return inserted_; }
  bool tracking() const { return track_; }

  bool is_pivot(std::size_t col) const { return pivot_row_.at(col) >= 0; }
  std::vector<std::uint32_t> pivot_columns() const {
    std::vector<std::uint32_t> out;
    for (std::size_t c = 0; c < cols_; ++c) {
      if (pivot_row_[c] >= 0) out.push_back(static_cast<std::uint32_t>(c));
    }
    return out;
  }
  std::vector<std::uint32_t> free_columns() const {
    std::vector<std::uint32_t> out;
    for (std::size_t c = 0; c < cols_; ++c) {
      if (pivot_row_[c] < 0) out.push_back(static_cast<std::uint32_t>(c));
    }
    return out;
  }
  const std::vector<SparseVec<F>>& rows() const { return rows_; }

  Reduction reduce(SparseVec<F> v) const {
    Reduction out;
    std::size_t pos = 0;
    while (pos < v.size()) {
      const std::uint32_t col = v[pos].first;
      const int k = pivot_row_[col];
      if (k < 0) {
        ++pos;
        continue;
      }
      const F alpha = v[pos].second;
      v = axpy(v, -alpha, rows_[k]);
      if (track_) out.combination = axpy(out.combination, alpha, combos_[k]);
    }
    out.remainder = std::move(v);
    return out;
  }

  bool in_span(const SparseVec<F>& v) const { return reduce(v).remainder.empty(); }

  /// Adds v to the spanning set. Returns true if the rank increased.
  bool insert(const SparseVec<F>& v) {
    if (!v.empty() && v.back().first >= cols_) throw std::out_of_range("FieldEchelon::insert: column out of range");
    const auto id = static_cast<std::uint32_t>(inserted_++);
    Reduction red = reduce(v);
    if (red.remainder.empty()) return false;
    const F inv = red.remainder.front().second.inverse();
    SparseVec<F> row = scaled(red.remainder, inv);
    row.front().second = F(1L);
    if (track_) {
      SparseVec<F> combo = scaled(red.combination, -inv);
      combo = axpy(combo, inv, SparseVec<F>{{id, F(1L)}});
      combos_.push_back(std::move(combo));
    }
    pivot_row_[row.front().first] = static_cast<int>(rows_.size());
    rows_.push_back(std::move(row));
    reduced_ = false;
    return true;
  }

  /// Coefficients c with v = sum_i c_i * inserted_i, or nullopt if v is not in the span.
  std::optional<SparseVec<F>> solve(const SparseVec<F>& v) const {
    if (!track_) throw std::logic_error("FieldEchelon::solve requires tracking");
    Reduction red = reduce(v);
    if (!red.remainder.empty()) return std::nullopt;
    return std::move(red.combination);
  }

  /// Back-substitutes so every pivot column is zero outside its own row (RREF).
  void make_reduced() {
    if (reduced_) return;
    std::vector<std::size_t> order(rows_.size());
    for (std::size_t k = 0; k < order.size(); ++k) order[k] = k;
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return rows_[a].front().first > rows_[b].front().first; });
    for (std::size_t k : order) {
      SparseVec<F>& row = rows_[k];
      std::size_t pos = 1;
      while (pos < row.size()) {
        const int j = pivot_row_[row[pos].first];
        if (j < 0) {
          ++pos;
          continue;
        }
        const F alpha = row[pos].second;
        row = axpy(row, -alpha, rows_[j]);
        if (track_) combos_[k] = axpy(combos_[k], -alpha, combos_[j]);
      }
    }
    reduced_ = true;
  }

  /// Basis of {x : row . x = 0 for all rows}, one vector per free column in increasing order.
  std::vector<SparseVec<F>> nullspace() {
    make_reduced();
    std::vector<SparseVec<F>> basis;
    const auto frees = free_columns();
    std::vector<std::vector<std::pair<std::uint32_t, F>>> entries(cols_);
    for (const auto& row : rows_) {
      const std::uint32_t p = row.front().first;
      for (std::size_t t = 1; t < row.size(); ++t) entries[row[t].first].emplace_back(p, -row[t].second);
    }
    for (std::uint32_t f : frees) {
      auto e = entries[f];
      e.emplace_back(f, F(1L));
      basis.push_back(make_sparse(std::move(e)));
    }
    return basis;
  }

 private:
  std::size_t cols_;
  bool track_;
  std::size_t inserted_ = 0;
  bool reduced_ = true;
  std::vector<int> pivot_row_;
  std::vector<SparseVec<F>> rows_;
  std::vector<SparseVec<F>> combos_;
};

}  // namespace qschur::exactalg
