#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

namespace qschur::exactalg {

/// Sparse vector: (index, value) pairs sorted by index, no stored zeros.
template <typename T>
using SparseVec = std::vector<std::pair<std::uint32_t, T>>;

template <typename T>
const T* find_entry(const SparseVec<T>& v, std::uint32_t idx) {
  auto it = std::lower_bound(v.begin(), v.end(), idx,
                             [](const auto& e, std::uint32_t i) { return e.first < i; });
  return (it != v.end() && it->first == idx) ? &it->second : nullptr;
}

/// dst + alpha * src, merging sorted supports.
template <typename T>
SparseVec<T> axpy(const SparseVec<T>& dst, const T& alpha, const SparseVec<T>& src) {
  SparseVec<T> out;
  out.reserve(dst.size() + src.size());
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < dst.size() || j < src.size()) {
    if (j == src.size() || (i < dst.size() && dst[i].first < src[j].first)) {
      out.push_back(dst[i++]);
    } else if (i == dst.size() || src[j].first < dst[i].first) {
      T v = alpha * src[j].second;
      if (!v.is_zero()) out.emplace_back(src[j].first, std::move(v));
      ++j;
    } else {
      T v = dst[i].second + alpha * src[j].second;
      if (!v.is_zero()) out.emplace_back(dst[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  return out;
}

template <typename T>
SparseVec<T> scaled(const SparseVec<T>& v, const T& alpha) {
  SparseVec<T> out;
  if (alpha.is_zero()) return out;
  out.reserve(v.size());
  for (const auto& [i, x] : v) out.emplace_back(i, alpha * x);
  return out;
}

/// Builds a sparse vector from possibly unsorted, repeated entries.
template <typename T>
SparseVec<T> make_sparse(std::vector<std::pair<std::uint32_t, T>> entries) {
  std::stable_sort(entries.begin(), entries.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  SparseVec<T> out;
  for (auto& e : entries) {
    if (!out.empty() && out.back().first == e.first) {
      out.back().second += e.second;
    } else {
      if (!out.empty() && out.back().second.is_zero()) out.pop_back();
      out.push_back(std::move(e));
    }
  }
  if (!out.empty() && out.back().second.is_zero()) out.pop_back();
  return out;
}

/// Row-major sparse matrix; no stored entry is zero.
template <typename T>
class SparseMat {
 public:
  SparseMat() = default;
  SparseMat(std::size_t rows, std::size_t cols) : cols_(cols), data_(rows) {}

  std::size_t rows() const { return data_.size(); }
  std::size_t cols() const { return cols_; }

  const SparseVec<T>& row(std::size_t r) const { return data_.at(r); }
  void set_row(std::size_t r, SparseVec<T> v) {
    if (!v.empty() && v.back().first >= cols_) throw std::out_of_range("SparseMat::set_row: column out of range");
    data_.at(r) = std::move(v);
  }
  void append_row(SparseVec<T> v) {
    if (!v.empty() && v.back().first >= cols_) throw std::out_of_range("SparseMat::append_row: column out of range");
    data_.push_back(std::move(v));
  }

  T at(std::size_t r, std::size_t c) const {
    const T* p = find_entry(data_.at(r), static_cast<std::uint32_t>(c));
    return p ? *p : T();
  }
  void set(std::size_t r, std::size_t c, T v) {
    if (c >= cols_) throw std::out_of_range("SparseMat::set: column out of range");
    auto& row = data_.at(r);
    auto it = std::lower_bound(row.begin(), row.end(), static_cast<std::uint32_t>(c),
                               [](const auto& e, std::uint32_t i) { return e.first < i; });
    const bool present = it != row.end() && it->first == c;
    if (v.is_zero()) {
      if (present) row.erase(it);
    } else if (present) {
      it->second = std::move(v);
    } else {
      row.insert(it, {static_cast<std::uint32_t>(c), std::move(v)});
    }
  }
  void add(std::size_t r, std::size_t c, const T& v) { set(r, c, at(r, c) + v); }

  std::size_t nonzeros() const {
    std::size_t n = 0;
    for (const auto& r : data_) n += r.size();
    return n;
  }

  SparseMat transpose() const {
    SparseMat t(cols_, rows());
    for (std::size_t r = 0; r < rows(); ++r) {
      for (const auto& [c, v] : data_[r]) t.data_[c].emplace_back(static_cast<std::uint32_t>(r), v);
    }
    return t;
  }

  template <typename F>
  auto map(F&& f) const -> SparseMat<decltype(f(std::declval<const T&>()))> {
    using U = decltype(f(std::declval<const T&>()));
    SparseMat<U> out(rows(), cols_);
    for (std::size_t r = 0; r < rows(); ++r) {
      SparseVec<U> row;
      row.reserve(data_[r].size());
      for (const auto& [c, v] : data_[r]) {
        U u = f(v);
        if (!u.is_zero()) row.emplace_back(c, std::move(u));
      }
      out.set_row(r, std::move(row));
    }
    return out;
  }

  static SparseMat identity(std::size_t n) {
    SparseMat m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.data_[i].emplace_back(static_cast<std::uint32_t>(i), T(1L));
    return m;
  }

  bool operator==(const SparseMat& o) const { return cols_ == o.cols_ && data_ == o.data_; }

 private:
  std::size_t cols_ = 0;
  std::vector<SparseVec<T>> data_;
};

template <typename T>
SparseMat<T> operator*(const SparseMat<T>& a, const SparseMat<T>& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("SparseMat product: dimension mismatch");
  SparseMat<T> out(a.rows(), b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    std::vector<std::pair<std::uint32_t, T>> acc;
    for (const auto& [k, x] : a.row(r)) {
      for (const auto& [c, y] : b.row(k)) acc.emplace_back(c, x * y);
    }
    out.set_row(r, make_sparse(std::move(acc)));
  }
  return out;
}

template <typename T>
SparseMat<T> operator+(const SparseMat<T>& a, const SparseMat<T>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw std::invalid_argument("SparseMat sum: dimension mismatch");
  SparseMat<T> out(a.rows(), a.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) out.set_row(r, axpy(a.row(r), T(1L), b.row(r)));
  return out;
}

template <typename T>
SparseMat<T> operator-(const SparseMat<T>& a, const SparseMat<T>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw std::invalid_argument("SparseMat difference: dimension mismatch");
  SparseMat<T> out(a.rows(), a.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) out.set_row(r, axpy(a.row(r), -T(1L), b.row(r)));
  return out;
}

template <typename T>
SparseMat<T> operator*(const T& s, const SparseMat<T>& a) {
  SparseMat<T> out(a.rows(), a.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) out.set_row(r, scaled(a.row(r), s));
  return out;
}

template <typename T>
bool is_zero_matrix(const SparseMat<T>& m) {
  for (std::size_t r = 0; r < m.rows(); ++r) {
    if (!m.row(r).empty()) return false;
  }
  return true;
}

}  // namespace qschur::exactalg
