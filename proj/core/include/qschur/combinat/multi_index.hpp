#pragma once

#include <cstddef>
#include <vector>

namespace qschur::combinat {

/// r-tuple with entries in 1..n; the basis vectors of tensor space are indexed
/// by these in lexicographic order.
using MultiIndex = std::vector<int>;

/// Position of `idx` in the lexicographic enumeration of I(n, idx.size()).
std::size_t index_of(const MultiIndex& idx, int n);
/// Inverse of index_of for tuples of length `len`.
MultiIndex multi_index_at(std::size_t pos, int n, int len);
/// All of I(n, len) in lexicographic order.
std::vector<MultiIndex> all_multi_indices(int n, int len);
/// wt(i)_a = number of entries equal to a.
std::vector<int> weight(const MultiIndex& idx, int n);
/// (1..n) with l removed, concatenated over the entries l of `idx`.
MultiIndex complement_star(const MultiIndex& idx, int n);

std::size_t int_pow(std::size_t base, int e);

}  // namespace qschur::combinat
