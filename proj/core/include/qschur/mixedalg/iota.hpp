#pragma once

#include <vector>

#include "qschur/mixedalg/mixed_elem.hpp"

namespace qschur::mixedalg {

/// iota(x*_{ij}) = (-q)^{j-i} (1..^i..n | 1..^j..n)_r in A_q(n, n-1).
AlgebraElem iota_starred_letter(int i, int j, int n);

/// iota(x_{i_1 j_1}...x_{i_r j_r} x*_{k_1 l_1}...x*_{k_s l_s})
///   = x_{i_1 j_1}...x_{i_r j_r} iota(x*_{k_1 l_1})...iota(x*_{k_s l_s}),
/// extended linearly; the result has degree r + (n-1)s. Monomial images are cached.
AlgebraElem iota(const MixedElem& a, int n);
/// As above; throws std::invalid_argument unless a has bidegree (r, s) (or is zero).
AlgebraElem iota(const MixedElem& a, int n, int r, int s);

struct JacobiResult {
  int exponent = 0;                 // sum_t (j_t - i_t)
  std::vector<int> complement_rows;
  std::vector<int> complement_cols;
  AlgebraElem lhs;                  // iota((I|J)*)
  AlgebraElem rhs;                  // (-q)^exponent det^{l-1} (I'|J')
  bool holds = false;
};

/// Checks iota((i_1..i_l | j_1..j_l)*) = (-q)^{sum(j_t - i_t)} det_q^{l-1} (i'|j').
/// Throws std::invalid_argument unless rows and cols strictly increase and have equal length <= n.
JacobiResult jacobi_check(const std::vector<int>& rows, const std::vector<int>& cols, int n);

/// x_{ik} -> q^{2k-2i} x_{ki}, x*_{ik} -> x*_{ki}, normalized.
MixedElem scaling_automorphism(const MixedElem& a, int n);

}  // namespace qschur::mixedalg
