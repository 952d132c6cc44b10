#pragma once

#include <vector>

#include "qschur/combinat/tableau.hpp"

namespace qschur::combinat {

/// Pair of tableaux (left of shape rho, right of shape sigma) with rho_1 + sigma_1 <= n.
struct RationalTableau {
  Tableau left;
  Tableau right;

  bool operator==(const RationalTableau& o) const { return left == o.left && right == o.right; }
  bool operator<(const RationalTableau& o) const {
    return left == o.left ? right < o.right : left < o.left;
  }
};

/// Entries <= i in the first row of the left half plus those in the first row of the right half.
int first_counts(const RationalTableau& rt, int i);

/// Both halves standard, rho_1 + sigma_1 <= n and first_i <= i for i = 1..n.
bool is_standard_rational(const RationalTableau& rt, int n);

struct RationalBasisEntry {
  int k;
  RationalTableau tableau;
};

/// Standard rational tableaux with rho a partition of r-k and sigma of s-k,
/// for k = 0..min(r,s) ascending, then shapes, then entries.
std::vector<RationalBasisEntry> enumerate_standard_rational(int n, int r, int s);

/// Rectangle construction: the s x n rectangle holds the complement of the
/// right half rotated by 180 degrees, the left half is appended below.
/// Throws std::invalid_argument unless rt is standard rational with |sigma| <= s.
Tableau rational_to_ordinary(const RationalTableau& rt, int n, int s);

/// Inverse of rational_to_ordinary. Returns the tableau pair; k = s - |sigma|.
/// Throws std::invalid_argument unless t is standard with sum_{i<=s} lambda_i >= (n-1)s.
RationalTableau ordinary_to_rational(const Tableau& t, int n, int s);

}  // namespace qschur::combinat
