#pragma once

#include <vector>

#include "qschur/tensorrep/tensor_space.hpp"

namespace qschur::tensorrep {

/// V* -> V^{(x)(n-1)}: v*_i -> (-q)^i sum_w (-q)^{l(w)} v_{(1..^i..n).w}.
Endo kappa(int n);
/// id^{(x)r} (x) kappa^{(x)s} into V^{(x)(r+(n-1)s)}.
Endo kappa_mixed(int n, int r, int s);

/// Restriction of phi to the image of kappa_mixed, as a matrix on mixed space.
/// Throws std::domain_error if phi does not preserve that image.
EndoQ pi_restrict(const Endo& phi, int n, int r, int s);

/// u = prod_i [K_i; m+1 over lam_i - lam_{i+1} + m + 1] on V^{(x)m}.
Endo weight_projector(int n, int m, const std::vector<int>& lam);

/// mu before lam when the difference vectors compare lexicographically smaller.
bool weight_precedes(const std::vector<int>& mu, const std::vector<int>& lam);

}  // namespace qschur::tensorrep
