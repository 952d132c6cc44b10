#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "qschur/tensorrep/tensor_space.hpp"

namespace qschur::tensorrep {

struct Commutant {
  std::size_t dim = 0;
  /// Denominator-free basis; filled only on request.
  std::vector<Endo> basis;
};

/// Solves [X, g] = 0 for all g over Q(q), blockwise on the connected
/// components of the generators' support.
Commutant commutant_dim(const std::vector<Endo>& gens, std::size_t d, bool want_basis = false);

/// Per-basis-vector grading under which each generator is homogeneous.
using Grading = std::vector<std::vector<int>>;

/// Dimension of the unital algebra generated by gens (span closure).
/// A non-empty grading splits the closure by degree shift.
std::size_t image_algebra_dim(const std::vector<Endo>& gens, std::size_t d, const Grading& grading = {});

Grading mixed_grading(int n, int r, int s);

struct SchurWeylReport {
  int n = 0;
  int r = 0;
  int s = 0;
  std::size_t commutant_dim = 0;
  std::size_t image_dim = 0;
  std::size_t rational_bitableaux = 0;
  std::size_t coeff_quotient_dim = 0;
  bool bicommute = false;
  bool ok = false;
  double elapsed_ms = 0;

  std::string mismatch() const;
};

SchurWeylReport verify_schur_weyl(int n, int r, int s);
nlohmann::json to_json(const SchurWeylReport& rep);

}  // namespace qschur::tensorrep
