#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "qschur/combinat/multi_index.hpp"
#include "qschur/combinat/perm.hpp"
#include "qschur/exactalg/laurent_poly.hpp"
#include "qschur/exactalg/rational_fn.hpp"
#include "qschur/exactalg/sparse.hpp"

namespace qschur::tensorrep {

using exactalg::LaurentPoly;
using exactalg::RationalFn;

/// Matrix of a linear map in column convention: column b holds the image of
/// basis vector b. Composition of maps is the matrix product.
using Endo = exactalg::SparseMat<LaurentPoly>;
using EndoQ = exactalg::SparseMat<RationalFn>;

/// Basis vector v_{i|j} of V^{(x)r} (x) V*^{(x)s}; ordinary tensors have s = 0.
/// Positions are lexicographic in the concatenation i j.
struct TensorBasisIndex {
  int n = 0;
  combinat::MultiIndex plain;
  combinat::MultiIndex dual;

  std::size_t position() const;
  static TensorBasisIndex at(std::size_t pos, int n, int r, int s);
  /// wt(i) - wt(j).
  std::vector<int> weight() const;
  std::string to_string() const;
};

std::size_t tensor_dim(int n, int r, int s = 0);

Endo kron(const Endo& a, const Endo& b);
EndoQ to_rational(const Endo& a);
Endo zero_endo(std::size_t rows, std::size_t cols);
/// a^e for square a and e >= 0.
Endo endo_pow(const Endo& a, int e);

/// v S_i on V^{(x)m}, 1 <= i <= m-1.
Endo hecke_generator(int n, int m, int i);
/// T_w = T_{i_1} ... T_{i_l} acting from the right along reduced_word(w).
Endo hecke_word(int n, int m, const combinat::Perm& w);

struct WalledGenerators {
  /// Present iff r, s >= 1.
  std::vector<Endo> e;
  std::vector<Endo> s;
  std::vector<Endo> s_hat;

  std::vector<Endo> all() const;
};

WalledGenerators walled_generators(int n, int r, int s);

struct UGen {
  enum class Kind { E, F, K, QH };
  Kind kind = Kind::K;
  int i = 1;
  /// Divided power for E and F, exponent +-1 for K.
  int l = 1;
  std::vector<int> h;

  static UGen e(int i, int l = 1) { return {Kind::E, i, l, {}}; }
  static UGen f(int i, int l = 1) { return {Kind::F, i, l, {}}; }
  static UGen k(int i, int sign) { return {Kind::K, i, sign, {}}; }
  static UGen qh(std::vector<int> h) { return {Kind::QH, 0, 0, std::move(h)}; }
  std::string to_string() const;
};

/// e_i^{(l)}, f_i^{(l)} for l = 1..max_power and K_i^{+-1}.
std::vector<UGen> divided_power_generators(int n, int max_power);

Endo ugen_ordinary(int n, int m, const UGen& g);
Endo ugen_mixed(int n, int r, int s, const UGen& g);

}  // namespace qschur::tensorrep
