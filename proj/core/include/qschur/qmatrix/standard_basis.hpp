#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "qschur/combinat/tableau.hpp"
#include "qschur/exactalg/echelon.hpp"
#include "qschur/exactalg/rational_fn.hpp"
#include "qschur/qmatrix/qmatrix_algebra.hpp"

namespace qschur::qmatrix {

using exactalg::RationalFn;

struct Bitableau {
  combinat::Tableau t;
  combinat::Tableau t2;
  bool operator==(const Bitableau& o) const { return t == o.t && t2 == o.t2; }
  bool operator<(const Bitableau& o) const { return t == o.t ? t2 < o.t2 : t < o.t; }
};

/// All standard bitableaux of size m with entries in 1..n, ordered by shape, then t, then t'.
std::vector<Bitableau> standard_bitableaux(int n, int m);

/// Expansion of degree-m elements of A_q(n) in the standard bideterminant basis.
///
/// Work is split by content: the standard bideterminants of content
/// (alpha, beta) span the monomials of that content, so each block is an
/// independent membership problem. Blocks are built on first use.
class StandardBasis {
 public:
  StandardBasis(const QMatrixAlgebra& alg, int m);

  int degree() const { return m_; }
  const std::vector<Bitableau>& bitableaux() const { return basis_; }
  std::optional<std::size_t> index_of(const Bitableau& b) const;
  const AlgebraElem& element(std::size_t idx) const;

  /// Coefficients over bitableaux(); throws std::invalid_argument for inhomogeneous
  /// input and std::logic_error if an element is not in the span (a bug by the theorem).
  exactalg::SparseVec<RationalFn> straighten(const AlgebraElem& a) const;

  /// Sum over content blocks of the rank of bideterminants against monomials.
  std::size_t total_rank() const;

 private:
  struct Block {
    std::vector<std::size_t> members;  // indices into basis_
    std::map<Word, std::uint32_t> column;
    std::unique_ptr<exactalg::FieldEchelon<RationalFn>> echelon;
  };
  using ContentKey = std::pair<std::vector<int>, std::vector<int>>;
  Block& block(const ContentKey& key) const;

  const QMatrixAlgebra& alg_;
  int m_;
  std::vector<Bitableau> basis_;
  std::map<Bitableau, std::size_t> index_;
  std::map<ContentKey, std::vector<std::size_t>> members_;
  std::map<ContentKey, std::vector<Word>> words_;
  mutable std::mutex mutex_;
  mutable std::map<std::size_t, AlgebraElem> elements_;
  mutable std::map<ContentKey, Block> blocks_;
};

/// Convenience: expansion of a homogeneous element of degree m.
exactalg::SparseVec<RationalFn> straighten(const QMatrixAlgebra& alg, const AlgebraElem& a, int m);

}  // namespace qschur::qmatrix
