#include "qschur/qmatrix/standard_basis.hpp"

#include <stdexcept>

#include "qschur/combinat/partition.hpp"

namespace qschur::qmatrix {

std::vector<Bitableau> standard_bitableaux(int n, int m) {
  std::vector<Bitableau> out;
  for (const auto& shape : combinat::partitions_of(m)) {
    const auto tabs = combinat::enumerate_standard(shape, n);
    for (const auto& t : tabs) {
      for (const auto& t2 : tabs) out.push_back({t, t2});
    }
  }
  return out;
}

StandardBasis::StandardBasis(const QMatrixAlgebra& alg, int m) : alg_(alg), m_(m), basis_(standard_bitableaux(alg.n(), m)) {
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    index_.emplace(basis_[i], i);
    members_[{combinat::content(basis_[i].t, alg.n()), combinat::content(basis_[i].t2, alg.n())}].push_back(i);
  }
  for (auto& w : monomial_basis(alg.n(), m)) {
    auto key = word_content(w, alg.n());
    words_[std::move(key)].push_back(std::move(w));
  }
}

std::optional<std::size_t> StandardBasis::index_of(const Bitableau& b) const {
  auto it = index_.find(b);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

const AlgebraElem& StandardBasis::element(std::size_t idx) const {
  {
    std::lock_guard<std::mutex> lock(mutex_);
    auto it = elements_.find(idx);
    if (it != elements_.end()) return it->second;
  }
  AlgebraElem e = alg_.bideterminant(basis_.at(idx).t, basis_.at(idx).t2);
  std::lock_guard<std::mutex> lock(mutex_);
  return elements_.emplace(idx, std::move(e)).first->second;
}

StandardBasis::Block& StandardBasis::block(const ContentKey& key) const {
  {
    std::lock_guard<std::mutex> lock(mutex_);
    auto it = blocks_.find(key);
    if (it != blocks_.end()) return it->second;
  }
  Block b;
  auto mit = members_.find(key);
  if (mit != members_.end()) b.members = mit->second;
  if (auto wit = words_.find(key); wit != words_.end()) {
    for (const auto& w : wit->second) b.column.emplace(w, static_cast<std::uint32_t>(b.column.size()));
  }
  b.echelon = std::make_unique<exactalg::FieldEchelon<RationalFn>>(b.column.size(), true);
  for (std::size_t idx : b.members) {
    std::vector<std::pair<std::uint32_t, RationalFn>> entries;
    for (const auto& [w, c] : element(idx).terms()) {
      auto cit = b.column.find(w);
      if (cit == b.column.end()) throw std::logic_error("StandardBasis: bideterminant leaves its content block");
      entries.emplace_back(cit->second, RationalFn(c));
    }
    b.echelon->insert(exactalg::make_sparse(std::move(entries)));
  }
  std::lock_guard<std::mutex> lock(mutex_);
  return blocks_.emplace(key, std::move(b)).first->second;
}

exactalg::SparseVec<RationalFn> StandardBasis::straighten(const AlgebraElem& a) const {
  if (a.is_zero()) return {};
  if (a.degree() != m_) throw std::invalid_argument("straighten: element is not homogeneous of the basis degree");
  std::map<ContentKey, std::vector<std::pair<Word, LaurentPoly>>> parts;
  for (const auto& [w, c] : a.terms()) parts[word_content(w, alg_.n())].emplace_back(w, c);
  std::vector<std::pair<std::uint32_t, RationalFn>> out;
  for (const auto& [key, terms] : parts) {
    Block& b = block(key);
    std::vector<std::pair<std::uint32_t, RationalFn>> entries;
    for (const auto& [w, c] : terms) {
      auto cit = b.column.find(w);
      if (cit == b.column.end()) throw std::invalid_argument("straighten: word is not in normal form");
      entries.emplace_back(cit->second, RationalFn(c));
    }
    auto sol = b.echelon->solve(exactalg::make_sparse(std::move(entries)));
    if (!sol) throw std::logic_error("straighten: element not in the span of standard bideterminants");
    for (const auto& [local, coeff] : *sol) out.emplace_back(static_cast<std::uint32_t>(b.members.at(local)), coeff);
  }
  return exactalg::make_sparse(std::move(out));
}

std::size_t StandardBasis::total_rank() const {
  std::size_t rank = 0;
  for (const auto& [key, idx] : members_) rank += block(key).echelon->rank();
  return rank;
}

exactalg::SparseVec<RationalFn> straighten(const QMatrixAlgebra& alg, const AlgebraElem& a, int m) {
  return StandardBasis(alg, m).straighten(a);
}

}  // namespace qschur::qmatrix
