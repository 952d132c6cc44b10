#include "qschur/mixedalg/rational_basis.hpp"

#include <stdexcept>
#include <tuple>

#include "qschur/mixedalg/iota.hpp"

namespace qschur::mixedalg {

using combinat::content;
using qmatrix::make_letter;
using qmatrix::RowOrder;

MixedElem det_frak(int k, int n) {
  if (k < 1) throw std::invalid_argument("det_frak: k must be at least 1");
  const MixedAlgebra& alg = mixed_algebra(n);
  MixedElem d = det_frak_one(n);
  for (int level = 2; level <= k; ++level) {
    MixedElem next;
    for (int l = 1; l <= n; ++l) {
      const auto x = static_cast<char>(make_letter(1, l));
      for (const auto& [w, c] : d.terms()) next += c * alg.normal_form(MixedWord{x + w.plain, w.starred + x});
    }
    d = std::move(next);
  }
  return d;
}

MixedElem starred_bideterminant(const Tableau& t, const Tableau& t2, int n) {
  return MixedElem::tensor(AlgebraElem::one(), mixed_algebra(n).starred().bideterminant(t, t2, RowOrder::Forward));
}

MixedElem rational_bideterminant(const RationalTableau& rt, const RationalTableau& rt2, int k, int n) {
  if (!(rt.left.shape() == rt2.left.shape()) || !(rt.right.shape() == rt2.right.shape())) {
    throw std::invalid_argument("rational_bideterminant: shape mismatch");
  }
  if (k < 0) throw std::invalid_argument("rational_bideterminant: k must be nonnegative");
  const MixedAlgebra& alg = mixed_algebra(n);
  const AlgebraElem left = alg.plain().bideterminant(rt.left, rt2.left, RowOrder::Reversed);
  const AlgebraElem right = alg.starred().bideterminant(rt.right, rt2.right, RowOrder::Forward);
  if (left.is_zero() || right.is_zero()) return {};
  const MixedElem middle = k == 0 ? MixedElem::one() : det_frak(k, n);
  return alg.multiply(alg.multiply(MixedElem::tensor(left, AlgebraElem::one()), middle),
                      MixedElem::tensor(AlgebraElem::one(), right));
}

std::vector<RationalBitableau> standard_rational_bitableaux(int n, int r, int s) {
  const auto entries = combinat::enumerate_standard_rational(n, r, s);
  std::vector<RationalBitableau> out;
  std::size_t start = 0;
  while (start < entries.size()) {
    std::size_t end = start;
    const auto& first = entries[start];
    while (end < entries.size() && entries[end].k == first.k &&
           entries[end].tableau.left.shape() == first.tableau.left.shape() &&
           entries[end].tableau.right.shape() == first.tableau.right.shape()) {
      ++end;
    }
    for (std::size_t a = start; a < end; ++a) {
      for (std::size_t b = start; b < end; ++b) out.push_back({first.k, entries[a].tableau, entries[b].tableau});
    }
    start = end;
  }
  return out;
}

const qmatrix::StandardBasis& plain_standard_basis(int n, int m) {
  static std::mutex mutex;
  static std::map<std::pair<int, int>, std::unique_ptr<qmatrix::StandardBasis>> cache;
  const auto& alg = mixed_algebra(n).plain();
  std::lock_guard<std::mutex> lock(mutex);
  auto& slot = cache[{n, m}];
  if (!slot) slot = std::make_unique<qmatrix::StandardBasis>(alg, m);
  return *slot;
}

namespace {

MixedQuotient::Key rational_key(const RationalBitableau& b, int n) {
  MixedQuotient::Key key{content(b.rt.left, n), content(b.rt2.left, n)};
  const auto rs = content(b.rt.right, n);
  const auto rs2 = content(b.rt2.right, n);
  for (int i = 0; i < n; ++i) {
    key.first[i] -= rs[i];
    key.second[i] -= rs2[i];
  }
  return key;
}

}  // namespace

RationalBasis::RationalBasis(int n, int r, int s)
    : n_(n), r_(r), s_(s), quotient_(quotient(n, r, s)), basis_(standard_rational_bitableaux(n, r, s)) {
  coord_key_.reserve(quotient_.dim());
  for (const auto& w : quotient_.complement_basis()) {
    const auto key = quotient_.key_of(w);
    Block& b = blocks_[key];
    b.column.emplace(static_cast<std::uint32_t>(coord_key_.size()), static_cast<std::uint32_t>(b.column.size()));
    coord_key_.push_back(key);
  }
  elements_.reserve(basis_.size());
  for (std::size_t idx = 0; idx < basis_.size(); ++idx) {
    const auto& b = basis_[idx];
    index_.emplace(b, idx);
    elements_.push_back(rational_bideterminant(b.rt, b.rt2, b.k, n));
    Block& block = blocks_[rational_key(b, n)];
    if (!block.echelon) block.echelon = std::make_unique<exactalg::FieldEchelon<RationalFn>>(block.column.size(), true);
    block.members.push_back(static_cast<std::uint32_t>(idx));
    std::vector<std::pair<std::uint32_t, RationalFn>> local;
    for (auto& [coord, v] : quotient_.coords(elements_.back())) {
      auto it = block.column.find(coord);
      if (it == block.column.end()) throw std::logic_error("RationalBasis: bideterminant leaves its grading block");
      local.emplace_back(it->second, v);
    }
    if (block.echelon->insert(exactalg::make_sparse(std::move(local)))) ++rank_;
  }
}

std::optional<std::size_t> RationalBasis::index_of(const RationalBitableau& b) const {
  auto it = index_.find(b);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

bool RationalBasis::is_basis() const { return rank_ == basis_.size() && rank_ == quotient_.dim(); }

exactalg::SparseVec<RationalFn> RationalBasis::straighten(const MixedElem& a) const {
  std::map<MixedQuotient::Key, std::vector<std::pair<std::uint32_t, RationalFn>>> parts;
  for (auto& [coord, v] : quotient_.coords(a)) {
    const auto& key = coord_key_.at(coord);
    parts[key].emplace_back(blocks_.at(key).column.at(coord), v);
  }
  std::vector<std::pair<std::uint32_t, RationalFn>> out;
  for (auto& [key, entries] : parts) {
    const Block& block = blocks_.at(key);
    if (!block.echelon) throw std::logic_error("rational_straighten: no basis element in this grading block");
    auto sol = block.echelon->solve(exactalg::make_sparse(std::move(entries)));
    if (!sol) throw std::logic_error("rational_straighten: element outside the span of the rational basis");
    for (auto& [local, v] : *sol) out.emplace_back(block.members.at(local), std::move(v));
  }
  return exactalg::make_sparse(std::move(out));
}

int RationalBasis::c_exponent(std::size_t idx) const {
  {
    std::lock_guard<std::mutex> lock(mutex_);
    auto it = c_cache_.find(idx);
    if (it != c_cache_.end()) return it->second;
  }
  const auto& b = basis_.at(idx);
  const int m = r_ + (n_ - 1) * s_;
  const qmatrix::Bitableau target{combinat::rational_to_ordinary(b.rt, n_, s_), combinat::rational_to_ordinary(b.rt2, n_, s_)};
  const auto& sb = plain_standard_basis(n_, m);
  const auto expansion = sb.straighten(iota(elements_.at(idx), n_));
  const auto pos = sb.index_of(target);
  if (!pos || expansion.size() != 1 || expansion.front().first != *pos) {
    throw std::logic_error("c_exponent: iota of the rational bideterminant is not a multiple of (t|t')");
  }
  const RationalFn& coeff = expansion.front().second;
  if (!coeff.is_polynomial() || !coeff.num().is_monomial()) {
    throw std::logic_error("c_exponent: coefficient is not a power of -q");
  }
  const int c = coeff.num().min_exp();
  if (coeff.num() != LaurentPoly::neg_q_pow(c)) throw std::logic_error("c_exponent: coefficient is not a power of -q");
  std::lock_guard<std::mutex> lock(mutex_);
  c_cache_.emplace(idx, c);
  return c;
}

const RationalBasis& rational_basis(int n, int r, int s) {
  static std::mutex mutex;
  static std::map<std::tuple<int, int, int>, std::unique_ptr<RationalBasis>> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto& slot = cache[{n, r, s}];
  if (!slot) slot = std::make_unique<RationalBasis>(n, r, s);
  return *slot;
}

exactalg::SparseVec<RationalFn> rational_straighten(const MixedElem& a, int n, int r, int s) {
  return rational_basis(n, r, s).straighten(a);
}

int c_exponent(const RationalTableau& rt, const RationalTableau& rt2, int n, int r, int s) {
  const auto& basis = rational_basis(n, r, s);
  const int k = s - rt.right.size();
  const auto idx = basis.index_of({k, rt, rt2});
  if (!idx) throw std::invalid_argument("c_exponent: not a standard rational bitableau of A_q(n;r,s)");
  return basis.c_exponent(*idx);
}

exactalg::SparseVec<RationalFn> phi_rational(const AlgebraElem& a, int n, int r, int s) {
  const int m = r + (n - 1) * s;
  if (a.is_zero()) return {};
  if (a.degree() != m) throw std::invalid_argument("phi: element must be homogeneous of degree r + (n-1)s");
  const auto& sb = plain_standard_basis(n, m);
  const auto& basis = rational_basis(n, r, s);
  std::vector<std::pair<std::uint32_t, RationalFn>> out;
  for (const auto& [idx, v] : sb.straighten(a)) {
    const auto& bt = sb.bitableaux()[idx];
    const auto& parts = bt.t.shape().parts();
    int top = 0;
    for (int i = 0; i < s && i < static_cast<int>(parts.size()); ++i) top += parts[i];
    if (top < (n - 1) * s) continue;
    const RationalTableau rt = combinat::ordinary_to_rational(bt.t, n, s);
    const RationalTableau rt2 = combinat::ordinary_to_rational(bt.t2, n, s);
    const auto pos = basis.index_of({s - rt.right.size(), rt, rt2});
    if (!pos) throw std::logic_error("phi: bijection image is not a standard rational bitableau");
    out.emplace_back(static_cast<std::uint32_t>(*pos), v * RationalFn(LaurentPoly::neg_q_pow(-basis.c_exponent(*pos))));
  }
  return exactalg::make_sparse(std::move(out));
}

CosetCoords phi(const AlgebraElem& a, int n, int r, int s) {
  const auto& basis = rational_basis(n, r, s);
  const auto& quot = quotient(n, r, s);
  CosetCoords out;
  for (const auto& [idx, v] : phi_rational(a, n, r, s)) out = exactalg::axpy(out, v, quot.coords(basis.element(idx)));
  return out;
}

}  // namespace qschur::mixedalg
