#include "qschur/mixedalg/quotient.hpp"

#include <mutex>
#include <stdexcept>
#include <tuple>

namespace qschur::mixedalg {

using qmatrix::Letter;
using qmatrix::letter_at;
using qmatrix::letter_col;
using qmatrix::letter_row;
using qmatrix::make_letter;

namespace {

MixedElem cross_term(int i, int j, int k, int l, const LaurentPoly& c) {
  return MixedElem::monomial(MixedWord{Word(1, static_cast<char>(make_letter(i, j))),
                                       Word(1, static_cast<char>(make_letter(k, l)))},
                             c);
}

}  // namespace

std::vector<MixedElem> cross_relations(int n) {
  std::vector<MixedElem> out;
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      if (i == j) continue;
      MixedElem e;
      for (int k = 1; k <= n; ++k) e += cross_term(i, k, j, k, 1L);
      out.push_back(std::move(e));
    }
  }
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      if (i == j) continue;
      MixedElem e;
      for (int k = 1; k <= n; ++k) e += cross_term(k, i, k, j, LaurentPoly::q_pow(2 * k));
      out.push_back(std::move(e));
    }
  }
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      MixedElem e;
      for (int k = 1; k <= n; ++k) {
        e += cross_term(k, i, k, i, LaurentPoly::q_pow(2 * k - 2 * i));
        e -= cross_term(j, k, j, k, 1L);
      }
      out.push_back(std::move(e));
    }
  }
  return out;
}

MixedElem det_frak_one(int n) {
  MixedElem e;
  for (int l = 1; l <= n; ++l) e += cross_term(1, l, 1, l, 1L);
  return e;
}

void for_each_sandwich(int n, int r, int s, const std::vector<MixedElem>& middle,
                       const std::function<void(const MixedElem&)>& f) {
  if (r < 1 || s < 1) return;
  const MixedAlgebra& alg = mixed_algebra(n);
  std::vector<std::vector<Word>> words(static_cast<std::size_t>(std::max(r, s)));
  for (int d = 0; d < std::max(r, s); ++d) words[d] = qmatrix::monomial_basis(n, d);
  for (const auto& mid : middle) {
    if (mid.is_zero()) continue;
    auto [dr, ds] = mid.degree();
    if (dr != 1 || ds != 1) throw std::invalid_argument("for_each_sandwich: middle factors must have bidegree (1,1)");
  }
  for (const auto& p1 : words[r - 1]) {
    for (const auto& s3 : words[s - 1]) {
      const MixedWord h1{p1, Word()};
      const MixedWord h3{Word(), s3};
      for (const auto& mid : middle) {
        MixedElem g;
        for (const auto& [w, c] : mid.terms()) {
          g += c * alg.sandwich(h1, letter_at(w.plain, 0), letter_at(w.starred, 0), h3);
        }
        f(g);
      }
    }
  }
}

std::vector<MixedElem> cross_relation_generators(int n, int r, int s) {
  std::vector<MixedElem> out;
  for_each_sandwich(n, r, s, cross_relations(n), [&](const MixedElem& g) { out.push_back(g); });
  return out;
}

MixedQuotient::MixedQuotient(int n, int r, int s, bool modulo_det)
    : n_(n), r_(r), s_(s), modulo_det_(modulo_det) {
  if (n < 1 || r < 0 || s < 0) throw std::invalid_argument("MixedQuotient: need n >= 1 and r, s >= 0");
  monomials_ = mixed_monomial_basis(n, r, s);
  local_.resize(monomials_.size());
  for (std::uint32_t id = 0; id < monomials_.size(); ++id) {
    index_.emplace(monomials_[id], id);
    Block& b = blocks_[key_of(monomials_[id])];
    local_[id] = static_cast<std::uint32_t>(b.members.size());
    b.members.push_back(id);
  }
  for (auto& [key, b] : blocks_) b.echelon = std::make_unique<exactalg::FieldEchelon<RationalFn>>(b.members.size());

  std::vector<MixedElem> middle = cross_relations(n);
  if (modulo_det) middle.push_back(det_frak_one(n));
  for_each_sandwich(n, r, s, middle, [&](const MixedElem& g) {
    ++generators_;
    if (g.is_zero()) return;
    const Key key = key_of(g.terms().begin()->first);
    blocks_.at(key).echelon->insert(local_vector(g, key));
  });

  for (std::uint32_t id = 0; id < monomials_.size(); ++id) {
    if (!blocks_.at(key_of(monomials_[id])).echelon->is_pivot(local_[id])) {
      coord_of_.emplace(id, static_cast<std::uint32_t>(complement_.size()));
      complement_.push_back(monomials_[id]);
    }
  }
}

MixedQuotient::Key MixedQuotient::key_of(const MixedWord& w) const {
  Key key{std::vector<int>(n_, 0), std::vector<int>(n_, 0)};
  for (std::size_t t = 0; t < w.plain.size(); ++t) {
    ++key.first[letter_row(letter_at(w.plain, t)) - 1];
    ++key.second[letter_col(letter_at(w.plain, t)) - 1];
  }
  for (std::size_t t = 0; t < w.starred.size(); ++t) {
    --key.first[letter_row(letter_at(w.starred, t)) - 1];
    --key.second[letter_col(letter_at(w.starred, t)) - 1];
  }
  return key;
}

exactalg::SparseVec<RationalFn> MixedQuotient::local_vector(const MixedElem& a, const Key& key) const {
  std::vector<std::pair<std::uint32_t, RationalFn>> entries;
  for (const auto& [w, c] : a.terms()) {
    auto it = index_.find(w);
    if (it == index_.end()) throw std::invalid_argument("MixedQuotient: element has the wrong bidegree or is not normalized");
    if (key_of(w) != key) throw std::logic_error("MixedQuotient: inhomogeneous relation");
    entries.emplace_back(local_[it->second], RationalFn(c));
  }
  return exactalg::make_sparse(std::move(entries));
}

CosetCoords MixedQuotient::coords(const MixedElem& a) const {
  const MixedElem nf = mixed_algebra(n_).normal_form(a);
  std::map<Key, MixedElem> parts;
  for (const auto& [w, c] : nf.terms()) {
    if (w.plain_degree() != r_ || w.starred_degree() != s_) {
      throw std::invalid_argument("canonical_coords: element has the wrong bidegree");
    }
    parts[key_of(w)].add_term(w, c);
  }
  std::vector<std::pair<std::uint32_t, RationalFn>> out;
  for (const auto& [key, part] : parts) {
    const Block& b = blocks_.at(key);
    for (auto& [col, v] : b.echelon->reduce(local_vector(part, key)).remainder) {
      out.emplace_back(coord_of_.at(b.members[col]), std::move(v));
    }
  }
  return exactalg::make_sparse(std::move(out));
}

const MixedQuotient& quotient(int n, int r, int s, bool modulo_det) {
  static std::mutex mutex;
  static std::map<std::tuple<int, int, int, bool>, std::unique_ptr<MixedQuotient>> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto& slot = cache[{n, r, s, modulo_det}];
  if (!slot) slot = std::make_unique<MixedQuotient>(n, r, s, modulo_det);
  return *slot;
}

CosetCoords canonical_coords(const MixedElem& a, int n, int r, int s) { return quotient(n, r, s).coords(a); }

}  // namespace qschur::mixedalg
