#include "qschur/mixedalg/iota.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>

namespace qschur::mixedalg {

using qmatrix::letter_at;
using qmatrix::letter_col;
using qmatrix::letter_row;
using qmatrix::make_letter;

namespace {

std::vector<int> all_but(int skip, int n) {
  std::vector<int> out;
  for (int t = 1; t <= n; ++t) {
    if (t != skip) out.push_back(t);
  }
  return out;
}

std::vector<int> complement(const std::vector<int>& idx, int n) {
  std::vector<int> out;
  for (int t = 1; t <= n; ++t) {
    if (std::find(idx.begin(), idx.end(), t) == idx.end()) out.push_back(t);
  }
  return out;
}

bool strictly_increasing(const std::vector<int>& v) {
  for (std::size_t t = 1; t < v.size(); ++t) {
    if (v[t - 1] >= v[t]) return false;
  }
  return true;
}

class IotaCache {
 public:
  explicit IotaCache(int n) : n_(n) {}

  AlgebraElem image(const MixedWord& w) {
    {
      std::lock_guard<std::mutex> lock(mutex_);
      auto it = cache_.find(w);
      if (it != cache_.end()) return it->second;
    }
    const auto& alg = mixed_algebra(n_).plain();
    AlgebraElem out;
    if (w.starred.empty()) {
      out = alg.normal_form(w.plain);
    } else {
      const MixedWord prefix{w.plain, w.starred.substr(0, w.starred.size() - 1)};
      const auto last = letter_at(w.starred, w.starred.size() - 1);
      out = alg.multiply(image(prefix), letter_image(letter_row(last), letter_col(last)));
    }
    std::lock_guard<std::mutex> lock(mutex_);
    cache_.emplace(w, out);
    return out;
  }

  AlgebraElem letter_image(int i, int j) const {
    const auto& alg = mixed_algebra(n_).plain();
    return LaurentPoly::neg_q_pow(j - i) * alg.right_minor(all_but(i, n_), all_but(j, n_));
  }

 private:
  int n_;
  std::mutex mutex_;
  std::map<MixedWord, AlgebraElem> cache_;
};

IotaCache& iota_cache(int n) {
  static std::mutex mutex;
  static std::map<int, std::unique_ptr<IotaCache>> caches;
  std::lock_guard<std::mutex> lock(mutex);
  auto& slot = caches[n];
  if (!slot) slot = std::make_unique<IotaCache>(n);
  return *slot;
}

}  // namespace

AlgebraElem iota_starred_letter(int i, int j, int n) {
  if (i < 1 || j < 1 || i > n || j > n) throw std::out_of_range("iota_starred_letter: index out of range");
  return iota_cache(n).letter_image(i, j);
}

AlgebraElem iota(const MixedElem& a, int n) {
  const MixedAlgebra& alg = mixed_algebra(n);
  IotaCache& cache = iota_cache(n);
  AlgebraElem out;
  for (const auto& [w, c] : a.terms()) {
    // The cache is keyed by normal words; iota respects the relations of each factor.
    const MixedElem nf = alg.normal_form(w);
    for (const auto& [v, d] : nf.terms()) out += (c * d) * cache.image(v);
  }
  return out;
}

AlgebraElem iota(const MixedElem& a, int n, int r, int s) {
  if (!a.is_zero() && a.degree() != std::make_pair(r, s)) throw std::invalid_argument("iota: element has the wrong bidegree");
  return iota(a, n);
}

JacobiResult jacobi_check(const std::vector<int>& rows, const std::vector<int>& cols, int n) {
  if (rows.size() != cols.size() || static_cast<int>(rows.size()) > n) {
    throw std::invalid_argument("jacobi_check: index sets must have equal length <= n");
  }
  if (!strictly_increasing(rows) || !strictly_increasing(cols)) {
    throw std::invalid_argument("jacobi_check: index sets must be strictly increasing");
  }
  for (int t : rows) {
    if (t < 1 || t > n) throw std::invalid_argument("jacobi_check: row index out of range");
  }
  for (int t : cols) {
    if (t < 1 || t > n) throw std::invalid_argument("jacobi_check: column index out of range");
  }
  const MixedAlgebra& alg = mixed_algebra(n);
  JacobiResult res;
  const int l = static_cast<int>(rows.size());
  for (int t = 0; t < l; ++t) res.exponent += cols[t] - rows[t];
  res.complement_rows = complement(rows, n);
  res.complement_cols = complement(cols, n);
  res.lhs = iota(MixedElem::tensor(AlgebraElem::one(), alg.starred().right_minor(rows, cols)), n);
  if (l == 0) {
    res.rhs = AlgebraElem::one();
  } else {
    res.rhs = alg.plain().multiply(alg.plain().power(alg.plain().det(), l - 1),
                                   alg.plain().right_minor(res.complement_rows, res.complement_cols));
    res.rhs *= LaurentPoly::neg_q_pow(res.exponent);
  }
  res.holds = res.lhs == res.rhs;
  return res;
}

MixedElem scaling_automorphism(const MixedElem& a, int n) {
  const MixedAlgebra& alg = mixed_algebra(n);
  MixedElem out;
  for (const auto& [w, c] : a.terms()) {
    MixedWord img;
    int shift = 0;
    for (std::size_t t = 0; t < w.plain.size(); ++t) {
      const int i = letter_row(letter_at(w.plain, t));
      const int k = letter_col(letter_at(w.plain, t));
      shift += 2 * k - 2 * i;
      img.plain.push_back(static_cast<char>(make_letter(k, i)));
    }
    for (std::size_t t = 0; t < w.starred.size(); ++t) {
      img.starred.push_back(static_cast<char>(make_letter(letter_col(letter_at(w.starred, t)), letter_row(letter_at(w.starred, t)))));
    }
    out += c.shifted(shift) * alg.normal_form(img);
  }
  return out;
}

}  // namespace qschur::mixedalg
