#include "qschur/mixedalg/straightening.hpp"

#include <algorithm>
#include <iterator>
#include <stdexcept>

#include "qschur/combinat/multi_index.hpp"
#include "qschur/mixedalg/quotient.hpp"

namespace qschur::mixedalg {

namespace {

bool strictly_increasing(const std::vector<int>& v) {
  for (std::size_t t = 1; t < v.size(); ++t) {
    if (v[t - 1] >= v[t]) return false;
  }
  return true;
}

/// Increasing k-subsets of `set` (given increasing).
void subsets_rec(const std::vector<int>& set, std::size_t start, int k, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (static_cast<int>(cur.size()) == k) {
    out.push_back(cur);
    return;
  }
  for (std::size_t t = start; t < set.size(); ++t) {
    cur.push_back(set[t]);
    subsets_rec(set, t + 1, k, cur, out);
    cur.pop_back();
  }
}

std::vector<std::vector<int>> increasing_tuples(const std::vector<int>& set, int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  subsets_rec(set, 0, k, cur, out);
  return out;
}

std::vector<int> range(int from, int to) {
  std::vector<int> out;
  for (int t = from; t <= to; ++t) out.push_back(t);
  return out;
}

MixedElem minor_pair(const std::vector<int>& r, const std::vector<int>& pcols, const std::vector<int>& s,
                     const std::vector<int>& scols, int n) {
  const MixedAlgebra& alg = mixed_algebra(n);
  return MixedElem::tensor(alg.plain().right_minor(r, pcols), alg.starred().right_minor(s, scols));
}

bool congruent_mod_det(const MixedElem& a, int n, int r, int s) { return quotient(n, r, s, true).is_zero(a); }

}  // namespace

int m_statistic(const std::vector<int>& j, const std::vector<int>& rest) {
  int m = 0;
  for (int jl : j) {
    for (int c : rest) {
      if (jl < c) ++m;
    }
  }
  return m;
}

bool derive_second_instance(SecondLemmaInstance& inst, int n) {
  const auto& rp = inst.r_prime;
  const auto& sp = inst.s_prime;
  if (rp.empty() || sp.empty() || !strictly_increasing(rp) || !strictly_increasing(sp)) return false;
  const int i = std::max(rp.back(), sp.back());
  int violator = 0;
  for (int t = 1; t <= n && violator == 0; ++t) {
    const auto first = std::count_if(rp.begin(), rp.end(), [t](int e) { return e <= t; }) +
                       std::count_if(sp.begin(), sp.end(), [t](int e) { return e <= t; });
    if (first > t) violator = t;
  }
  if (violator != i) return false;
  inst.violator = i;
  inst.common.clear();
  inst.only_r.clear();
  inst.only_s.clear();
  std::set_intersection(rp.begin(), rp.end(), sp.begin(), sp.end(), std::back_inserter(inst.common));
  std::set_difference(rp.begin(), rp.end(), sp.begin(), sp.end(), std::back_inserter(inst.only_r));
  std::set_difference(sp.begin(), sp.end(), rp.begin(), rp.end(), std::back_inserter(inst.only_s));
  if (inst.common.empty() || inst.common.back() != i) return false;
  inst.upper = inst.common;
  for (int t = i + 1; t <= n; ++t) inst.upper.push_back(t);
  inst.rest.clear();
  for (int t = 1; t <= n; ++t) {
    const auto in = [t](const std::vector<int>& v) { return std::find(v.begin(), v.end(), t) != v.end(); };
    if (!in(inst.upper) && !in(inst.only_r) && !in(inst.only_s)) inst.rest.push_back(t);
  }
  return true;
}

std::pair<MixedElem, MixedElem> first_lemma_sides(const FirstLemmaInstance& inst, int n) {
  const int k = static_cast<int>(inst.r.size());
  if (k < 1 || inst.s.size() != inst.r.size() || inst.j < 1 || inst.j > n) {
    throw std::invalid_argument("first_lemma_sides: malformed instance");
  }
  MixedElem lhs;
  MixedElem rhs;
  for (const auto& js : increasing_tuples(range(inst.j + 1, n), k)) {
    lhs += minor_pair(inst.r, std::vector<int>(js.rbegin(), js.rend()), inst.s, js, n);
  }
  for (const auto& js : increasing_tuples(range(1, inst.j), k)) {
    rhs += minor_pair(inst.r, std::vector<int>(js.rbegin(), js.rend()), inst.s, js, n);
  }
  rhs *= LaurentPoly(k % 2 == 0 ? 1L : -1L).shifted(k * (k - 1));
  return {lhs, rhs};
}

MixedElem second_lemma_sum(const SecondLemmaInstance& inst, int n) {
  if (inst.r.size() != inst.r_prime.size() || inst.s.size() != inst.s_prime.size() || inst.common.empty()) {
    throw std::invalid_argument("second_lemma_sum: malformed instance");
  }
  const int k = static_cast<int>(inst.common.size());
  MixedElem sum;
  for (const auto& js : increasing_tuples(inst.upper, k)) {
    std::vector<int> pcols = inst.only_r;
    pcols.insert(pcols.end(), js.rbegin(), js.rend());
    std::vector<int> scols = js;
    scols.insert(scols.end(), inst.only_s.begin(), inst.only_s.end());
    sum += LaurentPoly::q_pow(2 * m_statistic(js, inst.rest)) * minor_pair(inst.r, pcols, inst.s, scols, n);
  }
  return sum;
}

bool verify_first_lemma(const FirstLemmaInstance& inst, int n) {
  const auto [lhs, rhs] = first_lemma_sides(inst, n);
  const int k = static_cast<int>(inst.r.size());
  return congruent_mod_det(lhs - rhs, n, k, k);
}

bool verify_second_lemma(const SecondLemmaInstance& inst, int n) {
  return congruent_mod_det(second_lemma_sum(inst, n), n, static_cast<int>(inst.r.size()), static_cast<int>(inst.s.size()));
}

std::vector<FirstLemmaInstance> first_lemma_instances(int n, int kmax) {
  std::vector<FirstLemmaInstance> out;
  for (int k = 1; k <= kmax; ++k) {
    for (const auto& r : combinat::all_multi_indices(n, k)) {
      for (const auto& s : combinat::all_multi_indices(n, k)) {
        for (int j = 1; j <= n; ++j) out.push_back({r, s, j});
      }
    }
  }
  return out;
}

std::vector<SecondLemmaInstance> second_lemma_instances(int n, int kmax, int max_degree) {
  std::vector<SecondLemmaInstance> out;
  const auto all = range(1, n);
  for (int a = 1; a <= n; ++a) {
    for (int b = 1; b <= n; ++b) {
      if (a > max_degree || b > max_degree) continue;
      for (const auto& rp : increasing_tuples(all, a)) {
        for (const auto& sp : increasing_tuples(all, b)) {
          SecondLemmaInstance base;
          base.r_prime = rp;
          base.s_prime = sp;
          if (!derive_second_instance(base, n) || static_cast<int>(base.common.size()) > kmax) continue;
          for (const auto& r : combinat::all_multi_indices(n, a)) {
            for (const auto& s : combinat::all_multi_indices(n, b)) {
              SecondLemmaInstance inst = base;
              inst.r = r;
              inst.s = s;
              out.push_back(std::move(inst));
            }
          }
        }
      }
    }
  }
  return out;
}

}  // namespace qschur::mixedalg
