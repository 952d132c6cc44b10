#include "qschur/combinat/rational_tableau.hpp"

#include <algorithm>
#include <stdexcept>

namespace qschur::combinat {

namespace {

int count_at_most(const std::vector<int>& row, int i) {
  return static_cast<int>(std::count_if(row.begin(), row.end(), [i](int x) { return x <= i; }));
}

std::vector<int> first_row(const Tableau& t) { return t.row_count() > 0 ? t.row(0) : std::vector<int>{}; }

// Sorted complement of `row` inside 1..n.
std::vector<int> complement(const std::vector<int>& row, int n) {
  std::vector<int> out;
  for (int v = 1; v <= n; ++v) {
    if (std::find(row.begin(), row.end(), v) == row.end()) out.push_back(v);
  }
  return out;
}

}  // namespace

int first_counts(const RationalTableau& rt, int i) {
  return count_at_most(first_row(rt.left), i) + count_at_most(first_row(rt.right), i);
}

bool is_standard_rational(const RationalTableau& rt, int n) {
  if (!is_standard(rt.left) || !is_standard(rt.right)) return false;
  if (rt.left.shape().part(0) + rt.right.shape().part(0) > n) return false;
  for (int x : rt.left.entries()) {
    if (x < 1 || x > n) return false;
  }
  for (int x : rt.right.entries()) {
    if (x < 1 || x > n) return false;
  }
  for (int i = 1; i <= n; ++i) {
    if (first_counts(rt, i) > i) return false;
  }
  return true;
}

std::vector<RationalBasisEntry> enumerate_standard_rational(int n, int r, int s) {
  if (n < 1 || r < 0 || s < 0) throw std::invalid_argument("enumerate_standard_rational: bad parameters");
  std::vector<RationalBasisEntry> out;
  for (int k = 0; k <= std::min(r, s); ++k) {
    for (const auto& rho : partitions_of(r - k)) {
      for (const auto& sigma : partitions_of(s - k)) {
        if (rho.part(0) + sigma.part(0) > n) continue;
        const auto lefts = enumerate_standard(rho, n);
        const auto rights = enumerate_standard(sigma, n);
        for (const auto& a : lefts) {
          for (const auto& b : rights) {
            RationalTableau rt{a, b};
            if (is_standard_rational(rt, n)) out.push_back({k, std::move(rt)});
          }
        }
      }
    }
  }
  return out;
}

Tableau rational_to_ordinary(const RationalTableau& rt, int n, int s) {
  if (!is_standard_rational(rt, n)) throw std::invalid_argument("rational_to_ordinary: not a standard rational tableau");
  const auto sigma_rows = rt.right.rows();
  if (rt.right.size() > s || static_cast<int>(sigma_rows.size()) > s) {
    throw std::invalid_argument("rational_to_ordinary: right half does not fit the rectangle");
  }
  std::vector<std::vector<int>> rows;
  for (int i = 1; i <= s; ++i) {
    const int sigma_row = s + 1 - i;  // 1-based row of sigma landing in rectangle row i
    const std::vector<int> occupied =
        sigma_row <= static_cast<int>(sigma_rows.size()) ? sigma_rows[sigma_row - 1] : std::vector<int>{};
    rows.push_back(complement(occupied, n));
  }
  for (const auto& r : rt.left.rows()) rows.push_back(r);
  while (!rows.empty() && rows.back().empty()) rows.pop_back();
  for (const auto& r : rows) {
    if (r.empty()) throw std::invalid_argument("rational_to_ordinary: shape is not a partition");
  }
  return Tableau::from_rows(rows);
}

RationalTableau ordinary_to_rational(const Tableau& t, int n, int s) {
  if (!is_standard(t)) throw std::invalid_argument("ordinary_to_rational: tableau is not standard");
  int top = 0;
  for (int i = 0; i < s; ++i) top += t.shape().part(i);
  if (top < (n - 1) * s) throw std::invalid_argument("ordinary_to_rational: shape condition fails");
  const auto rows = t.rows();
  for (int x : t.entries()) {
    if (x < 1 || x > n) throw std::invalid_argument("ordinary_to_rational: entry out of range");
  }
  std::vector<std::vector<int>> sigma_rows(s);
  for (int i = 1; i <= s; ++i) {
    const std::vector<int> row = i <= static_cast<int>(rows.size()) ? rows[i - 1] : std::vector<int>{};
    sigma_rows[s - i] = complement(row, n);
  }
  std::vector<std::vector<int>> rho_rows(rows.begin() + std::min<std::size_t>(rows.size(), s), rows.end());
  RationalTableau rt{Tableau::from_rows(rho_rows), Tableau::from_rows(sigma_rows)};
  if (!is_standard_rational(rt, n)) throw std::invalid_argument("ordinary_to_rational: image is not standard rational");
  return rt;
}

}  // namespace qschur::combinat
