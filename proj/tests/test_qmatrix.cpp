#include <random>

#include "doctest.h"
#include "qschur/combinat/perm.hpp"
#include "qschur/qmatrix/json.hpp"
#include "qschur/qmatrix/standard_basis.hpp"

using namespace qschur::qmatrix;
using qschur::combinat::Tableau;
using qschur::exactalg::LaurentPoly;
using qschur::exactalg::RationalFn;

namespace {

const LaurentPoly q = LaurentPoly::q_pow(1);
const LaurentPoly qi = LaurentPoly::q_pow(-1);

AlgebraElem x(const QMatrixAlgebra& A, int i, int j) { return A.generator(i, j); }
AlgebraElem mono(const NCWord& w, LaurentPoly c = LaurentPoly(1L)) { return AlgebraElem::monomial(to_word(w), c); }

// Oracle: rewrite a randomly chosen descending adjacent pair until every word is sorted.
// The relations are transcribed directly from the defining presentation.
AlgebraElem random_order_reduce(const AlgebraElem& start, std::mt19937& rng) {
  std::map<NCWord, LaurentPoly> cur;
  for (const auto& [w, c] : start.terms()) cur[to_ncword(w)] += c;
  for (;;) {
    std::vector<NCWord> unsorted;
    for (const auto& [w, c] : cur) {
      if (c.is_zero()) continue;
      for (std::size_t k = 0; k + 1 < w.size(); ++k) {
        if (w[k] > w[k + 1]) {
          unsorted.push_back(w);
          break;
        }
      }
    }
    if (unsorted.empty()) break;
    const NCWord w = unsorted[rng() % unsorted.size()];
    std::vector<std::size_t> desc;
    for (std::size_t k = 0; k + 1 < w.size(); ++k) {
      if (w[k] > w[k + 1]) desc.push_back(k);
    }
    const std::size_t k = desc[rng() % desc.size()];
    const LaurentPoly c = cur[w];
    cur.erase(w);
    const auto [a, b] = w[k];      // larger letter x_ab
    const auto [cc, d] = w[k + 1];  // smaller letter x_cd
    NCWord swapped = w;
    std::swap(swapped[k], swapped[k + 1]);
    if (a == cc) {
      // x_{cd} x_{cb} = q x_{cb} x_{cd} with d < b
      cur[swapped] += c * qi;
    } else if (b == d) {
      // x_{cb} x_{ab} = q x_{ab} x_{cb} with c < a
      cur[swapped] += c * qi;
    } else if (b < d) {
      cur[swapped] += c;
    } else {
      // x_{cd} x_{ab} = x_{ab} x_{cd} + (q - q^-1) x_{cb} x_{ad}
      cur[swapped] += c;
      NCWord extra = w;
      extra[k] = {cc, b};
      extra[k + 1] = {a, d};
      cur[extra] -= c * (q - qi);
    }
  }
  AlgebraElem out;
  for (const auto& [w, c] : cur) out.add_term(to_word(w), c);
  return out;
}

long binomial(long a, long b) {
  long r = 1;
  for (long i = 1; i <= b; ++i) r = r * (a - b + i) / i;
  return r;
}

AlgebraElem reconstruct(const StandardBasis& basis, const qschur::exactalg::SparseVec<RationalFn>& coeffs) {
  AlgebraElem out;
  for (const auto& [idx, c] : coeffs) out += c.as_laurent() * basis.element(idx);
  return out;
}

std::vector<std::vector<int>> increasing_subsets(int n, int k) {
  std::vector<std::vector<int>> out;
  for (const auto& w : qschur::combinat::all_multi_indices(n, k)) {
    bool inc = true;
    for (int t = 1; t < k; ++t) inc = inc && w[t - 1] < w[t];
    if (inc) out.push_back(w);
  }
  return out;
}

std::vector<std::vector<int>> distinct_tuples(int n, int k) {
  std::vector<std::vector<int>> out;
  for (const auto& w : qschur::combinat::all_multi_indices(n, k)) {
    std::vector<int> s = w;
    std::sort(s.begin(), s.end());
    if (std::adjacent_find(s.begin(), s.end()) == s.end()) out.push_back(w);
  }
  return out;
}

}  // namespace

TEST_CASE("normal_form examples") {
  QMatrixAlgebra A(2);
  CHECK(A.normal_form(NCWord{{2, 1}, {1, 1}}) == mono({{1, 1}, {2, 1}}, qi));
  CHECK(A.normal_form(NCWord{{2, 1}, {1, 2}}) == mono({{1, 2}, {2, 1}}));
  CHECK(A.normal_form(NCWord{{2, 2}, {1, 1}}) == mono({{1, 1}, {2, 2}}) - mono({{1, 2}, {2, 1}}, q - qi));
  CHECK(A.normal_form(NCWord{{1, 2}, {1, 1}}) == mono({{1, 1}, {1, 2}}, qi));
  QMatrixAlgebra S(2, Variant::Starred);
  CHECK(S.normal_form(NCWord{{2, 1}, {1, 1}}) == mono({{1, 1}, {2, 1}}, q));
  CHECK(S.normal_form(NCWord{{2, 2}, {1, 1}}) == mono({{1, 1}, {2, 2}}) + mono({{1, 2}, {2, 1}}, q - qi));
}

TEST_CASE("multiply is unital and associative") {
  QMatrixAlgebra A(3);
  std::mt19937 rng(3);
  auto random_elem = [&](int deg) {
    AlgebraElem a;
    for (int t = 0; t < 2; ++t) {
      NCWord w;
      for (int k = 0; k < deg; ++k) w.emplace_back(1 + rng() % 3, 1 + rng() % 3);
      a += A.normal_form(w);
    }
    return a;
  };
  for (int trial = 0; trial < 20; ++trial) {
    const auto a = random_elem(1 + trial % 2);
    const auto b = random_elem(1);
    const auto c = random_elem(2);
    CHECK(A.multiply(AlgebraElem::one(), a) == a);
    CHECK(A.multiply(a, AlgebraElem::one()) == a);
    CHECK(A.multiply(A.multiply(a, b), c) == A.multiply(a, A.multiply(b, c)));
  }
  CHECK(A.multiply(x(A, 1, 1), x(A, 2, 2)) == mono({{1, 1}, {2, 2}}));
}

TEST_CASE("PBW confluence against random reduction orders") {
  std::mt19937 rng(17);
  for (int n = 2; n <= 3; ++n) {
    QMatrixAlgebra A(n);
    for (int m = 1; m <= 4; ++m) {
      CHECK(monomial_basis(n, m).size() == static_cast<std::size_t>(binomial(n * n + m - 1, m)));
      for (int trial = 0; trial < 25; ++trial) {
        NCWord w;
        for (int k = 0; k < m; ++k) w.emplace_back(1 + rng() % n, 1 + rng() % n);
        const auto expected = A.normal_form(w);
        CHECK(random_order_reduce(mono(w), rng) == expected);
        CHECK(random_order_reduce(mono(w), rng) == expected);
      }
    }
  }
  CHECK(monomial_basis(1, 3) == std::vector<Word>{to_word({{1, 1}, {1, 1}, {1, 1}})});
}

TEST_CASE("quantum minors") {
  QMatrixAlgebra A(2);
  const auto m1212 = mono({{1, 1}, {2, 2}}) - mono({{1, 2}, {2, 1}}, q);
  CHECK(A.right_minor({1, 2}, {1, 2}) == m1212);
  CHECK(A.right_minor({2, 1}, {1, 2}) == -qi * m1212);
  CHECK(A.right_minor({1, 1}, {1, 2}).is_zero());
  CHECK(A.left_minor({1, 2}, {1, 2}) == m1212);
  CHECK(A.left_minor({1, 2}, {2, 1}) == -qi * m1212);
  CHECK(A.left_minor({2, 1}, {1, 2}) == -q * m1212);
  CHECK(A.left_minor({1}, {1}) == x(A, 1, 1));
  CHECK(A.det() == m1212);
  CHECK(QMatrixAlgebra(1).det() == mono({{1, 1}}));
  CHECK_THROWS_AS(A.right_minor({1, 2}, {1}), std::invalid_argument);
}

TEST_CASE("remark identities for minors") {
  for (int n = 2; n <= 3; ++n) {
    QMatrixAlgebra A(n);
    for (int k = 1; k <= n; ++k) {
      for (const auto& rows : increasing_subsets(n, k)) {
        for (const auto& cols : increasing_subsets(n, k)) {
          const auto r = A.right_minor(rows, cols);
          CHECK(r == A.left_minor(rows, cols));
          for (int l = 1; l < k; ++l) {
            // Column swap in a right minor and row swap in a left minor give -q.
            auto cs = cols;
            std::swap(cs[l - 1], cs[l]);
            CHECK(A.right_minor(rows, cs) == -q * r);
            auto rs = rows;
            std::swap(rs[l - 1], rs[l]);
            CHECK(A.left_minor(rs, cols) == -q * r);
            auto dup = cols;
            dup[l] = dup[l - 1];
            CHECK(A.right_minor(rows, dup).is_zero());
            auto rdup = rows;
            rdup[l] = rdup[l - 1];
            CHECK(A.left_minor(rdup, cols).is_zero());
          }
          // sum_w (-q)^{-l(w)} x_{i_{wk} j_1} ... x_{i_{w1} j_k} = (-q)^{-k(k-1)/2} (I|J)_r
          AlgebraElem opp;
          for (const auto& w : qschur::combinat::all_perms(k)) {
            NCWord word;
            for (int t = 1; t <= k; ++t) word.emplace_back(rows[w(k + 1 - t) - 1], cols[t - 1]);
            opp += LaurentPoly::neg_q_pow(-w.length()) * A.normal_form(word);
          }
          CHECK(LaurentPoly::neg_q_pow(k * (k - 1) / 2) * opp == r);
        }
      }
    }
  }
}

TEST_CASE("det_q is central") {
  for (int n = 1; n <= 3; ++n) {
    QMatrixAlgebra A(n);
    const auto d = A.det();
    for (int i = 1; i <= n; ++i) {
      for (int j = 1; j <= n; ++j) CHECK(A.multiply(d, x(A, i, j)) == A.multiply(x(A, i, j), d));
    }
  }
  QMatrixAlgebra S(3, Variant::Starred);
  for (int i = 1; i <= 3; ++i) CHECK(S.multiply(S.det(), x(S, i, 1)) == S.multiply(x(S, i, 1), S.det()));
}

TEST_CASE("laplace expansion examples") {
  const auto left = laplace_expand({1, 2}, {1, 2}, 1, MinorSide::Left);
  REQUIRE(left.size() == 2);
  CHECK(left[0].coeff == LaurentPoly(1L));
  CHECK(left[0].first == MinorIndex{{1}, {1}});
  CHECK(left[0].second == MinorIndex{{2}, {2}});
  CHECK(left[1].coeff == -q);
  CHECK(left[1].first == MinorIndex{{1}, {2}});
  CHECK(left[1].second == MinorIndex{{2}, {1}});
  const auto right = laplace_expand({1, 2}, {1, 2}, 1, MinorSide::Right);
  REQUIRE(right.size() == 2);
  CHECK(right[1].coeff == -q);
  CHECK(right[1].first == MinorIndex{{2}, {1}});
  CHECK(right[1].second == MinorIndex{{1}, {2}});
  const auto trivial = laplace_expand({3}, {2}, 1, MinorSide::Right);
  REQUIRE(trivial.size() == 1);
  CHECK(trivial[0].coeff == LaurentPoly(1L));
  CHECK(trivial[0].first == MinorIndex{{3}, {2}});
  CHECK_THROWS_AS(laplace_expand({1, 2}, {2, 1}, 1, MinorSide::Left), std::invalid_argument);
  CHECK_THROWS_AS(laplace_expand({2, 1}, {1, 2}, 1, MinorSide::Right), std::invalid_argument);
}

TEST_CASE("laplace expansion identities for n <= 4") {
  for (int n = 2; n <= 4; ++n) {
    QMatrixAlgebra A(n);
    for (int k = 2; k <= n; ++k) {
      for (const auto& fixed : increasing_subsets(n, k)) {
        for (const auto& other : distinct_tuples(n, k)) {
          const auto lhs_left = A.left_minor(other, fixed);
          const auto lhs_right = A.right_minor(fixed, other);
          for (int l = 1; l < k; ++l) {
            AlgebraElem sum_left;
            for (const auto& t : laplace_expand(other, fixed, l, MinorSide::Left)) {
              sum_left += t.coeff * A.multiply(A.left_minor(t.first.rows, t.first.cols),
                                               A.left_minor(t.second.rows, t.second.cols));
            }
            CHECK(sum_left == lhs_left);
            AlgebraElem sum_right;
            for (const auto& t : laplace_expand(fixed, other, l, MinorSide::Right)) {
              sum_right += t.coeff * A.multiply(A.right_minor(t.first.rows, t.first.cols),
                                                A.right_minor(t.second.rows, t.second.cols));
            }
            CHECK(sum_right == lhs_right);
          }
        }
      }
    }
  }
}

TEST_CASE("bideterminants") {
  QMatrixAlgebra A(2);
  const Tableau col = Tableau::from_rows({{1}, {2}});
  const Tableau ones = Tableau::from_rows({{1}, {1}});
  CHECK(A.bideterminant(col, ones) == mono({{1, 1}, {2, 1}}, qi));
  const Tableau row = Tableau::from_rows({{1, 2}});
  CHECK(A.bideterminant(row, row) == A.det());
  CHECK(A.bideterminant(row, Tableau::from_rows({{1, 1}})).is_zero());
  CHECK_THROWS_AS(A.bideterminant(row, col), std::invalid_argument);
}

TEST_CASE("standard bideterminants form a basis graded by content") {
  for (int n = 1; n <= 3; ++n) {
    QMatrixAlgebra A(n);
    for (int m = 1; m <= 4; ++m) {
      StandardBasis basis(A, m);
      const auto expected = static_cast<std::size_t>(binomial(n * n + m - 1, m));
      CHECK(basis.bitableaux().size() == expected);
      CHECK(basis.total_rank() == expected);
      for (std::size_t i = 0; i < basis.bitableaux().size(); ++i) {
        const auto& b = basis.bitableaux()[i];
        const auto key = std::make_pair(qschur::combinat::content(b.t, n), qschur::combinat::content(b.t2, n));
        for (const auto& [w, c] : basis.element(i).terms()) CHECK(word_content(w, n) == key);
      }
    }
  }
}

TEST_CASE("straighten") {
  QMatrixAlgebra A(2);
  StandardBasis basis(A, 2);
  const Tableau row = Tableau::from_rows({{1, 2}});
  const auto idx = basis.index_of({row, row});
  REQUIRE(idx.has_value());
  const auto unit = basis.straighten(basis.element(*idx));
  REQUIRE(unit.size() == 1);
  CHECK(unit[0].first == *idx);
  CHECK(unit[0].second == RationalFn(1L));
  const auto swapped = basis.straighten(A.right_minor({2, 1}, {1, 2}));
  REQUIRE(swapped.size() == 1);
  CHECK(swapped[0].first == *idx);
  CHECK(swapped[0].second == RationalFn(-qi));
  const auto a = A.normal_form(NCWord{{2, 2}, {1, 1}});
  const auto coeffs = basis.straighten(a);
  for (const auto& [i, c] : coeffs) CHECK(c.has_unit_denominator());
  CHECK(reconstruct(basis, coeffs) == a);
  CHECK_THROWS_AS(basis.straighten(x(A, 1, 1)), std::invalid_argument);
  std::mt19937 rng(1);
  QMatrixAlgebra B(3);
  StandardBasis b3(B, 3);
  for (int trial = 0; trial < 20; ++trial) {
    NCWord w;
    for (int k = 0; k < 3; ++k) w.emplace_back(1 + rng() % 3, 1 + rng() % 3);
    const auto e = B.normal_form(w);
    const auto c = b3.straighten(e);
    for (const auto& [i, v] : c) CHECK(v.has_unit_denominator());
    CHECK(reconstruct(b3, c) == e);
  }
}

TEST_CASE("AlgebraElem JSON") {
  QMatrixAlgebra A(2);
  const auto d = A.det();
  const nlohmann::json j = d;
  CHECK(j.size() == 2);
  CHECK(j.get<AlgebraElem>() == d);
}
