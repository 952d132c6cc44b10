#include "doctest.h"
#include "qschur/combinat/multi_index.hpp"
#include "qschur/exactalg/linalg.hpp"
#include "qschur/mixedalg/iota.hpp"
#include "qschur/mixedalg/json.hpp"
#include "qschur/mixedalg/rational_basis.hpp"
#include "qschur/mixedalg/straightening.hpp"

using namespace qschur::mixedalg;
using qschur::combinat::Tableau;
using qschur::exactalg::LaurentPoly;
using qschur::exactalg::Matrix;
using qschur::qmatrix::NCWord;
using qschur::qmatrix::to_word;

namespace {

const LaurentPoly q = LaurentPoly::q_pow(1);
const LaurentPoly qi = LaurentPoly::q_pow(-1);

MixedElem mw(const NCWord& p, const NCWord& s, LaurentPoly c = LaurentPoly(1L)) {
  return MixedElem::monomial(MixedWord{to_word(p), to_word(s)}, c);
}

AlgebraElem pw(const NCWord& p, LaurentPoly c = LaurentPoly(1L)) { return AlgebraElem::monomial(to_word(p), c); }

RationalTableau rtab(std::vector<std::vector<int>> left, std::vector<std::vector<int>> right) {
  return {Tableau::from_rows(left), Tableau::from_rows(right)};
}

// Oracle: generators written out as rows over all normal monomials, rank by fraction-free elimination.
std::size_t quotient_dim_oracle(int n, int r, int s) {
  const auto monos = mixed_monomial_basis(n, r, s);
  std::map<MixedWord, std::size_t> col;
  for (std::size_t i = 0; i < monos.size(); ++i) col[monos[i]] = i;
  Matrix m(0, monos.size());
  for (const auto& g : cross_relation_generators(n, r, s)) {
    std::vector<std::pair<std::uint32_t, qschur::exactalg::RationalFn>> row;
    for (const auto& [w, c] : g.terms()) row.emplace_back(static_cast<std::uint32_t>(col.at(w)), c);
    m.append_row(qschur::exactalg::make_sparse(std::move(row)));
  }
  return monos.size() - qschur::exactalg::mat_rank(m);
}

bool all_unit(const qschur::exactalg::SparseVec<RationalFn>& v) {
  for (const auto& [i, c] : v) {
    if (!c.is_polynomial()) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("cross relation generators") {
  SUBCASE("n=2, r=s=1: two (9), two (10), four (11)") {
    const auto rels = cross_relations(2);
    CHECK(rels.size() == 8);
    CHECK(rels[0] == mw({{1, 1}}, {{2, 1}}) + mw({{1, 2}}, {{2, 2}}));
    CHECK(rels[1] == mw({{2, 1}}, {{1, 1}}) + mw({{2, 2}}, {{1, 2}}));
    CHECK(rels[2] == mw({{1, 1}}, {{1, 2}}, q.pow(2)) + mw({{2, 1}}, {{2, 2}}, q.pow(4)));
    // i = j = 1: sum_k q^{2k-2} x_{k1} x*_{k1} - sum_k x_{1k} x*_{1k}
    CHECK(rels[4] == mw({{2, 1}}, {{2, 1}}, q.pow(2)) - mw({{1, 2}}, {{1, 2}}));
    CHECK(cross_relation_generators(2, 1, 1).size() == 8);
  }
  SUBCASE("no cross terms without both factors") {
    CHECK(cross_relation_generators(2, 0, 1).empty());
    CHECK(cross_relation_generators(3, 2, 0).empty());
  }
  SUBCASE("sandwich count") {
    // h1 runs over the 4 plain letters, h3 is empty.
    CHECK(cross_relation_generators(2, 2, 1).size() == 4 * 8);
    CHECK(cross_relation_generators(2, 2, 2).size() == 4 * 4 * 8);
  }
}

TEST_CASE("quotient dimensions") {
  SUBCASE("n=2, r=s=1") {
    const auto& Q = quotient(2, 1, 1);
    CHECK(Q.monomials().size() == 16);
    CHECK(Q.relation_rank() == 6);
    CHECK(Q.dim() == 10);
  }
  for (auto [n, r, s] : std::vector<std::tuple<int, int, int>>{{2, 1, 1}, {2, 2, 1}, {2, 1, 2}, {3, 1, 1}, {2, 2, 2}, {2, 0, 2}}) {
    CAPTURE(n);
    CAPTURE(r);
    CAPTURE(s);
    CHECK(quotient(n, r, s).dim() == quotient_dim_oracle(n, r, s));
  }
  SUBCASE("generators have zero coordinates") {
    for (auto [n, r, s] : std::vector<std::tuple<int, int, int>>{{2, 1, 1}, {2, 2, 1}, {3, 1, 1}}) {
      for (const auto& g : cross_relation_generators(n, r, s)) CHECK(canonical_coords(g, n, r, s).empty());
    }
  }
  SUBCASE("(11) identifies the two traces") {
    const MixedElem lhs = mw({{1, 1}}, {{1, 1}}) + mw({{2, 1}}, {{2, 1}}, q.pow(2));
    const MixedElem rhs = det_frak_one(2);
    CHECK_FALSE(canonical_coords(rhs, 2, 1, 1).empty());
    CHECK(canonical_coords(lhs, 2, 1, 1) == canonical_coords(rhs, 2, 1, 1));
  }
  SUBCASE("complement basis monomials have unit coordinates") {
    const auto& Q = quotient(2, 2, 1);
    for (std::size_t i = 0; i < Q.dim(); ++i) {
      const auto c = Q.coords(MixedElem::monomial(Q.complement_basis()[i]));
      REQUIRE(c.size() == 1);
      CHECK(c[0].first == i);
      CHECK(c[0].second == RationalFn(1L));
    }
  }
  SUBCASE("bidegree mismatch") { CHECK_THROWS_AS(canonical_coords(mw({{1, 1}}, {}), 2, 1, 1), std::invalid_argument); }
}

TEST_CASE("det_frak and bideterminants") {
  const MixedAlgebra& A = mixed_algebra(2);
  CHECK(det_frak(1, 2) == mw({{1, 1}}, {{1, 1}}) + mw({{1, 2}}, {{1, 2}}));
  MixedElem d2;
  for (int l = 1; l <= 2; ++l) {
    for (int m = 1; m <= 2; ++m) d2 += A.normal_form(mw({{1, l}, {1, m}}, {{1, m}, {1, l}}));
  }
  CHECK(det_frak(2, 2) == d2);
  CHECK_THROWS_AS(det_frak(0, 2), std::invalid_argument);

  const Tableau one = Tableau::from_rows({{1}});
  CHECK(starred_bideterminant(one, one, 2) == mw({}, {{1, 1}}));
  const Tableau row12 = Tableau::from_rows({{1, 2}});
  CHECK(starred_bideterminant(row12, row12, 2) ==
        A.normal_form(mw({}, {{1, 1}, {2, 2}}) - mw({}, {{2, 1}, {1, 2}}, qi)));
  CHECK(starred_bideterminant(Tableau::from_rows({{1, 1}}), row12, 2).is_zero());

  CHECK(rational_bideterminant(rtab({{1}}, {{2}}), rtab({{1}}, {{2}}), 0, 2) == mw({{1, 1}}, {{2, 2}}));
  CHECK(rational_bideterminant(rtab({}, {}), rtab({}, {}), 2, 2) == det_frak(2, 2));
  CHECK(rational_bideterminant(rtab({{1, 1, 2}}, {}), rtab({{1, 2, 2}}, {}), 0, 2).is_zero());
  CHECK_THROWS_AS(rational_bideterminant(rtab({{1}}, {}), rtab({{1, 2}}, {}), 0, 2), std::invalid_argument);
}

TEST_CASE("iota") {
  SUBCASE("starred letters at n=2") {
    CHECK(iota_starred_letter(1, 1, 2) == pw({{2, 2}}));
    CHECK(iota_starred_letter(1, 2, 2) == pw({{2, 1}}, -q));
    CHECK(iota_starred_letter(2, 1, 2) == pw({{1, 2}}, -qi));
    CHECK(iota_starred_letter(2, 2, 2) == pw({{1, 1}}));
  }
  SUBCASE("cross relations") {
    for (int n = 2; n <= 3; ++n) {
      const auto& P = mixed_algebra(n).plain();
      MixedElem off;
      MixedElem diag;
      for (int k = 1; k <= n; ++k) {
        off += mw({{1, k}}, {{2, k}});
        diag += mw({{1, k}}, {{1, k}});
      }
      CHECK(iota(off, n).is_zero());
      CHECK(iota(diag, n) == P.det());
      CHECK(iota(det_frak(1, n), n) == P.det());
      CHECK(iota(det_frak(2, n), n) == P.power(P.det(), 2));
    }
  }
  SUBCASE("kernel contains Y") {
    for (int n = 1; n <= 3; ++n) {
      for (int r = 1; r <= 2; ++r) {
        for (int s = 1; s <= 2; ++s) {
          for (const auto& g : cross_relation_generators(n, r, s)) CHECK(iota(g, n, r, s).is_zero());
        }
      }
    }
  }
  SUBCASE("starred relations are respected letter by letter") {
    // iota evaluated on raw words, without normalizing the starred factor first.
    for (int n = 2; n <= 3; ++n) {
      const auto& P = mixed_algebra(n).plain();
      const auto img = [&](int i, int j, int k, int l) { return P.multiply(iota_starred_letter(i, j, n), iota_starred_letter(k, l, n)); };
      for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= n; ++j) {
          for (int k = 1; k <= n; ++k) {
            for (int l = 1; l <= n; ++l) {
              AlgebraElem rel;
              if (i < k && j == l) rel = img(i, j, k, l) - qi * img(k, l, i, j);
              else if (i == k && j < l) rel = img(i, j, k, l) - qi * img(k, l, i, j);
              else if (i < k && j > l) rel = img(i, j, k, l) - img(k, l, i, j);
              else if (i < k && j < l) rel = img(i, j, k, l) - img(k, l, i, j) + (q - qi) * img(i, l, k, j);
              else continue;
              CHECK(rel.is_zero());
            }
          }
        }
      }
    }
  }
  SUBCASE("bidegree check") { CHECK_THROWS_AS(iota(mw({{1, 1}}, {}), 2, 1, 1), std::invalid_argument); }
}

TEST_CASE("Jacobi ratio theorem") {
  SUBCASE("examples") {
    const auto empty = jacobi_check({}, {}, 2);
    CHECK(empty.holds);
    CHECK(empty.lhs == AlgebraElem::one());
    const auto base = jacobi_check({1}, {1}, 2);
    CHECK(base.exponent == 0);
    CHECK(base.complement_rows == std::vector<int>{2});
    CHECK(base.lhs == pw({{2, 2}}));
    CHECK(base.holds);
    const auto full = jacobi_check({1, 2}, {1, 2}, 2);
    CHECK(full.lhs == mixed_algebra(2).plain().det());
    CHECK(full.holds);
  }
  SUBCASE("all index pairs, n <= 4") {
    for (int n = 1; n <= 4; ++n) {
      std::vector<std::vector<int>> subsets;
      for (int mask = 0; mask < (1 << n); ++mask) {
        std::vector<int> v;
        for (int t = 0; t < n; ++t) {
          if (mask & (1 << t)) v.push_back(t + 1);
        }
        subsets.push_back(v);
      }
      for (const auto& I : subsets) {
        for (const auto& J : subsets) {
          if (I.size() != J.size()) continue;
          const auto res = jacobi_check(I, J, n);
          CAPTURE(n);
          CHECK(res.holds);
        }
      }
    }
  }
  SUBCASE("errors") {
    CHECK_THROWS_AS(jacobi_check({2, 1}, {1, 2}, 2), std::invalid_argument);
    CHECK_THROWS_AS(jacobi_check({1}, {1, 2}, 2), std::invalid_argument);
  }
}

TEST_CASE("rational basis") {
  SUBCASE("n=2, r=s=1") {
    const auto& B = rational_basis(2, 1, 1);
    CHECK(B.bitableaux().size() == 10);
    CHECK(B.is_basis());
    const auto v = rational_straighten(B.element(3), 2, 1, 1);
    REQUIRE(v.size() == 1);
    CHECK(v[0].first == 3);
    CHECK(v[0].second == RationalFn(1L));
  }
  SUBCASE("count equals quotient dimension") {
    for (int n = 1; n <= 3; ++n) {
      for (int r = 0; r <= 2; ++r) {
        for (int s = 0; s <= 2; ++s) {
          CAPTURE(n);
          CAPTURE(r);
          CAPTURE(s);
          const auto& B = rational_basis(n, r, s);
          CHECK(B.bitableaux().size() == quotient(n, r, s).dim());
          CHECK(B.is_basis());
        }
      }
    }
  }
  SUBCASE("nonstandard bideterminants expand with unit denominators") {
    const auto nonstd = rational_bideterminant(rtab({{1}}, {{1}}), rtab({{1}}, {{2}}), 0, 2);
    const auto v = rational_straighten(nonstd, 2, 1, 1);
    CHECK_FALSE(v.empty());
    CHECK(all_unit(v));
    const auto& B = rational_basis(2, 1, 1);
    MixedElem rebuilt;
    for (const auto& [i, c] : v) rebuilt += c.as_laurent() * B.element(i);
    CHECK(canonical_coords(rebuilt - nonstd, 2, 1, 1).empty());

    const auto w = rational_straighten(mw({{1, 1}}, {{1, 1}}), 2, 1, 1);
    CHECK(all_unit(w));
    bool uses_det = false;
    for (const auto& [i, c] : w) uses_det = uses_det || B.bitableaux()[i].k == 1;
    CHECK(uses_det);
  }
  SUBCASE("every monomial expands with unit denominators") {
    for (auto [n, r, s] : std::vector<std::tuple<int, int, int>>{{2, 1, 1}, {2, 2, 1}, {2, 1, 2}, {3, 1, 1}}) {
      for (const auto& w : mixed_monomial_basis(n, r, s)) CHECK(all_unit(rational_straighten(MixedElem::monomial(w), n, r, s)));
    }
  }
}

TEST_CASE("c exponent and phi") {
  SUBCASE("examples") {
    CHECK(c_exponent(rtab({{1}}, {{2}}), rtab({{1}}, {{2}}), 2, 1, 1) == 0);
    // (2|1)(1|2)* = x21 x*12 and iota(x*12) = -q x21, so iota = (-q) x21 x21 = (-q)(t|t') with t = t' = [[2],[2]] and [[1],[1]].
    CHECK(iota(rational_bideterminant(rtab({{2}}, {{1}}), rtab({{1}}, {{2}}), 0, 2), 2) == pw({{2, 1}, {2, 1}}, -q));
    CHECK(c_exponent(rtab({{2}}, {{1}}), rtab({{1}}, {{2}}), 2, 1, 1) == 1);
    CHECK(c_exponent(rtab({}, {}), rtab({}, {}), 2, 1, 1) == 0);
    CHECK(c_exponent(rtab({}, {}), rtab({}, {}), 3, 2, 2) == 0);
  }
  SUBCASE("phi inverts iota on the basis") {
    for (auto [n, r, s] : std::vector<std::tuple<int, int, int>>{{2, 1, 1}, {2, 2, 1}, {2, 1, 2}, {2, 2, 2}, {3, 1, 1}, {3, 0, 1},
                                                                  {1, 2, 2}, {3, 2, 1}, {3, 1, 2}, {3, 2, 2}}) {
      const auto& B = rational_basis(n, r, s);
      for (std::size_t i = 0; i < B.bitableaux().size(); ++i) {
        const auto v = phi_rational(iota(B.element(i), n, r, s), n, r, s);
        REQUIRE(v.size() == 1);
        CHECK(v[0].first == i);
        CHECK(v[0].second == RationalFn(1L));
        CHECK(phi(iota(B.element(i), n, r, s), n, r, s) == canonical_coords(B.element(i), n, r, s));
      }
    }
  }
  SUBCASE("shape filter") {
    const auto& P = mixed_algebra(3).plain();
    const AlgebraElem b = P.bideterminant(Tableau::from_rows({{1}, {2}}), Tableau::from_rows({{1}, {2}}));
    CHECK(phi(b, 3, 0, 1).empty());
    CHECK(phi(AlgebraElem(), 3, 0, 1).empty());
    CHECK_THROWS_AS(phi(pw({{1, 1}}), 3, 0, 1), std::invalid_argument);
  }
}

TEST_CASE("scaling automorphism") {
  CHECK(scaling_automorphism(mw({{1, 2}}, {}), 2) == mw({{2, 1}}, {}, q.pow(2)));
  CHECK(scaling_automorphism(mw({}, {{1, 2}}), 2) == mw({}, {{2, 1}}));
  for (auto [n, r, s] : std::vector<std::tuple<int, int, int>>{{2, 1, 1}, {2, 2, 1}, {3, 1, 1}}) {
    for (const auto& g : cross_relation_generators(n, r, s)) CHECK(canonical_coords(scaling_automorphism(g, n), n, r, s).empty());
  }
}

TEST_CASE("det^(k) lemma") {
  for (int n = 1; n <= 3; ++n) {
    const MixedAlgebra& A = mixed_algebra(n);
    const MixedElem d = det_frak(1, n);
    const auto sand = [&](int i, int j, int k, int l) {
      const auto x = static_cast<char>(qschur::qmatrix::make_letter(i, j));
      const auto y = static_cast<char>(qschur::qmatrix::make_letter(k, l));
      MixedElem out;
      for (const auto& [w, c] : d.terms()) out += c * A.normal_form(MixedWord{x + w.plain, w.starred + y});
      return out;
    };
    for (int i = 1; i <= n; ++i) {
      for (int j = 1; j <= n; ++j) {
        MixedElem e1;
        MixedElem e2;
        MixedElem lhs3;
        MixedElem rhs3;
        for (int l = 1; l <= n; ++l) {
          e1 += sand(i, l, j, l);
          e2 += LaurentPoly::q_pow(2 * l) * sand(l, i, l, j);
          lhs3 += LaurentPoly::q_pow(2 * l - 2 * i) * sand(l, i, l, i);
          rhs3 += sand(j, l, j, l);
        }
        if (i != j) {
          CHECK(canonical_coords(e1, n, 2, 2).empty());
          CHECK(canonical_coords(e2, n, 2, 2).empty());
        }
        CHECK(canonical_coords(lhs3 - rhs3, n, 2, 2).empty());
        if (i == 1 && j == 1) CHECK(canonical_coords(e1 - det_frak(2, n), n, 2, 2).empty());
      }
    }
  }
}

TEST_CASE("straightening lemmas") {
  SUBCASE("k=1, n=2, j=1, (r,s)=(1,2)") {
    const FirstLemmaInstance inst{{1}, {2}, 1};
    const auto [lhs, rhs] = first_lemma_sides(inst, 2);
    CHECK(lhs == mw({{1, 2}}, {{2, 2}}));
    CHECK(rhs == mw({{1, 1}}, {{2, 1}}, -1L));
    CHECK(verify_first_lemma(inst, 2));
  }
  SUBCASE("first lemma, n <= 3") {
    for (int n = 1; n <= 3; ++n) {
      for (const auto& inst : first_lemma_instances(n, 2)) CHECK(verify_first_lemma(inst, n));
    }
  }
  SUBCASE("first lemma is not an identity in the quotient itself") {
    const FirstLemmaInstance inst{{1}, {1}, 1};
    const auto [lhs, rhs] = first_lemma_sides(inst, 2);
    CHECK_FALSE(canonical_coords(lhs - rhs, 2, 1, 1).empty());
  }
  SUBCASE("second lemma instances") {
    SecondLemmaInstance inst;
    inst.r_prime = {2, 3};
    inst.s_prime = {2, 3};
    REQUIRE(derive_second_instance(inst, 3));
    CHECK(inst.violator == 3);
    CHECK(inst.common == std::vector<int>{2, 3});
    CHECK(inst.upper == std::vector<int>{2, 3});
    CHECK(inst.rest == std::vector<int>{1});
    SecondLemmaInstance bad;
    bad.r_prime = {1, 2};
    bad.s_prime = {1, 2};
    CHECK_FALSE(derive_second_instance(bad, 3));
    CHECK(m_statistic({1, 2}, {2, 3}) == 3);
  }
  SUBCASE("second lemma, n <= 3") {
    for (int n = 1; n <= 3; ++n) {
      const auto instances = second_lemma_instances(n, 2, 3);
      if (n == 3) CHECK(instances.size() == 468);
      for (const auto& inst : instances) CHECK(verify_second_lemma(inst, n));
    }
  }
  SUBCASE("degenerate") { CHECK_THROWS_AS(first_lemma_sides({{}, {}, 1}, 2), std::invalid_argument); }
}

TEST_CASE("mixed json") {
  const MixedElem a = det_frak(2, 2) + mw({{2, 1}}, {}, q - qi);
  nlohmann::json j = a;
  CHECK(j.get<MixedElem>() == a);
  const auto& B = rational_basis(2, 1, 1);
  for (const auto& b : B.bitableaux()) CHECK(rational_bitableau_from_json(rational_bitableau_to_json(b)) == b);
}
