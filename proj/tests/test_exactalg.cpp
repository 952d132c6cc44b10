#include <random>

#include "doctest.h"
#include "qschur/exactalg/json.hpp"
#include "qschur/exactalg/linalg.hpp"

using namespace qschur::exactalg;

namespace {

const LaurentPoly q = LaurentPoly::q_pow(1);
const LaurentPoly qi = LaurentPoly::q_pow(-1);

LaurentPoly random_poly(std::mt19937& rng) {
  std::uniform_int_distribution<int> exp(-3, 3);
  std::uniform_int_distribution<int> coeff(-5, 5);
  std::vector<LaurentPoly::Term> terms;
  const int n = std::uniform_int_distribution<int>(0, 4)(rng);
  for (int i = 0; i < n; ++i) terms.push_back({exp(rng), BigInt(coeff(rng))});
  return LaurentPoly::from_terms(terms);
}

Matrix from_rows(const std::vector<std::vector<RationalFn>>& rows) {
  Matrix m(rows.size(), rows.empty() ? 0 : rows[0].size());
  for (std::size_t r = 0; r < rows.size(); ++r) m.set_row(r, to_sparse(rows[r]));
  return m;
}

}  // namespace

TEST_CASE("quantum integers") {
  CHECK(quantum_integer(0).is_zero());
  CHECK(quantum_integer(1) == LaurentPoly(1L));
  CHECK(quantum_integer(2) == q + qi);
  CHECK(quantum_integer(3) == q * q + 1L + qi * qi);
  CHECK(quantum_factorial(3) == quantum_integer(3) * quantum_integer(2));
  for (int l = 0; l < 8; ++l) CHECK(quantum_integer(l).at_one() == l);
}

TEST_CASE("Laurent polynomial ring axioms on random samples") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const auto a = random_poly(rng);
    const auto b = random_poly(rng);
    const auto c = random_poly(rng);
    CHECK((a + b) * c == a * c + b * c);
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a + (-a) == LaurentPoly());
    if (!b.is_zero()) CHECK((a * b).exact_div(b) == a);
    CHECK(a.bar().bar() == a);
  }
  CHECK(q * qi == LaurentPoly(1L));
}

TEST_CASE("gcd and exact division") {
  const auto a = (q + 1L) * (q - 1L);
  const auto b = (q + 1L) * (q * q + 3L);
  CHECK(gcd(a, b) == q + 1L);
  CHECK_FALSE((q + 2L).try_div(q + 1L).has_value());
  CHECK_THROWS_AS((void)(q + 2L).exact_div(q + 1L), std::domain_error);
}

TEST_CASE("rational functions are kept in normal form") {
  const RationalFn x(q * q - 1L, q - 1L);
  CHECK(x == RationalFn(q + 1L));
  const RationalFn y(LaurentPoly(2L), LaurentPoly::monomial(-4, 3));
  CHECK(y.num() == LaurentPoly::monomial(-1, -3));
  CHECK(y.den() == LaurentPoly(2L));
  const RationalFn z = RationalFn(1L) / RationalFn(q + qi);
  CHECK(z * RationalFn(q + qi) == RationalFn(1L));
  CHECK(RationalFn(q, q).has_unit_denominator());
  CHECK_FALSE(z.has_unit_denominator());
  CHECK_THROWS_AS(RationalFn(q, LaurentPoly()), std::domain_error);
}

TEST_CASE("mod p arithmetic") {
  const ModP a(123456789);
  CHECK(a * a.inverse() == ModP(1));
  CHECK(ModP::from_signed(-1) + ModP(1) == ModP());
  const Specialization at(5);
  CHECK(at(q + qi) == ModP(5) + ModP(5).inverse());
  CHECK(ModP::from_bigint(BigInt("-3")) == -ModP(3));
}

TEST_CASE("mat_rank") {
  CHECK(mat_rank(Matrix(3, 3)) == 0);
  CHECK(mat_rank(Matrix::identity(4)) == 4);
  const Matrix m = from_rows({{q, RationalFn(1L), qi}, {q * q, q, RationalFn(1L)}, {RationalFn(1L), RationalFn(0L), q}});
  CHECK(mat_rank(m) == 2);
  CHECK(mat_rank(m.transpose()) == 2);
  // Specialization at q = 1 can drop the rank of a generically invertible matrix.
  const Matrix g = from_rows({{q, RationalFn(1L)}, {RationalFn(1L), qi}});
  CHECK(mat_rank(g) == 1);
  const Matrix h = from_rows({{q, RationalFn(1L)}, {RationalFn(1L), q}});
  CHECK(mat_rank(h) == 2);
  CHECK(field_rank(specialize(h, RationalSpecialization(mpq_class(1)))) == 1);
}

TEST_CASE("rank is invariant under transpose and agrees with echelon rank") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t rows = 1 + rng() % 5;
    const std::size_t cols = 1 + rng() % 5;
    Matrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
      for (std::size_t c = 0; c < cols; ++c) {
        if (rng() % 3 == 0) m.set(r, c, RationalFn(random_poly(rng)));
      }
    }
    // Force a dependency now and then.
    if (rows > 1 && trial % 2 == 0) m.set_row(rows - 1, axpy(m.row(0), RationalFn(q + 1L), m.row(1)));
    const auto rk = mat_rank(m);
    CHECK(rk == mat_rank(m.transpose()));
    CHECK(rk == field_rank(m));
  }
}

TEST_CASE("specializing at q = 2 preserves full rank instances") {
  std::mt19937 rng(5);
  const RationalSpecialization at2(mpq_class(2));
  int full = 0;
  for (int trial = 0; trial < 30; ++trial) {
    Matrix m(3, 3);
    for (std::size_t r = 0; r < 3; ++r) {
      for (std::size_t c = 0; c < 3; ++c) m.set(r, c, RationalFn(random_poly(rng)));
    }
    const auto generic = mat_rank(m);
    const auto special = field_rank(specialize(m, at2));
    CHECK(special <= generic);
    if (generic == 3 && special == 3) ++full;
  }
  CHECK(full > 0);
}

TEST_CASE("mat_solve_membership") {
  const Matrix b = from_rows({{RationalFn(1L), q, RationalFn(0L)}, {RationalFn(0L), RationalFn(1L), qi}});
  auto first = mat_solve_membership(b, {RationalFn(1L), q, RationalFn(0L)});
  REQUIRE(first.has_value());
  CHECK((*first)[0] == RationalFn(1L));
  CHECK((*first)[1].is_zero());
  CHECK_FALSE(mat_solve_membership(b, {RationalFn(0L), RationalFn(0L), RationalFn(1L)}).has_value());
  const Vector v = {RationalFn(q), RationalFn(q * q + 2L), RationalFn(2L) * RationalFn(qi)};
  auto sol = mat_solve_membership(b, v);
  REQUIRE(sol.has_value());
  for (std::size_t c = 0; c < 3; ++c) CHECK((*sol)[0] * b.at(0, c) + (*sol)[1] * b.at(1, c) == v[c]);
}

TEST_CASE("mat_nullspace") {
  CHECK(mat_nullspace(Matrix::identity(3)).empty());
  const Matrix m = from_rows({{RationalFn(1L), RationalFn(-1L)}});
  const auto ns = mat_nullspace(m);
  REQUIRE(ns.size() == 1);
  CHECK(ns[0] == Vector{RationalFn(1L), RationalFn(1L)});
  const Matrix w = from_rows({{q, RationalFn(1L), RationalFn(0L), qi}, {RationalFn(1L), qi, q, RationalFn(0L)}});
  const auto ker = mat_nullspace(w);
  CHECK(ker.size() == 4 - mat_rank(w));
  for (const auto& x : ker) {
    for (std::size_t r = 0; r < w.rows(); ++r) {
      RationalFn acc;
      for (std::size_t c = 0; c < 4; ++c) acc += w.at(r, c) * x[c];
      CHECK(acc.is_zero());
    }
  }
}

TEST_CASE("JSON round trip") {
  const LaurentPoly p = q * q * 3L - qi + LaurentPoly(BigInt("123456789012345678901234567890"));
  const nlohmann::json j = p;
  CHECK(j.at("2") == "3");
  CHECK(j.get<LaurentPoly>() == p);
  const RationalFn f(q + 1L, q - 1L);
  CHECK(nlohmann::json(f).get<RationalFn>() == f);
  Matrix m(2, 3);
  m.set(1, 2, f);
  CHECK(matrix_from_json(matrix_to_json(m)) == m);
}
