#include <algorithm>
#include <set>

#include "doctest.h"
#include "qschur/combinat/json.hpp"
#include "qschur/combinat/perm.hpp"
#include "qschur/combinat/rational_tableau.hpp"

using namespace qschur::combinat;

namespace {

Tableau T(const std::vector<std::vector<int>>& rows) { return Tableau::from_rows(rows); }

// Oracle: every filling of the shape with entries in 1..n, filtered by the definition.
std::vector<Tableau> brute_force_standard(const Partition& shape, int n) {
  const int size = shape.size();
  std::vector<Tableau> out;
  for (const auto& entries : all_multi_indices(n, size)) {
    Tableau t(shape, entries);
    bool ok = true;
    const auto rows = t.rows();
    for (std::size_t i = 0; i < rows.size() && ok; ++i) {
      for (std::size_t j = 0; j < rows[i].size() && ok; ++j) {
        if (j && rows[i][j - 1] >= rows[i][j]) ok = false;
        if (i && rows[i - 1][j] > rows[i][j]) ok = false;
      }
    }
    if (ok) out.push_back(t);
  }
  if (size == 0) out = {Tableau(shape, {})};
  return out;
}

long binomial(long a, long b) {
  long r = 1;
  for (long i = 1; i <= b; ++i) r = r * (a - b + i) / i;
  return r;
}

const RationalTableau kPaperRational{T({{1, 3}, {2}}), T({{3, 4}, {3, 5}})};
const Tableau kPaperT = T({{1, 2, 3, 4, 5}, {1, 2, 3, 4, 5}, {1, 2, 3, 4, 5}, {1, 2, 4}, {1, 2, 5}, {1, 3}, {2}});

}  // namespace

TEST_CASE("partitions") {
  const auto p4 = partitions_of(4);
  REQUIRE(p4.size() == 5);
  CHECK(p4.front().parts() == std::vector<int>{4});
  CHECK(p4.back().parts() == std::vector<int>{1, 1, 1, 1});
  CHECK(partitions_of(0).size() == 1);
  CHECK_THROWS_AS(Partition({1, 2}), std::invalid_argument);
}

TEST_CASE("is_standard") {
  CHECK(is_standard(T({{1, 2}})));
  CHECK_FALSE(is_standard(T({{2}, {1}})));
  CHECK(is_standard(kPaperT));
  CHECK(is_standard(T({{1, 1}}) ) == false);
}

TEST_CASE("first_counts and is_standard_rational") {
  CHECK(first_counts(RationalTableau{}, 3) == 0);
  CHECK(first_counts(RationalTableau{T({{1, 3}}), T({{3, 4}})}, 3) == 3);
  CHECK(first_counts(RationalTableau{T({{1}}), T({{1}})}, 1) == 2);
  CHECK_FALSE(is_standard_rational(RationalTableau{T({{1}}), T({{1}})}, 2));
  CHECK(is_standard_rational(RationalTableau{T({{1}}), T({{2}})}, 2));
  CHECK(is_standard_rational(kPaperRational, 5));
}

TEST_CASE("enumerate_standard matches brute force") {
  CHECK(enumerate_standard(Partition({2}), 2) == std::vector<Tableau>{T({{1, 2}})});
  CHECK(enumerate_standard(Partition({1, 1}), 2) == std::vector<Tableau>{T({{1}, {1}}), T({{1}, {2}}), T({{2}, {2}})});
  CHECK(enumerate_standard(Partition({3}), 2).empty());
  for (int n = 1; n <= 3; ++n) {
    for (int m = 0; m <= 4; ++m) {
      for (const auto& shape : partitions_of(m)) {
        const auto fast = enumerate_standard(shape, n);
        const auto slow = brute_force_standard(shape, n);
        CHECK(fast == slow);
        CHECK(std::is_sorted(fast.begin(), fast.end()));
      }
    }
  }
}

TEST_CASE("count identity for A_q(n,m)") {
  for (int n = 1; n <= 3; ++n) {
    for (int m = 0; m <= 4; ++m) {
      long total = 0;
      for (const auto& shape : partitions_of(m)) {
        const long c = static_cast<long>(enumerate_standard(shape, n).size());
        total += c * c;
      }
      CHECK(total == binomial(n * n + m - 1, m));
    }
  }
}

TEST_CASE("enumerate_standard_rational") {
  const auto e = enumerate_standard_rational(2, 1, 1);
  REQUIRE(e.size() == 4);
  CHECK(e[0].k == 0);
  CHECK(e[0].tableau == RationalTableau{T({{1}}), T({{2}})});
  CHECK(e[1].tableau == RationalTableau{T({{2}}), T({{1}})});
  CHECK(e[2].tableau == RationalTableau{T({{2}}), T({{2}})});
  CHECK(e[3].k == 1);
  CHECK(e[3].tableau == RationalTableau{});
  CHECK(enumerate_standard_rational(2, 1, 0).size() == 2);
  for (int n = 1; n <= 4; ++n) CHECK(enumerate_standard_rational(n, 0, 0).size() == 1);
}

TEST_CASE("paper bijection example") {
  const Tableau t = rational_to_ordinary(kPaperRational, 5, 5);
  CHECK(t == kPaperT);
  CHECK(ordinary_to_rational(kPaperT, 5, 5) == kPaperRational);
  CHECK(content(kPaperT, 5) == std::vector<int>{6, 6, 4, 4, 4});
}

TEST_CASE("small bijection instances") {
  const RationalTableau only_right{Tableau(), T({{2}})};
  CHECK(rational_to_ordinary(only_right, 2, 1) == T({{1}}));
  CHECK(ordinary_to_rational(T({{1}}), 2, 1) == only_right);
  CHECK(rational_to_ordinary(RationalTableau{}, 3, 0).empty());
  CHECK(ordinary_to_rational(Tableau(), 3, 0) == RationalTableau{});
  CHECK_THROWS_AS(rational_to_ordinary(RationalTableau{T({{1}}), T({{1}})}, 2, 1), std::invalid_argument);
  CHECK_THROWS_AS(ordinary_to_rational(T({{1}, {2}}), 3, 1), std::invalid_argument);
}

TEST_CASE("bijection onto standard tableaux with the shape condition") {
  for (int n = 1; n <= 4; ++n) {
    for (int r = 0; r <= 3; ++r) {
      for (int s = 0; s <= 3; ++s) {
        std::set<Tableau> images;
        for (const auto& e : enumerate_standard_rational(n, r, s)) {
          const Tableau t = rational_to_ordinary(e.tableau, n, s);
          CHECK(ordinary_to_rational(t, n, s) == e.tableau);
          CHECK(s - e.tableau.right.size() == e.k);
          images.insert(t);
        }
        std::set<Tableau> expected;
        for (const auto& lambda : partitions_of(r + (n - 1) * s)) {
          int top = 0;
          for (int i = 0; i < s; ++i) top += lambda.part(i);
          if (top < (n - 1) * s) continue;
          for (const auto& t : enumerate_standard(lambda, n)) expected.insert(t);
        }
        CHECK(images == expected);
      }
    }
  }
}

TEST_CASE("first_n condition equals the width bound for standard halves") {
  for (int n = 1; n <= 3; ++n) {
    for (int a = 0; a <= 3; ++a) {
      for (int b = 0; b <= 3; ++b) {
        for (const auto& rho : partitions_of(a)) {
          for (const auto& sigma : partitions_of(b)) {
            for (const auto& l : enumerate_standard(rho, n)) {
              for (const auto& r : enumerate_standard(sigma, n)) {
                const RationalTableau rt{l, r};
                CHECK((first_counts(rt, n) <= n) == (rho.part(0) + sigma.part(0) <= n));
              }
            }
          }
        }
      }
    }
  }
}

TEST_CASE("permutations and reduced words") {
  CHECK(reduced_word(Perm(3)).empty());
  CHECK(reduced_word(Perm::simple(2, 1)) == std::vector<int>{1});
  const Perm w0 = Perm::from_images({3, 2, 1});
  CHECK(reduced_word(w0) == std::vector<int>{1, 2, 1});
  for (int m = 1; m <= 5; ++m) {
    for (const auto& w : all_perms(m)) {
      const auto word = reduced_word(w);
      CHECK(static_cast<int>(word.size()) == w.length());
      CHECK(Perm::from_word(m, word) == w);
    }
  }
  const MultiIndex i{1, 2, 3};
  CHECK(Perm::simple(3, 1).act(i) == MultiIndex{2, 1, 3});
  const Perm u = Perm::from_images({2, 3, 1});
  const Perm v = Perm::from_images({3, 1, 2});
  CHECK(v.act(u.act(i)) == (u * v).act(i));
  CHECK(shuffles(4, 2).size() == 6);
  CHECK(complement_star({2}, 3) == MultiIndex{1, 3});
  CHECK(index_of({2, 1}, 3) == 3);
  CHECK(multi_index_at(3, 3, 2) == MultiIndex{2, 1});
}

TEST_CASE("tableau JSON") {
  const nlohmann::json j = kPaperRational.left;
  CHECK(j.at("rows") == nlohmann::json::parse("[[1,3],[2]]"));
  CHECK(j.get<Tableau>() == kPaperRational.left);
  const auto rj = rational_to_json(kPaperRational, 1);
  CHECK(rj.at("k") == 1);
  CHECK(rational_from_json(rj) == kPaperRational);
}
