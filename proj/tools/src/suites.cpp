#include "qschur_cli/suites.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>

#include "qschur/combinat/partition.hpp"
#include "qschur/combinat/perm.hpp"
#include "qschur/combinat/rational_tableau.hpp"
#include "qschur/mixedalg/iota.hpp"
#include "qschur/mixedalg/quotient.hpp"
#include "qschur/mixedalg/rational_basis.hpp"
#include "qschur/mixedalg/straightening.hpp"
#include "qschur/qmatrix/qmatrix_algebra.hpp"
#include "qschur/tensorrep/algebra.hpp"
#include "qschur/tensorrep/kappa.hpp"

namespace qschur::cli {

namespace {

using combinat::Tableau;
using exactalg::LaurentPoly;
using qmatrix::AlgebraElem;
using qmatrix::QMatrixAlgebra;
using tensorrep::Endo;

class Checker {
 public:
  explicit Checker(SuiteResult& res) : res_(res) {}
  void operator()(bool ok, const std::string& what) {
    ++res_.checks;
    if (ok) return;
    ++res_.failures;
    if (res_.details.size() < 5) res_.details.push_back(what);
  }

 private:
  SuiteResult& res_;
};

std::string tuple_str(const std::vector<int>& v) {
  std::string out = "(";
  for (std::size_t k = 0; k < v.size(); ++k) out += (k ? "," : "") + std::to_string(v[k]);
  return out + ")";
}

std::string params_str(int n, int r, int s) {
  return "n=" + std::to_string(n) + " r=" + std::to_string(r) + " s=" + std::to_string(s);
}

long binomial(long a, long b) {
  long out = 1;
  for (long i = 1; i <= b; ++i) out = out * (a - b + i) / i;
  return out;
}

std::vector<std::vector<int>> increasing_subsets(int n, int k) {
  std::vector<std::vector<int>> out;
  for (const auto& w : combinat::all_multi_indices(n, k)) {
    if (std::adjacent_find(w.begin(), w.end(), std::greater_equal<>()) == w.end()) out.push_back(w);
  }
  return out;
}

std::vector<std::vector<int>> distinct_tuples(int n, int k) {
  std::vector<std::vector<int>> out;
  for (const auto& w : combinat::all_multi_indices(n, k)) {
    std::vector<int> s = w;
    std::sort(s.begin(), s.end());
    if (std::adjacent_find(s.begin(), s.end()) == s.end()) out.push_back(w);
  }
  return out;
}

std::vector<std::vector<int>> compositions(int m, int n) {
  if (n == 1) return {{m}};
  std::vector<std::vector<int>> out;
  for (int a = m; a >= 0; --a) {
    for (auto rest : compositions(m - a, n - 1)) {
      rest.insert(rest.begin(), a);
      out.push_back(rest);
    }
  }
  return out;
}

Endo scalar(std::size_t d, const LaurentPoly& c) { return c * Endo::identity(d); }

void check_hecke_family(Checker& check, const std::vector<Endo>& gens, std::size_t d, const std::string& label) {
  const LaurentPoly q = LaurentPoly::q_pow(1);
  const LaurentPoly qi = LaurentPoly::q_pow(-1);
  for (std::size_t i = 0; i < gens.size(); ++i) {
    const std::string at = label + std::to_string(i + 1);
    check(is_zero_matrix((gens[i] + scalar(d, q)) * (gens[i] - scalar(d, qi))), "quadratic relation fails for " + at);
    for (std::size_t j = i + 1; j < gens.size(); ++j) {
      if (j == i + 1) {
        check(gens[i] * gens[j] * gens[i] == gens[j] * gens[i] * gens[j], "braid relation fails at " + at);
      } else {
        check(gens[i] * gens[j] == gens[j] * gens[i], "distant generators do not commute at " + at);
      }
    }
  }
}

void suite_pbw(Checker& check, const Params& p) {
  const QMatrixAlgebra& A = mixedalg::mixed_algebra(p.n).plain();
  const auto basis = qmatrix::monomial_basis(p.n, p.m);
  check(static_cast<long>(basis.size()) == binomial(p.n * p.n + p.m - 1, p.m), "monomial count differs from C(n^2+m-1,m)");
  const std::set<qmatrix::Word> normal(basis.begin(), basis.end());
  for (const auto& w : basis) {
    check(A.normal_form(w) == AlgebraElem::monomial(w, LaurentPoly(1L)), "normal word is not fixed");
    const qmatrix::Word rev(w.rbegin(), w.rend());
    bool closed = true;
    const AlgebraElem nf = A.normal_form(rev);
    for (const auto& [t, c] : nf.terms()) closed = closed && normal.count(t);
    check(closed, "normal form leaves the normal words");
  }
  const int n = p.n;
  for (int a = 0; a < n * n; ++a) {
    for (int b = 0; b < n * n; ++b) {
      for (int c = 0; c < n * n; ++c) {
        const auto x = A.generator(a / n + 1, a % n + 1);
        const auto y = A.generator(b / n + 1, b % n + 1);
        const auto z = A.generator(c / n + 1, c % n + 1);
        check(A.multiply(A.multiply(x, y), z) == A.multiply(x, A.multiply(y, z)), "multiplication is not associative");
      }
    }
  }
}

void suite_laplace(Checker& check, const Params& p) {
  using qmatrix::MinorSide;
  const QMatrixAlgebra& A = mixedalg::mixed_algebra(p.n).plain();
  for (int k = 2; k <= p.n; ++k) {
    for (const auto& fixed : increasing_subsets(p.n, k)) {
      for (const auto& other : distinct_tuples(p.n, k)) {
        for (int l = 1; l < k; ++l) {
          AlgebraElem left;
          for (const auto& t : qmatrix::laplace_expand(other, fixed, l, MinorSide::Left)) {
            left += t.coeff * A.multiply(A.left_minor(t.first.rows, t.first.cols), A.left_minor(t.second.rows, t.second.cols));
          }
          check(left == A.left_minor(other, fixed), "left Laplace expansion fails at " + tuple_str(other) + tuple_str(fixed));
          AlgebraElem right;
          for (const auto& t : qmatrix::laplace_expand(fixed, other, l, MinorSide::Right)) {
            right += t.coeff * A.multiply(A.right_minor(t.first.rows, t.first.cols), A.right_minor(t.second.rows, t.second.cols));
          }
          check(right == A.right_minor(fixed, other), "right Laplace expansion fails at " + tuple_str(fixed) + tuple_str(other));
        }
      }
    }
  }
}

void suite_centrality(Checker& check, const Params& p) {
  const auto& M = mixedalg::mixed_algebra(p.n);
  for (const QMatrixAlgebra* A : {&M.plain(), &M.starred()}) {
    const auto d = A->det();
    for (int i = 1; i <= p.n; ++i) {
      for (int j = 1; j <= p.n; ++j) {
        const auto x = A->generator(i, j);
        check(A->multiply(d, x) == A->multiply(x, d), "det_q does not commute with x" + std::to_string(i) + std::to_string(j));
      }
    }
  }
}

void suite_hecke(Checker& check, const Params& p) {
  const std::size_t d = tensorrep::tensor_dim(p.n, p.m);
  std::vector<Endo> gens;
  for (int i = 1; i < p.m; ++i) gens.push_back(tensorrep::hecke_generator(p.n, p.m, i));
  check_hecke_family(check, gens, d, "S");
  for (const auto& w : combinat::all_perms(p.m)) {
    const Endo tw = tensorrep::hecke_word(p.n, p.m, w);
    for (int i = 1; i < p.m; ++i) {
      const auto ws = w * combinat::Perm::simple(p.m, i);
      if (ws.length() < w.length()) continue;
      check(tensorrep::hecke_word(p.n, p.m, ws) == gens[i - 1] * tw, "T_{ws} differs from T_w T_s for w=" + w.to_string());
    }
  }
}

void suite_walled(Checker& check, const Params& p) {
  if (p.r + p.s < 1) return;
  const auto w = tensorrep::walled_generators(p.n, p.r, p.s);
  const std::size_t d = tensorrep::tensor_dim(p.n, p.r, p.s);
  check_hecke_family(check, w.s, d, "S");
  check_hecke_family(check, w.s_hat, d, "Shat");
  for (const auto& a : w.s) {
    for (const auto& b : w.s_hat) check(a * b == b * a, "S and Shat do not commute");
  }
  for (const auto& e : w.e) {
    check(e * e == exactalg::quantum_integer(p.n) * e, "E^2 differs from [n] E");
    for (std::size_t i = 0; i + 1 < w.s.size(); ++i) check(e * w.s[i] == w.s[i] * e, "E does not commute with a distant S");
    for (std::size_t j = 1; j < w.s_hat.size(); ++j) check(e * w.s_hat[j] == w.s_hat[j] * e, "E does not commute with a distant Shat");
  }
}

void suite_kernel_y(Checker& check, const Params& p) {
  const auto gens = mixedalg::cross_relation_generators(p.n, p.r, p.s);
  for (std::size_t k = 0; k < gens.size(); ++k) {
    check(mixedalg::iota(gens[k], p.n).is_zero(), "iota does not kill generator " + std::to_string(k) + " at " + params_str(p.n, p.r, p.s));
  }
}

void suite_jacobi(Checker& check, const Params& p) {
  for (int l = 0; l <= p.n; ++l) {
    for (const auto& rows : increasing_subsets(p.n, l)) {
      for (const auto& cols : increasing_subsets(p.n, l)) {
        check(mixedalg::jacobi_check(rows, cols, p.n).holds, "Jacobi identity fails at " + tuple_str(rows) + tuple_str(cols));
      }
    }
  }
}

void suite_detk(Checker& check, const Params& p) {
  using mixedalg::MixedElem;
  using mixedalg::MixedWord;
  const int n = p.n;
  const auto& A = mixedalg::mixed_algebra(n);
  const MixedElem d = mixedalg::det_frak(1, n);
  const auto sand = [&](int i, int j, int k, int l) {
    const auto x = static_cast<char>(qmatrix::make_letter(i, j));
    const auto y = static_cast<char>(qmatrix::make_letter(k, l));
    MixedElem out;
    for (const auto& [w, c] : d.terms()) out += c * A.normal_form(MixedWord{x + w.plain, w.starred + y});
    return out;
  };
  const auto zero = [&](const MixedElem& e) { return mixedalg::canonical_coords(e, n, 2, 2).empty(); };
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
      const std::string at = " at i=" + std::to_string(i) + " j=" + std::to_string(j);
      if (i != j) {
        check(zero(e1), "first congruence fails" + at);
        check(zero(e2), "second congruence fails" + at);
      }
      check(zero(lhs3 - rhs3), "trace congruence fails" + at);
      if (i == 1 && j == 1) check(zero(e1 - mixedalg::det_frak(2, n)), "det^(2) recursion fails");
    }
  }
}

void suite_straightening(Checker& check, const Params& p) {
  for (const auto& inst : mixedalg::first_lemma_instances(p.n, 2)) {
    check(mixedalg::verify_first_lemma(inst, p.n), "first straightening lemma fails at j=" + std::to_string(inst.j));
  }
  for (const auto& inst : mixedalg::second_lemma_instances(p.n, 2, 3)) {
    check(mixedalg::verify_second_lemma(inst, p.n), "second straightening lemma fails");
  }
}

void suite_bijection(Checker& check, const Params& p) {
  const auto T = [](const std::vector<std::vector<int>>& rows) { return Tableau::from_rows(rows); };
  const combinat::RationalTableau example{T({{1, 3}, {2}}), T({{3, 4}, {3, 5}})};
  const Tableau image = T({{1, 2, 3, 4, 5}, {1, 2, 3, 4, 5}, {1, 2, 3, 4, 5}, {1, 2, 4}, {1, 2, 5}, {1, 3}, {2}});
  check(combinat::rational_to_ordinary(example, 5, 5) == image, "worked example image differs");
  check(combinat::ordinary_to_rational(image, 5, 5) == example, "worked example inverse differs");
  std::set<Tableau> images;
  for (const auto& e : combinat::enumerate_standard_rational(p.n, p.r, p.s)) {
    const Tableau t = combinat::rational_to_ordinary(e.tableau, p.n, p.s);
    check(combinat::is_standard(t), "image is not standard");
    check(combinat::ordinary_to_rational(t, p.n, p.s) == e.tableau, "inverse does not recover the rational tableau");
    images.insert(t);
  }
  std::set<Tableau> expected;
  for (const auto& lambda : combinat::partitions_of(p.r + (p.n - 1) * p.s)) {
    int top = 0;
    for (int i = 0; i < p.s; ++i) top += lambda.part(i);
    if (top < (p.n - 1) * p.s) continue;
    for (const auto& t : combinat::enumerate_standard(lambda, p.n)) expected.insert(t);
  }
  check(images == expected, "images are not exactly the standard tableaux with the shape condition");
}

void suite_rational_basis(Checker& check, const Params& p) {
  const auto& B = mixedalg::rational_basis(p.n, p.r, p.s);
  const std::size_t dim = mixedalg::quotient(p.n, p.r, p.s).dim();
  check(B.bitableaux().size() == dim, "basis count differs from quotient dimension at " + params_str(p.n, p.r, p.s));
  check(B.rank() == dim, "standard rational bideterminants do not have full rank");
  check(B.is_basis(), "standard rational bideterminants are not a basis");
  const auto& A = mixedalg::mixed_algebra(p.n);
  for (const auto& w : mixedalg::mixed_monomial_basis(p.n, p.r, p.s)) {
    bool unit = true;
    const auto coeffs = B.straighten(A.normal_form(w));
    for (const auto& [i, c] : coeffs) unit = unit && c.has_unit_denominator();
    check(unit, "straightening has a non-unit denominator");
  }
}

void suite_phi_iota(Checker& check, const Params& p) {
  const auto& B = mixedalg::rational_basis(p.n, p.r, p.s);
  for (std::size_t i = 0; i < B.bitableaux().size(); ++i) {
    const auto image = mixedalg::iota(B.element(i), p.n, p.r, p.s);
    bool single = true;
    try {
      (void)B.c_exponent(i);
    } catch (const std::logic_error&) {
      single = false;
    }
    check(single, "iota of basis element " + std::to_string(i) + " is not (-q)^c times its bijection image");
    const auto v = mixedalg::phi_rational(image, p.n, p.r, p.s);
    check(v.size() == 1 && v[0].first == i && v[0].second == exactalg::RationalFn(1L), "phi(iota(b)) differs from b");
  }
}

void suite_bicommute(Checker& check, const Params& p) {
  if (p.r + p.s < 1) return;
  const auto walled = tensorrep::walled_generators(p.n, p.r, p.s).all();
  auto gens = tensorrep::divided_power_generators(p.n, p.r + p.s);
  for (int a = 1; a <= p.n; ++a) {
    std::vector<int> h(p.n, 0);
    h[a - 1] = 1;
    gens.push_back(tensorrep::UGen::qh(h));
  }
  for (const auto& g : gens) {
    const Endo u = tensorrep::ugen_mixed(p.n, p.r, p.s, g);
    for (const auto& w : walled) check(u * w == w * u, g.to_string() + " does not commute with a walled generator");
  }
}

void suite_kappa(Checker& check, const Params& p) {
  if (p.n < 2 && p.s > 0) return;
  const Endo km = tensorrep::kappa_mixed(p.n, p.r, p.s);
  const int big = p.r + (p.n - 1) * p.s;
  for (const auto& g : tensorrep::divided_power_generators(p.n, std::max(1, p.r + p.s))) {
    check(tensorrep::ugen_ordinary(p.n, big, g) * km == km * tensorrep::ugen_mixed(p.n, p.r, p.s, g),
          "kappa does not intertwine " + g.to_string());
  }
}

void suite_weight_projectors(Checker& check, const Params& p) {
  for (const auto& lam : compositions(p.m, p.n)) {
    const Endo u = tensorrep::weight_projector(p.n, p.m, lam);
    for (std::size_t b = 0; b < tensorrep::tensor_dim(p.n, p.m); ++b) {
      const auto wt = combinat::weight(combinat::multi_index_at(b, p.n, p.m), p.n);
      if (wt == lam) check(u.at(b, b) == LaurentPoly(1L), "projector " + tuple_str(lam) + " does not fix its weight");
      if (tensorrep::weight_precedes(wt, lam)) check(u.at(b, b).is_zero(), "projector " + tuple_str(lam) + " keeps " + tuple_str(wt));
    }
  }
}

void suite_schur_weyl(Checker& check, const Params& p) {
  const auto rep = tensorrep::verify_schur_weyl(p.n, p.r, p.s);
  check(rep.ok, "dimension mismatch at " + params_str(p.n, p.r, p.s) + ": " + rep.mismatch());
}

using SuiteFn = void (*)(Checker&, const Params&);

const std::vector<std::pair<std::string, SuiteFn>>& suites() {
  static const std::vector<std::pair<std::string, SuiteFn>> table = {
      {"pbw", suite_pbw},
      {"laplace", suite_laplace},
      {"centrality", suite_centrality},
      {"hecke-relations", suite_hecke},
      {"walled-relations", suite_walled},
      {"kernel-Y", suite_kernel_y},
      {"jacobi", suite_jacobi},
      {"detk", suite_detk},
      {"straightening-lemmas", suite_straightening},
      {"bijection", suite_bijection},
      {"rational-basis", suite_rational_basis},
      {"phi-iota", suite_phi_iota},
      {"bicommute", suite_bicommute},
      {"kappa-equivariance", suite_kappa},
      {"weight-projectors", suite_weight_projectors},
      {"schur-weyl", suite_schur_weyl},
  };
  return table;
}

}  // namespace

const std::vector<std::string>& suite_registry() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, fn] : suites()) out.push_back(name);
    return out;
  }();
  return names;
}

bool is_suite(const std::string& name) {
  const auto& names = suite_registry();
  return std::find(names.begin(), names.end(), name) != names.end();
}

SuiteResult run_suite(const std::string& name, const Params& p) {
  for (const auto& [suite_name, fn] : suites()) {
    if (suite_name != name) continue;
    SuiteResult res;
    res.name = name;
    const auto start = std::chrono::steady_clock::now();
    Checker check(res);
    try {
      fn(check, p);
    } catch (const std::exception& e) {
      check(false, std::string("exception: ") + e.what());
    }
    res.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return res;
  }
  throw std::invalid_argument("unknown suite: " + name);
}

}  // namespace qschur::cli
