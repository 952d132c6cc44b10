#include "qschur/tensorrep/kappa.hpp"

#include <numeric>
#include <stdexcept>

#include "qschur/exactalg/echelon.hpp"

namespace qschur::tensorrep {

using combinat::MultiIndex;

Endo kappa(int n) {
  if (n < 2) throw std::out_of_range("kappa: need n >= 2");
  const std::size_t d = combinat::int_pow(n, n - 1);
  Endo m(d, n);
  for (int i = 1; i <= n; ++i) {
    MultiIndex hat;
    for (int a = 1; a <= n; ++a) {
      if (a != i) hat.push_back(a);
    }
    for (const auto& w : combinat::all_perms(n - 1)) {
      m.add(combinat::index_of(w.act(hat), n), i - 1, LaurentPoly::neg_q_pow(i + w.length()));
    }
  }
  return m;
}

Endo kappa_mixed(int n, int r, int s) {
  if (n < 1 || r < 0 || s < 0) throw std::out_of_range("kappa_mixed: bad parameters");
  Endo out = Endo::identity(combinat::int_pow(n, r));
  if (s == 0) return out;
  const Endo k = kappa(n);
  for (int t = 0; t < s; ++t) out = kron(out, k);
  return out;
}

EndoQ pi_restrict(const Endo& phi, int n, int r, int s) {
  const Endo k = kappa_mixed(n, r, s);
  if (phi.rows() != k.rows() || phi.cols() != k.rows()) throw std::invalid_argument("pi_restrict: phi has wrong size");
  const EndoQ kt = to_rational(k).transpose();
  const EndoQ image = to_rational(phi * k).transpose();
  exactalg::FieldEchelon<RationalFn> ech(k.rows(), true);
  for (std::size_t c = 0; c < kt.rows(); ++c) ech.insert(kt.row(c));
  EndoQ lambda_t(k.cols(), k.cols());
  for (std::size_t b = 0; b < image.rows(); ++b) {
    auto sol = ech.solve(image.row(b));
    if (!sol) throw std::domain_error("pi_restrict: phi does not preserve the image of kappa");
    lambda_t.set_row(b, std::move(*sol));
  }
  return lambda_t.transpose();
}

namespace {

std::vector<int> differences(const std::vector<int>& w) {
  std::vector<int> out;
  for (std::size_t i = 0; i + 1 < w.size(); ++i) out.push_back(w[i] - w[i + 1]);
  return out;
}

}  // namespace

bool weight_precedes(const std::vector<int>& mu, const std::vector<int>& lam) {
  return differences(mu) < differences(lam);
}

Endo weight_projector(int n, int m, const std::vector<int>& lam) {
  if (n < 1 || m < 0 || static_cast<int>(lam.size()) != n) throw std::invalid_argument("weight_projector: lam needs n parts");
  for (int x : lam) {
    if (x < 0) throw std::invalid_argument("weight_projector: negative part");
  }
  if (std::accumulate(lam.begin(), lam.end(), 0) != m) throw std::invalid_argument("weight_projector: parts must sum to m");
  const std::size_t d = combinat::int_pow(n, m);
  const int c = m + 1;
  Endo out(d, d);
  for (std::size_t b = 0; b < d; ++b) {
    const auto wt = combinat::weight(combinat::multi_index_at(b, n, m), n);
    LaurentPoly num(1L);
    LaurentPoly den(1L);
    for (int i = 0; i + 1 < n; ++i) {
      const int a = wt[i] - wt[i + 1];
      const int t = lam[i] - lam[i + 1] + m + 1;
      for (int k = 1; k <= t; ++k) {
        num *= LaurentPoly::q_pow(a + c - k + 1) - LaurentPoly::q_pow(-a - c + k - 1);
        den *= LaurentPoly::q_pow(k) - LaurentPoly::q_pow(-k);
      }
    }
    out.set(b, b, num.exact_div(den));
  }
  return out;
}

}  // namespace qschur::tensorrep
