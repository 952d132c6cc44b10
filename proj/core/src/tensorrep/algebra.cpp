#include "qschur/tensorrep/algebra.hpp"

#include <chrono>
#include <deque>
#include <map>
#include <numeric>
#include <optional>
#include <stdexcept>

#include "qschur/exactalg/echelon.hpp"
#include "qschur/mixedalg/quotient.hpp"
#include "qschur/mixedalg/rational_basis.hpp"

namespace qschur::tensorrep {

using exactalg::FieldEchelon;
using exactalg::SparseVec;

namespace {

void check_square(const std::vector<Endo>& gens, std::size_t d) {
  for (const auto& g : gens) {
    if (g.rows() != d || g.cols() != d) throw std::invalid_argument("generators must be d x d");
  }
}

std::vector<std::vector<std::uint32_t>> support_components(const std::vector<Endo>& gens, std::size_t d) {
  std::vector<std::uint32_t> parent(d);
  std::iota(parent.begin(), parent.end(), 0U);
  auto find = [&](std::uint32_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& g : gens) {
    for (std::size_t r = 0; r < d; ++r) {
      for (const auto& [c, v] : g.row(r)) parent[find(static_cast<std::uint32_t>(r))] = find(c);
    }
  }
  std::map<std::uint32_t, std::vector<std::uint32_t>> groups;
  for (std::uint32_t x = 0; x < d; ++x) groups[find(x)].push_back(x);
  std::vector<std::vector<std::uint32_t>> out;
  for (auto& [root, members] : groups) out.push_back(std::move(members));
  return out;
}

SparseVec<RationalFn> to_rational(const SparseVec<LaurentPoly>& v) {
  SparseVec<RationalFn> out;
  out.reserve(v.size());
  for (const auto& [i, x] : v) out.emplace_back(i, RationalFn(x));
  return out;
}

/// Scales a Q(q) vector to a primitive-denominator Laurent vector.
SparseVec<LaurentPoly> clear_denominators(const SparseVec<RationalFn>& v) {
  LaurentPoly l(1L);
  for (const auto& [i, x] : v) l = (l * x.den()).exact_div(exactalg::gcd(l, x.den()));
  SparseVec<LaurentPoly> out;
  for (const auto& [i, x] : v) out.emplace_back(i, x.num() * l.exact_div(x.den()));
  return out;
}

}  // namespace

Commutant commutant_dim(const std::vector<Endo>& gens, std::size_t d, bool want_basis) {
  check_square(gens, d);
  Commutant out;
  const auto comps = support_components(gens, d);
  std::vector<std::uint32_t> local(d);
  for (const auto& comp : comps) {
    for (std::size_t k = 0; k < comp.size(); ++k) local[comp[k]] = static_cast<std::uint32_t>(k);
  }
  std::vector<Endo> transposed;
  for (const auto& g : gens) transposed.push_back(g.transpose());

  for (const auto& c1 : comps) {
    for (const auto& c2 : comps) {
      const std::size_t w = c2.size();
      const std::size_t vars = c1.size() * w;
      FieldEchelon<RationalFn> ech(vars);
      for (std::size_t gi = 0; gi < gens.size() && ech.rank() < vars; ++gi) {
        for (std::uint32_t a : c1) {
          for (std::uint32_t b : c2) {
            // (X g - g X)_{ab}
            std::vector<std::pair<std::uint32_t, LaurentPoly>> eq;
            for (const auto& [c, v] : transposed[gi].row(b)) eq.emplace_back(local[a] * w + local[c], v);
            for (const auto& [c, v] : gens[gi].row(a)) eq.emplace_back(local[c] * w + local[b], -v);
            auto row = exactalg::make_sparse(std::move(eq));
            if (!row.empty()) ech.insert(to_rational(row));
          }
        }
      }
      out.dim += vars - ech.rank();
      if (!want_basis) continue;
      for (const auto& sol : ech.nullspace()) {
        Endo x(d, d);
        for (const auto& [var, v] : clear_denominators(sol)) x.set(c1[var / w], c2[var % w], v);
        out.basis.push_back(std::move(x));
      }
    }
  }
  return out;
}

namespace {

std::vector<int> shift_of(const Endo& m, const Grading& grading) {
  std::optional<std::vector<int>> shift;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (const auto& [c, v] : m.row(r)) {
      std::vector<int> s(grading[r].size());
      for (std::size_t k = 0; k < s.size(); ++k) s[k] = grading[r][k] - grading[c][k];
      if (!shift) {
        shift = s;
      } else if (*shift != s) {
        throw std::invalid_argument("image_algebra_dim: generator is not homogeneous for the grading");
      }
    }
  }
  return shift.value_or(std::vector<int>{});
}

SparseVec<RationalFn> flatten(const Endo& m) {
  SparseVec<RationalFn> out;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (const auto& [c, v] : m.row(r)) out.emplace_back(static_cast<std::uint32_t>(r * m.cols() + c), RationalFn(v));
  }
  return out;
}

}  // namespace

std::size_t image_algebra_dim(const std::vector<Endo>& gens, std::size_t d, const Grading& grading) {
  check_square(gens, d);
  if (d == 0) return 0;
  const bool graded = !grading.empty();
  if (graded && grading.size() != d) throw std::invalid_argument("image_algebra_dim: grading size differs from d");
  struct Gen {
    const Endo* m;
    std::vector<int> shift;
  };
  std::vector<Gen> gs;
  for (const auto& g : gens) {
    if (is_zero_matrix(g)) continue;
    gs.push_back({&g, graded ? shift_of(g, grading) : std::vector<int>{}});
  }
  const std::vector<int> zero = graded ? std::vector<int>(grading[0].size(), 0) : std::vector<int>{};
  std::map<std::vector<int>, FieldEchelon<RationalFn>> blocks;
  std::deque<std::pair<Endo, std::vector<int>>> queue;
  std::size_t dim = 0;
  auto offer = [&](Endo m, const std::vector<int>& shift) {
    if (is_zero_matrix(m)) return;
    auto it = blocks.try_emplace(shift, d * d).first;
    if (it->second.insert(flatten(m))) {
      ++dim;
      queue.emplace_back(std::move(m), shift);
    }
  };
  offer(Endo::identity(d), zero);
  while (!queue.empty()) {
    auto [b, shift] = std::move(queue.front());
    queue.pop_front();
    for (const auto& g : gs) {
      std::vector<int> s = shift;
      for (std::size_t k = 0; k < s.size(); ++k) s[k] += g.shift[k];
      offer(*g.m * b, s);
    }
  }
  return dim;
}

Grading mixed_grading(int n, int r, int s) {
  Grading out;
  const std::size_t d = tensor_dim(n, r, s);
  for (std::size_t b = 0; b < d; ++b) out.push_back(TensorBasisIndex::at(b, n, r, s).weight());
  return out;
}

std::string SchurWeylReport::mismatch() const {
  if (ok) return "";
  return "commutant=" + std::to_string(commutant_dim) + " image=" + std::to_string(image_dim) +
         " bitableaux=" + std::to_string(rational_bitableaux) + " quotient=" + std::to_string(coeff_quotient_dim) +
         (bicommute ? "" : " (actions do not commute)");
}

SchurWeylReport verify_schur_weyl(int n, int r, int s) {
  if (n < 1 || r < 0 || s < 0) throw std::out_of_range("verify_schur_weyl: bad parameters");
  const auto start = std::chrono::steady_clock::now();
  SchurWeylReport rep;
  rep.n = n;
  rep.r = r;
  rep.s = s;
  const std::size_t d = tensor_dim(n, r, s);
  const std::vector<Endo> walled = r + s >= 1 ? walled_generators(n, r, s).all() : std::vector<Endo>{};
  std::vector<Endo> us;
  for (const auto& g : divided_power_generators(n, r + s)) us.push_back(ugen_mixed(n, r, s, g));
  for (int a = 1; a <= n; ++a) {
    std::vector<int> h(n, 0);
    h[a - 1] = 1;
    us.push_back(ugen_mixed(n, r, s, UGen::qh(h)));
  }
  rep.bicommute = true;
  for (const auto& u : us) {
    for (const auto& w : walled) {
      if (!(u * w == w * u)) rep.bicommute = false;
    }
  }
  rep.commutant_dim = commutant_dim(walled, d).dim;
  std::vector<Endo> uprime(us.begin(), us.end() - n);
  rep.image_dim = image_algebra_dim(uprime, d, mixed_grading(n, r, s));
  rep.rational_bitableaux = mixedalg::standard_rational_bitableaux(n, r, s).size();
  rep.coeff_quotient_dim = mixedalg::quotient(n, r, s).dim();
  rep.ok = rep.bicommute && rep.commutant_dim == rep.image_dim && rep.image_dim == rep.rational_bitableaux &&
           rep.rational_bitableaux == rep.coeff_quotient_dim;
  rep.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

nlohmann::json to_json(const SchurWeylReport& rep) {
  return {{"n", rep.n},
          {"r", rep.r},
          {"s", rep.s},
          {"commutant_dim", rep.commutant_dim},
          {"image_dim", rep.image_dim},
          {"rational_bitableaux", rep.rational_bitableaux},
          {"coeff_quotient_dim", rep.coeff_quotient_dim},
          {"bicommute", rep.bicommute},
          {"ok", rep.ok},
          {"elapsed_ms", rep.elapsed_ms}};
}

}  // namespace qschur::tensorrep
