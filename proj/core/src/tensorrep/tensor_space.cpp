#include "qschur/tensorrep/tensor_space.hpp"

#include <map>
#include <stdexcept>
#include <utility>

namespace qschur::tensorrep {

using combinat::MultiIndex;

std::size_t TensorBasisIndex::position() const {
  MultiIndex all = plain;
  all.insert(all.end(), dual.begin(), dual.end());
  return combinat::index_of(all, n);
}

TensorBasisIndex TensorBasisIndex::at(std::size_t pos, int n, int r, int s) {
  const MultiIndex all = combinat::multi_index_at(pos, n, r + s);
  return {n, MultiIndex(all.begin(), all.begin() + r), MultiIndex(all.begin() + r, all.end())};
}

std::vector<int> TensorBasisIndex::weight() const {
  std::vector<int> w(n, 0);
  for (int a : plain) ++w.at(a - 1);
  for (int a : dual) --w.at(a - 1);
  return w;
}

std::string TensorBasisIndex::to_string() const {
  std::string out = "v_{";
  for (int a : plain) out += std::to_string(a);
  out += "|";
  for (int a : dual) out += std::to_string(a);
  return out + "}";
}

std::size_t tensor_dim(int n, int r, int s) { return combinat::int_pow(n, r + s); }

Endo kron(const Endo& a, const Endo& b) {
  Endo out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t r1 = 0; r1 < a.rows(); ++r1) {
    for (std::size_t r2 = 0; r2 < b.rows(); ++r2) {
      exactalg::SparseVec<LaurentPoly> row;
      for (const auto& [c1, x] : a.row(r1)) {
        for (const auto& [c2, y] : b.row(r2)) {
          row.emplace_back(static_cast<std::uint32_t>(c1 * b.cols() + c2), x * y);
        }
      }
      out.set_row(r1 * b.rows() + r2, std::move(row));
    }
  }
  return out;
}

EndoQ to_rational(const Endo& a) {
  return a.map([](const LaurentPoly& p) { return RationalFn(p); });
}

Endo zero_endo(std::size_t rows, std::size_t cols) { return Endo(rows, cols); }

Endo endo_pow(const Endo& a, int e) {
  if (e < 0) throw std::invalid_argument("endo_pow: negative exponent");
  Endo out = Endo::identity(a.rows());
  for (int k = 0; k < e; ++k) out = a * out;
  return out;
}

namespace {

/// Three-case rule on positions p, p+1; `reversed` swaps the roles of < and >.
Endo three_case(int n, int len, int p, bool reversed) {
  const std::size_t d = combinat::int_pow(n, len);
  Endo m(d, d);
  const LaurentPoly qinv = LaurentPoly::q_pow(-1);
  const LaurentPoly stay = qinv - LaurentPoly::q_pow(1);
  for (std::size_t b = 0; b < d; ++b) {
    MultiIndex idx = combinat::multi_index_at(b, n, len);
    const int x = idx[p];
    const int y = idx[p + 1];
    if (x == y) {
      m.set(b, b, qinv);
      continue;
    }
    std::swap(idx[p], idx[p + 1]);
    m.set(combinat::index_of(idx, n), b, LaurentPoly(1L));
    if ((x > y) != reversed) m.set(b, b, stay);
  }
  return m;
}

}  // namespace

Endo hecke_generator(int n, int m, int i) {
  if (n < 1 || i < 1 || i > m - 1) throw std::out_of_range("hecke_generator: need 1 <= i <= m-1");
  return three_case(n, m, i - 1, false);
}

Endo hecke_word(int n, int m, const combinat::Perm& w) {
  if (w.degree() != m) throw std::invalid_argument("hecke_word: permutation degree differs from m");
  Endo out = Endo::identity(combinat::int_pow(n, m));
  for (int i : combinat::reduced_word(w)) out = hecke_generator(n, m, i) * out;
  return out;
}

std::vector<Endo> WalledGenerators::all() const {
  std::vector<Endo> out = e;
  out.insert(out.end(), s.begin(), s.end());
  out.insert(out.end(), s_hat.begin(), s_hat.end());
  return out;
}

WalledGenerators walled_generators(int n, int r, int s) {
  if (n < 1 || r < 0 || s < 0 || r + s < 1) throw std::out_of_range("walled_generators: need n >= 1, r + s >= 1");
  WalledGenerators out;
  const int len = r + s;
  const std::size_t d = tensor_dim(n, r, s);
  if (r >= 1 && s >= 1) {
    Endo e(d, d);
    for (std::size_t b = 0; b < d; ++b) {
      MultiIndex idx = combinat::multi_index_at(b, n, len);
      const int ir = idx[r - 1];
      if (ir != idx[r]) continue;
      const LaurentPoly c = LaurentPoly::q_pow(2 * ir - n - 1);
      for (int t = 1; t <= n; ++t) {
        idx[r - 1] = t;
        idx[r] = t;
        e.set(combinat::index_of(idx, n), b, c);
      }
    }
    out.e.push_back(std::move(e));
  }
  for (int i = 1; i < r; ++i) out.s.push_back(three_case(n, len, i - 1, false));
  for (int j = 1; j < s; ++j) out.s_hat.push_back(three_case(n, len, r + j - 1, true));
  return out;
}

std::string UGen::to_string() const {
  switch (kind) {
    case Kind::E:
      return "e" + std::to_string(i) + (l == 1 ? "" : "^(" + std::to_string(l) + ")");
    case Kind::F:
      return "f" + std::to_string(i) + (l == 1 ? "" : "^(" + std::to_string(l) + ")");
    case Kind::K:
      return "K" + std::to_string(i) + (l == 1 ? "" : "^-1");
    case Kind::QH: {
      std::string out = "q^h(";
      for (std::size_t k = 0; k < h.size(); ++k) out += (k ? "," : "") + std::to_string(h[k]);
      return out + ")";
    }
  }
  return "?";
}

std::vector<UGen> divided_power_generators(int n, int max_power) {
  std::vector<UGen> out;
  for (int i = 1; i < n; ++i) {
    for (int l = 1; l <= max_power; ++l) out.push_back(UGen::e(i, l));
    for (int l = 1; l <= max_power; ++l) out.push_back(UGen::f(i, l));
    out.push_back(UGen::k(i, 1));
    out.push_back(UGen::k(i, -1));
  }
  return out;
}

namespace {

void check_gen(int n, const UGen& g) {
  switch (g.kind) {
    case UGen::Kind::E:
    case UGen::Kind::F:
      if (g.i < 1 || g.i > n - 1 || g.l < 0) throw std::out_of_range("UGen: need 1 <= i <= n-1, l >= 0");
      break;
    case UGen::Kind::K:
      if (g.i < 1 || g.i > n - 1 || (g.l != 1 && g.l != -1)) throw std::out_of_range("UGen: bad K_i^{+-1}");
      break;
    case UGen::Kind::QH:
      if (static_cast<int>(g.h.size()) != n) throw std::invalid_argument("UGen: q^h needs n coordinates");
      break;
  }
}

/// Action on V; divided powers beyond the first vanish.
Endo vector_rep(int n, const UGen& g) {
  Endo m(n, n);
  switch (g.kind) {
    case UGen::Kind::E:
      if (g.l == 0) return Endo::identity(n);
      if (g.l == 1) m.set(g.i - 1, g.i, LaurentPoly(1L));
      break;
    case UGen::Kind::F:
      if (g.l == 0) return Endo::identity(n);
      if (g.l == 1) m.set(g.i, g.i - 1, LaurentPoly(1L));
      break;
    case UGen::Kind::K:
      for (int j = 1; j <= n; ++j) {
        const int e = (j == g.i ? 1 : 0) - (j == g.i + 1 ? 1 : 0);
        m.set(j - 1, j - 1, LaurentPoly::q_pow(g.l * e));
      }
      break;
    case UGen::Kind::QH:
      for (int j = 1; j <= n; ++j) m.set(j - 1, j - 1, LaurentPoly::q_pow(g.h[j - 1]));
      break;
  }
  return m;
}

/// Action on V* through (x f)(w) = f(S(x) w).
Endo dual_rep(int n, const UGen& g) {
  Endo antipode;
  switch (g.kind) {
    case UGen::Kind::E: {
      const LaurentPoly c = LaurentPoly::q_pow(g.l * (g.l - 1)) * LaurentPoly(g.l % 2 ? -1L : 1L);
      antipode = c * (vector_rep(n, g) * endo_pow(vector_rep(n, UGen::k(g.i, 1)), g.l));
      break;
    }
    case UGen::Kind::F: {
      const LaurentPoly c = LaurentPoly::q_pow(-g.l * (g.l - 1)) * LaurentPoly(g.l % 2 ? -1L : 1L);
      antipode = c * (endo_pow(vector_rep(n, UGen::k(g.i, -1)), g.l) * vector_rep(n, g));
      break;
    }
    case UGen::Kind::K:
      antipode = vector_rep(n, UGen::k(g.i, -g.l));
      break;
    case UGen::Kind::QH: {
      std::vector<int> neg = g.h;
      for (int& x : neg) x = -x;
      antipode = vector_rep(n, UGen::qh(neg));
      break;
    }
  }
  return antipode.transpose();
}

class FactorAction {
 public:
  FactorAction(int n, std::vector<bool> dual) : n_(n), dual_(std::move(dual)) {}

  Endo act(const UGen& g) { return act(dual_.size(), g); }

 private:
  /// Action on the first `len` factors.
  Endo act(std::size_t len, const UGen& g) {
    if (len == 0) {
      const bool scalar_one = (g.kind == UGen::Kind::K || g.kind == UGen::Kind::QH || g.l == 0);
      Endo m(1, 1);
      if (scalar_one) m.set(0, 0, LaurentPoly(1L));
      return m;
    }
    const auto key = std::make_tuple(len, static_cast<int>(g.kind), g.i, g.l, g.h);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    Endo out;
    if (len == 1) {
      out = single(0, g);
    } else {
      const std::size_t last = len - 1;
      switch (g.kind) {
        case UGen::Kind::K:
        case UGen::Kind::QH:
          out = kron(act(last, g), single(last, g));
          break;
        case UGen::Kind::E: {
          // sum_k q^{k(l-k)} e^{(l-k)} (x) K^{k-l} e^{(k)}
          const Endo kinv = single(last, UGen::k(g.i, -1));
          out = Endo(tensor_dim(n_, static_cast<int>(len)), tensor_dim(n_, static_cast<int>(len)));
          for (int k = 0; k <= g.l; ++k) {
            const Endo right = endo_pow(kinv, g.l - k) * single(last, UGen::e(g.i, k));
            if (is_zero_matrix(right)) continue;
            out = out + LaurentPoly::q_pow(k * (g.l - k)) * kron(act(last, UGen::e(g.i, g.l - k)), right);
          }
          break;
        }
        case UGen::Kind::F: {
          // sum_k q^{-k(l-k)} f^{(l-k)} K^k (x) f^{(k)}
          const Endo kpos = act(last, UGen::k(g.i, 1));
          out = Endo(tensor_dim(n_, static_cast<int>(len)), tensor_dim(n_, static_cast<int>(len)));
          for (int k = 0; k <= g.l; ++k) {
            const Endo right = single(last, UGen::f(g.i, k));
            if (is_zero_matrix(right)) continue;
            const Endo left = act(last, UGen::f(g.i, g.l - k)) * endo_pow(kpos, k);
            out = out + LaurentPoly::q_pow(-k * (g.l - k)) * kron(left, right);
          }
          break;
        }
      }
    }
    memo_.emplace(key, out);
    return out;
  }

  Endo single(std::size_t pos, const UGen& g) const { return dual_[pos] ? dual_rep(n_, g) : vector_rep(n_, g); }

  int n_;
  std::vector<bool> dual_;
  std::map<std::tuple<std::size_t, int, int, int, std::vector<int>>, Endo> memo_;
};

}  // namespace

Endo ugen_ordinary(int n, int m, const UGen& g) { return ugen_mixed(n, m, 0, g); }

Endo ugen_mixed(int n, int r, int s, const UGen& g) {
  if (n < 1 || r < 0 || s < 0) throw std::out_of_range("ugen_mixed: bad parameters");
  check_gen(n, g);
  std::vector<bool> dual(r, false);
  dual.insert(dual.end(), s, true);
  return FactorAction(n, std::move(dual)).act(g);
}

}  // namespace qschur::tensorrep
