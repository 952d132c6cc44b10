#include "qschur/combinat/perm.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace qschur::combinat {

std::size_t int_pow(std::size_t base, int e) {
  std::size_t out = 1;
  for (int i = 0; i < e; ++i) out *= base;
  return out;
}

std::size_t index_of(const MultiIndex& idx, int n) {
  std::size_t pos = 0;
  for (int x : idx) {
    if (x < 1 || x > n) throw std::out_of_range("index_of: entry out of range");
    pos = pos * static_cast<std::size_t>(n) + static_cast<std::size_t>(x - 1);
  }
  return pos;
}

MultiIndex multi_index_at(std::size_t pos, int n, int len) {
  MultiIndex idx(len);
  for (int k = len - 1; k >= 0; --k) {
    idx[k] = static_cast<int>(pos % static_cast<std::size_t>(n)) + 1;
    pos /= static_cast<std::size_t>(n);
  }
  return idx;
}

std::vector<MultiIndex> all_multi_indices(int n, int len) {
  std::vector<MultiIndex> out;
  const std::size_t total = int_pow(static_cast<std::size_t>(n), len);
  out.reserve(total);
  for (std::size_t p = 0; p < total; ++p) out.push_back(multi_index_at(p, n, len));
  return out;
}

std::vector<int> weight(const MultiIndex& idx, int n) {
  std::vector<int> wt(n, 0);
  for (int x : idx) ++wt.at(x - 1);
  return wt;
}

MultiIndex complement_star(const MultiIndex& idx, int n) {
  MultiIndex out;
  for (int l : idx) {
    for (int v = 1; v <= n; ++v) {
      if (v != l) out.push_back(v);
    }
  }
  return out;
}

int inversions(const std::vector<int>& seq) {
  int inv = 0;
  for (std::size_t a = 0; a < seq.size(); ++a) {
    for (std::size_t b = a + 1; b < seq.size(); ++b) {
      if (seq[a] > seq[b]) ++inv;
    }
  }
  return inv;
}

Perm::Perm(int m) : images_(m) { std::iota(images_.begin(), images_.end(), 1); }

Perm Perm::from_images(std::vector<int> images) {
  std::vector<int> sorted = images;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t k = 0; k < sorted.size(); ++k) {
    if (sorted[k] != static_cast<int>(k) + 1) throw std::invalid_argument("Perm: images are not a permutation");
  }
  Perm p;
  p.images_ = std::move(images);
  return p;
}

Perm Perm::simple(int m, int i) {
  if (i < 1 || i >= m) throw std::invalid_argument("Perm::simple: index out of range");
  Perm p(m);
  std::swap(p.images_[i - 1], p.images_[i]);
  return p;
}

Perm Perm::from_word(int m, const std::vector<int>& word) {
  Perm p(m);
  for (int i : word) p = p * simple(m, i);
  return p;
}

int Perm::length() const { return inversions(images_); }

bool Perm::is_identity() const {
  for (std::size_t k = 0; k < images_.size(); ++k) {
    if (images_[k] != static_cast<int>(k) + 1) return false;
  }
  return true;
}

Perm Perm::inverse() const {
  Perm p(degree());
  for (int k = 1; k <= degree(); ++k) p.images_[(*this)(k)-1] = k;
  return p;
}

Perm Perm::operator*(const Perm& o) const {
  if (o.degree() != degree()) throw std::invalid_argument("Perm product: degree mismatch");
  Perm p(degree());
  for (int k = 1; k <= degree(); ++k) p.images_[k - 1] = (*this)(o(k));
  return p;
}

MultiIndex Perm::act(const MultiIndex& idx) const {
  if (static_cast<int>(idx.size()) != degree()) throw std::invalid_argument("Perm::act: length mismatch");
  MultiIndex out(idx.size());
  for (int k = 1; k <= degree(); ++k) out[k - 1] = idx[(*this)(k)-1];
  return out;
}

std::string Perm::to_string() const {
  std::string s = "[";
  for (std::size_t k = 0; k < images_.size(); ++k) s += (k ? "," : "") + std::to_string(images_[k]);
  return s + "]";
}

std::vector<int> reduced_word(const Perm& w) {
  std::vector<int> images = w.images();
  std::vector<int> reversed;
  for (;;) {
    std::size_t i = 0;
    while (i + 1 < images.size() && images[i] < images[i + 1]) ++i;
    if (i + 1 >= images.size()) break;
    std::swap(images[i], images[i + 1]);  // w -> w s_{i+1}
    reversed.push_back(static_cast<int>(i) + 1);
  }
  return {reversed.rbegin(), reversed.rend()};
}

std::vector<Perm> all_perms(int m) {
  std::vector<int> images(m);
  std::iota(images.begin(), images.end(), 1);
  std::vector<Perm> out;
  do {
    out.push_back(Perm::from_images(images));
  } while (std::next_permutation(images.begin(), images.end()));
  return out;
}

std::vector<Perm> shuffles(int k, int l) {
  if (l < 0 || l > k) throw std::invalid_argument("shuffles: split out of range");
  std::vector<Perm> out;
  for (const auto& w : all_perms(k)) {
    const auto& im = w.images();
    if (std::is_sorted(im.begin(), im.begin() + l) && std::is_sorted(im.begin() + l, im.end())) out.push_back(w);
  }
  return out;
}

}  // namespace qschur::combinat
