#pragma once

#include <string>
#include <vector>

#include "qschur/combinat/multi_index.hpp"

namespace qschur::combinat {

/// Permutation of 1..m, stored by images w(1), ..., w(m).
/// Products compose as functions: (u * v)(k) = u(v(k)).
class Perm {
 public:
  explicit Perm(int m = 0);
  /// Throws std::invalid_argument unless `images` is a bijection of 1..m.
  static Perm from_images(std::vector<int> images);
  /// s_{i_1} s_{i_2} ... in S_m.
  static Perm from_word(int m, const std::vector<int>& word);
  static Perm simple(int m, int i);

  int degree() const { return static_cast<int>(images_.size()); }
  int operator()(int k) const { return images_.at(k - 1); }
  const std::vector<int>& images() const { return images_; }
  int length() const;
  bool is_identity() const;
  Perm inverse() const;
  Perm operator*(const Perm& o) const;
  bool operator==(const Perm& o) const { return images_ == o.images_; }
  bool operator<(const Perm& o) const { return images_ < o.images_; }

  /// Place permutation from the right: (i.w)_k = i_{w(k)}.
  MultiIndex act(const MultiIndex& idx) const;

  std::string to_string() const;

 private:
  std::vector<int> images_;
};

/// Reduced word obtained by repeatedly splitting off the leftmost right descent;
/// the longest element of S_3 gives [1, 2, 1].
std::vector<int> reduced_word(const Perm& w);

/// All permutations of 1..m in lexicographic order of images.
std::vector<Perm> all_perms(int m);

/// Permutations w of 1..k with w(1) < ... < w(l) and w(l+1) < ... < w(k).
std::vector<Perm> shuffles(int k, int l);

/// Number of pairs a < b with seq[a] > seq[b].
int inversions(const std::vector<int>& seq);

}  // namespace qschur::combinat
