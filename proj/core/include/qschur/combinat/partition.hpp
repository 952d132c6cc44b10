#pragma once

#include <vector>

namespace qschur::combinat {

/// Weakly decreasing list of positive parts.
class Partition {
 public:
  Partition() = default;
  /// Throws std::invalid_argument unless parts are positive and weakly decreasing.
  explicit Partition(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int size() const;
  int length() const { return static_cast<int>(parts_.size()); }
  /// Part i (0-based); 0 beyond the length.
  int part(int i) const { return i < length() ? parts_[i] : 0; }
  bool empty() const { return parts_.empty(); }

  bool operator==(const Partition& o) const { return parts_ == o.parts_; }
  bool operator<(const Partition& o) const { return parts_ < o.parts_; }

 private:
  std::vector<int> parts_;
};

/// All partitions of m in decreasing lexicographic order, e.g. (3), (2,1), (1,1,1).
std::vector<Partition> partitions_of(int m);

}  // namespace qschur::combinat
