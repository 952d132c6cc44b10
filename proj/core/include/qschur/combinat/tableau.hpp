#pragma once

#include <string>
#include <vector>

#include "qschur/combinat/partition.hpp"

namespace qschur::combinat {

/// Filling of a Young diagram, stored row-major.
class Tableau {
 public:
  Tableau() = default;
  Tableau(Partition shape, std::vector<int> entries);
  static Tableau from_rows(const std::vector<std::vector<int>>& rows);

  const Partition& shape() const { return shape_; }
  const std::vector<int>& entries() const { return entries_; }
  int size() const { return static_cast<int>(entries_.size()); }
  int row_count() const { return shape_.length(); }
  std::vector<int> row(int i) const;
  std::vector<std::vector<int>> rows() const;
  bool empty() const { return entries_.empty(); }

  bool operator==(const Tableau& o) const { return shape_ == o.shape_ && entries_ == o.entries_; }
  bool operator<(const Tableau& o) const {
    return shape_ == o.shape_ ? entries_ < o.entries_ : o.shape_ < shape_;
  }

  /// Rows separated by '|', e.g. "12345|124|2".
  std::string to_string() const;

 private:
  Partition shape_;
  std::vector<int> entries_;
};

/// Rows strictly increase left to right, columns weakly increase downward.
bool is_standard(const Tableau& t);

/// Multiplicity of 1..n among the entries.
std::vector<int> content(const Tableau& t, int n);

/// All standard fillings of `shape` with entries in 1..n, row-major lexicographic.
std::vector<Tableau> enumerate_standard(const Partition& shape, int n);

}  // namespace qschur::combinat
