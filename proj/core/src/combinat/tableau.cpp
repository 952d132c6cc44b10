#include "qschur/combinat/tableau.hpp"

#include <numeric>
#include <stdexcept>

namespace qschur::combinat {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) throw std::invalid_argument("Partition: parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1]) throw std::invalid_argument("Partition: parts must be weakly decreasing");
  }
}

int Partition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

namespace {

void partitions_rec(int remaining, int max_part, std::vector<int>& cur, std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(cur);
    return;
  }
  for (int p = std::min(remaining, max_part); p >= 1; --p) {
    cur.push_back(p);
    partitions_rec(remaining - p, p, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions_of(int m) {
  if (m < 0) throw std::invalid_argument("partitions_of: negative size");
  std::vector<Partition> out;
  std::vector<int> cur;
  partitions_rec(m, m, cur, out);
  return out;
}

Tableau::Tableau(Partition shape, std::vector<int> entries) : shape_(std::move(shape)), entries_(std::move(entries)) {
  if (static_cast<int>(entries_.size()) != shape_.size()) throw std::invalid_argument("Tableau: entry count differs from shape size");
}

Tableau Tableau::from_rows(const std::vector<std::vector<int>>& rows) {
  std::vector<int> parts;
  std::vector<int> entries;
  for (const auto& r : rows) {
    if (r.empty()) continue;
    parts.push_back(static_cast<int>(r.size()));
    entries.insert(entries.end(), r.begin(), r.end());
  }
  return Tableau(Partition(parts), entries);
}

std::vector<int> Tableau::row(int i) const {
  int start = 0;
  for (int k = 0; k < i; ++k) start += shape_.part(k);
  return {entries_.begin() + start, entries_.begin() + start + shape_.part(i)};
}

std::vector<std::vector<int>> Tableau::rows() const {
  std::vector<std::vector<int>> out;
  for (int i = 0; i < row_count(); ++i) out.push_back(row(i));
  return out;
}

std::string Tableau::to_string() const {
  std::string s;
  for (int i = 0; i < row_count(); ++i) {
    if (i > 0) s += '|';
    for (int x : row(i)) s += std::to_string(x);
  }
  return s;
}

bool is_standard(const Tableau& t) {
  const auto rows = t.rows();
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < rows[i].size(); ++j) {
      if (j > 0 && rows[i][j] <= rows[i][j - 1]) return false;
      if (i > 0 && rows[i][j] < rows[i - 1][j]) return false;
    }
  }
  return true;
}

std::vector<int> content(const Tableau& t, int n) {
  std::vector<int> out(n, 0);
  for (int x : t.entries()) {
    if (x < 1 || x > n) throw std::invalid_argument("content: entry out of range");
    ++out[x - 1];
  }
  return out;
}

namespace {

void fill_rec(const Partition& shape, int n, std::size_t pos, const std::vector<std::pair<int, int>>& cells,
              std::vector<int>& entries, std::vector<Tableau>& out) {
  if (pos == cells.size()) {
    out.emplace_back(shape, entries);
    return;
  }
  const auto [row, col] = cells[pos];
  int lo = 1;
  if (col > 0) lo = std::max(lo, entries[pos - 1] + 1);
  if (row > 0) {
    int above = 0;
    for (int k = 0; k < row - 1; ++k) above += shape.part(k);
    lo = std::max(lo, entries[above + col]);
  }
  // Leave room for the rest of the row to increase strictly.
  const int hi = n - (shape.part(row) - 1 - col);
  for (int v = lo; v <= hi; ++v) {
    entries[pos] = v;
    fill_rec(shape, n, pos + 1, cells, entries, out);
  }
}

}  // namespace

std::vector<Tableau> enumerate_standard(const Partition& shape, int n) {
  std::vector<std::pair<int, int>> cells;
  for (int i = 0; i < shape.length(); ++i) {
    for (int j = 0; j < shape.part(i); ++j) cells.emplace_back(i, j);
  }
  std::vector<Tableau> out;
  std::vector<int> entries(cells.size());
  fill_rec(shape, n, 0, cells, entries, out);
  return out;
}

}  // namespace qschur::combinat
