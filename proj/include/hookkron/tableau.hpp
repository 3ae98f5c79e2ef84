#pragma once

#include <compare>
#include <optional>
#include <vector>

#include "hookkron/error.hpp"
#include "hookkron/partition.hpp"

namespace hookkron {

// 0-based (row, col) internally; English convention, row 0 on top.
struct Cell {
  int row = 0;
  int col = 0;
  friend bool operator==(const Cell&, const Cell&) = default;
  friend auto operator<=>(const Cell&, const Cell&) = default;
};

// Rows of a (possibly skew) tableau.  Row r covers columns
// offset(r) .. offset(r)+length(r)-1.
template <class T>
class Tableau {
 public:
  Tableau() = default;
  explicit Tableau(std::vector<std::vector<T>> rows) : rows_(std::move(rows)), offsets_(rows_.size(), 0) {
    trim();
  }
  Tableau(std::vector<int> offsets, std::vector<std::vector<T>> rows)
      : rows_(std::move(rows)), offsets_(std::move(offsets)) {
    offsets_.resize(rows_.size(), 0);
    trim();
  }
  // Empty tableau of the given shape filled with `fill`.
  Tableau(const SkewShape& shape, const T& fill) {
    for (int r = 0; r < shape.rows(); ++r) {
      offsets_.push_back(shape.inner[r]);
      rows_.emplace_back(shape.outer[r] - shape.inner[r], fill);
    }
    trim();
  }

  int num_rows() const { return static_cast<int>(rows_.size()); }
  int length(int r) const { return r < num_rows() ? static_cast<int>(rows_[r].size()) : 0; }
  int offset(int r) const { return r < num_rows() ? offsets_[r] : 0; }
  int row_end(int r) const { return offset(r) + length(r); }
  bool contains(int r, int c) const { return r >= 0 && r < num_rows() && c >= offsets_[r] && c < row_end(r); }
  const T& at(int r, int c) const { return rows_[r][c - offsets_[r]]; }
  T& at(int r, int c) { return rows_[r][c - offsets_[r]]; }
  const T& at(Cell x) const { return at(x.row, x.col); }
  T& at(Cell x) { return at(x.row, x.col); }
  const std::vector<T>& row(int r) const { return rows_[r]; }
  const std::vector<std::vector<T>>& rows() const { return rows_; }
  const std::vector<int>& offsets() const { return offsets_; }

  int size() const {
    int s = 0;
    for (auto& r : rows_) s += static_cast<int>(r.size());
    return s;
  }
  bool empty() const { return size() == 0; }
  bool is_straight() const {
    for (int o : offsets_)
      if (o) return false;
    return true;
  }
  SkewShape shape() const {
    std::vector<int> o, in;
    for (int r = 0; r < num_rows(); ++r) {
      o.push_back(row_end(r));
      in.push_back(offsets_[r]);
    }
    return SkewShape(Partition(o), Partition(in));
  }
  Partition outer() const { return shape().outer; }

  // Row-major.
  std::vector<Cell> cells() const {
    std::vector<Cell> out;
    for (int r = 0; r < num_rows(); ++r)
      for (int c = offsets_[r]; c < row_end(r); ++c) out.push_back({r, c});
    return out;
  }

  // Leftmost cell of the bottom row.
  std::optional<Cell> southwest() const {
    for (int r = num_rows() - 1; r >= 0; --r)
      if (length(r)) return Cell{r, offsets_[r]};
    return std::nullopt;
  }

  // Adds a cell at the end of row r (r may equal num_rows()).
  void push(int r, const T& v) {
    if (r == num_rows()) {
      rows_.emplace_back();
      offsets_.push_back(0);
    }
    rows_[r].push_back(v);
  }
  void pop(int r) {
    rows_[r].pop_back();
    trim();
  }

  template <class F>
  auto map(F f) const -> Tableau<decltype(f(std::declval<const T&>()))> {
    using U = decltype(f(std::declval<const T&>()));
    std::vector<std::vector<U>> rs;
    for (auto& r : rows_) {
      rs.emplace_back();
      for (auto& x : r) rs.back().push_back(f(x));
    }
    return Tableau<U>(offsets_, std::move(rs));
  }

  friend bool operator==(const Tableau&, const Tableau&) = default;
  friend auto operator<=>(const Tableau& a, const Tableau& b) {
    if (auto c = a.offsets_ <=> b.offsets_; c != 0) return c;
    return a.rows_ <=> b.rows_;
  }

 private:
  void trim() {
    while (!rows_.empty() && rows_.back().empty()) {
      rows_.pop_back();
      offsets_.pop_back();
    }
  }

  std::vector<std::vector<T>> rows_;
  std::vector<int> offsets_;
};

template <class T>
Tableau<T> transpose(const Tableau<T>& t) {
  SkewShape sh = t.shape().conjugate();
  std::vector<std::vector<T>> rows;
  std::vector<int> offs;
  for (int r = 0; r < sh.rows(); ++r) {
    offs.push_back(sh.inner[r]);
    rows.emplace_back();
    for (int c = sh.inner[r]; c < sh.outer[r]; ++c) rows.back().push_back(t.at(c, r));
  }
  return Tableau<T>(offs, rows);
}

// Rows bottom to top, each left to right.
template <class T>
std::vector<T> row_word(const Tableau<T>& t) {
  std::vector<T> w;
  for (int r = t.num_rows() - 1; r >= 0; --r) w.insert(w.end(), t.row(r).begin(), t.row(r).end());
  return w;
}

}  // namespace hookkron
