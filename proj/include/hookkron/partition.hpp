#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace hookkron {

class Partition {
 public:
  Partition() = default;
  // Trailing zeros are dropped; anything else non-partition throws.
  explicit Partition(std::vector<int> parts);

  static Partition parse(std::string_view text);
  // (n-d, 1^d)
  static Partition hook(int n, int d);

  const std::vector<int>& parts() const { return parts_; }
  int size() const { return size_; }
  int length() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }
  int operator[](int i) const { return i < length() ? parts_[i] : 0; }

  Partition conjugate() const;
  bool contains(const Partition& other) const;
  bool is_hook() const;
  std::string str() const;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition& a, const Partition& b) { return a.parts_ <=> b.parts_; }

 private:
  std::vector<int> parts_;
  int size_ = 0;
};

// All partitions of n, decreasing lexicographic order.
std::vector<Partition> partitions_of(int n);

// Partitions theta with inner <= theta <= outer and |theta| = size.
std::vector<Partition> partitions_between(const Partition& inner, const Partition& outer, int size);

struct SkewShape {
  Partition outer;
  Partition inner;

  SkewShape() = default;
  SkewShape(Partition o, Partition i = {});

  static SkewShape parse(std::string_view text);

  int size() const { return outer.size() - inner.size(); }
  int rows() const { return outer.length(); }
  bool is_straight() const { return inner.empty(); }
  bool contains(int r, int c) const { return r >= 0 && c >= inner[r] && c < outer[r]; }
  SkewShape conjugate() const { return {outer.conjugate(), inner.conjugate()}; }
  std::string str() const;

  friend bool operator==(const SkewShape&, const SkewShape&) = default;
  friend auto operator<=>(const SkewShape&, const SkewShape&) = default;
};

// lower sits below-left of upper, sharing no row or column.
SkewShape direct_sum(const SkewShape& lower, const SkewShape& upper);

std::uint64_t factorial(int n);

}  // namespace hookkron
