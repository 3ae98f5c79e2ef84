#include "hookkron/partition.hpp"

#include <algorithm>
#include <charconv>

#include "hookkron/error.hpp"

namespace hookkron {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) throw PreconditionError("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1]) throw PreconditionError("partition parts must be weakly decreasing");
    size_ += parts_[i];
  }
}

static int parse_int(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  int v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || p != s.data() + s.size())
    throw ParseError("bad integer '" + std::string(s) + "'");
  return v;
}

Partition Partition::parse(std::string_view text) {
  std::vector<int> parts;
  bool blank = text.find_first_not_of(" \t()") == std::string_view::npos;
  if (blank) return {};
  while (true) {
    auto comma = text.find(',');
    parts.push_back(parse_int(text.substr(0, comma)));
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  try {
    return Partition(std::move(parts));
  } catch (const PreconditionError& e) {
    throw ParseError(e.what());
  }
}

Partition Partition::hook(int n, int d) {
  if (n < 1 || d < 0 || d > n - 1) throw PreconditionError("hook needs 0 <= d <= n-1");
  std::vector<int> p{n - d};
  p.insert(p.end(), d, 1);
  return Partition(p);
}

Partition Partition::conjugate() const {
  std::vector<int> c(parts_.empty() ? 0 : parts_[0], 0);
  for (int p : parts_)
    for (int j = 0; j < p; ++j) ++c[j];
  return Partition(c);
}

bool Partition::contains(const Partition& other) const {
  if (other.length() > length()) return false;
  for (int i = 0; i < other.length(); ++i)
    if (other.parts_[i] > parts_[i]) return false;
  return true;
}

bool Partition::is_hook() const { return length() <= 1 || parts_[1] <= 1; }

std::string Partition::str() const {
  std::string s;
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(parts_[i]);
  }
  return s.empty() ? "0" : s;
}

static void gen_partitions(int n, int max, std::vector<int>& cur, std::vector<Partition>& out) {
  if (n == 0) {
    out.emplace_back(cur);
    return;
  }
  for (int p = std::min(n, max); p >= 1; --p) {
    cur.push_back(p);
    gen_partitions(n - p, p, cur, out);
    cur.pop_back();
  }
}

std::vector<Partition> partitions_of(int n) {
  std::vector<Partition> out;
  std::vector<int> cur;
  if (n < 0) return out;
  gen_partitions(n, n, cur, out);
  return out;
}

static void gen_between(const Partition& inner, const Partition& outer, int row, int left, int prev,
                        std::vector<int>& cur, std::vector<Partition>& out) {
  if (row == outer.length()) {
    if (left == 0) out.emplace_back(cur);
    return;
  }
  int lo = inner[row], hi = std::min(outer[row], prev);
  // rows below can take at most their outer parts
  int room = 0;
  for (int r = row + 1; r < outer.length(); ++r) room += outer[r] - inner[r];
  for (int v = hi; v >= lo; --v) {
    int used = v - inner[row];
    if (used > left) continue;
    if (left - used > room) break;
    cur.push_back(v);
    gen_between(inner, outer, row + 1, left - used, v, cur, out);
    cur.pop_back();
  }
}

std::vector<Partition> partitions_between(const Partition& inner, const Partition& outer, int size) {
  std::vector<Partition> out;
  if (!outer.contains(inner)) return out;
  std::vector<int> cur;
  gen_between(inner, outer, 0, size - inner.size(), 1 << 30, cur, out);
  return out;
}

SkewShape::SkewShape(Partition o, Partition i) : outer(std::move(o)), inner(std::move(i)) {
  if (!outer.contains(inner)) throw PreconditionError("inner shape not contained in outer shape");
}

SkewShape SkewShape::parse(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return SkewShape(Partition::parse(text));
  Partition o = Partition::parse(text.substr(0, slash));
  Partition i = Partition::parse(text.substr(slash + 1));
  if (!o.contains(i)) throw ParseError("inner shape not contained in outer shape");
  return SkewShape(o, i);
}

std::string SkewShape::str() const { return inner.empty() ? outer.str() : outer.str() + "/" + inner.str(); }

SkewShape direct_sum(const SkewShape& lower, const SkewShape& upper) {
  int width = lower.outer[0];
  std::vector<int> o, in;
  for (int r = 0; r < upper.outer.length(); ++r) {
    o.push_back(width + upper.outer[r]);
    in.push_back(width + upper.inner[r]);
  }
  for (int r = 0; r < lower.outer.length(); ++r) {
    o.push_back(lower.outer[r]);
    in.push_back(lower.inner[r]);
  }
  return SkewShape(Partition(o), Partition(in));
}

std::uint64_t factorial(int n) {
  if (n < 0 || n > 20) throw OverflowError("factorial out of range");
  std::uint64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
  return f;
}

}  // namespace hookkron
