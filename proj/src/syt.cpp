#include <algorithm>
#include <functional>
#include <numeric>

#include "hookkron/symfunc.hpp"

namespace hookkron {

std::vector<StandardTableau> syt_enumerate(const SkewShape& shape) {
  std::vector<StandardTableau> out;
  StandardTableau t(shape, 0);
  int n = shape.size();
  // fill[r] = number of cells of row r already filled (beyond the inner part)
  std::vector<int> fill(shape.rows(), 0);
  std::function<void(int)> rec = [&](int next) {
    if (next > n) {
      out.push_back(t);
      return;
    }
    for (int r = 0; r < shape.rows(); ++r) {
      int c = shape.inner[r] + fill[r];
      if (c >= shape.outer[r]) continue;
      // the cell above must be inner or already filled
      if (r > 0 && c >= shape.inner[r - 1] && c >= shape.inner[r - 1] + fill[r - 1]) continue;
      t.at(r, c) = next;
      ++fill[r];
      rec(next + 1);
      --fill[r];
    }
  };
  rec(1);
  return out;
}

std::uint64_t syt_count(const Partition& lambda) {
  Partition conj = lambda.conjugate();
  // product of hooks divides n!; use 128-bit to stay exact
  unsigned __int128 num = 1, den = 1;
  for (int i = 2; i <= lambda.size(); ++i) num *= static_cast<unsigned>(i);
  for (int r = 0; r < lambda.length(); ++r)
    for (int c = 0; c < lambda[r]; ++c) den *= static_cast<unsigned>(lambda[r] - c + conj[c] - r - 1);
  return static_cast<std::uint64_t>(num / den);
}

bool is_standard(const StandardTableau& t) {
  std::vector<int> seen;
  for (auto& c : t.cells()) {
    int v = t.at(c);
    seen.push_back(v);
    if (t.contains(c.row, c.col + 1) && t.at(c.row, c.col + 1) <= v) return false;
    if (t.contains(c.row + 1, c.col) && t.at(c.row + 1, c.col) <= v) return false;
  }
  std::sort(seen.begin(), seen.end());
  for (size_t i = 0; i < seen.size(); ++i)
    if (seen[i] != static_cast<int>(i) + 1) return false;
  return true;
}

StandardTableau evacuation(const StandardTableau& t) {
  if (!t.is_straight()) throw PreconditionError("evacuation needs a straight shape");
  int n = t.size();
  // work on rows with a sentinel for removed cells
  std::vector<std::vector<int>> rows = t.rows();
  StandardTableau out = t;
  for (int k = n; k >= 1; --k) {
    int r = 0, c = 0;
    // slide the hole at (0,0) outward
    while (true) {
      bool right = c + 1 < static_cast<int>(rows[r].size());
      bool down = r + 1 < static_cast<int>(rows.size()) && c < static_cast<int>(rows[r + 1].size());
      if (!right && !down) break;
      if (right && (!down || rows[r][c + 1] < rows[r + 1][c])) {
        rows[r][c] = rows[r][c + 1];
        ++c;
      } else {
        rows[r][c] = rows[r + 1][c];
        ++r;
      }
    }
    rows[r].pop_back();
    if (rows[r].empty()) rows.pop_back();
    out.at(r, c) = k;
  }
  return out;
}

OrdinaryTableau evacuation_distinct(const OrdinaryTableau& t) {
  std::vector<int> vals;
  for (auto& r : t.rows()) vals.insert(vals.end(), r.begin(), r.end());
  std::sort(vals.begin(), vals.end());
  auto rank = [&](int v) { return static_cast<int>(std::lower_bound(vals.begin(), vals.end(), v) - vals.begin()) + 1; };
  StandardTableau ev = evacuation(t.map(rank));
  return ev.map([&](int i) { return vals[i - 1]; });
}

OrdinaryTableau superstandard(const Partition& lambda) {
  std::vector<std::vector<int>> rows;
  for (int r = 0; r < lambda.length(); ++r) rows.emplace_back(lambda[r], r + 1);
  return OrdinaryTableau(rows);
}

StandardTableau superstandard_std(const Partition& lambda) {
  std::vector<std::vector<int>> rows;
  int k = 0;
  for (int r = 0; r < lambda.length(); ++r) {
    rows.emplace_back();
    for (int c = 0; c < lambda[r]; ++c) rows.back().push_back(++k);
  }
  return StandardTableau(rows);
}

namespace {

struct LrSearch {
  const SkewShape& shape;
  const Partition& content;
  OrdinaryTableau t;
  std::vector<int> count;
  std::vector<OrdinaryTableau>* out;
  std::int64_t found = 0;

  LrSearch(const SkewShape& s, const Partition& c, std::vector<OrdinaryTableau>* o)
      : shape(s), content(c), t(s, 0), count(c.length() + 1, 0), out(o) {}

  // cells visited top to bottom, right to left within a row
  void run(int r, int c) {
    while (r < shape.rows() && c < shape.inner[r]) {
      ++r;
      if (r < shape.rows()) c = shape.outer[r] - 1;
    }
    if (r >= shape.rows()) {
      ++found;
      if (out) out->push_back(t);
      return;
    }
    int hi = content.length();
    if (c + 1 < shape.outer[r]) hi = std::min(hi, t.at(r, c + 1));
    int lo = 1;
    if (r > 0 && shape.contains(r - 1, c)) lo = t.at(r - 1, c) + 1;
    for (int v = lo; v <= hi; ++v) {
      if (count[v] + 1 > content[v - 1]) continue;
      if (v > 1 && count[v] + 1 > count[v - 1]) continue;
      ++count[v];
      t.at(r, c) = v;
      run(r, c - 1);
      --count[v];
    }
  }
};

}  // namespace

std::vector<OrdinaryTableau> lr_fillings(const SkewShape& shape, const Partition& content) {
  std::vector<OrdinaryTableau> out;
  if (shape.size() != content.size()) return out;
  LrSearch s(shape, content, &out);
  s.run(0, shape.rows() ? shape.outer[0] - 1 : 0);
  return out;
}

std::int64_t lr_count(const SkewShape& shape, const Partition& content) {
  if (shape.size() != content.size()) return 0;
  LrSearch s(shape, content, nullptr);
  s.run(0, shape.rows() ? shape.outer[0] - 1 : 0);
  return s.found;
}

std::int64_t lr_coefficient(const Partition& lambda, const Partition& mu, const Partition& nu) {
  if (!nu.contains(mu) || lambda.size() + mu.size() != nu.size()) return 0;
  return lr_count(SkewShape(nu, mu), lambda);
}

}  // namespace hookkron
