#include "hookkron/oracles.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace hookkron::oracle {

std::vector<OrdinaryWord> permutations(int n) {
  std::vector<OrdinaryWord> out;
  OrdinaryWord p(n);
  std::iota(p.begin(), p.end(), 1);
  do out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

std::vector<Word> colored_permutations(int n) {
  std::vector<Word> out;
  for (auto& p : permutations(n))
    for (int mask = 0; mask < (1 << n); ++mask) {
      Word w;
      for (int i = 0; i < n; ++i) w.push_back({p[i], ((mask >> i) & 1) != 0});
      out.push_back(w);
    }
  return out;
}

std::vector<Word> colored_words(int n, int m) {
  std::vector<Word> out;
  Word w(n);
  std::function<void(int)> rec = [&](int i) {
    if (i == n) {
      out.push_back(w);
      return;
    }
    for (int v = 1; v <= m; ++v)
      for (bool b : {false, true}) {
        w[i] = {v, b};
        rec(i + 1);
      }
  };
  rec(0);
  return out;
}

Word random_colored_word(std::mt19937_64& rng, int n, int m) {
  std::uniform_int_distribution<int> val(1, m), bit(0, 1);
  Word w;
  for (int i = 0; i < n; ++i) w.push_back({val(rng), bit(rng) == 1});
  return w;
}

Word random_colored_permutation(std::mt19937_64& rng, int n) {
  OrdinaryWord p(n);
  std::iota(p.begin(), p.end(), 1);
  std::shuffle(p.begin(), p.end(), rng);
  std::uniform_int_distribution<int> bit(0, 1);
  Word w;
  for (int x : p) w.push_back({x, bit(rng) == 1});
  return w;
}

namespace {

bool fits(const ColoredTableau& t, Cell c, Letter a) {
  if (t.contains(c.row, c.col - 1)) {
    Letter l = t.at(c.row, c.col - 1);
    if (l.natural_key() > a.natural_key() || (l == a && a.barred)) return false;
  }
  if (t.contains(c.row - 1, c.col)) {
    Letter u = t.at(c.row - 1, c.col);
    if (u.natural_key() > a.natural_key() || (u == a && !a.barred)) return false;
  }
  return true;
}

}  // namespace

std::vector<ColoredTableau> colored_tableaux(const SkewShape& shape, int m) {
  std::vector<ColoredTableau> out;
  ColoredTableau t(shape, Letter{});
  auto cells = t.cells();
  std::function<void(size_t)> rec = [&](size_t i) {
    if (i == cells.size()) {
      out.push_back(t);
      return;
    }
    for (int v = 1; v <= m; ++v)
      for (bool b : {true, false}) {
        Letter a{v, b};
        if (!fits(t, cells[i], a)) continue;
        t.at(cells[i]) = a;
        rec(i + 1);
      }
  };
  rec(0);
  return out;
}

std::vector<ColoredTableau> standard_colored_tableaux(const SkewShape& shape) {
  std::vector<ColoredTableau> out;
  int n = shape.size();
  for (const StandardTableau& s : syt_enumerate(shape)) {
    auto cells = s.cells();
    for (int mask = 0; mask < (1 << n); ++mask) {
      ColoredTableau t = s.map([&](int x) { return Letter{x, ((mask >> (x - 1)) & 1) != 0}; });
      out.push_back(t);
    }
  }
  return out;
}

std::vector<int> lds_extreme_bruteforce(const std::vector<int>& y, Side side) {
  int n = static_cast<int>(y.size());
  if (n == 0) return {};
  std::vector<std::vector<int>> all;
  size_t best = 0;
  for (int mask = 1; mask < (1 << n); ++mask) {
    std::vector<int> s;
    bool ok = true;
    for (int i = 0; i < n && ok; ++i)
      if ((mask >> i) & 1) {
        if (!s.empty() && y[s.back()] <= y[i]) ok = false;
        s.push_back(i);
      }
    if (!ok || s.size() < best) continue;
    if (s.size() > best) {
      best = s.size();
      all.clear();
    }
    all.push_back(s);
  }
  // a <=_Pos b iff a == b or (a < b and y_a <= y_b)
  auto pos_le = [&](int a, int b) { return a == b || (a < b && y[a] <= y[b]); };
  auto le = [&](const std::vector<int>& A, const std::vector<int>& B) {
    for (int a : A)
      if (std::none_of(B.begin(), B.end(), [&](int b) { return pos_le(a, b); })) return false;
    return true;
  };
  for (auto& cand : all) {
    bool extreme = std::all_of(all.begin(), all.end(), [&](const std::vector<int>& other) {
      return side == Side::leftmost ? le(cand, other) : le(other, cand);
    });
    if (extreme) return cand;
  }
  return {};
}

SpecialBrute special_subwords_bruteforce(const Word& w) {
  int n = static_cast<int>(w.size());
  // unbarred strictly decreasing, then barred weakly increasing
  auto hook_word = [&](int mask) {
    int prev = -1;
    bool in_bar = false;
    for (int i = 0; i < n; ++i) {
      if (!((mask >> i) & 1)) continue;
      const Letter& a = w[i];
      if (a.barred) {
        if (in_bar && a.value < w[prev].value) return false;
        in_bar = true;
      } else {
        if (in_bar || (prev >= 0 && a.value >= w[prev].value)) return false;
      }
      prev = i;
    }
    return true;
  };
  std::vector<int> hooks;
  SpecialBrute out;
  for (int mask = 1; mask < (1 << n); ++mask)
    if (hook_word(mask)) {
      hooks.push_back(mask);
      out.tau = std::max(out.tau, __builtin_popcount(mask));
    }
  auto max_letter = [&](int mask) {
    Letter m = w[__builtin_ctz(mask)];
    for (int i = 0; i < n; ++i)
      if (((mask >> i) & 1) && w[i] > m) m = w[i];
    return m;
  };
  bool found = false;
  for (int mask : hooks)
    if (__builtin_popcount(mask) == out.tau) {
      Letter m = max_letter(mask);
      if (!found || m < out.eta) out.eta = m;
      found = true;
    }
  for (int mask : hooks)
    if (__builtin_popcount(mask) == out.tau && max_letter(mask) <= out.eta) {
      std::vector<int> places;
      for (int i = 0; i < n; ++i)
        if ((mask >> i) & 1) places.push_back(i + 1);
      out.special.push_back(places);
    }
  return out;
}

std::vector<SkewShape> skew_shapes(int k, int rows) {
  std::vector<SkewShape> out;
  for (int big = k + 1; big <= k + rows * rows; ++big)
    for (const Partition& o : partitions_of(big)) {
      if (o.length() > rows || o[0] > rows) continue;
      for (const Partition& i : partitions_of(big - k))
        if (o.contains(i)) out.emplace_back(o, i);
    }
  return out;
}

}  // namespace hookkron::oracle
