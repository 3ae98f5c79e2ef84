#include "hookkron/hook_rules.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "hookkron/error.hpp"

namespace hookkron {

bool is_decreasing_hook_word(const Word& w) {
  size_t i = 0;
  while (i < w.size() && !w[i].barred) {
    if (i > 0 && w[i].value >= w[i - 1].value) return false;
    ++i;
  }
  for (size_t j = i; j < w.size(); ++j) {
    if (!w[j].barred) return false;
    if (j > i && w[j].value < w[j - 1].value) return false;
  }
  return true;
}

static std::vector<int> signed_std(const Word& w) { return neg(standardize(w).perm); }

static std::vector<int> lds_from_left(const std::vector<int>& y) {
  // longest decreasing subsequence ending at i
  int n = static_cast<int>(y.size());
  std::vector<int> e(n, 1);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < i; ++j)
      if (y[j] > y[i]) e[i] = std::max(e[i], e[j] + 1);
  return e;
}

static std::vector<int> lds_from_right(const std::vector<int>& y) {
  int n = static_cast<int>(y.size());
  std::vector<int> s(n, 1);
  for (int i = n - 1; i >= 0; --i)
    for (int j = i + 1; j < n; ++j)
      if (y[j] < y[i]) s[i] = std::max(s[i], s[j] + 1);
  return s;
}

int tau(const Word& w) {
  if (w.empty()) return 0;
  auto e = lds_from_left(signed_std(w));
  return *std::max_element(e.begin(), e.end());
}

std::vector<int> extremal_lds(const std::vector<int>& y, Side side) {
  int n = static_cast<int>(y.size());
  std::vector<int> out;
  if (n == 0) return out;
  if (side == Side::leftmost) {
    auto s = lds_from_right(y);
    int t = *std::max_element(s.begin(), s.end());
    int prev = -1;
    for (int need = t; need >= 1; --need) {
      for (int j = prev + 1; j < n; ++j)
        if (s[j] == need && (prev < 0 || y[j] < y[prev])) {
          out.push_back(j);
          prev = j;
          break;
        }
    }
  } else {
    auto e = lds_from_left(y);
    int t = *std::max_element(e.begin(), e.end());
    int next = n;
    for (int need = t; need >= 1; --need) {
      for (int j = next - 1; j >= 0; --j)
        if (e[j] == need && (next == n || y[j] > y[next])) {
          out.push_back(j);
          next = j;
          break;
        }
    }
    std::reverse(out.begin(), out.end());
  }
  return out;
}

SpecialSubword special_subword(const Word& w, Side side) {
  SpecialSubword s;
  if (w.empty()) throw PreconditionError("special_subword: empty word");
  s.tau = tau(w);
  std::set<Letter> letters(w.begin(), w.end());
  for (const Letter& a : letters) {
    if (tau(sub_leq(w, a)) == s.tau) {
      s.eta = a;
      break;
    }
  }
  std::vector<int> pos;
  Word sub;
  for (size_t i = 0; i < w.size(); ++i)
    if (w[i] <= s.eta) {
      pos.push_back(static_cast<int>(i));
      sub.push_back(w[i]);
    }
  for (int j : extremal_lds(signed_std(sub), side)) s.places.push_back(pos[j] + 1);
  return s;
}

Letter sw_letter(const Word& w) { return special_subword(w, Side::rightmost).eta; }

bool is_raisable(const Word& w) { return !sw_letter(w).barred; }

Word pi_minus(const Word& w) {
  SpecialSubword s = special_subword(w, Side::rightmost);
  if (!s.eta.barred) throw ColorStateError("pi_minus: southwest letter is unbarred");
  Word v = w;
  auto& k = s.places;
  v[k.front() - 1] = w[k.back() - 1].star();
  for (size_t j = 0; j + 1 < k.size(); ++j) v[k[j + 1] - 1] = w[k[j] - 1];
  return v;
}

Word pi_plus(const Word& w) {
  SpecialSubword s = special_subword(w, Side::leftmost);
  if (s.eta.barred) throw ColorStateError("pi_plus: southwest letter is barred");
  Word v = w;
  auto& k = s.places;
  v[k.back() - 1] = w[k.front() - 1].star();
  for (size_t j = 0; j + 1 < k.size(); ++j) v[k[j] - 1] = w[k[j + 1] - 1];
  return v;
}

bool is_raisable(const ColoredTableau& t) {
  auto sw = t.southwest();
  if (!sw) throw PreconditionError("empty tableau has no southwest entry");
  return !t.at(*sw).barred;
}

ColoredTableau color_lower(const ColoredTableau& t) {
  if (is_raisable(t)) throw ColorStateError("color_lower: southwest entry is unbarred");
  ColoredTableau out = t;
  out.at(*t.southwest()).barred = false;
  return out;
}

ColoredTableau color_raise(const ColoredTableau& t) {
  if (!is_raisable(t)) throw ColorStateError("color_raise: southwest entry is barred");
  ColoredTableau out = t;
  out.at(*t.southwest()).barred = true;
  return out;
}

std::int64_t CytFamily::raisable_count() const {
  return std::count_if(members.begin(), members.end(), [](const CytMember& m) { return m.raisable; });
}

namespace {

void check_cyt_args(const Partition& lambda, int d, const SkewShape& nu) {
  if (lambda.size() != nu.size()) throw PreconditionError("|lambda| and |nu| differ");
  if (d < 0 || d > lambda.size()) throw PreconditionError("d out of range");
}

std::vector<ColoredTableau> cyt_by_lr(const Partition& lambda, int d, const SkewShape& nu) {
  std::vector<ColoredTableau> out;
  const Partition& kappa = nu.inner;
  for (const Partition& theta : partitions_between(kappa, nu.outer, kappa.size() + d)) {
    SkewShape lower(theta.conjugate(), kappa.conjugate());
    SkewShape upper(nu.outer, theta);
    SkewShape sum = direct_sum(lower, upper);
    int top = nu.outer.length(), width = lower.outer[0];
    for (const OrdinaryTableau& l : lr_fillings(sum, lambda)) {
      ColoredTableau t(nu, Letter{});
      for (auto& c : t.cells()) {
        if (c.col < theta[c.row])
          t.at(c) = {l.at(top + c.col, c.row), true};
        else
          t.at(c) = {l.at(c.row, width + c.col), false};
      }
      out.push_back(convert(t, OrderSpec::smallbar(), OrderSpec::natural()));
    }
  }
  return out;
}

std::vector<ColoredTableau> cyt_by_backtracking(const Partition& lambda, int d, const SkewShape& nu) {
  std::vector<ColoredTableau> out;
  ColoredTableau t(nu, Letter{});
  std::vector<Cell> cells = t.cells();
  std::vector<int> count(lambda.length() + 1, 0);
  OrdinaryTableau z = superstandard(lambda);
  int bars = 0;
  std::function<void(size_t)> rec = [&](size_t i) {
    if (i == cells.size()) {
      if (bars == d && tableau_blft(t) == z) out.push_back(t);
      return;
    }
    Cell c = cells[i];
    for (int v = 1; v <= lambda.length(); ++v) {
      if (count[v] == lambda[v - 1]) continue;
      for (bool b : {true, false}) {
        Letter a{v, b};
        if (b && bars == d) continue;
        if (t.contains(c.row, c.col - 1)) {
          Letter l = t.at(c.row, c.col - 1);
          if (l > a || (l == a && a.barred)) continue;
        }
        if (t.contains(c.row - 1, c.col)) {
          Letter u = t.at(c.row - 1, c.col);
          if (u > a || (u == a && !a.barred)) continue;
        }
        t.at(c) = a;
        ++count[v];
        bars += b;
        rec(i + 1);
        --count[v];
        bars -= b;
      }
    }
  };
  rec(0);
  return out;
}

}  // namespace

CytFamily enumerate_cyt(const Partition& lambda, int d, const SkewShape& nu, CytStrategy strategy) {
  check_cyt_args(lambda, d, nu);
  CytFamily f{lambda, d, nu, {}};
  auto tabs = strategy == CytStrategy::lr_assembly ? cyt_by_lr(lambda, d, nu) : cyt_by_backtracking(lambda, d, nu);
  std::sort(tabs.begin(), tabs.end());
  for (auto& t : tabs) f.members.push_back({t, is_raisable(t)});
  return f;
}

std::int64_t kronecker_hook(const Partition& lambda, int d, const SkewShape& nu, CytStrategy strategy) {
  if (d < 0 || d > lambda.size() - 1) throw PreconditionError("d must satisfy 0 <= d <= n-1");
  return enumerate_cyt(lambda, d, nu, strategy).raisable_count();
}

std::int64_t cyt_lr_sum(const Partition& lambda, int d, const Partition& nu) {
  int n = lambda.size();
  std::int64_t s = 0;
  for (const Partition& alpha : partitions_of(d))
    for (const Partition& beta : partitions_of(n - d)) {
      std::int64_t a = lr_coefficient(alpha, beta, lambda);
      if (a) s += a * lr_coefficient(alpha.conjugate(), beta, nu);
    }
  return s;
}

std::vector<Word> colored_yamanouchi_words(const Partition& lambda, int d) {
  int n = lambda.size();
  std::vector<OrdinaryWord> yam;
  OrdinaryWord y(n);
  std::vector<int> count(lambda.length() + 1, 0);
  std::function<void(int)> rec = [&](int i) {
    if (i < 0) {
      yam.push_back(y);
      return;
    }
    for (int v = 1; v <= lambda.length(); ++v) {
      if (count[v] == lambda[v - 1] || (v > 1 && count[v] == count[v - 1])) continue;
      y[i] = v;
      ++count[v];
      rec(i - 1);
      --count[v];
    }
  };
  rec(n - 1);
  std::vector<Word> out;
  for (auto& u : yam) {
    // shuffles of u[0..d) barred with u[d..n) unbarred
    std::vector<int> mask(n, 0);
    std::fill(mask.begin(), mask.begin() + d, 1);
    std::sort(mask.begin(), mask.end());
    do {
      Word w;
      int ib = 0, iu = d;
      for (int m : mask) w.push_back(m ? Letter{u[ib++], true} : Letter{u[iu++], false});
      out.push_back(w);
    } while (std::next_permutation(mask.begin(), mask.end()));
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool in_class(const Word& w, ColorClass c) {
  if (c == ColorClass::any) return true;
  return is_raisable(w) == (c == ColorClass::raisable);
}

std::vector<Word> cw_set(const StandardTableau& a, int d, const std::optional<StandardTableau>& b, ColorClass cls) {
  if (!is_standard(a) || !a.is_straight()) throw PreconditionError("cw_set: A must be a standard tableau");
  int n = a.size();
  if (d < 0 || d > n) throw PreconditionError("cw_set: d out of range");
  std::vector<Word> out;
  for (const StandardTableau& q : syt_enumerate(SkewShape(a.outer()))) {
    OrdinaryWord u = inverse_rsk(a, q);
    std::vector<int> mask(n, 0);
    std::fill(mask.begin(), mask.begin() + d, 1);
    std::sort(mask.begin(), mask.end());
    do {
      Word w;
      int ib = 0, iu = d;
      for (int m : mask) w.push_back(m ? Letter{u[ib++], true} : Letter{u[iu++], false});
      if (b && mixed_insert(w).q != *b) continue;
      if (!in_class(w, cls)) continue;
      out.push_back(w);
    } while (std::next_permutation(mask.begin(), mask.end()));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<ColoredTableau> ct_set(const StandardTableau& a, int d, ColorClass cls) {
  std::set<ColoredTableau> s;
  for (const Word& w : cw_set(a, d, std::nullopt, cls)) s.insert(mixed_insert(w).p);
  return {s.begin(), s.end()};
}

std::vector<ColoredTableau> ct_d_b(const Partition& lambda, int d, const StandardTableau& b, ColorClass cls,
                                   const std::optional<StandardTableau>& a) {
  StandardTableau aa = a ? *a : superstandard_std(lambda);
  if (aa.outer() != lambda) throw PreconditionError("ct_d_b: A must have shape lambda");
  std::vector<ColoredTableau> out;
  for (const Word& w : cw_set(aa, d, b, cls))
    out.push_back(mixed_insert(apply_symmetry(apply_symmetry(w, Symmetry::rev_bar), Symmetry::inv)).p);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace hookkron
