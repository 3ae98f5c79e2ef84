#include "hookkron/verify.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "hookkron/error.hpp"
#include "hookkron/io.hpp"
#include "hookkron/lascoux.hpp"
#include "hookkron/oracles.hpp"

namespace hookkron {

namespace {

std::string describe(const Word& w) { return "w = " + format_word(w); }
std::string describe(const OrdinaryWord& w) { return "u = " + format_word(w); }
std::string describe(const ColoredTableau& t) { return "T = " + format_tableau_inline(t); }

// Runs f on every item; an exception counts as a failure.
template <class Items, class F>
void each(CheckReport& r, const Items& items, F f) {
  for (const auto& x : items) {
    bool ok = false;
    std::string extra;
    try {
      ok = f(x);
    } catch (const std::exception& e) {
      extra = std::string(" (threw: ") + e.what() + ")";
    }
    ++r.cases;
    if (!ok) r.fail(describe(x) + extra);
  }
}

struct Pools {
  std::vector<Word> perms;  // colored permutations
  std::vector<Word> words;  // colored words with repeated letters
  std::vector<OrdinaryWord> plain;
};

Pools make_pools(const VerifyOptions& o) {
  Pools p;
  for (int k = 1; k <= o.n; ++k) {
    auto v = oracle::colored_permutations(k);
    p.perms.insert(p.perms.end(), v.begin(), v.end());
    auto u = oracle::permutations(k);
    p.plain.insert(p.plain.end(), u.begin(), u.end());
  }
  for (int k = 1; k <= std::min(o.n, 4); ++k) {
    auto v = oracle::colored_words(k, 2);
    p.words.insert(p.words.end(), v.begin(), v.end());
  }
  std::mt19937_64 rng(o.seed);
  if (o.sample_len > 0)
    for (int i = 0; i < o.samples; ++i) {
      p.perms.push_back(oracle::random_colored_permutation(rng, o.sample_len));
      p.words.push_back(oracle::random_colored_word(rng, o.sample_len, o.sample_values));
    }
  return p;
}

const std::vector<OrderSpec>& order_families() {
  static const std::vector<OrderSpec> v{OrderSpec::natural(), OrderSpec::k_order(2), OrderSpec::smallbar()};
  return v;
}

ColoredTableau restrict_leq(const ColoredTableau& t, const Letter& a, const OrderSpec& ord) {
  std::vector<std::vector<Letter>> rows;
  for (auto& r : t.rows()) {
    rows.emplace_back();
    for (auto& x : r)
      if (ord.key(x) <= ord.key(a)) rows.back().push_back(x);
  }
  return ColoredTableau(rows);
}

Word drop(const Word& w, size_t i) {
  Word v = w;
  v.erase(v.begin() + static_cast<long>(i));
  return v;
}

Word sym(const Word& w, std::initializer_list<Symmetry> ops) {
  Word v = w;
  for (Symmetry s : ops) v = apply_symmetry(v, s);
  return v;
}

OrdinaryTableau P(const OrdinaryWord& u) { return schensted(u).p; }
StandardTableau Q(const OrdinaryWord& u) { return schensted(u).q; }

// P from U' = P_m(v) in small bar order, barred part starred and evacuated.
OrdinaryTableau blft_from_smallbar_ev(const ColoredTableau& pm) {
  ColoredTableau u = convert(pm, OrderSpec::natural(), OrderSpec::smallbar());
  std::vector<std::vector<Letter>> bar_rows;
  std::vector<int> offs;
  std::vector<std::vector<int>> plain_rows;
  for (auto& r : u.rows()) {
    bar_rows.emplace_back();
    plain_rows.emplace_back();
    for (auto& a : r) {
      if (a.barred) bar_rows.back().push_back(a);
      else plain_rows.back().push_back(a.value);
    }
    offs.push_back(static_cast<int>(bar_rows.back().size()));
  }
  OrdinaryTableau bars = evacuation_distinct(erase_bars(star_transpose(ColoredTableau(bar_rows))));
  OrdinaryWord w = row_word(bars);
  auto rest = row_word(OrdinaryTableau(offs, plain_rows));
  w.insert(w.end(), rest.begin(), rest.end());
  return plactic_class(w);
}

bool remove_largest_ok(const Word& w) {
  int n = static_cast<int>(w.size());
  size_t k = 0;
  while (w[k].value != n) ++k;
  auto full = mixed_insert(w);
  auto part = mixed_insert(drop(w, k));
  int pos = static_cast<int>(k) + 1;
  StandardTableau q = part.q.map([&](int x) { return x >= pos ? x + 1 : x; });
  Cell c = w[k].barred ? column_insert(q, pos) : row_insert(q, pos);
  if (q != full.q) return false;
  if (!full.p.contains(c.row, c.col) || full.p.at(c) != w[k] || c.col != full.p.row_end(c.row) - 1) return false;
  ColoredTableau rest = full.p;
  rest.pop(c.row);
  return rest == part.p;
}

// semistandard conversion vs standardize -> convert labels -> relabel
bool conversion_standardization_ok(const ColoredTableau& t, const OrderSpec& to) {
  ColoredTableau s = standardize_tableau(t, OrderSpec::natural());
  std::map<int, Letter> back;
  for (auto& c : t.cells()) back[s.at(c).value] = t.at(c);
  // a finite k speaks about values; on labels it becomes the largest label of value <= k
  OrderSpec to_labels = to;
  if (to != OrderSpec::smallbar() && to != OrderSpec::natural()) {
    int k = 0;
    for (auto& [label, a] : back)
      if (a.value <= to.k()) k = std::max(k, label);
    to_labels = k == 0 ? OrderSpec::natural() : OrderSpec::k_order(k);
  }
  ColoredTableau via = convert(s, OrderSpec::natural(), to_labels).map([&](const Letter& a) { return back.at(a.value); });
  return via == convert(t, OrderSpec::natural(), to);
}

}  // namespace

std::vector<CheckReport> verify_insertion(const VerifyOptions& o) {
  Pools pool = make_pools(o);
  std::vector<CheckReport> out;
  auto both = [&](CheckReport& r, auto f) {
    each(r, pool.perms, f);
    each(r, pool.words, f);
  };

  {
    CheckReport r{"mixed insertion: standardized path = direct tie-breaking path"};
    both(r, [](const Word& w) {
      for (auto& ord : order_families()) {
        auto a = mixed_insert(w, ord), b = mixed_insert_direct(w, ord);
        if (a.p != b.p || a.q != b.q) return false;
      }
      return true;
    });
    out.push_back(r);
  }
  {
    CheckReport r{"standardization commutes with P, Q, P_m, Q_m and blft"};
    both(r, [](const Word& w) {
      for (auto& ord : order_families()) {
        auto sw = standardize(w, ord);
        auto a = mixed_insert(w, ord), b = mixed_insert(sw.perm);
        if (standardize_tableau(a.p, ord) != b.p || a.q != b.q) return false;
      }
      OrdinaryWord e = erase_bars(w);
      auto s = schensted(e), t = schensted(standardize(e));
      if (s.p.map([](int) { return 0; }) != t.p.map([](int) { return 0; }) || s.q != t.q) return false;
      // equal letters of P(u) lie in a horizontal strip, so the row word standardizes like the tableau
      if (standardize(row_word(s.p)) != row_word(t.p)) return false;
      return standardize(blft(w)) == blft(standardize(w).perm);
    });
    out.push_back(r);
  }
  {
    CheckReport r{"restriction to letters <= alpha commutes with mixed insertion"};
    both(r, [](const Word& w) {
      for (auto& ord : order_families()) {
        ColoredTableau pm = mixed_insert(w, ord).p;
        for (const Letter& a : std::set<Letter>(w.begin(), w.end()))
          if (mixed_insert(sub_leq(w, a, ord), ord).p != restrict_leq(pm, a, ord)) return false;
      }
      return true;
    });
    out.push_back(r);
  }
  {
    CheckReport r{"conversion commutes with mixed insertion"};
    both(r, [](const Word& w) {
      auto nat = mixed_insert(w);
      for (auto& ord : {OrderSpec::k_order(2), OrderSpec::k_order(3), OrderSpec::smallbar()}) {
        auto m = mixed_insert(w, ord);
        if (convert(nat.p, OrderSpec::natural(), ord) != m.p) return false;
        if (convert(m.p, ord, OrderSpec::natural()) != nat.p) return false;
        if (m.q != nat.q) return false;
      }
      return convert(convert(nat.p, OrderSpec::natural(), OrderSpec::k_order(2)), OrderSpec::k_order(2),
                     OrderSpec::smallbar()) == mixed_insert(w, OrderSpec::smallbar()).p;
    });
    out.push_back(r);
  }
  {
    CheckReport r{"conversion commutes with standardization"};
    both(r, [](const Word& w) {
      ColoredTableau t = mixed_insert(w).p;
      return conversion_standardization_ok(t, OrderSpec::smallbar()) &&
             conversion_standardization_ok(t, OrderSpec::k_order(2));
    });
    out.push_back(r);
  }
  {
    CheckReport r{"star and rev on mixed insertion"};
    each(r, pool.perms, [](const Word& w) {
      auto m = mixed_insert(w);
      auto s = mixed_insert(star(w));
      auto v = mixed_insert(sym(w, {Symmetry::rev}));
      return s.p == star_transpose(m.p) && s.q == transpose(m.q) && v.p == transpose(m.p) &&
             v.q == transpose(evacuation(m.q));
    });
    out.push_back(r);
  }
  {
    CheckReport r{"mixed and left-right insertion under inverse"};
    each(r, pool.perms, [](const Word& w) {
      auto m = mixed_insert(w);
      auto lr = left_right_insert(sym(w, {Symmetry::inv}));
      return m.q == lr.p && m.p == lr.q;
    });
    out.push_back(r);
  }
  {
    CheckReport r{"removing the largest letter"};
    each(r, pool.perms, remove_largest_ok);
    out.push_back(r);
  }
  {
    CheckReport r{"dual mixed insertion of the first letter"};
    both(r, [](const Word& w) {
      for (auto& ord : order_families()) {
        Word tail(w.begin() + 1, w.end());
        if (dual_mixed_insert(mixed_insert(tail, ord).p, Word{w.front()}, ord) != mixed_insert(w, ord).p)
          return false;
      }
      return true;
    });
    each(r, pool.perms, [](const Word& v) {
      Word w = v;
      for (auto& a : w) a.barred = true;
      ColoredTableau dm = dual_mixed_insert(ColoredTableau{}, w);
      return dm == transpose(mixed_insert(w).p) && dm == erase_order_star(mixed_insert(star(w)).p);
    });
    out.push_back(r);
  }
  {
    CheckReport r{"neg: converting barred letters gives P(neg v); Q_m(v) = Q(neg v)"};
    each(r, pool.perms, [](const Word& v) {
      auto m = mixed_insert(v);
      OrdinaryWord y = neg(v);
      return neg_conversion(m.p) == P(y) && m.q == Q(y);
    });
    out.push_back(r);
  }
  {
    CheckReport r{"blft of P_m and the left-right identities"};
    both(r, [](const Word& w) {
      for (auto& ord : order_families())
        if (tableau_blft(mixed_insert(w, ord).p, ord) != P(blft(w))) return false;
      return true;
    });
    each(r, pool.perms, [](const Word& v) {
      Word rb = sym(v, {Symmetry::rev_bar});
      if (mixed_insert(sym(rb, {Symmetry::inv})).q != left_right_insert(rb).p) return false;
      if (left_right_insert(rb).p != P(blft(v))) return false;
      Word bu = sym(v, {Symmetry::barud});
      OrdinaryTableau p3 = P(blft(sym(bu, {Symmetry::rev_bar})));
      if (mixed_insert(sym(v, {Symmetry::inv, Symmetry::rev_bar})).q != left_right_insert(bu).p) return false;
      if (left_right_insert(bu).p != p3) return false;
      return blft_from_smallbar_ev(mixed_insert(v).p) == p3;
    });
    out.push_back(r);
  }
  {
    CheckReport r{"blft and neg operator identities"};
    each(r, pool.perms, [](const Word& w) {
      if (inverse(blft(w)) != standardize(neg(sym(w, {Symmetry::rev_bar, Symmetry::inv})))) return false;
      if (blft(sym(w, {Symmetry::rev, Symmetry::rev_bar, Symmetry::rev_nobar})) != blft(w)) return false;
      if (standardize(neg(sym(w, {Symmetry::ud, Symmetry::barud, Symmetry::nobarud}))) != standardize(neg(w)))
        return false;
      if (blft(star(w)) != reverse(blft(sym(w, {Symmetry::rev})))) return false;
      return standardize(neg(star(w))) == ud(standardize(neg(w)));
    });
    out.push_back(r);
  }
  {
    CheckReport r{"involutions on colored permutations"};
    each(r, pool.perms, [](const Word& w) {
      for (Symmetry s : {Symmetry::rev, Symmetry::ud, Symmetry::inv, Symmetry::star, Symmetry::rev_bar,
                         Symmetry::rev_nobar, Symmetry::barud, Symmetry::nobarud})
        if (sym(w, {s, s}) != w) return false;
      return content(to_word(blft(sym(w, {Symmetry::rev_bar})))) == content(to_word(blft(w)));
    });
    out.push_back(r);
  }
  {
    CheckReport r{"Schensted under rev, ud and ud rev"};
    each(r, pool.plain, [](const OrdinaryWord& u) {
      auto s = schensted(u);
      auto rv = schensted(reverse(u)), du = schensted(ud(u)), dr = schensted(reverse(ud(u)));
      return rv.p == transpose(s.p) && rv.q == transpose(evacuation(s.q)) &&
             du.p == transpose(evacuation(s.p)) && du.q == transpose(s.q) && dr.p == evacuation(s.p) &&
             dr.q == evacuation(s.q);
    });
    out.push_back(r);
  }
  {
    CheckReport r{"evacuation is an involution"};
    std::vector<StandardTableau> all;
    for (int k = 1; k <= std::max(o.n, 7); ++k)
      for (auto& lam : partitions_of(k))
        for (auto& t : syt_enumerate(SkewShape(lam))) all.push_back(t);
    for (auto& t : all) r.check(evacuation(evacuation(t)) == t, format_tableau_inline(t));
    out.push_back(r);
  }
  return out;
}

CheckReport rule_agreement(int n) {
  CheckReport r{"rule I count = character oracle (straight nu)"};
  r.against_oracle = true;
  for (int k = 1; k <= n; ++k)
    for (auto& lam : partitions_of(k))
      for (auto& nu : partitions_of(k))
        for (int d = 0; d < k; ++d) {
          std::int64_t rule = kronecker_hook(lam, d, SkewShape(nu));
          std::int64_t g = kronecker_oracle(lam, Partition::hook(k, d), nu);
          r.check(rule == g, lam.str() + " d=" + std::to_string(d) + " " + nu.str() + ": rule " +
                                 std::to_string(rule) + " oracle " + std::to_string(g));
        }
  return r;
}

CheckReport skew_rule_agreement(int n, int rows) {
  CheckReport r{"rule IV count = character oracle (skew nu)"};
  r.against_oracle = true;
  for (int k = 1; k <= n; ++k)
    for (auto& beta : oracle::skew_shapes(k, rows))
      for (auto& lam : partitions_of(k))
        for (int d = 0; d < k; ++d) {
          std::int64_t rule = kronecker_hook(lam, d, beta);
          std::int64_t g = kronecker_oracle(lam, Partition::hook(k, d), beta);
          r.check(rule == g, lam.str() + " d=" + std::to_string(d) + " " + beta.str() + ": rule " +
                                 std::to_string(rule) + " oracle " + std::to_string(g));
        }
  return r;
}

std::vector<CheckReport> verify_rules(const VerifyOptions& o) {
  Pools pool = make_pools(o);
  std::vector<CheckReport> out;
  int small = std::min(o.n, 6);

  {
    CheckReport r{"characters: orthogonality and degrees"};
    for (int k = 1; k <= std::min(o.n + 2, 8); ++k)
      for (auto& lam : partitions_of(k)) {
        std::int64_t sum = 0;
        for (auto& rho : partitions_of(k)) sum += static_cast<std::int64_t>(class_size(rho)) * character(lam, rho) * character(lam, rho);
        r.check(sum == static_cast<std::int64_t>(factorial(k)), "orthogonality " + lam.str());
        r.check(character(lam, Partition::hook(k, k - 1)) ==
                    static_cast<std::int64_t>(syt_enumerate(SkewShape(lam)).size()),
                "degree " + lam.str());
      }
    out.push_back(r);
  }
  {
    CheckReport r{"oracle symmetries and LR dimension count"};
    for (int k = 1; k <= small; ++k) {
      auto ps = partitions_of(k);
      for (auto& a : ps)
        for (auto& b : ps)
          for (auto& c : ps) {
            std::int64_t g = kronecker_oracle(a, b, c);
            bool ok = g >= 0 && g == kronecker_oracle(b, a, c) && g == kronecker_oracle(c, b, a) &&
                      g == kronecker_oracle(a, c, b) && g == kronecker_oracle(a.conjugate(), b.conjugate(), c);
            r.check(ok, a.str() + " " + b.str() + " " + c.str());
          }
    }
    for (int k = 2; k <= std::min(o.n + 2, 8); ++k)
      for (int i = 1; i < k; ++i)
        for (auto& a : partitions_of(i))
          for (auto& b : partitions_of(k - i)) {
            std::int64_t lhs = 0;
            for (auto& nu : partitions_of(k)) lhs += lr_coefficient(a, b, nu) * static_cast<std::int64_t>(syt_count(nu));
            std::int64_t binom = static_cast<std::int64_t>(factorial(k) / (factorial(i) * factorial(k - i)));
            r.check(lhs == static_cast<std::int64_t>(syt_count(a) * syt_count(b)) * binom, a.str() + " * " + b.str());
          }
    out.push_back(r);
  }
  out.push_back(rule_agreement(o.n));
  out.push_back(skew_rule_agreement(small, small >= 6 ? 3 : 4));
  {
    CheckReport r{"CYT enumeration: LR assembly = backtracking"};
    auto cmp = [&](const Partition& lam, int d, const SkewShape& nu) {
      auto a = enumerate_cyt(lam, d, nu, CytStrategy::lr_assembly);
      auto b = enumerate_cyt(lam, d, nu, CytStrategy::backtracking);
      r.check(a.members == b.members, lam.str() + " d=" + std::to_string(d) + " " + nu.str());
    };
    for (int k = 1; k <= small; ++k)
      for (auto& lam : partitions_of(k))
        for (int d = 0; d <= k; ++d) {
          for (auto& nu : partitions_of(k)) cmp(lam, d, SkewShape(nu));
          if (k <= 4)
            for (auto& beta : oracle::skew_shapes(k, 3)) cmp(lam, d, beta);
        }
    out.push_back(r);
  }
  {
    CheckReport r{"|CYT| = sum of LR products = g(d) + g(d-1)"};
    for (int k = 1; k <= o.n; ++k)
      for (auto& lam : partitions_of(k))
        for (auto& nu : partitions_of(k))
          for (int d = 0; d <= k; ++d) {
            std::int64_t cnt = static_cast<std::int64_t>(enumerate_cyt(lam, d, SkewShape(nu)).members.size());
            std::int64_t g = (d < k ? kronecker_oracle(lam, Partition::hook(k, d), nu) : 0) +
                             (d > 0 ? kronecker_oracle(lam, Partition::hook(k, d - 1), nu) : 0);
            r.check(cnt == cyt_lr_sum(lam, d, nu) && cnt == g,
                    lam.str() + " d=" + std::to_string(d) + " " + nu.str());
          }
    out.push_back(r);
  }
  {
    CheckReport r{"C- is a bijection from lowerable CYT(d+1) onto raisable CYT(d)"};
    for (int k = 1; k <= o.n; ++k)
      for (auto& lam : partitions_of(k))
        for (auto& nu : partitions_of(k))
          for (int d = 0; d < k; ++d) {
            std::vector<ColoredTableau> lowered, raisable;
            for (auto& m : enumerate_cyt(lam, d + 1, SkewShape(nu)).members)
              if (!m.raisable) lowered.push_back(color_lower(m.tableau));
            for (auto& m : enumerate_cyt(lam, d, SkewShape(nu)).members)
              if (m.raisable) raisable.push_back(m.tableau);
            std::sort(lowered.begin(), lowered.end());
            r.check(lowered == raisable, lam.str() + " d=" + std::to_string(d) + " " + nu.str());
          }
    out.push_back(r);
  }
  {
    CheckReport r{"tableau blft is invariant under C- (straight and skew)"};
    std::vector<ColoredTableau> tabs;
    for (int k = 1; k <= small; ++k)
      for (auto& lam : partitions_of(k)) {
        auto v = oracle::standard_colored_tableaux(SkewShape(lam));
        tabs.insert(tabs.end(), v.begin(), v.end());
      }
    for (int k = 1; k <= std::min(small, 5); ++k)
      for (auto& beta : oracle::skew_shapes(k, 3)) {
        auto v = oracle::standard_colored_tableaux(beta);
        tabs.insert(tabs.end(), v.begin(), v.end());
      }
    for (int k = 1; k <= std::min(small, 4); ++k) {
      for (auto& lam : partitions_of(k)) {
        auto v = oracle::colored_tableaux(SkewShape(lam), 3);
        tabs.insert(tabs.end(), v.begin(), v.end());
      }
      for (auto& beta : oracle::skew_shapes(k, 3)) {
        auto v = oracle::colored_tableaux(beta, 2);
        tabs.insert(tabs.end(), v.begin(), v.end());
      }
    }
    each(r, tabs, [](const ColoredTableau& t) {
      if (is_raisable(t)) return color_lower(color_raise(t)) == t;
      return tableau_blft(color_lower(t)) == tableau_blft(t);
    });
    out.push_back(r);
  }
  {
    CheckReport r{"extremal longest decreasing subsequences = brute force"};
    r.against_oracle = true;
    std::mt19937_64 rng(o.seed ^ 0x5bd1e995);
    std::vector<OrdinaryWord> ys = pool.plain;
    std::uniform_int_distribution<int> val(1, 5), len(1, 10);
    for (int i = 0; i < o.samples; ++i) {
      OrdinaryWord y(len(rng));
      for (auto& x : y) x = val(rng);
      ys.push_back(y);
    }
    each(r, ys, [](const OrdinaryWord& y) {
      return extremal_lds(y, Side::leftmost) == oracle::lds_extreme_bruteforce(y, Side::leftmost) &&
             extremal_lds(y, Side::rightmost) == oracle::lds_extreme_bruteforce(y, Side::rightmost);
    });
    out.push_back(r);
  }
  {
    CheckReport r{"special subwords = brute force; tau and eta read off P_m"};
    r.against_oracle = true;
    auto f = [](const Word& w) {
      auto brute = oracle::special_subwords_bruteforce(w);
      auto left = special_subword(w, Side::leftmost), right = special_subword(w, Side::rightmost);
      if (left.tau != brute.tau || left.eta != brute.eta || right.eta != brute.eta) return false;
      // componentwise extremes of the brute-force family
      auto le = [](const std::vector<int>& a, const std::vector<int>& b) {
        for (size_t i = 0; i < a.size(); ++i)
          if (a[i] > b[i]) return false;
        return true;
      };
      for (auto& s : brute.special)
        if (!le(left.places, s) || !le(s, right.places)) return false;
      if (std::find(brute.special.begin(), brute.special.end(), left.places) == brute.special.end()) return false;
      if (std::find(brute.special.begin(), brute.special.end(), right.places) == brute.special.end()) return false;
      ColoredTableau pm = mixed_insert(w).p;
      return pm.num_rows() == brute.tau && pm.at(*pm.southwest()) == brute.eta;
    };
    each(r, pool.perms, f);
    each(r, pool.words, f);
    out.push_back(r);
  }
  {
    CheckReport r{"special subwords and the occurrences of eta, eta*"};
    auto f = [](const Word& w) {
      auto brute = oracle::special_subwords_bruteforce(w);
      Letter eta = brute.eta;
      int n = static_cast<int>(w.size());
      int first = 0, last = 0;
      for (int i = 1; i <= n; ++i)
        if (w[i - 1] == eta) {
          if (!first) first = i;
          last = i;
        }
      if (eta.barred) {
        for (auto& s : brute.special)
          if (std::find(s.begin(), s.end(), last) == s.end()) return false;
        auto k = special_subword(w, Side::rightmost).places;
        for (int i = 1; i <= n; ++i)
          if (w[i - 1] == eta.star() && i <= k.front()) return false;
      } else {
        auto k = special_subword(w, Side::leftmost).places;
        if (std::find(k.begin(), k.end(), first) == k.end()) return false;
        for (int i = 1; i <= n; ++i)
          if (w[i - 1] == eta.star() && i > k.back()) return false;
      }
      return true;
    };
    each(r, pool.perms, f);
    each(r, pool.words, f);
    out.push_back(r);
  }
  {
    CheckReport r{"pi-/pi+ realize C-/C+, are inverse, and respect standardization and blft"};
    auto f = [](const Word& w) {
      auto m = mixed_insert(w);
      bool raisable = !m.p.at(*m.p.southwest()).barred;
      if (is_raisable(w) != raisable) return false;
      if (!raisable) {
        Word v = pi_minus(w);
        auto mv = mixed_insert(v);
        if (mv.p != color_lower(m.p) || mv.q != m.q) return false;
        if (pi_plus(v) != w) return false;
        if (standardize(v).perm != pi_minus(standardize(w).perm)) return false;
        if (P(blft(v)) != P(blft(w))) return false;
        try {
          (void)pi_plus(w);
          return false;
        } catch (const ColorStateError&) {
        }
      } else {
        Word v = pi_plus(w);
        auto mv = mixed_insert(v);
        if (mv.p != color_raise(m.p) || mv.q != m.q) return false;
        if (pi_minus(v) != w) return false;
        if (standardize(v).perm != pi_plus(standardize(w).perm)) return false;
        if (P(blft(v)) != P(blft(w))) return false;
        try {
          (void)pi_minus(w);
          return false;
        } catch (const ColorStateError&) {
        }
      }
      return true;
    };
    each(r, pool.perms, f);
    each(r, pool.words, f);
    out.push_back(r);
  }
  {
    CheckReport r{"transpose symmetry of rule I counts"};
    for (int k = 1; k <= o.n; ++k)
      for (auto& lam : partitions_of(k))
        for (auto& nu : partitions_of(k))
          for (int d = 0; d < k; ++d)
            r.check(kronecker_hook(lam, d, SkewShape(nu)) == kronecker_hook(lam.conjugate(), k - 1 - d, SkewShape(nu)),
                    lam.str() + " d=" + std::to_string(d) + " " + nu.str());
    out.push_back(r);
  }
  return out;
}

std::vector<CheckReport> verify_symmetries(const VerifyOptions& o) {
  std::vector<CheckReport> out;
  CheckReport ep{"star rev maps CW(A,d,B) to CW(A^t,n-d,B^ev), raisable to lowerable"};
  CheckReport chain{"descriptions of A and B"};
  CheckReport rev_sets{"reverse rule sets via brgt and neg"};
  CheckReport rule23{"rules II and III counts = character oracle"};
  rule23.against_oracle = true;
  CheckReport ctdb{"CT(d,B) is independent of A and has g(d) + g(d-1) elements"};
  CheckReport ex{"A-independence witnessed on two choices of A"};

  for (int k = 1; k <= o.n; ++k) {
    // (A, d, B) -> words
    std::map<std::tuple<StandardTableau, int, StandardTableau>, std::vector<Word>> cw;
    for (const Word& w : oracle::colored_permutations(k)) {
      OrdinaryTableau a = P(blft(w));
      auto m = mixed_insert(w);
      int d = total_color(w);
      cw[{a, d, m.q}].push_back(w);

      Word v = star(sym(w, {Symmetry::rev}));
      auto mv = mixed_insert(v);
      bool ok = P(blft(v)) == transpose(a) && total_color(v) == k - d && mv.q == evacuation(m.q);
      bool raisable = !m.p.at(*m.p.southwest()).barred;
      bool v_lowerable = mv.p.at(*mv.p.southwest()).barred;
      ep.check(ok && raisable == v_lowerable, format_word(w));

      Word rb = sym(w, {Symmetry::rev_bar});
      bool c = a == left_right_insert(rb).p && a == Q(neg(sym(rb, {Symmetry::inv}))) &&
               a == mixed_insert(sym(rb, {Symmetry::inv})).q &&
               a == mixed_insert(sym(w, {Symmetry::rev, Symmetry::rev_nobar, Symmetry::inv})).q &&
               m.q == Q(neg(w)) && m.q == P(blft(sym(w, {Symmetry::inv, Symmetry::rev_bar})));
      chain.check(c, format_word(w));

      Word rw = sym(w, {Symmetry::rev});
      rev_sets.check(P(blft(rw)) == transpose(P(brgt(w))) &&
                         mixed_insert(rw).q == transpose(evacuation(m.q)),
                     format_word(w));
    }
    std::vector<StandardTableau> syts;
    for (auto& lam : partitions_of(k))
      for (auto& t : syt_enumerate(SkewShape(lam))) syts.push_back(t);
    for (auto& a : syts)
      for (auto& b : syts)
        for (int d = 0; d < k; ++d) {
          auto it = cw.find({a, d, b});
          std::int64_t words = 0;
          std::set<ColoredTableau> tabs;
          if (it != cw.end())
            for (const Word& w : it->second)
              if (is_raisable(w)) {
                ++words;
                tabs.insert(mixed_insert(w).p);
              }
          std::int64_t g = kronecker_oracle(a.outer(), Partition::hook(k, d), b.outer());
          rule23.check(words == g && static_cast<std::int64_t>(tabs.size()) == g,
                       format_tableau_inline(a) + " d=" + std::to_string(d) + " " + format_tableau_inline(b));
        }
    // CT(d, B)
    for (auto& lam : partitions_of(k)) {
      auto as = syt_enumerate(SkewShape(lam));
      for (auto& b : syts)
        for (int d = 0; d <= k; ++d) {
          std::optional<std::set<ColoredTableau>> first;
          bool same = true;
          for (auto& a : as) {
            std::set<ColoredTableau> s;
            auto it = cw.find({a, d, b});
            if (it != cw.end())
              for (const Word& w : it->second) s.insert(mixed_insert(sym(w, {Symmetry::rev_bar, Symmetry::inv})).p);
            if (!first) first = s;
            else if (*first != s) same = false;
          }
          std::int64_t g = (d < k ? kronecker_oracle(lam, Partition::hook(k, d), b.outer()) : 0) +
                           (d > 0 ? kronecker_oracle(lam, Partition::hook(k, d - 1), b.outer()) : 0);
          bool shape_ok = std::all_of(first->begin(), first->end(),
                                      [&](const ColoredTableau& t) { return t.outer() == lam; });
          ctdb.check(same && shape_ok && static_cast<std::int64_t>(first->size()) == g,
                     lam.str() + " d=" + std::to_string(d) + " B=" + format_tableau_inline(b));
          if (as.size() >= 2) {
            auto c1 = ct_d_b(lam, d, b, ColorClass::any, as.front());
            auto c2 = ct_d_b(lam, d, b, ColorClass::any, as.back());
            ex.check(c1 == c2, lam.str() + " d=" + std::to_string(d));
          }
        }
    }
  }
  out.push_back(ep);
  out.push_back(chain);
  out.push_back(rev_sets);
  out.push_back(rule23);
  out.push_back(ctdb);
  out.push_back(ex);
  return out;
}

std::vector<CheckReport> verify_lascoux(const VerifyOptions& o) {
  std::vector<CheckReport> out;
  int big = std::min(o.n + 1, 7);
  int small = std::min(o.n, 6);
  {
    CheckReport r{"composition convention"};
    r.check(compose({5, 2, 7, 1, 4, 6, 3}, {7, 1, 2, 6, 3, 4, 5}) == OrdinaryWord{3, 5, 2, 6, 7, 1, 4}, "u o v");
    for (int k = 1; k <= small; ++k)
      for (auto& lam : partitions_of(k)) {
        auto g = gamma(lam);
        bool ok = static_cast<std::uint64_t>(g.size()) == syt_count(lam);
        for (auto& u : g) ok = ok && P(u) == superstandard_std(lam);
        r.check(ok, "gamma " + lam.str());
      }
    out.push_back(r);
  }
  {
    // (A) as stated: each P tableau of shape nu occurs g f^nu times or not at all
    CheckReport a{"hook x hook: property (A)"}, b{"hook x hook: property (B)"};
    // weaker reading of (A): each occurring T has multiplicity f^nu, g of them per shape
    CheckReport weak{"hook x hook: P multiplicities are f^nu on g tableaux"};
    a.against_oracle = b.against_oracle = weak.against_oracle = true;
    for (int k = 1; k <= big; ++k)
      for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) {
          Partition lam = Partition::hook(k, i), mu = Partition::hook(k, j);
          PairExperiment e = experiment(lam, mu);
          for (auto& t : pair_triples(lam, mu)) {
            std::string what = lam.str() + " x " + mu.str() + " -> " + t.nu.str();
            a.check(t.property_a, what);
            b.check(t.property_b(), what);
            std::int64_t occurring = 0;
            bool each_f = true;
            for (auto& [p, m] : e.p_mult)
              if (p.shape() == t.nu) {
                ++occurring;
                each_f = each_f && m == t.f_nu;
              }
            weak.check(each_f && occurring == t.g, what);
          }
        }
    out.push_back(a);
    out.push_back(b);
    out.push_back(weak);
  }
  {
    CheckReport r{"multiplicity bookkeeping"};
    for (int k = 1; k <= small; ++k)
      for (auto& lam : partitions_of(k))
        for (auto& mu : partitions_of(k)) {
          std::int64_t total = 0;
          for (auto& t : pair_triples(lam, mu)) total += t.m_sum;
          r.check(total == static_cast<std::int64_t>(syt_count(lam) * syt_count(mu)), lam.str() + " x " + mu.str());
        }
    for (int k = 1; k <= std::min(o.n, 5); ++k) {
      AlphaTable t = alpha_table(k, o.jobs);
      std::int64_t s = 0;
      for (auto b : t.bins) s += b;
      r.check(s == t.counted, "alpha table bins n=" + std::to_string(k));
    }
    out.push_back(r);
  }
  {
    CheckReport r{"products with a hook = erased CWL- words"};
    for (int k = 1; k <= big; ++k)
      for (auto& lam : partitions_of(k))
        for (int d = 0; d < k; ++d) r.check(erasure_identity(lam, d), lam.str() + " d=" + std::to_string(d));
    out.push_back(r);
  }
  {
    CheckReport r{"hook lambda: |CWL-(Z, d, B)| = g"};
    r.against_oracle = true;
    for (int k = 1; k <= small; ++k)
      for (int e = 0; e < k; ++e) {
        Partition lam = Partition::hook(k, e);
        StandardTableau z = superstandard_std(lam);
        for (int d = 0; d < k; ++d) {
          std::map<StandardTableau, std::int64_t> count;
          for (const Word& w : cwl_set(z, d, true)) ++count[schensted(w).q];
          for (auto& nu : partitions_of(k)) {
            std::int64_t g = kronecker_oracle(lam, Partition::hook(k, d), nu);
            for (auto& b : syt_enumerate(SkewShape(nu))) {
              auto it = count.find(b);
              r.check((it == count.end() ? 0 : it->second) == g,
                      lam.str() + " d=" + std::to_string(d) + " B=" + format_tableau_inline(b));
            }
          }
        }
      }
    out.push_back(r);
  }
  out.push_back(check_lascoux_conjecture(small));
  out.push_back(check_problem(small, true));
  return out;
}

std::vector<CheckReport> run_suite(std::string_view suite, const VerifyOptions& o) {
  if (o.n < 1 || o.n > 8) throw PreconditionError("verify: n must be in 1..8");
  std::vector<CheckReport> out;
  auto add = [&](std::vector<CheckReport> v) { out.insert(out.end(), v.begin(), v.end()); };
  bool all = suite == "all";
  if (!all && suite != "insertion" && suite != "rules" && suite != "symmetries" && suite != "lascoux")
    throw ParseError("unknown suite '" + std::string(suite) + "'");
  if (all || suite == "insertion") add(verify_insertion(o));
  if (all || suite == "rules") add(verify_rules(o));
  if (all || suite == "symmetries") add(verify_symmetries(o));
  if (all || suite == "lascoux") add(verify_lascoux(o));
  return out;
}

}  // namespace hookkron
