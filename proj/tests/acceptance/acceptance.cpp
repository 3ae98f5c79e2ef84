// One PASS/FAIL line per acceptance criterion.  Pass criterion numbers as
// arguments to run a subset.
#include <algorithm>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "hookkron/io.hpp"
#include "hookkron/lascoux.hpp"
#include "hookkron/verify.hpp"

using namespace hookkron;

namespace {

struct Result {
  std::int64_t cases = 0;
  std::vector<std::string> failures;
  std::string note;

  void check(bool ok, const std::string& what) {
    ++cases;
    if (!ok) failures.push_back(what);
  }
  template <class A, class B>
  void equal(const A& got, const B& want, const std::string& what) {
    check(got == want, what);
  }
};

Word W(std::string_view s) { return parse_word(s); }
ColoredTableau T(std::string_view s) { return parse_colored_tableau(s); }
StandardTableau OT(std::string_view s) { return parse_ordinary_tableau(s); }
Partition L(std::string_view s) { return Partition::parse(s); }

std::vector<std::vector<std::string>> data_rows(const std::string& name) {
  std::ifstream in(std::string(HOOKKRON_TEST_DATA) + "/" + name);
  if (!in) throw std::runtime_error("missing data file " + name);
  std::vector<std::vector<std::string>> out;
  for (std::string line; std::getline(in, line);) {
    if (line.empty() || line[0] == '#') continue;
    std::vector<std::string> f;
    std::stringstream ss(line);
    for (std::string x; std::getline(ss, x, '\t');) f.push_back(x);
    out.push_back(f);
  }
  return out;
}

template <class V>
V sorted(V v) {
  std::sort(v.begin(), v.end());
  return v;
}

std::set<ColoredTableau> tableau_set(const std::vector<std::string>& rows) {
  std::set<ColoredTableau> s;
  for (auto& r : rows) s.insert(T(r));
  return s;
}

Result c1_rule_vs_oracle() {
  Result r;
  auto rep = rule_agreement(7);
  r.cases = rep.cases;
  for (auto& c : rep.counterexamples) r.failures.push_back(c);
  if (rep.failures > static_cast<std::int64_t>(r.failures.size())) r.failures.push_back("...");
  return r;
}

Result c2_cyt_321() {
  Result r;
  std::vector<std::set<ColoredTableau>> want(6);
  for (auto& row : data_rows("cyt_321.txt")) want[std::stoi(row[0])].insert(T(row[1]));
  const std::int64_t counts[] = {1, 8, 16, 16, 8, 1};
  for (int d = 0; d <= 5; ++d) {
    std::set<ColoredTableau> got;
    std::set<Partition> shapes;
    for (auto& nu : partitions_of(6))
      for (auto& m : enumerate_cyt(L("3,2,1"), d, nu).members)
        if (m.raisable) got.insert(m.tableau);
    auto tag = "d=" + std::to_string(d);
    r.equal(static_cast<std::int64_t>(want[d].size()), counts[d], tag + " figure count");
    r.equal(got, want[d], tag + " tableau set");
    for (auto& nu : partitions_of(6)) {
      std::int64_t n = 0;
      for (auto& t : got) n += t.outer() == nu;
      r.equal(n, kronecker_oracle(L("3,2,1"), Partition::hook(6, d), nu), tag + " nu=" + nu.str());
    }
  }
  return r;
}

Result c3_cyw_311() {
  Result r;
  auto rows = data_rows("cyw_311_d2.txt");
  std::vector<Word> words;
  for (auto& row : rows) words.push_back(W(row[0]));
  auto gen = colored_yamanouchi_words(L("3,1,1"), 2);
  r.equal(gen.size(), size_t{60}, "60 colored Yamanouchi words");
  r.equal(sorted(gen), sorted(words), "word set");
  // the figure's split into raisable and lowerable words
  for (auto& row : rows) r.equal(is_raisable(W(row[0])), row[1] == "raisable", "class of " + row[0]);

  std::set<ColoredTableau> pm;
  for (auto& w : gen) pm.insert(mixed_insert(w).p);
  std::set<ColoredTableau> want, want_raisable;
  for (auto& row : data_rows("cyt_311_d2.txt")) {
    want.insert(T(row[0]));
    if (row[1] == "raisable") want_raisable.insert(T(row[0]));
  }
  r.equal(pm.size(), size_t{14}, "14 tableaux");
  r.equal(pm, want, "tableau set");
  std::set<ColoredTableau> raisable;
  for (auto& t : pm)
    if (is_raisable(t)) raisable.insert(t);
  r.equal(raisable.size(), size_t{9}, "9 raisable");
  r.equal(raisable, want_raisable, "raisable set");

  // CYT count per shape is the sum of LR products, and the family matches P_m of the words
  for (auto& nu : partitions_of(5)) {
    auto fam = enumerate_cyt(L("3,1,1"), 2, nu);
    std::int64_t here = 0;
    for (auto& t : pm) here += t.outer() == nu;
    r.equal(static_cast<std::int64_t>(fam.members.size()), here, "family size nu=" + nu.str());
    r.equal(here, cyt_lr_sum(L("3,1,1"), 2, nu), "LR sum nu=" + nu.str());
  }
  return r;
}

Result c4_cw_example() {
  Result r;
  StandardTableau a = OT("1 4 5 6 / 2 / 3"), b = OT("1 3 6 / 2 5 / 4");
  Partition lam = L("4,1,1");
  using Strs = std::vector<std::string>;
  const Strs minus_words[] = {
      {"4 2 5 3' 1 6"}, {"4 1 5 3' 2' 6", "5 3' 2 4' 1 6"}, {"5 3' 6 4' 2' 1", "5 3' 1 4' 2' 6"}, {"5 3' 6 4' 2' 1'"}};
  const Strs minus_pm[] = {{"1 3' 6 / 2 5 / 4"},
                           {"1 3' 6 / 2' 5 / 4", "1 3' 6 / 2 4' / 5"},
                           {"1 2' 3' / 4' 6 / 5", "1 3' 6 / 2' 4' / 5"},
                           {"1' 2' 3' / 4' 6 / 5"}};
  const Strs minus_third[] = {{"1 3 4' 6 / 2 / 5"},
                              {"1 3 4' 6 / 2 / 5'", "1 2' 4' 6 / 3 / 5"},
                              {"1 2' 3 5' / 4' / 6", "1 2' 5' 6 / 3 / 4'"},
                              {"1 2' 3 6' / 4' / 5'"}};
  const Strs plus_words[] = {
      {"2 3' 5 4' 1 6"}, {"1 3' 5 4' 2' 6", "3' 4' 2 5' 1 6"}, {"3' 4' 6 5' 2' 1", "3' 4' 1 5' 2' 6"}, {"3' 4' 6 5' 2' 1'"}};
  const Strs plus_pm[] = {{"1 3' 6 / 2 5 / 4'"},
                          {"1 3' 6 / 2' 5 / 4'", "1 3' 6 / 2 4' / 5'"},
                          {"1 2' 3' / 4' 6 / 5'", "1 3' 6 / 2' 4' / 5'"},
                          {"1' 2' 3' / 4' 6 / 5'"}};
  const Strs plus_third[] = {{"1 3 4' 6 / 2' / 5"},
                             {"1 3 5' 6 / 2' / 4'", "1' 2' 4' 6 / 3 / 5"},
                             {"1' 3 4' 5' / 2' / 6", "1' 4' 5' 6 / 2' / 3"},
                             {"1' 3 5' 6' / 2' / 4'"}};

  auto words = [](const Strs& s) {
    std::set<Word> out;
    for (auto& x : s) out.insert(W(x));
    return out;
  };
  auto third = [](const std::set<Word>& ws) {
    std::set<ColoredTableau> out;
    for (auto& w : ws)
      out.insert(mixed_insert(apply_symmetry(apply_symmetry(w, Symmetry::rev_bar), Symmetry::inv)).p);
    return out;
  };
  auto pms = [](const std::set<Word>& ws) {
    std::set<ColoredTableau> out;
    for (auto& w : ws) out.insert(mixed_insert(w).p);
    return out;
  };

  for (int d = 0; d <= 5; ++d) {
    auto tag = "d=" + std::to_string(d);
    auto got = cw_set(a, d, b, ColorClass::raisable);
    std::set<Word> gs(got.begin(), got.end());
    bool shown = d >= 1 && d <= 4;
    if (!shown) {
      r.check(gs.empty(), tag + " CW- should be empty");
      continue;
    }
    int i = d - 1;
    r.equal(gs, words(minus_words[i]), tag + " CW- words");
    r.equal(pms(gs), tableau_set(minus_pm[i]), tag + " CT- tableaux");
    r.equal(third(gs), tableau_set(minus_third[i]), tag + " P_m(inv rev_bar) for CW-");
    auto ct = ct_d_b(lam, d, b, ColorClass::raisable, a);
    r.equal(std::set<ColoredTableau>(ct.begin(), ct.end()), tableau_set(minus_third[i]), tag + " ct_d_b");
    r.equal(static_cast<std::int64_t>(gs.size()), kronecker_oracle(lam, Partition::hook(6, d), L("3,2,1")),
            tag + " |CW-| = g");

    // lowerable words have one more bar; they are the pi+ images
    auto up = cw_set(a, d + 1, b, ColorClass::lowerable);
    std::set<Word> us(up.begin(), up.end());
    std::set<Word> lifted;
    for (auto& w : gs) lifted.insert(pi_plus(w));
    r.equal(us, words(plus_words[i]), tag + " CW+ words");
    r.equal(lifted, us, tag + " pi+ of CW-");
    r.equal(pms(us), tableau_set(plus_pm[i]), tag + " CT+ tableaux");
    r.equal(third(us), tableau_set(plus_third[i]), tag + " P_m(inv rev_bar) for CW+");
  }
  return r;
}

Result c5_worked_examples() {
  Result r;
  // words
  Word w = W("3' 1' 2 1 2' 2' 1' 2 1");
  r.equal(content(w), std::vector<int>{4, 4, 1}, "content");
  r.equal(total_color(w), 5, "total color");
  r.equal(blft(w), parse_ordinary_word("3 1 2 2 1 2 1 2 1"), "blft");
  r.equal(star(w), W("3 1 2' 1' 2 2 1 2' 1'"), "star");
  Word v = standardize(w).perm;
  r.equal(v, W("9' 1' 7 3 5' 6' 2' 8 4"), "std");
  r.equal(apply_symmetry(v, Symmetry::rev), W("4 8 2' 6' 5' 3 7 1' 9'"), "rev");
  r.equal(apply_symmetry(v, Symmetry::ud), W("1' 9' 3 7 5' 4' 8' 2 6"), "ud");
  r.equal(apply_symmetry(v, Symmetry::inv), W("2' 7' 4 9 5' 6' 3 8 1'"), "inv");

  // insertion sequences
  const char* natural[] = {"3'",
                           "1' 3'",
                           "1' 2 3'",
                           "1' 1 3' / 2",
                           "1' 1 3' / 2' / 2",
                           "1' 1 3' / 2' / 2' / 2",
                           "1' 1 3' / 1' 2' / 2' / 2",
                           "1' 1 2 3' / 1' 2' / 2' / 2",
                           "1' 1 1 3' / 1' 2' 2 / 2' / 2"};
  const char* smallbar[] = {"3'",
                            "1' 3'",
                            "1' 3' 2",
                            "1' 3' 1 / 2",
                            "1' 3' 1 / 2' / 2",
                            "1' 3' 1 / 2' / 2' / 2",
                            "1' 2' 3' / 1' 1 / 2' / 2",
                            "1' 2' 3' 2 / 1' 1 / 2' / 2",
                            "1' 2' 3' 1 / 1' 1 2 / 2' / 2"};
  for (size_t i = 1; i <= w.size(); ++i) {
    Word prefix(w.begin(), w.begin() + i);
    r.equal(mixed_insert(prefix).p, T(natural[i - 1]), "natural step " + std::to_string(i));
    r.equal(mixed_insert(prefix, OrderSpec::smallbar()).p, T(smallbar[i - 1]), "smallbar step " + std::to_string(i));
  }
  r.equal(mixed_insert(w).q, OT("1 2 3 8 / 4 7 9 / 5 / 6"), "Q_m natural");
  r.equal(mixed_insert(w, OrderSpec::smallbar()).q, OT("1 2 3 8 / 4 7 9 / 5 / 6"), "Q_m smallbar");

  // neg and blft
  auto pm = mixed_insert(v).p;
  r.equal(neg_conversion(pm), OT("-9 -6 -2 4 / -5 3 8 / -1 / 7"), "neg conversion");
  r.equal(plactic_class(neg(v)), neg_conversion(pm), "P(v^neg)");
  r.equal(tableau_blft(mixed_insert(w).p), OT("1 1 1 1 2 / 2 2 2 / 3"), "T^blft");
  r.equal(plactic_class(blft(w)), OT("1 1 1 1 2 / 2 2 2 / 3"), "P(w^blft)");

  // conversion chain
  ColoredTableau t0 = T("1' 2' 3' 1 / 1' 3' 4' 2 / 2' 1 1 3 / 1 2 4 / 3 5");
  ColoredTableau t5 = T("1' 1 1 1 / 1' 2' 2 3' / 1 2 3 4' / 2' 3' 4 / 3 5");
  r.equal(convert(t0, OrderSpec::smallbar(), OrderSpec::natural()), t5, "conversion to natural");
  r.equal(convert(t5, OrderSpec::natural(), OrderSpec::smallbar()), t0, "conversion back");

  // pi- on a word with barred southwest letter
  Word x = W("1 2' 1' 2' 2 1 2' 1' 1 2 1' 2' 1");
  Word y = W("2 2' 1 2' 2 1 2' 1' 1 2 1' 1' 1");
  r.equal(pi_minus(x), y, "pi- example");
  r.equal(pi_plus(y), x, "pi+ example");
  r.equal(special_subword(x, Side::rightmost).places, std::vector<int>{1, 3, 8, 11, 12}, "rightmost special");
  r.equal(special_subword(y, Side::leftmost).places, std::vector<int>{1, 3, 8, 11, 12}, "leftmost special");
  r.equal(standardize(x).perm, W("4 8' 1' 9' 12 5 10' 2' 6 13 3' 11' 7"), "std of example word");
  r.equal(mixed_insert(x).p, T("1' 1 1 1 2' / 1' 2' 2 / 1' 2' / 1 2 / 2'"), "P_m(w)");
  r.equal(mixed_insert(y).p, T("1' 1 1 1 2' / 1' 2' 2 / 1' 2' / 1 2 / 2"), "P_m(pi- w)");
  r.equal(mixed_insert(x).q, OT("1 3 5 9 10 / 2 6 13 / 4 8 / 7 11 / 12"), "Q_m(w)");
  r.equal(mixed_insert(y).q, mixed_insert(x).q, "Q_m kept");

  struct Pair {
    const char *w, *v, *pw, *pv;
  };
  const Pair pairs[] = {
      {"5 3 2' 1 6' 4 7'", "7 5 2' 3 1 4 6'", "1 2' 4 / 3 / 5 / 6' / 7'", "1 2' 4 / 3 / 5 / 6' / 7"},
      {"5 3 2' 1 6' 4", "6 5 2' 3 1 4", "1 2' 4 / 3 / 5 / 6'", "1 2' 4 / 3 / 5 / 6"},
      {"6 3 2' 1 5' 4 7'", "7 6 2' 3 1 4 5'", "1 2' 4 / 3 / 5' / 6 / 7'", "1 2' 4 / 3 / 5' / 6 / 7"},
      {"3 2' 1 5' 4 6'", "6 2' 3 1 4 5'", "1 2' 4 / 3 / 5' / 6'", "1 2' 4 / 3 / 5' / 6"},
  };
  for (auto& p : pairs) {
    r.equal(pi_minus(W(p.w)), W(p.v), std::string("pi- ") + p.w);
    r.equal(pi_plus(W(p.v)), W(p.w), std::string("pi+ ") + p.v);
    r.equal(mixed_insert(W(p.w)).p, T(p.pw), std::string("P_m ") + p.w);
    r.equal(mixed_insert(W(p.v)).p, T(p.pv), std::string("P_m ") + p.v);
  }
  return r;
}

Result c6_property_suites() {
  Result r;
  VerifyOptions o;
  o.n = 6;
  o.samples = 10000;
  o.sample_len = 8;
  for (auto& rep : run_suite("all", o)) {
    // hook x hook (A) and (B) are criterion 7
    if (rep.name.rfind("hook x hook", 0) == 0) continue;
    r.cases += rep.cases;
    if (!rep.ok())
      r.failures.push_back(rep.name + ": " + std::to_string(rep.failures) + " of " + std::to_string(rep.cases) +
                           (rep.counterexamples.empty() ? "" : ", e.g. " + rep.counterexamples.front()));
  }
  return r;
}

Result c7_hook_hook() {
  Result r;
  std::int64_t a_fail = 0, b_fail = 0, g2 = 0;
  for (int n = 1; n <= 7; ++n)
    for (int d = 0; d < n; ++d)
      for (int e = 0; e < n; ++e)
        for (auto& t : pair_triples(Partition::hook(n, d), Partition::hook(n, e))) {
          auto tag = t.lambda.str() + " * " + t.mu.str() + " -> " + t.nu.str() + " (g=" + std::to_string(t.g) + ")";
          r.check(t.property_a, "(A) " + tag);
          r.check(t.property_b(), "(B) " + tag);
          a_fail += !t.property_a;
          b_fail += !t.property_b();
          g2 += t.g >= 2;
        }
  r.note = "(A) failed " + std::to_string(a_fail) + ", (B) failed " + std::to_string(b_fail) +
           ", triples with g>=2: " + std::to_string(g2);
  return r;
}

Result c8_alpha_10() {
  Result r;
  auto t = alpha_table(10, static_cast<int>(std::max(1u, std::thread::hardware_concurrency())));
  r.equal(t.bins, std::array<std::int64_t, 12>{231, 1558, 3801, 3413, 2997, 2792, 2838, 3216, 3129, 3586, 3703, 11112},
          "bins");
  r.equal(t.counted, std::int64_t{42376}, "total (ordered triples)");
  r.equal(t.max_g, std::int64_t{117}, "max g");
  std::ostringstream os;
  for (auto b : t.bins) os << b << ' ';
  os << "total " << t.counted << " max g " << t.max_g;
  r.note = os.str();
  return r;
}

}  // namespace

int main(int argc, char** argv) {
  struct Criterion {
    int id;
    const char* name;
    std::function<Result()> run;
  };
  const std::vector<Criterion> all = {
      {1, "rule vs character oracle, n <= 7", c1_rule_vs_oracle},
      {2, "CYT(3,2,1) raisable sets, d = 0..5", c2_cyt_321},
      {3, "colored Yamanouchi words and tableaux for (3,1,1), d = 2", c3_cyw_311},
      {4, "CW sets for A = 1456/2/3, B = 136/25/4", c4_cw_example},
      {5, "worked examples", c5_worked_examples},
      {6, "property suites, n <= 6 plus 10^4 samples", c6_property_suites},
      {7, "hook x hook properties (A) and (B), n <= 7", c7_hook_hook},
      {8, "alpha table n = 10", c8_alpha_10},
  };
  std::set<int> pick;
  for (int i = 1; i < argc; ++i) pick.insert(std::atoi(argv[i]));

  int failed = 0;
  for (auto& c : all) {
    if (!pick.empty() && !pick.count(c.id)) continue;
    auto start = std::chrono::steady_clock::now();
    Result res;
    try {
      res = c.run();
    } catch (const std::exception& e) {
      res.failures.push_back(std::string("exception: ") + e.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    bool ok = res.failures.empty();
    failed += !ok;
    std::printf("%s %d %s (%lld checks, %.1fs)\n", ok ? "PASS" : "FAIL", c.id, c.name,
                static_cast<long long>(res.cases), secs);
    if (!res.note.empty()) std::printf("    %s\n", res.note.c_str());
    for (size_t i = 0; i < res.failures.size() && i < 5; ++i) std::printf("    %s\n", res.failures[i].c_str());
    if (res.failures.size() > 5) std::printf("    ... %zu more\n", res.failures.size() - 5);
    std::fflush(stdout);
  }
  return failed ? 1 : 0;
}
