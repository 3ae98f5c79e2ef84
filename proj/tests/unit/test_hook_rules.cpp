#include "helpers.hpp"
#include "hookkron/oracles.hpp"

using namespace hookkron;
using namespace hookkron::test;

TEST_CASE("color lowering and raising on tableaux") {
  CHECK(color_lower(T("1' 1 2' / 1' 2' 2 / 2' 2 3")) == T("1' 1 2' / 1' 2' 2 / 2 2 3"));
  CHECK(color_raise(T("1' 1 1 1 / 1' 2' 2 / 2 2")) == T("1' 1 1 1 / 1' 2' 2 / 2' 2"));
  CHECK(is_raisable(T("1' 1 / 2")));
  CHECK_FALSE(is_raisable(T("1 1 / 2'")));
  CHECK_THROWS_AS(color_lower(T("1 1 / 2")), ColorStateError);
  CHECK_THROWS_AS(color_raise(T("1 1 / 2'")), ColorStateError);
}

TEST_CASE("pi- on a word with a barred southwest letter") {
  Word w = W("1 2' 1' 2' 2 1 2' 1' 1 2 1' 2' 1");
  Word v = W("2 2' 1 2' 2 1 2' 1' 1 2 1' 1' 1");
  CHECK(standardize(w).perm == W("4 8' 1' 9' 12 5 10' 2' 6 13 3' 11' 7"));
  CHECK(standardize(v).perm == W("11 8' 4 9' 12 5 10' 1' 6 13 2' 3' 7"));
  CHECK(neg(standardize(w).perm) == OrdinaryWord{4, -8, -1, -9, 12, 5, -10, -2, 6, 13, -3, -11, 7});

  CHECK(tau(w) == 5);
  CHECK(sw_letter(w) == Letter{2, true});
  auto right = special_subword(w, Side::rightmost);
  CHECK(right.places == std::vector<int>{1, 3, 8, 11, 12});
  auto left = special_subword(v, Side::leftmost);
  CHECK(left.places == std::vector<int>{1, 3, 8, 11, 12});
  CHECK(pi_minus(w) == v);
  CHECK(pi_plus(v) == w);

  auto pw = mixed_insert(w), pv = mixed_insert(v);
  CHECK(pw.p == T("1' 1 1 1 2' / 1' 2' 2 / 1' 2' / 1 2 / 2'"));
  CHECK(pv.p == T("1' 1 1 1 2' / 1' 2' 2 / 1' 2' / 1 2 / 2"));
  CHECK(pv.p == color_lower(pw.p));
  CHECK(pw.q == OT("1 3 5 9 10 / 2 6 13 / 4 8 / 7 11 / 12"));
  CHECK(pv.q == pw.q);

  // four longest decreasing hook subwords of w^std, three of them special;
  // three of v^std, two special
  auto bw = oracle::special_subwords_bruteforce(standardize(w).perm);
  CHECK(bw.tau == 5);
  CHECK(bw.special.size() == 3);
  auto bv = oracle::special_subwords_bruteforce(standardize(v).perm);
  CHECK(bv.special.size() == 2);

  CHECK_THROWS_AS(pi_minus(v), ColorStateError);
  CHECK_THROWS_AS(pi_plus(w), ColorStateError);
}

TEST_CASE("pi- when the largest letter sits at the end") {
  struct Case {
    const char *w, *v, *pw, *pv;
  };
  const Case cases[] = {
      {"5 3 2' 1 6' 4 7'", "7 5 2' 3 1 4 6'", "1 2' 4 / 3 / 5 / 6' / 7'", "1 2' 4 / 3 / 5 / 6' / 7"},
      {"5 3 2' 1 6' 4", "6 5 2' 3 1 4", "1 2' 4 / 3 / 5 / 6'", "1 2' 4 / 3 / 5 / 6"},
      {"6 3 2' 1 5' 4 7'", "7 6 2' 3 1 4 5'", "1 2' 4 / 3 / 5' / 6 / 7'", "1 2' 4 / 3 / 5' / 6 / 7"},
      {"3 2' 1 5' 4 6'", "6 2' 3 1 4 5'", "1 2' 4 / 3 / 5' / 6'", "1 2' 4 / 3 / 5' / 6"},
  };
  for (auto& c : cases) {
    CAPTURE(c.w);
    CHECK(pi_minus(W(c.w)) == W(c.v));
    CHECK(pi_plus(W(c.v)) == W(c.w));
    CHECK(mixed_insert(W(c.w)).p == T(c.pw));
    CHECK(mixed_insert(W(c.v)).p == T(c.pv));
  }
  CHECK(tau(W("5 3 2' 1 6' 4 7'")) == 5);
  CHECK(sw_letter(W("5 3 2' 1 6' 4 7'")) == Letter{7, true});
}

TEST_CASE("pi- keeps the plactic class of blft") {
  Word w = W("4 1 2' 3 6 2 3 2' 1' 1' 1 3 2' 3 1' 4' 5' 1 1' 2");
  Word v = W("5 1 2' 4 6 3 3 2' 2 1' 1 3 2' 3 1' 1' 4' 1 1' 2");
  CHECK(pi_minus(w) == v);
  CHECK(blft(w) == O("2 2 1 1 2 1 4 5 1 4 1 3 6 2 3 1 3 3 1 2"));
  CHECK(blft(v) == O("2 2 1 2 1 1 4 1 5 1 4 6 3 3 2 1 3 3 1 2"));
  CHECK(plactic_class(blft(w)) == plactic_class(blft(v)));
  CHECK(plactic_class(O("5 1 4 6 3 3 2")) == OT("1 2 3 / 3 6 / 4 / 5"));
  CHECK(plactic_class(O("1 1 2 1 4 5 1")) == OT("1 1 1 1 5 / 2 4"));
}

TEST_CASE("extremal longest decreasing subsequences") {
  std::vector<int> y = {4, -8, -1, -9, 12, 5, -10, -2, 6, 13, -3, -11, 7};
  for (Side s : {Side::leftmost, Side::rightmost}) CHECK(extremal_lds(y, s) == oracle::lds_extreme_bruteforce(y, s));
  CHECK(extremal_lds({3, 2, 1}, Side::leftmost) == std::vector<int>{0, 1, 2});
  CHECK(extremal_lds({2, 1, 2, 1}, Side::leftmost) == std::vector<int>{0, 1});
  CHECK(extremal_lds({2, 1, 2, 1}, Side::rightmost) == std::vector<int>{2, 3});
}

TEST_CASE("rule I on small cases") {
  CHECK(kronecker_hook(L("3,2,1"), 2, L("3,2,1")) == kronecker_oracle(L("3,2,1"), L("4,1,1"), L("3,2,1")));
  CHECK(kronecker_hook(L("3,1,1"), 2, L("3,1,1")) == 1);
  for (int n = 1; n <= 5; ++n)
    for (auto& lam : partitions_of(n))
      for (auto& nu : partitions_of(n))
        for (int d = 0; d < n; ++d) {
          CAPTURE(lam.str());
          CAPTURE(nu.str());
          CAPTURE(d);
          CHECK(kronecker_hook(lam, d, nu) == kronecker_oracle(lam, Partition::hook(n, d), nu));
          CHECK(kronecker_hook(lam, d, nu, CytStrategy::backtracking) == kronecker_hook(lam, d, nu));
        }
  CHECK_THROWS_AS(kronecker_hook(L("2,1"), 1, L("2,2")), PreconditionError);
  CHECK_THROWS_AS(kronecker_hook(L("2,1"), -1, L("2,1")), PreconditionError);
}

TEST_CASE("CYT families") {
  CytFamily f = enumerate_cyt(L("3,1,1"), 2, L("3,1,1"));
  for (auto& m : f.members) {
    CHECK(is_semistandard(m.tableau));
    CHECK(total_color(m.tableau) == 2);
    CHECK(tableau_blft(m.tableau) == superstandard(L("3,1,1")));
    CHECK(m.raisable == is_raisable(m.tableau));
  }
  CHECK(static_cast<std::int64_t>(f.members.size()) == cyt_lr_sum(L("3,1,1"), 2, L("3,1,1")));
  // d = n is allowed for the full family, and it is all lowerable
  CytFamily top = enumerate_cyt(L("2,1"), 3, L("2,1"));
  CHECK(top.raisable_count() == 0);
  CHECK(top.members.size() == 1);
}

TEST_CASE("rule IV for a skew shape") {
  SkewShape nu = SkewShape::parse("3,2/1");
  for (auto& lam : partitions_of(4))
    for (int d = 0; d < 4; ++d)
      CHECK(kronecker_hook(lam, d, nu) == kronecker_oracle(lam, Partition::hook(4, d), nu));
}

TEST_CASE("rules II and III for one choice of A and B") {
  StandardTableau a = OT("1 4 5 6 / 2 / 3"), b = OT("1 3 6 / 2 5 / 4");
  for (int d = 0; d < 6; ++d) {
    auto g = kronecker_oracle(L("4,1,1"), Partition::hook(6, d), L("3,2,1"));
    CHECK(static_cast<std::int64_t>(cw_set(a, d, b, ColorClass::raisable).size()) == g);
    std::int64_t ct = 0;
    for (auto& t : ct_set(a, d, ColorClass::raisable)) ct += t.shape().outer == L("3,2,1");
    CHECK(ct == g);
  }
}
