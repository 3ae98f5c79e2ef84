#include "helpers.hpp"

using namespace hookkron;
using namespace hookkron::test;

TEST_CASE("orders on colored letters") {
  auto nat = OrderSpec::natural(), sb = OrderSpec::smallbar(), k2 = OrderSpec::k_order(2);
  // 1' < 1 < 2' < 2 < 3'
  Word chain = W("1' 1 2' 2 3'");
  for (size_t i = 0; i + 1 < chain.size(); ++i) CHECK(nat.less(chain[i], chain[i + 1]));
  // 1' < 2' < 3' < ... < 1 < 2
  Word sbar = W("1' 2' 3' 9' 1 2");
  for (size_t i = 0; i + 1 < sbar.size(); ++i) CHECK(sb.less(sbar[i], sbar[i + 1]));
  // 1' 2' 1 2 3' 3
  Word kk = W("1' 2' 1 2 3' 3");
  for (size_t i = 0; i + 1 < kk.size(); ++i) CHECK(k2.less(kk[i], kk[i + 1]));
  CHECK(OrderSpec::parse("natural") == nat);
  CHECK(OrderSpec::parse("smallbar") == sb);
  CHECK(OrderSpec::parse("k:2") == k2);
  CHECK(OrderSpec::parse("k:1") == nat);
  CHECK_THROWS_AS(OrderSpec::parse("k:0"), ParseError);
  CHECK_THROWS_AS(OrderSpec::parse("bogus"), ParseError);
}

TEST_CASE("parsing words") {
  CHECK(format_word(W("3' 1 2")) == "3' 1 2");
  CHECK_THROWS_AS(W("1 x"), ParseError);
  CHECK_THROWS_AS(W("0"), ParseError);
  CHECK_THROWS_AS(W("1''"), ParseError);
  CHECK(W("").empty());
}

TEST_CASE("worked word example: operators and standardization") {
  Word w = W("3' 1' 2 1 2' 2' 1' 2 1");
  CHECK(content(w) == std::vector<int>{4, 4, 1});
  CHECK(total_color(w) == 5);
  CHECK(sub_unbarred(w) == W("2 1 2 1"));
  CHECK(sub_barred(w) == W("3' 1' 2' 2' 1'"));
  CHECK(blft(w) == O("3 1 2 2 1 2 1 2 1"));
  CHECK(star(w) == W("3 1 2' 1' 2 2 1 2' 1'"));
  Word v = standardize(w).perm;
  CHECK(v == W("9' 1' 7 3 5' 6' 2' 8 4"));
  CHECK(apply_symmetry(v, Symmetry::rev) == W("4 8 2' 6' 5' 3 7 1' 9'"));
  CHECK(apply_symmetry(v, Symmetry::ud) == W("1' 9' 3 7 5' 4' 8' 2 6"));
  CHECK(apply_symmetry(v, Symmetry::inv) == W("2' 7' 4 9 5' 6' 3 8 1'"));
}

TEST_CASE("star and rev do not commute with standardization") {
  CHECK(standardize(star(W("1' 1' 1"))).perm == W("2 3 1'"));
  CHECK(star(standardize(W("1' 1' 1")).perm) == W("1 2 3'"));
  CHECK(standardize(apply_symmetry(W("1 1 1"), Symmetry::rev)).perm == W("1 2 3"));
  CHECK(apply_symmetry(standardize(W("1 1 1")).perm, Symmetry::rev) == W("3 2 1"));
}

TEST_CASE("reversing the barred subword") {
  CHECK(apply_symmetry(W("1 4' 3' 2 6' 5"), Symmetry::rev_bar) == W("1 6' 3' 2 4' 5"));
  CHECK(apply_symmetry(W("1 4' 3' 2 6' 5"), Symmetry::rev_nobar) == W("5 4' 3' 2 6' 1"));
  // barud is inv rev_bar inv
  Word v = W("3' 1 4 2'");
  CHECK(apply_symmetry(v, Symmetry::barud) ==
        apply_symmetry(apply_symmetry(apply_symmetry(v, Symmetry::inv), Symmetry::rev_bar), Symmetry::inv));
  CHECK_THROWS_AS(apply_symmetry(W("1 1"), Symmetry::inv), PreconditionError);
}

TEST_CASE("blft, brgt and neg") {
  Word w = W("1 3' 1' 1 2' 2' 2 1");
  CHECK(blft(w) == O("3 1 2 2 1 1 2 1"));
  CHECK(brgt(w) == O("1 1 2 1 3 1 2 2"));
  CHECK(neg(W("9' 1' 7 3 5' 6' 2' 8 4")) == O("-9 -1 7 3 -5 -6 -2 8 4"));
  CHECK_THROWS_AS(neg(W("1 1")), PreconditionError);
}

TEST_CASE("Yamanouchi words") {
  auto c = yamanouchi_content(W("1 3' 1' 1 2' 2' 2 1"));
  REQUIRE(c);
  CHECK(*c == L("4,3,1"));
  CHECK(yamanouchi_content(W("3' 1' 2 1 2' 1' 2 1")));
  CHECK_FALSE(yamanouchi_content(W("3' 1' 2 1 2' 2' 1' 2 1")));
  CHECK_FALSE(yamanouchi_content(O("1 2")));
  CHECK(*yamanouchi_content(O("2 1")) == L("1,1"));
}
