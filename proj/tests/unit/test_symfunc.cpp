#include "helpers.hpp"
#include "hookkron/symfunc.hpp"

using namespace hookkron;
using namespace hookkron::test;

TEST_CASE("partition counts and parsing") {
  const int p[] = {1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42};
  for (int n = 0; n <= 10; ++n) CHECK(partitions_of(n).size() == static_cast<size_t>(p[n]));
  CHECK(L("3,2,1") == Partition({3, 2, 1}));
  CHECK(L("3,2,1").conjugate() == L("3,2,1"));
  CHECK(L("4,1,1").conjugate() == L("3,1,1,1"));
  CHECK(Partition::hook(6, 2) == L("4,1,1"));
  CHECK_THROWS_AS(L("2,3"), ParseError);
  CHECK_THROWS_AS(L("2,x"), ParseError);
  SkewShape s = SkewShape::parse("3,2/1");
  CHECK(s.size() == 4);
  CHECK(s.conjugate().outer == L("2,2,1"));
}

TEST_CASE("standard tableaux: hook length formula against enumeration") {
  for (int n = 1; n <= 7; ++n)
    for (auto& lam : partitions_of(n)) {
      auto all = syt_enumerate(SkewShape(lam));
      CHECK(all.size() == syt_count(lam));
      for (auto& t : all) CHECK(is_standard(t));
    }
  CHECK(syt_count(L("3,2,1")) == 16);
  CHECK(syt_count(L("5,4,1")) == 288);
  // sum of (f^lambda)^2 is n!
  std::uint64_t s = 0;
  for (auto& lam : partitions_of(6)) s += syt_count(lam) * syt_count(lam);
  CHECK(s == 720);
}

TEST_CASE("evacuation") {
  auto q = OT("1 2 3 8 / 4 7 9 / 5 / 6");
  CHECK(evacuation(evacuation(q)) == q);
  CHECK(evacuation(OT("1 2 3")) == OT("1 2 3"));
  CHECK(evacuation(OT("1 2 / 3")) == OT("1 3 / 2"));
  CHECK(superstandard(L("3,2")) == OT("1 1 1 / 2 2"));
  CHECK(superstandard_std(L("3,2")) == OT("1 2 3 / 4 5"));
}

TEST_CASE("Littlewood-Richardson coefficients") {
  CHECK(lr_coefficient(L("2,1"), L("2,1"), L("3,2,1")) == 2);
  CHECK(lr_coefficient(L("1"), L("1"), L("2")) == 1);
  CHECK(lr_coefficient(L("2"), L("2"), L("2,2")) == 1);
  CHECK(lr_coefficient(L("2"), L("1,1"), L("2,2")) == 0);
  CHECK(lr_count(SkewShape::parse("3,2,1/2,1"), L("2,1")) == 2);
}

TEST_CASE("character table of S_4") {
  // rows lambda = 4, 31, 22, 211, 1111; classes rho = 1111, 211, 22, 31, 4
  const char* lam[] = {"4", "3,1", "2,2", "2,1,1", "1,1,1,1"};
  const char* rho[] = {"1,1,1,1", "2,1,1", "2,2", "3,1", "4"};
  const int chi[5][5] = {{1, 1, 1, 1, 1}, {3, 1, -1, 0, -1}, {2, 0, 2, -1, 0}, {3, -1, -1, 0, 1}, {1, -1, 1, 1, -1}};
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j) CHECK(character(L(lam[i]), L(rho[j])) == chi[i][j]);
  CHECK(class_size(L("2,1,1")) == 6);
  CHECK(class_size(L("3,1")) == 8);
}

TEST_CASE("Kronecker coefficients from the character table") {
  CHECK(kronecker_oracle(L("2,1"), L("2,1"), L("2,1")) == 1);
  CHECK(kronecker_oracle(L("2,1"), L("2,1"), L("3")) == 1);
  CHECK(kronecker_oracle(L("2,2"), L("2,2"), L("2,2")) == 1);
  CHECK(kronecker_oracle(L("3,1"), L("3,1"), L("2,2")) == 1);
  CHECK(kronecker_oracle(L("3,2,1"), L("3,2,1"), L("3,2,1")) == 5);
  // trivial and sign
  for (auto& nu : partitions_of(5)) {
    CHECK(kronecker_oracle(L("5"), nu, nu) == 1);
    CHECK(kronecker_oracle(L("1,1,1,1,1"), nu, nu.conjugate()) == 1);
  }
  // skew nu expands through LR coefficients
  CHECK(kronecker_oracle(L("2,1"), L("2,1"), SkewShape::parse("2,2/1")) ==
        kronecker_oracle(L("2,1"), L("2,1"), L("2,1")));
}
