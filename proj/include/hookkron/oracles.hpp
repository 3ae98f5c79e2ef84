#pragma once

#include <random>
#include <vector>

#include "hookkron/hook_rules.hpp"

// Brute-force generators and oracles shared by the tests and `verify`.
// Nothing here calls the code paths it is used to check.
namespace hookkron::oracle {

std::vector<Word> colored_permutations(int n);
// All words of length n over 1..m, 1'..m'.
std::vector<Word> colored_words(int n, int m);
Word random_colored_word(std::mt19937_64& rng, int n, int m);
Word random_colored_permutation(std::mt19937_64& rng, int n);
std::vector<OrdinaryWord> permutations(int n);

// All natural-order colored tableaux of the shape with values in 1..m.
std::vector<ColoredTableau> colored_tableaux(const SkewShape& shape, int m);
// All colored tableaux of the shape whose entries are 1..n, each once.
std::vector<ColoredTableau> standard_colored_tableaux(const SkewShape& shape);

// Extremal element of the set of longest strictly decreasing subsequences of y
// under the order "A <= B iff every a in A has some b in B with a <=_Pos b",
// found by listing every longest subsequence.  0-based positions.
std::vector<int> lds_extreme_bruteforce(const std::vector<int>& y, Side side);

// Every decreasing hook subword of maximum length using letters <= eta, by
// subset enumeration; tau and eta are found the same way.  1-based places.
struct SpecialBrute {
  int tau = 0;
  Letter eta;
  std::vector<std::vector<int>> special;
};
SpecialBrute special_subwords_bruteforce(const Word& w);

// Skew shapes of size k with at most `rows` rows and columns, straight ones excluded.
std::vector<SkewShape> skew_shapes(int k, int rows);

}  // namespace hookkron::oracle
