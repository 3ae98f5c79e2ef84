#pragma once

#include <optional>
#include <vector>

#include "hookkron/insertion.hpp"

namespace hookkron {

enum class Side { leftmost, rightmost };

struct SpecialSubword {
  int tau = 0;
  Letter eta;
  std::vector<int> places;  // 1-based positions in w
};

// Strictly decreasing unbarred letters followed by weakly increasing barred letters.
bool is_decreasing_hook_word(const Word& w);
// Longest decreasing hook subword length.
int tau(const Word& w);
// Componentwise minimal (leftmost) or maximal (rightmost) longest strictly
// decreasing subsequence of y; 0-based positions.
std::vector<int> extremal_lds(const std::vector<int>& y, Side side);
SpecialSubword special_subword(const Word& w, Side side);
// eta(w), equal to the southwest letter of P_m(w).
Letter sw_letter(const Word& w);
bool is_raisable(const Word& w);  // SW letter unbarred

// pi_- needs SW(w) barred, pi_+ needs SW(w) unbarred; ColorStateError otherwise.
Word pi_minus(const Word& w);
Word pi_plus(const Word& w);

bool is_raisable(const ColoredTableau& t);  // southwest entry unbarred
ColoredTableau color_lower(const ColoredTableau& t);
ColoredTableau color_raise(const ColoredTableau& t);

enum class CytStrategy { lr_assembly, backtracking };

struct CytMember {
  ColoredTableau tableau;
  bool raisable = false;
  friend bool operator==(const CytMember&, const CytMember&) = default;
};

struct CytFamily {
  Partition lambda;
  int d = 0;
  SkewShape shape;
  std::vector<CytMember> members;  // sorted by tableau
  std::int64_t raisable_count() const;
};

// CYT_{lambda,d}(nu): natural-order colored tableaux of shape nu with T^blft = Z_lambda and d bars.
CytFamily enumerate_cyt(const Partition& lambda, int d, const SkewShape& nu,
                        CytStrategy strategy = CytStrategy::lr_assembly);
// Rule I (Rule IV for skew nu): |CYT^-_{lambda,d}(nu)| = g_{lambda, mu(d), nu}.
std::int64_t kronecker_hook(const Partition& lambda, int d, const SkewShape& nu,
                            CytStrategy strategy = CytStrategy::lr_assembly);
// sum over alpha |- d, beta |- n-d of c^lambda_{alpha beta} c^nu_{alpha' beta}
std::int64_t cyt_lr_sum(const Partition& lambda, int d, const Partition& nu);

// Colored words w with blft(w) Yamanouchi of content lambda and d bars.
std::vector<Word> colored_yamanouchi_words(const Partition& lambda, int d);

enum class ColorClass { any, raisable, lowerable };
bool in_class(const Word& w, ColorClass c);

// CW_{A,d}: colored permutations with P(blft(w)) = A and d bars; optionally Q_m(w) = B.
std::vector<Word> cw_set(const StandardTableau& a, int d, const std::optional<StandardTableau>& b = std::nullopt,
                         ColorClass cls = ColorClass::any);
// CT_{A,d}: standard colored tableaux T with T^blft = A and d bars (all shapes).
std::vector<ColoredTableau> ct_set(const StandardTableau& a, int d, ColorClass cls = ColorClass::any);
// CT_{d,B}: { P_m(inv(rev_bar(w))) : w in CW_{A,d,B} }.  Default A is Z_lambda^std.
std::vector<ColoredTableau> ct_d_b(const Partition& lambda, int d, const StandardTableau& b,
                                   ColorClass cls = ColorClass::any,
                                   const std::optional<StandardTableau>& a = std::nullopt);

}  // namespace hookkron
