#pragma once

#include <vector>

#include "hookkron/colored.hpp"
#include "hookkron/symfunc.hpp"
#include "hookkron/tableau.hpp"

namespace hookkron {

using ColoredTableau = Tableau<Letter>;

template <class P>
struct Insertion {
  P p;
  StandardTableau q;
};

// Ordinary row insertion: bumps the leftmost entry strictly greater.
Cell row_insert(OrdinaryTableau& t, int x);
// Column insertion: bumps the topmost entry >= x.
Cell column_insert(OrdinaryTableau& t, int x);

Insertion<OrdinaryTableau> schensted(const OrdinaryWord& w);
// Colored letters compared in the natural order, ties broken by standardization.
Insertion<ColoredTableau> schensted(const Word& w);
OrdinaryTableau plactic_class(const OrdinaryWord& w);  // P(w)
// Inverse of Schensted for a standard pair.
OrdinaryWord inverse_rsk(const StandardTableau& p, const StandardTableau& q);

// Mixed insertion (P_m, Q_m) with respect to `order`.  Runs on the
// standardization of w and relabels back.
Insertion<ColoredTableau> mixed_insert(const Word& w, const OrderSpec& order = OrderSpec::natural());
// Same, comparing semistandard letters directly (strictly-greater bumping).
Insertion<ColoredTableau> mixed_insert_direct(const Word& w, const OrderSpec& order = OrderSpec::natural());
// One step of mixed insertion on distinct letters (compared by value).
// Returns the bumping path, the last cell being the new one.
std::vector<Cell> mixed_insert_letter(ColoredTableau& t, Letter a);

// Dual mixed insertion of w_1, w_2, ... into t.  Each inserted letter ranks
// below the equal letters already present, matching P_m(w_2..w_n) <-dm w_1 = P_m(w).
ColoredTableau dual_mixed_insert(const ColoredTableau& t, const Word& w,
                                 const OrderSpec& order = OrderSpec::natural());

struct LeftRight {
  OrdinaryTableau p;
  ColoredTableau q;  // labels of left-inserted cells are barred
};
// Barred letters column-insert their unbarred value, unbarred letters row-insert.
LeftRight left_right_insert(const Word& w);

bool is_semistandard(const ColoredTableau& t, const OrderSpec& order = OrderSpec::natural());
// Labels 1..n: unbarred copies left to right, barred copies top to bottom.
ColoredTableau standardize_tableau(const ColoredTableau& t, const OrderSpec& order = OrderSpec::natural());
// T*: transpose and flip every bar.
ColoredTableau star_transpose(const ColoredTableau& t);
ColoredTableau erase_order_star(const ColoredTableau& t);  // flip bars only
OrdinaryTableau erase_bars(const ColoredTableau& t);
ColoredTableau to_colored(const OrdinaryTableau& t);
int total_color(const ColoredTableau& t);

// Conversion between the orders <^k (natural = k 1, smallbar = k infinity).
ColoredTableau convert(const ColoredTableau& t, const OrderSpec& from, const OrderSpec& to);

// P(rowword(sub_bar(T')*) rowword(sub_nobar(T'))) where T' = convert(T, smallbar).
OrdinaryTableau tableau_blft(const ColoredTableau& t, const OrderSpec& order = OrderSpec::natural());

// P_m(v) -> P(v^neg) by turning barred x into -x, smallest x first, and sliding.
OrdinaryTableau neg_conversion(const ColoredTableau& pm);

}  // namespace hookkron
