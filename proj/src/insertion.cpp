#include "hookkron/insertion.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <tuple>

#include "hookkron/error.hpp"

namespace hookkron {

Cell row_insert(OrdinaryTableau& t, int x) {
  for (int r = 0;; ++r) {
    if (r == t.num_rows()) {
      t.push(r, x);
      return {r, 0};
    }
    auto& row = t.row(r);
    auto it = std::upper_bound(row.begin(), row.end(), x);
    if (it == row.end()) {
      t.push(r, x);
      return {r, t.length(r) - 1};
    }
    int c = static_cast<int>(it - row.begin());
    std::swap(t.at(r, c), x);
  }
}

Cell column_insert(OrdinaryTableau& t, int x) {
  for (int c = 0;; ++c) {
    int h = 0;
    while (h < t.num_rows() && t.length(h) > c && t.at(h, c) < x) ++h;
    if (h < t.num_rows() && t.length(h) > c) {
      std::swap(t.at(h, c), x);
      continue;
    }
    if (t.length(h) != c) throw std::logic_error("column_insert: no room");
    t.push(h, x);
    return {h, c};
  }
}

Insertion<OrdinaryTableau> schensted(const OrdinaryWord& w) {
  Insertion<OrdinaryTableau> out;
  for (size_t i = 0; i < w.size(); ++i) {
    Cell c = row_insert(out.p, w[i]);
    out.q.push(c.row, static_cast<int>(i) + 1);
  }
  return out;
}

Insertion<ColoredTableau> schensted(const Word& w) {
  StandardizedWord s = standardize(w, OrderSpec::natural());
  auto r = schensted(erase_bars(s.perm));
  return {r.p.map([&](int x) { return s.letter[x - 1]; }), r.q};
}

OrdinaryTableau plactic_class(const OrdinaryWord& w) {
  OrdinaryTableau p;
  for (int x : w) row_insert(p, x);
  return p;
}

OrdinaryWord inverse_rsk(const StandardTableau& p, const StandardTableau& q) {
  if (p.shape() != q.shape() || !p.is_straight()) throw PreconditionError("inverse_rsk: shapes differ");
  int n = q.size();
  std::vector<int> row_of(n + 1, -1);
  for (auto& c : q.cells()) row_of[q.at(c)] = c.row;
  std::vector<std::vector<int>> rows = p.rows();
  OrdinaryWord w(n);
  for (int k = n; k >= 1; --k) {
    int r = row_of[k];
    int x = rows[r].back();
    rows[r].pop_back();
    for (int rr = r - 1; rr >= 0; --rr) {
      auto it = std::lower_bound(rows[rr].begin(), rows[rr].end(), x);
      std::swap(*(it - 1), x);
    }
    w[k - 1] = x;
  }
  return w;
}

namespace {

// Mixed insertion step with an arbitrary key; `dual` swaps the roles of
// barred and unbarred letters.  Bumps the first entry with a strictly larger key.
template <class Key>
std::vector<Cell> mixed_step(ColoredTableau& t, Letter a, Key key, bool dual) {
  std::vector<Cell> path;
  bool row_mode = a.barred == dual;
  int idx = 0;
  while (true) {
    if (row_mode) {
      int r = idx;
      if (r < t.num_rows()) {
        int c = 0;
        while (c < t.length(r) && key(t.at(r, c)) <= key(a)) ++c;
        if (c < t.length(r)) {
          path.push_back({r, c});
          std::swap(t.at(r, c), a);
          row_mode = a.barred == dual;
          idx = row_mode ? r + 1 : c + 1;
          continue;
        }
      } else if (r > t.num_rows()) {
        throw std::logic_error("mixed insertion: row out of range");
      }
      t.push(r, a);
      path.push_back({r, t.length(r) - 1});
      return path;
    }
    int c = idx;
    int h = 0;
    while (h < t.num_rows() && t.length(h) > c && key(t.at(h, c)) <= key(a)) ++h;
    if (h < t.num_rows() && t.length(h) > c) {
      path.push_back({h, c});
      std::swap(t.at(h, c), a);
      row_mode = a.barred == dual;
      idx = row_mode ? h + 1 : c + 1;
      continue;
    }
    if (t.length(h) != c) throw std::logic_error("mixed insertion: column has no room");
    t.push(h, a);
    path.push_back({h, c});
    return path;
  }
}

auto by_value = [](const Letter& x) { return x.value; };

}  // namespace

std::vector<Cell> mixed_insert_letter(ColoredTableau& t, Letter a) { return mixed_step(t, a, by_value, false); }

Insertion<ColoredTableau> mixed_insert(const Word& w, const OrderSpec& order) {
  StandardizedWord s = standardize(w, order);
  Insertion<ColoredTableau> out;
  for (size_t i = 0; i < s.perm.size(); ++i) {
    Cell c = mixed_step(out.p, s.perm[i], by_value, false).back();
    out.q.push(c.row, static_cast<int>(i) + 1);
  }
  out.p = out.p.map([&](const Letter& x) { return s.letter[x.value - 1]; });
  return out;
}

Insertion<ColoredTableau> mixed_insert_direct(const Word& w, const OrderSpec& order) {
  Insertion<ColoredTableau> out;
  auto key = [&](const Letter& x) { return order.key(x); };
  for (size_t i = 0; i < w.size(); ++i) {
    Cell c = mixed_step(out.p, w[i], key, false).back();
    out.q.push(c.row, static_cast<int>(i) + 1);
  }
  return out;
}

ColoredTableau dual_mixed_insert(const ColoredTableau& t, const Word& w, const OrderSpec& order) {
  if (!t.is_straight() || !is_semistandard(t, order))
    throw PreconditionError("dual_mixed_insert: tableau is not a semistandard straight tableau");
  // joint standardization: (key, tie) with inserted letters below equal entries
  struct Tok {
    std::int64_t key;
    std::int64_t tie;
    Letter letter;
    int where;  // -1 for tableau entries, else index into w
    Cell cell;
  };
  std::vector<Tok> toks;
  for (auto& c : t.cells()) {
    Letter a = t.at(c);
    toks.push_back({order.key(a), a.barred ? c.row : c.col, a, -1, c});
  }
  for (size_t i = 0; i < w.size(); ++i)
    toks.push_back({order.key(w[i]), -1 - static_cast<std::int64_t>(i), w[i], static_cast<int>(i), {}});
  std::vector<int> idx(toks.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(),
            [&](int a, int b) { return std::tie(toks[a].key, toks[a].tie) < std::tie(toks[b].key, toks[b].tie); });
  std::vector<Letter> letter_of(toks.size());
  ColoredTableau lab = t;
  Word lw(w.size());
  for (size_t r = 0; r < idx.size(); ++r) {
    const Tok& k = toks[idx[r]];
    Letter l{static_cast<int>(r) + 1, k.letter.barred};
    letter_of[r] = k.letter;
    if (k.where < 0)
      lab.at(k.cell) = l;
    else
      lw[k.where] = l;
  }
  for (auto& a : lw) mixed_step(lab, a, by_value, true);
  return lab.map([&](const Letter& x) { return letter_of[x.value - 1]; });
}

LeftRight left_right_insert(const Word& w) {
  LeftRight out;
  for (size_t i = 0; i < w.size(); ++i) {
    Cell c = w[i].barred ? column_insert(out.p, w[i].value) : row_insert(out.p, w[i].value);
    out.q.push(c.row, Letter{static_cast<int>(i) + 1, w[i].barred});
  }
  return out;
}

bool is_semistandard(const ColoredTableau& t, const OrderSpec& order) {
  for (auto& c : t.cells()) {
    Letter a = t.at(c);
    if (t.contains(c.row, c.col + 1)) {
      Letter b = t.at(c.row, c.col + 1);
      if (order.key(a) > order.key(b) || (a == b && a.barred)) return false;
    }
    if (t.contains(c.row + 1, c.col)) {
      Letter b = t.at(c.row + 1, c.col);
      if (order.key(a) > order.key(b) || (a == b && !a.barred)) return false;
    }
  }
  return true;
}

ColoredTableau standardize_tableau(const ColoredTableau& t, const OrderSpec& order) {
  auto cells = t.cells();
  auto rank = [&](const Cell& c) {
    Letter a = t.at(c);
    return std::pair<std::int64_t, int>(order.key(a), a.barred ? c.row : c.col);
  };
  std::sort(cells.begin(), cells.end(), [&](const Cell& x, const Cell& y) { return rank(x) < rank(y); });
  ColoredTableau out = t;
  for (size_t i = 0; i < cells.size(); ++i) out.at(cells[i]) = {static_cast<int>(i) + 1, t.at(cells[i]).barred};
  return out;
}

ColoredTableau star_transpose(const ColoredTableau& t) { return erase_order_star(transpose(t)); }

ColoredTableau erase_order_star(const ColoredTableau& t) {
  return t.map([](const Letter& a) { return a.star(); });
}

OrdinaryTableau erase_bars(const ColoredTableau& t) {
  return t.map([](const Letter& a) { return a.value; });
}

ColoredTableau to_colored(const OrdinaryTableau& t) {
  return t.map([](int x) { return Letter{x, false}; });
}

int total_color(const ColoredTableau& t) {
  int d = 0;
  for (auto& r : t.rows())
    for (auto& a : r) d += a.barred;
  return d;
}

namespace {

// <^j -> <^{j+1}: each (j+1)' slides up/left past unbarred letters <= j, topmost copy first.
void convert_up(ColoredTableau& t, int j) {
  std::vector<Cell> copies;
  for (auto& c : t.cells())
    if (t.at(c) == Letter{j + 1, true}) copies.push_back(c);
  for (Cell x : copies) {  // row-major, so top first
    while (true) {
      auto small = [&](int r, int c) { return t.contains(r, c) && !t.at(r, c).barred && t.at(r, c).value <= j; };
      bool up = small(x.row - 1, x.col), left = small(x.row, x.col - 1);
      if (!up && !left) break;
      Cell y = (up && (!left || t.at(x.row - 1, x.col).value >= t.at(x.row, x.col - 1).value))
                   ? Cell{x.row - 1, x.col}
                   : Cell{x.row, x.col - 1};
      std::swap(t.at(x), t.at(y));
      x = y;
    }
  }
}

// <^j -> <^{j-1}: each j' slides down/right past unbarred letters <= j-1, bottommost copy first.
void convert_down(ColoredTableau& t, int j) {
  std::vector<Cell> copies;
  for (auto& c : t.cells())
    if (t.at(c) == Letter{j, true}) copies.push_back(c);
  std::reverse(copies.begin(), copies.end());
  for (Cell x : copies) {
    while (true) {
      auto small = [&](int r, int c) { return t.contains(r, c) && !t.at(r, c).barred && t.at(r, c).value <= j - 1; };
      bool down = small(x.row + 1, x.col), right = small(x.row, x.col + 1);
      if (!down && !right) break;
      Cell y = (down && (!right || t.at(x.row + 1, x.col).value <= t.at(x.row, x.col + 1).value))
                   ? Cell{x.row + 1, x.col}
                   : Cell{x.row, x.col + 1};
      std::swap(t.at(x), t.at(y));
      x = y;
    }
  }
}

}  // namespace

ColoredTableau convert(const ColoredTableau& t, const OrderSpec& from, const OrderSpec& to) {
  if (!is_semistandard(t, from)) throw PreconditionError("convert: tableau is not semistandard for " + from.str());
  int m = 1;
  for (auto& r : t.rows())
    for (auto& a : r) m = std::max(m, a.value);
  int a = static_cast<int>(std::min<std::int64_t>(from.k(), m));
  int b = static_cast<int>(std::min<std::int64_t>(to.k(), m));
  ColoredTableau out = t;
  for (int j = a; j < b; ++j) convert_up(out, j);
  for (int j = a; j > b; --j) convert_down(out, j);
  return out;
}

OrdinaryTableau tableau_blft(const ColoredTableau& t, const OrderSpec& order) {
  ColoredTableau s = convert(t, order, OrderSpec::smallbar());
  OrdinaryWord w;
  int width = 0;
  for (int r = 0; r < s.num_rows(); ++r) width = std::max(width, s.row_end(r));
  for (int c = width - 1; c >= 0; --c)
    for (int r = 0; r < s.num_rows(); ++r)
      if (s.contains(r, c) && s.at(r, c).barred) w.push_back(s.at(r, c).value);
  for (int r = s.num_rows() - 1; r >= 0; --r)
    for (auto& a : s.row(r))
      if (!a.barred) w.push_back(a.value);
  return plactic_class(w);
}

OrdinaryTableau neg_conversion(const ColoredTableau& pm) {
  // keys: natural keys for letters, -x for converted letters
  Tableau<std::int64_t> k = pm.map([](const Letter& a) { return a.natural_key(); });
  std::vector<Cell> barred;
  for (auto& c : pm.cells())
    if (pm.at(c).barred) barred.push_back(c);
  std::sort(barred.begin(), barred.end(), [&](const Cell& x, const Cell& y) { return pm.at(x).value < pm.at(y).value; });
  std::vector<Letter> order;
  for (auto& c : barred) order.push_back(pm.at(c));
  for (const Letter& a : order) {
    Cell x{};
    for (auto& c : k.cells())
      if (k.at(c) == a.natural_key()) x = c;
    k.at(x) = -a.value;
    while (true) {
      std::int64_t v = k.at(x);
      bool up = k.contains(x.row - 1, x.col) && k.at(x.row - 1, x.col) > v;
      bool left = k.contains(x.row, x.col - 1) && k.at(x.row, x.col - 1) > v;
      if (!up && !left) break;
      Cell y = (up && (!left || k.at(x.row - 1, x.col) > k.at(x.row, x.col - 1))) ? Cell{x.row - 1, x.col}
                                                                                  : Cell{x.row, x.col - 1};
      std::swap(k.at(x), k.at(y));
      x = y;
    }
  }
  return k.map([](std::int64_t v) { return static_cast<int>(v < 0 ? v : v / 2); });
}

}  // namespace hookkron
