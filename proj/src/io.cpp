#include "hookkron/io.hpp"

#include <sstream>

#include "hookkron/error.hpp"

namespace hookkron {

namespace {

template <class T, class F>
std::vector<std::string> row_strings(const Tableau<T>& t, F show) {
  std::vector<std::string> out;
  for (int r = 0; r < t.num_rows(); ++r) {
    std::string s;
    for (int c = 0; c < t.row_end(r); ++c) {
      if (c) s += ' ';
      s += c < t.offset(r) ? std::string(".") : show(t.at(r, c));
    }
    out.push_back(s);
  }
  return out;
}

std::string join(const std::vector<std::string>& v, const char* sep) {
  std::string s;
  for (size_t i = 0; i < v.size(); ++i) s += (i ? sep : "") + v[i];
  return s;
}

auto show_letter = [](const Letter& a) { return a.str(); };
auto show_int = [](int x) { return std::to_string(x); };

std::vector<std::string_view> split_rows(std::string_view text) {
  std::vector<std::string_view> rows;
  size_t start = 0;
  for (size_t i = 0; i <= text.size(); ++i)
    if (i == text.size() || text[i] == '\n' || text[i] == '/') {
      auto piece = text.substr(start, i - start);
      if (piece.find_first_not_of(" \t\r") != std::string_view::npos) rows.push_back(piece);
      start = i + 1;
    }
  return rows;
}

template <class T, class P>
Tableau<T> parse_rows(std::string_view text, P parse_tok) {
  std::vector<int> offs;
  std::vector<std::vector<T>> rows;
  for (auto row : split_rows(text)) {
    std::istringstream in{std::string(row)};
    std::string tok;
    int off = 0;
    std::vector<T> cells;
    while (in >> tok) {
      if (tok == ".") {
        if (!cells.empty()) throw ParseError("'.' after a filled cell");
        ++off;
      } else {
        cells.push_back(parse_tok(tok));
      }
    }
    offs.push_back(off);
    rows.push_back(cells);
  }
  Tableau<T> t(offs, rows);
  try {
    (void)t.shape();
  } catch (const PreconditionError& e) {
    throw ParseError(std::string("tableau rows do not form a shape: ") + e.what());
  }
  return t;
}

}  // namespace

std::string format_tableau(const ColoredTableau& t) { return join(row_strings(t, show_letter), "\n"); }
std::string format_tableau(const OrdinaryTableau& t) { return join(row_strings(t, show_int), "\n"); }
std::string format_tableau_inline(const ColoredTableau& t) { return join(row_strings(t, show_letter), " / "); }
std::string format_tableau_inline(const OrdinaryTableau& t) { return join(row_strings(t, show_int), " / "); }

ColoredTableau parse_colored_tableau(std::string_view text) {
  return parse_rows<Letter>(text, [](const std::string& s) { return parse_letter(s); });
}

OrdinaryTableau parse_ordinary_tableau(std::string_view text) {
  return parse_rows<int>(text, [](const std::string& s) {
    auto w = parse_ordinary_word(s);
    return w.front();
  });
}

nlohmann::json to_json(const Partition& p) { return p.parts(); }

nlohmann::json to_json(const SkewShape& s) { return {{"outer", s.outer.parts()}, {"inner", s.inner.parts()}}; }

nlohmann::json to_json(const ColoredTableau& t, const OrderSpec& order) {
  nlohmann::json rows = nlohmann::json::array();
  for (auto& r : t.rows()) {
    nlohmann::json row = nlohmann::json::array();
    for (auto& a : r) row.push_back(a.str());
    rows.push_back(row);
  }
  return {{"order", order.str()}, {"shape", to_json(t.shape())}, {"rows", rows}};
}

nlohmann::json to_json(const OrdinaryTableau& t) {
  return {{"shape", to_json(t.shape())}, {"rows", t.rows()}};
}

nlohmann::json to_json(const CheckReport& r) {
  return {{"check", r.name},
          {"cases", r.cases},
          {"failures", r.failures},
          {"oracle", r.against_oracle},
          {"counterexamples", r.counterexamples}};
}

}  // namespace hookkron
