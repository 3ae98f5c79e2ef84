#include "hookkron/colored.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <numeric>
#include <sstream>

#include "hookkron/error.hpp"

namespace hookkron {

OrderSpec OrderSpec::k_order(std::int64_t k) {
  if (k < 1) throw PreconditionError("order index k must be >= 1");
  return OrderSpec(std::min(k, kInfinity));
}

OrderSpec OrderSpec::parse(std::string_view text) {
  if (text == "natural") return natural();
  if (text == "smallbar") return smallbar();
  if (text.substr(0, 2) == "k:") {
    std::int64_t k = 0;
    auto body = text.substr(2);
    auto [p, ec] = std::from_chars(body.data(), body.data() + body.size(), k);
    if (ec == std::errc() && p == body.data() + body.size() && k >= 1) return k_order(k);
  }
  throw ParseError("unknown order '" + std::string(text) + "' (natural, smallbar, k:<int>)");
}

std::string OrderSpec::str() const {
  if (is_natural()) return "natural";
  if (is_smallbar()) return "smallbar";
  return "k:" + std::to_string(k_);
}

Letter parse_letter(std::string_view tok) {
  bool barred = false;
  if (!tok.empty() && tok.back() == '\'') {
    barred = true;
    tok.remove_suffix(1);
  }
  int v = 0;
  auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (tok.empty() || ec != std::errc() || p != tok.data() + tok.size() || v < 1)
    throw ParseError("bad letter '" + std::string(tok) + (barred ? "'" : "") + "'");
  return {v, barred};
}

static std::vector<std::string_view> tokens(std::string_view text) {
  std::vector<std::string_view> out;
  size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    size_t j = i;
    while (j < text.size() && !std::isspace(static_cast<unsigned char>(text[j]))) ++j;
    if (j > i) out.push_back(text.substr(i, j - i));
    i = j;
  }
  return out;
}

Word parse_word(std::string_view text) {
  Word w;
  for (auto t : tokens(text)) w.push_back(parse_letter(t));
  return w;
}

OrdinaryWord parse_ordinary_word(std::string_view text) {
  OrdinaryWord w;
  for (auto t : tokens(text)) {
    int v = 0;
    auto [p, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
    if (ec != std::errc() || p != t.data() + t.size()) throw ParseError("bad integer '" + std::string(t) + "'");
    w.push_back(v);
  }
  return w;
}

std::string format_word(const Word& w) {
  std::string s;
  for (size_t i = 0; i < w.size(); ++i) s += (i ? " " : "") + w[i].str();
  return s;
}

std::string format_word(const OrdinaryWord& w) {
  std::string s;
  for (size_t i = 0; i < w.size(); ++i) s += (i ? " " : "") + std::to_string(w[i]);
  return s;
}

Word to_word(const OrdinaryWord& w) {
  Word out;
  for (int x : w) out.push_back({x, false});
  return out;
}

OrdinaryWord erase_bars(const Word& w) {
  OrdinaryWord out;
  for (auto& a : w) out.push_back(a.value);
  return out;
}

int total_color(const Word& w) {
  return static_cast<int>(std::count_if(w.begin(), w.end(), [](const Letter& a) { return a.barred; }));
}

Word sub_barred(const Word& w) {
  Word out;
  for (auto& a : w)
    if (a.barred) out.push_back(a);
  return out;
}

Word sub_unbarred(const Word& w) {
  Word out;
  for (auto& a : w)
    if (!a.barred) out.push_back(a);
  return out;
}

Word star(const Word& w) {
  Word out;
  for (auto& a : w) out.push_back(a.star());
  return out;
}

Word sub_leq(const Word& w, const Letter& bound, const OrderSpec& order) {
  Word out;
  for (auto& a : w)
    if (order.key(a) <= order.key(bound)) out.push_back(a);
  return out;
}

std::vector<int> content(const Word& w) {
  std::vector<int> c;
  for (auto& a : w) {
    if (a.value > static_cast<int>(c.size())) c.resize(a.value, 0);
    ++c[a.value - 1];
  }
  return c;
}

bool is_colored_permutation(const Word& w) {
  std::vector<char> seen(w.size() + 1, 0);
  for (auto& a : w) {
    if (a.value < 1 || a.value > static_cast<int>(w.size()) || seen[a.value]) return false;
    seen[a.value] = 1;
  }
  return true;
}

bool is_permutation(const OrdinaryWord& w) {
  std::vector<char> seen(w.size() + 1, 0);
  for (int a : w) {
    if (a < 1 || a > static_cast<int>(w.size()) || seen[a]) return false;
    seen[a] = 1;
  }
  return true;
}

StandardizedWord standardize(const Word& w, const OrderSpec& order) {
  std::vector<int> idx(w.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::stable_sort(idx.begin(), idx.end(), [&](int a, int b) { return order.key(w[a]) < order.key(w[b]); });
  StandardizedWord s;
  s.perm.resize(w.size());
  s.letter.resize(w.size());
  for (size_t r = 0; r < idx.size(); ++r) {
    s.perm[idx[r]] = {static_cast<int>(r) + 1, w[idx[r]].barred};
    s.letter[r] = w[idx[r]];
  }
  return s;
}

OrdinaryWord standardize(const OrdinaryWord& w) {
  std::vector<int> idx(w.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::stable_sort(idx.begin(), idx.end(), [&](int a, int b) { return w[a] < w[b]; });
  OrdinaryWord out(w.size());
  for (size_t r = 0; r < idx.size(); ++r) out[idx[r]] = static_cast<int>(r) + 1;
  return out;
}

OrdinaryWord blft(const Word& w) {
  OrdinaryWord out;
  for (auto& a : w)
    if (a.barred) out.push_back(a.value);
  for (auto& a : w)
    if (!a.barred) out.push_back(a.value);
  return out;
}

OrdinaryWord brgt(const Word& w) {
  OrdinaryWord out;
  for (auto& a : w)
    if (!a.barred) out.push_back(a.value);
  for (auto& a : w)
    if (a.barred) out.push_back(a.value);
  return out;
}

static void need_perm(const Word& v, const char* what) {
  if (!is_colored_permutation(v)) throw PreconditionError(std::string(what) + " needs a colored permutation");
}

OrdinaryWord neg(const Word& v) {
  need_perm(v, "neg");
  OrdinaryWord out;
  for (auto& a : v) out.push_back(a.barred ? -a.value : a.value);
  return out;
}

Symmetry parse_symmetry(std::string_view name) {
  static const std::pair<const char*, Symmetry> names[] = {
      {"rev", Symmetry::rev},         {"ud", Symmetry::ud},           {"inv", Symmetry::inv},
      {"star", Symmetry::star},       {"rev-bar", Symmetry::rev_bar}, {"rev-nobar", Symmetry::rev_nobar},
      {"barud", Symmetry::barud},     {"nobarud", Symmetry::nobarud}};
  for (auto& [n, s] : names)
    if (name == n) return s;
  throw ParseError("unknown symmetry '" + std::string(name) + "'");
}

std::string symmetry_name(Symmetry s) {
  switch (s) {
    case Symmetry::rev: return "rev";
    case Symmetry::ud: return "ud";
    case Symmetry::inv: return "inv";
    case Symmetry::star: return "star";
    case Symmetry::rev_bar: return "rev-bar";
    case Symmetry::rev_nobar: return "rev-nobar";
    case Symmetry::barud: return "barud";
    case Symmetry::nobarud: return "nobarud";
  }
  return "?";
}

// reverse the subword of letters with the given bar, in place
static Word reverse_sub(const Word& v, bool barred) {
  std::vector<int> pos;
  for (size_t i = 0; i < v.size(); ++i)
    if (v[i].barred == barred) pos.push_back(static_cast<int>(i));
  Word out = v;
  for (size_t i = 0; i < pos.size(); ++i) out[pos[i]] = v[pos[pos.size() - 1 - i]];
  return out;
}

Word apply_symmetry(const Word& v, Symmetry op) {
  switch (op) {
    case Symmetry::rev: return Word(v.rbegin(), v.rend());
    case Symmetry::star: return star(v);
    case Symmetry::rev_bar: return reverse_sub(v, true);
    case Symmetry::rev_nobar: return reverse_sub(v, false);
    default: break;
  }
  need_perm(v, symmetry_name(op).c_str());
  int n = static_cast<int>(v.size());
  switch (op) {
    case Symmetry::ud: {
      Word out;
      for (auto& a : v) out.push_back({n + 1 - a.value, a.barred});
      return out;
    }
    case Symmetry::inv: {
      Word out(n);
      for (int j = 0; j < n; ++j) out[v[j].value - 1] = {j + 1, v[j].barred};
      return out;
    }
    case Symmetry::barud:
      return apply_symmetry(apply_symmetry(apply_symmetry(v, Symmetry::inv), Symmetry::rev_bar), Symmetry::inv);
    case Symmetry::nobarud:
      return apply_symmetry(apply_symmetry(apply_symmetry(v, Symmetry::inv), Symmetry::rev_nobar), Symmetry::inv);
    default: break;
  }
  return v;
}

OrdinaryWord reverse(OrdinaryWord w) {
  std::reverse(w.begin(), w.end());
  return w;
}

OrdinaryWord ud(const OrdinaryWord& w) {
  if (!is_permutation(w)) throw PreconditionError("ud needs a permutation");
  OrdinaryWord out;
  int n = static_cast<int>(w.size());
  for (int x : w) out.push_back(n + 1 - x);
  return out;
}

OrdinaryWord inverse(const OrdinaryWord& w) {
  if (!is_permutation(w)) throw PreconditionError("inv needs a permutation");
  OrdinaryWord out(w.size());
  for (size_t j = 0; j < w.size(); ++j) out[w[j] - 1] = static_cast<int>(j) + 1;
  return out;
}

std::optional<Partition> yamanouchi_content(const OrdinaryWord& w) {
  std::vector<int> c;
  for (auto it = w.rbegin(); it != w.rend(); ++it) {
    int x = *it;
    if (x < 1) return std::nullopt;
    if (x > static_cast<int>(c.size())) c.resize(x, 0);
    ++c[x - 1];
    if (x > 1 && c[x - 1] > c[x - 2]) return std::nullopt;
  }
  return Partition(c);
}

std::optional<Partition> yamanouchi_content(const Word& w) { return yamanouchi_content(blft(w)); }

}  // namespace hookkron
