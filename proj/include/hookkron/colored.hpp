#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hookkron/partition.hpp"

namespace hookkron {

struct Letter {
  int value = 0;
  bool barred = false;

  Letter star() const { return {value, !barred}; }
  // 1' < 1 < 2' < 2 < ...
  std::int64_t natural_key() const { return 2 * static_cast<std::int64_t>(value) - (barred ? 1 : 0); }
  std::string str() const { return std::to_string(value) + (barred ? "'" : ""); }

  friend bool operator==(const Letter&, const Letter&) = default;
  friend auto operator<=>(const Letter& a, const Letter& b) { return a.natural_key() <=> b.natural_key(); }
};

using Word = std::vector<Letter>;
using OrdinaryWord = std::vector<int>;

// The orders <^k on colored letters: 1'..k' < 1..k < (k+1)' < k+1 < ...
// k = 1 is the natural order, k = infinity the small-bar order.
class OrderSpec {
 public:
  static constexpr std::int64_t kInfinity = std::int64_t{1} << 40;

  static OrderSpec natural() { return OrderSpec(1); }
  static OrderSpec smallbar() { return OrderSpec(kInfinity); }
  static OrderSpec k_order(std::int64_t k);
  // "natural", "smallbar" or "k:<int>"
  static OrderSpec parse(std::string_view text);

  std::int64_t k() const { return k_; }
  bool is_natural() const { return k_ == 1; }
  bool is_smallbar() const { return k_ == kInfinity; }

  std::int64_t key(const Letter& a) const {
    std::int64_t v = a.value;
    if (v <= k_) return a.barred ? v : k_ + v;
    return a.barred ? 2 * v - 1 : 2 * v;
  }
  bool less(const Letter& a, const Letter& b) const { return key(a) < key(b); }
  std::string str() const;

  friend bool operator==(const OrderSpec&, const OrderSpec&) = default;

 private:
  explicit OrderSpec(std::int64_t k) : k_(k) {}
  std::int64_t k_;
};

Letter parse_letter(std::string_view token);
// Whitespace-separated tokens, a trailing ' marks a barred letter.
Word parse_word(std::string_view text);
OrdinaryWord parse_ordinary_word(std::string_view text);
std::string format_word(const Word& w);
std::string format_word(const OrdinaryWord& w);

Word to_word(const OrdinaryWord& w);  // all unbarred
OrdinaryWord erase_bars(const Word& w);

int total_color(const Word& w);
Word sub_barred(const Word& w);
Word sub_unbarred(const Word& w);
Word star(const Word& w);
// Letters a with a <= bound in `order`.
Word sub_leq(const Word& w, const Letter& bound, const OrderSpec& order = OrderSpec::natural());
// content[i] = number of letters with value i+1
std::vector<int> content(const Word& w);
bool is_colored_permutation(const Word& w);
bool is_permutation(const OrdinaryWord& w);

struct StandardizedWord {
  Word perm;                   // colored permutation
  std::vector<Letter> letter;  // letter[label-1] = original letter
};
// Relabel from the smallest letter upward, equal letters left to right.
StandardizedWord standardize(const Word& w, const OrderSpec& order = OrderSpec::natural());
OrdinaryWord standardize(const OrdinaryWord& w);

// sub_bar(w)* followed by sub_nobar(w)
OrdinaryWord blft(const Word& w);
// rev(blft(rev(w))) = sub_nobar(w) followed by sub_bar(w)*
OrdinaryWord brgt(const Word& w);
// barred x -> -x; requires a colored permutation
OrdinaryWord neg(const Word& v);

enum class Symmetry { rev, ud, inv, star, rev_bar, rev_nobar, barud, nobarud };
Symmetry parse_symmetry(std::string_view name);
std::string symmetry_name(Symmetry s);
// rev and star apply to any word, the others need a colored permutation.
Word apply_symmetry(const Word& v, Symmetry op);
OrdinaryWord reverse(OrdinaryWord w);
// x -> n+1-x on a permutation
OrdinaryWord ud(const OrdinaryWord& w);
OrdinaryWord inverse(const OrdinaryWord& w);

// Lattice word test: every suffix has partition content.
std::optional<Partition> yamanouchi_content(const OrdinaryWord& w);
// Colored Yamanouchi: blft(w) is Yamanouchi.
std::optional<Partition> yamanouchi_content(const Word& w);

}  // namespace hookkron
