#pragma once

#include <doctest.h>

#include <algorithm>
#include <fstream>
#include <string>
#include <vector>

#include "hookkron/io.hpp"

namespace hookkron::test {

inline Word W(std::string_view s) { return parse_word(s); }
inline OrdinaryWord O(std::string_view s) { return parse_ordinary_word(s); }
inline ColoredTableau T(std::string_view s) { return parse_colored_tableau(s); }
inline OrdinaryTableau OT(std::string_view s) { return parse_ordinary_tableau(s); }
inline Partition L(std::string_view s) { return Partition::parse(s); }

template <class V>
V sorted(V v) {
  std::sort(v.begin(), v.end());
  return v;
}

// Tab-separated rows of a file under tests/data.
inline std::vector<std::vector<std::string>> data_rows(const std::string& name) {
  std::ifstream in(std::string(HOOKKRON_TEST_DATA) + "/" + name);
  REQUIRE_MESSAGE(in.good(), "missing data file " << name);
  std::vector<std::vector<std::string>> out;
  for (std::string line; std::getline(in, line);) {
    if (line.empty() || line[0] == '#') continue;
    std::vector<std::string> f;
    size_t a = 0;
    for (size_t b; (b = line.find('\t', a)) != std::string::npos; a = b + 1) f.push_back(line.substr(a, b - a));
    f.push_back(line.substr(a));
    out.push_back(f);
  }
  return out;
}

}  // namespace hookkron::test

namespace doctest {
template <>
struct StringMaker<hookkron::ColoredTableau> {
  static String convert(const hookkron::ColoredTableau& t) { return hookkron::format_tableau_inline(t).c_str(); }
};
template <>
struct StringMaker<hookkron::OrdinaryTableau> {
  static String convert(const hookkron::OrdinaryTableau& t) { return hookkron::format_tableau_inline(t).c_str(); }
};
template <>
struct StringMaker<hookkron::Word> {
  static String convert(const hookkron::Word& w) { return hookkron::format_word(w).c_str(); }
};
template <>
struct StringMaker<hookkron::OrdinaryWord> {
  static String convert(const hookkron::OrdinaryWord& w) { return hookkron::format_word(w).c_str(); }
};
template <>
struct StringMaker<hookkron::Partition> {
  static String convert(const hookkron::Partition& p) { return p.str().c_str(); }
};
}  // namespace doctest
