#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "hookkron/insertion.hpp"
#include "hookkron/report.hpp"

namespace hookkron {

// One row per line; inner cells of a skew tableau print as '.'.
std::string format_tableau(const ColoredTableau& t);
std::string format_tableau(const OrdinaryTableau& t);
// Same rows joined by " / " on one line.
std::string format_tableau_inline(const ColoredTableau& t);
std::string format_tableau_inline(const OrdinaryTableau& t);

// Rows separated by newlines or '/'; '.' marks an inner cell.
ColoredTableau parse_colored_tableau(std::string_view text);
OrdinaryTableau parse_ordinary_tableau(std::string_view text);

nlohmann::json to_json(const Partition& p);
nlohmann::json to_json(const SkewShape& s);
nlohmann::json to_json(const ColoredTableau& t, const OrderSpec& order = OrderSpec::natural());
nlohmann::json to_json(const OrdinaryTableau& t);
nlohmann::json to_json(const CheckReport& r);

}  // namespace hookkron
