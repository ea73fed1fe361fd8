#pragma once

#include <string>

#include "ellcy/logseries.hpp"
#include "ellcy/qexp.hpp"
#include "ellcy/series2.hpp"

namespace ellcy {

// JSON round-trip for the arithmetic types.  Coefficients travel as exact
// "num/den" strings; nothing here ever goes through floating point.

std::string to_json(const Series1& f);
std::string to_json(const Series2& f);
std::string to_json(const LogSeries& f);
std::string to_json(const QExp& f);

Series1 series1_from_json(const std::string& text);
Series2 series2_from_json(const std::string& text);
QExp qexp_from_json(const std::string& text);

}  // namespace ellcy
