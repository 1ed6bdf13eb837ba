#pragma once

#include "charvar/invariants.hpp"

#include <optional>
#include <string>
#include <string_view>

namespace charvar {

enum class OutputFormat { Text, Json, Csv, Latex };

const char* format_name(OutputFormat f);
std::optional<OutputFormat> format_from_name(std::string_view name);
std::optional<Group> group_from_name(std::string_view name);
std::optional<Side> side_from_name(std::string_view name);

// Plain ascending-degree rendering of the result polynomial.
std::string to_text(const InvariantResult& r);

// JSON object {"invariant","group","side","genus","variables","terms"};
// terms are sorted by exponent vector and carry exact integer strings.
std::string to_json(const InvariantResult& r);

// Inverse of to_json. Throws Error on malformed or inconsistent input.
InvariantResult from_json(const std::string& text);

// Term table: one column per variable, then num and den columns.
std::string to_csv(const InvariantResult& r);

// LaTeX math-mode rendering, ascending degree, braced exponents.
std::string to_latex(const LaurentPoly& p);
std::string to_latex(const InvariantResult& r);

std::string render(const InvariantResult& r, OutputFormat f);

bool operator==(const InvariantResult& a, const InvariantResult& b);

} // namespace charvar
