#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "detrs/bipoly.hpp"

// Plain-text forms used by the CLI and the golden files. Parse errors throw
// ParseError with a one-line message.
namespace detrs {

// "p=7", "p=2 r=3 mod=1,1,0,1"; a trailing "trusted" token skips the
// primality check for large p.
FieldPtr parse_field(std::string_view s);
std::string format_field(const Field& f);

// Decimal for prime fields, colon-joined coordinates a0:a1:... otherwise.
Fe parse_fe(const Field& f, std::string_view s);
std::string format_fe(const Field& f, Fe a);

// Comma-joined coefficients low to high; "0" for the zero polynomial.
UniPoly parse_unipoly(const FieldPtr& f, std::string_view s);
std::string format_unipoly(const UniPoly& p);

// Semicolon-joined Y-slices, low Y-degree first.
BiPoly parse_bipoly(const FieldPtr& f, std::string_view s);
std::string format_bipoly(const BiPoly& p);

// Instance file: `field ...`, `k <int>`, `point <alpha> <beta>` lines, `#` comments.
struct Instance {
  FieldPtr field;
  int k = 0;
  std::vector<Point> points;
  std::vector<std::string> comments;  // kept verbatim, without the leading '#'
};
Instance parse_instance(std::string_view text);
std::string format_instance(const Instance& inst);

std::vector<std::string> split_on(std::string_view s, char sep);
std::string trim(std::string_view s);

}  // namespace detrs
