#pragma once

#include <doctest.h>

#include "detrs/text_io.hpp"

namespace th {

using namespace detrs;

inline UniPoly up(const FieldPtr& f, const char* s) { return parse_unipoly(f, s); }
inline BiPoly bp(const FieldPtr& f, const char* s) { return parse_bipoly(f, s); }
inline Fe fe(u64 v) { return Fe{v}; }

inline ErrorKind kind_of(const auto& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an error");
  return ErrorKind::ParseError;
}

}  // namespace th
