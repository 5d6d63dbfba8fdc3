#pragma once

#include <fstream>
#include <iterator>
#include <ostream>
#include <string>

#include "closys/closys.hpp"

namespace closys {

// Readable gtest failure messages.
inline void PrintTo(const AttrSet& s, std::ostream* os) {
  *os << "{";
  bool first = true;
  s.for_each([&](std::size_t i) {
    *os << (first ? "" : ",") << i;
    first = false;
  });
  *os << "}";
}

inline void PrintTo(const ImplicationSet& s, std::ostream* os) { *os << "\n" << to_text(s); }

}  // namespace closys

namespace closys::testing {

inline ImplicationSet sys(const std::string& text) { return parse_text(text); }

inline std::string fixture_path(const std::string& name) { return std::string(CLOSYS_FIXTURE_DIR) + "/" + name; }

inline std::string read_fixture(const std::string& name) {
  std::ifstream in(fixture_path(name));
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

/// Implication set on `ground` from "premise -> conclusion" lines.
inline ImplicationSet on(const ImplicationSet& like, const std::string& lines) {
  return parse_text(to_text(ImplicationSet(like.ground())) + lines);
}

}  // namespace closys::testing
