#pragma once

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "closys/errors.hpp"
#include "closys/implication.hpp"
#include "json.hpp"

namespace closys {

namespace detail {

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

inline std::vector<std::string> tokens(std::string_view s) {
  std::vector<std::string> out;
  std::istringstream in{std::string(s)};
  for (std::string tok; in >> tok;) out.push_back(tok);
  return out;
}

inline std::vector<std::string> split_lines(const std::string& text) {
  std::vector<std::string> lines;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) lines.push_back(line);
  return lines;
}

}  // namespace detail

/// Parses the line-oriented implication format:
///
///     # comment
///     ground: a b c d
///     a c -> b
///     b d -> c
///
/// The `ground:` header is optional and must precede the first implication;
/// without it, attributes are ordered by first appearance.
inline ImplicationSet parse_text(const std::string& text) {
  struct Line {
    std::size_t number;
    std::vector<std::string> lhs;
    std::vector<std::string> rhs;
  };
  std::vector<Line> lines;
  std::vector<std::string> header;
  bool have_header = false;

  const auto raw = detail::split_lines(text);
  for (std::size_t k = 0; k < raw.size(); ++k) {
    const std::size_t number = k + 1;
    std::string_view line = raw[k];
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = detail::trim(line);
    if (line.empty()) continue;

    if (line.starts_with("ground:")) {
      if (have_header) throw ParseError(number, "duplicate ground header");
      if (!lines.empty()) throw ParseError(number, "ground header must precede implications");
      header = detail::tokens(line.substr(7));
      if (header.empty()) throw ParseError(number, "empty ground header");
      have_header = true;
      continue;
    }

    const auto arrow = line.find("->");
    if (arrow == std::string_view::npos) throw ParseError(number, "expected 'premise -> conclusion'");
    if (line.find("->", arrow + 2) != std::string_view::npos) throw ParseError(number, "more than one '->'");
    Line parsed{number, detail::tokens(line.substr(0, arrow)), detail::tokens(line.substr(arrow + 2))};
    if (parsed.lhs.empty()) throw ParseError(number, "empty premise");
    if (parsed.rhs.empty()) throw ParseError(number, "empty conclusion");
    lines.push_back(std::move(parsed));
  }

  if (!have_header) {
    if (lines.empty()) throw ParseError(0, "no implications and no ground header");
    for (const auto& l : lines)
      for (const auto* side : {&l.lhs, &l.rhs})
        for (const auto& tok : *side)
          if (std::find(header.begin(), header.end(), tok) == header.end()) header.push_back(tok);
  }

  GroundSet ground;
  try {
    ground = GroundSet(header);
  } catch (const Error& e) {
    throw ParseError(0, e.what());
  }

  ImplicationSet sigma(ground);
  for (const auto& l : lines) {
    try {
      sigma.push_back(Implication(ground.set_of(l.lhs), ground.set_of(l.rhs)));
    } catch (const Error& e) {
      throw ParseError(l.number, e.what());
    }
  }
  return sigma;
}

inline ImplicationSet from_json(const nlohmann::json& j) {
  if (j.contains("outputs")) {
    for (const auto& out : j.at("outputs"))
      if (out.contains("basis")) return from_json(out.at("basis"));
    throw ParseError(0, "report contains no basis");
  }
  try {
    GroundSet ground(j.at("ground").get<std::vector<std::string>>());
    ImplicationSet sigma(ground);
    for (const auto& imp : j.at("implications")) {
      sigma.push_back(Implication(ground.set_of(imp.at("premise").get<std::vector<std::string>>()),
                                  ground.set_of(imp.at("conclusion").get<std::vector<std::string>>())));
    }
    return sigma;
  } catch (const ParseError&) {
    throw;
  } catch (const std::exception& e) {
    throw ParseError(0, std::string("invalid JSON basis: ") + e.what());
  }
}

/// Text or JSON, detected by the first non-blank character.
inline ImplicationSet parse(const std::string& text) {
  const auto body = detail::trim(text);
  if (!body.empty() && body.front() == '{') {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(body);
    } catch (const std::exception& e) {
      throw ParseError(0, std::string("invalid JSON: ") + e.what());
    }
    return from_json(j);
  }
  return parse_text(text);
}

inline std::string format_implication(const GroundSet& g, const Implication& imp) {
  return g.format(imp.premise()) + " -> " + g.format(imp.conclusion());
}

/// Inverse of parse_text; always writes the ground header.
inline std::string to_text(const ImplicationSet& sigma) {
  std::string out = "ground:";
  for (const auto& n : sigma.ground().names()) out += " " + n;
  out += "\n";
  for (const auto& imp : sigma) out += format_implication(sigma.ground(), imp) + "\n";
  return out;
}

inline nlohmann::json to_json(const ImplicationSet& sigma) {
  nlohmann::json imps = nlohmann::json::array();
  for (const auto& imp : sigma) {
    imps.push_back({{"premise", sigma.ground().names_of(imp.premise())},
                    {"conclusion", sigma.ground().names_of(imp.conclusion())}});
  }
  return {{"ground", sigma.ground().names()}, {"implications", imps}};
}

}  // namespace closys
