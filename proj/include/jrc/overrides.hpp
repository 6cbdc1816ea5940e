#pragma once

// Override files: a strict JSON object mapping recognized keys to decimal
// strings.  Overrides shadow computed quantities and are flagged as such in
// every result.  Unknown keys and non-string values are rejected outright.
//
// Recognized keys:
//   "genus"       geometric genus g(B)
//   "m1"          -s_1^2
//   "L_dot_R1"    intersection of the hyperplane pullback with R_1
//   "h"           reducible-boundary correction
//   "s_pair:i,j"  s_i.s_j for 1-based indices i != j
//   "N:n,d,c1+c2+..."  curve count for ambient n, degree d, codims c1,c2,...

#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>

#include <json.hpp>

#include "jrc/exact.hpp"
#include "jrc/gw.hpp"

namespace jrc {

struct Overrides {
  std::optional<Int> genus;
  std::optional<Int> m1;
  std::optional<Int> l_dot_r1;
  std::optional<Int> h;
  std::map<std::pair<int, int>, Int> s_pair;  // normalized i < j
  std::map<CountKey, Int> counts;

  bool empty() const {
    return !genus && !m1 && !l_dot_r1 && !h && s_pair.empty() && counts.empty();
  }

  /// Provider seeded with every "N:..." entry.
  CountProvider make_provider() const {
    CountProvider provider;
    for (const auto& [key, value] : counts) provider.add_override(key, value);
    return provider;
  }
};

namespace detail {

inline int parse_small_int(const std::string& s, const std::string& context) {
  Int v = parse_decimal(s);
  if (v < -1000000 || v > 1000000)
    throw invalid_input("index out of range in override key: " + context);
  return static_cast<int>(v);
}

inline std::pair<int, int> parse_s_pair_key(const std::string& body, const std::string& key) {
  auto comma = body.find(',');
  if (comma == std::string::npos)
    throw invalid_input("malformed override key (expected s_pair:i,j): " + key);
  int i = parse_small_int(body.substr(0, comma), key);
  int j = parse_small_int(body.substr(comma + 1), key);
  if (i < 1 || j < 1) throw invalid_input("override indices are 1-based: " + key);
  if (i == j) throw invalid_input("s_pair override needs distinct indices: " + key);
  return {std::min(i, j), std::max(i, j)};
}

inline CountKey parse_count_key(const std::string& body, const std::string& key) {
  std::istringstream is(body);
  std::string n_part, d_part, codim_part;
  if (!std::getline(is, n_part, ',') || !std::getline(is, d_part, ',') ||
      !std::getline(is, codim_part))
    throw invalid_input("malformed override key (expected N:n,d,c1+c2+...): " + key);
  int n = parse_small_int(n_part, key);
  int d = parse_small_int(d_part, key);
  if (n < 2 || d < 1) throw invalid_input("bad ambient dimension or degree: " + key);
  std::vector<int> codims;
  std::istringstream cs(codim_part);
  std::string piece;
  while (std::getline(cs, piece, '+')) {
    int c = parse_small_int(piece, key);
    if (c < 2) throw invalid_input("condition codimension must be at least 2: " + key);
    codims.push_back(c);
  }
  if (codims.empty()) throw invalid_input("override key lists no codimensions: " + key);
  return CountKey(n, d, std::move(codims));
}

}  // namespace detail

/// Parses override JSON text.  Strict: object at top level, string values
/// holding decimal integers, recognized keys only.
inline Overrides parse_overrides(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw invalid_input(std::string("override file is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw invalid_input("override file must be a JSON object");

  Overrides out;
  for (const auto& [key, raw] : doc.items()) {
    if (!raw.is_string())
      throw invalid_input("override value for \"" + key + "\" must be a decimal string");
    Int value = parse_decimal(raw.get<std::string>());

    if (key == "genus") {
      out.genus = value;
    } else if (key == "m1") {
      out.m1 = value;
    } else if (key == "L_dot_R1") {
      out.l_dot_r1 = value;
    } else if (key == "h") {
      out.h = value;
    } else if (key.rfind("s_pair:", 0) == 0) {
      out.s_pair[detail::parse_s_pair_key(key.substr(7), key)] = value;
    } else if (key.rfind("N:", 0) == 0) {
      if (value < 0) throw invalid_input("count override must be nonnegative: " + key);
      out.counts.emplace(detail::parse_count_key(key.substr(2), key), value);
    } else {
      throw invalid_input("unknown override key: " + key);
    }
  }
  return out;
}

inline Overrides load_overrides(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw invalid_input("cannot open override file: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_overrides(buffer.str());
}

}  // namespace jrc
