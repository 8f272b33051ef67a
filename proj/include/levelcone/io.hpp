#pragma once

#include <algorithm>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "levelcone/cancellation.hpp"
#include "levelcone/diagram.hpp"
#include "levelcone/error.hpp"
#include "levelcone/hvector.hpp"
#include "levelcone/pure.hpp"
#include "levelcone/rational.hpp"

namespace levelcone {

using Json = nlohmann::json;

// Numbers travel as strings "n" or "n/d". Integer JSON numbers are accepted
// on input; floating point numbers are rejected.

inline Json to_json(const Rational& q) { return to_string(q); }

inline Rational rational_from_json(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long long>());
  throw Error(Errc::ParseError, "expected a rational string, got " + j.dump());
}

inline int int_from_json(const Json& j, const char* what) {
  if (!j.is_number_integer())
    throw Error(Errc::ParseError, std::string(what) + " must be an integer, got " + j.dump());
  return j.get<int>();
}

inline Json to_json(const std::vector<Rational>& list) {
  Json out = Json::array();
  for (const auto& q : list) out.push_back(to_json(q));
  return out;
}

/// {"coeffs": {"0": "1", "1": "3", ...}}
inline Json to_json(const HVector& h) {
  Json coeffs = Json::object();
  for (const auto& [d, v] : h.coeffs()) coeffs[std::to_string(d)] = to_json(v);
  return {{"coeffs", coeffs}};
}

/// Accepts {"coeffs": {...}}, {"coeffs": [...]} and a bare array of
/// coefficients starting in degree 0.
inline HVector hvector_from_json(const Json& j) {
  const Json* coeffs = &j;
  if (j.is_object()) {
    if (!j.contains("coeffs")) throw Error(Errc::ParseError, "h-vector object needs \"coeffs\"");
    coeffs = &j.at("coeffs");
  }
  HVector h;
  if (coeffs->is_array()) {
    int d = 0;
    for (const auto& v : *coeffs) h.set(d++, rational_from_json(v));
  } else if (coeffs->is_object()) {
    for (const auto& [key, v] : coeffs->items()) {
      std::size_t used = 0;
      int d = 0;
      try {
        d = std::stoi(key, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != key.size() || key.empty())
        throw Error(Errc::ParseError, "degree key '" + key + "' is not an integer");
      h.set(d, rational_from_json(v));
    }
  } else {
    throw Error(Errc::ParseError, "coeffs must be an object or an array");
  }
  return h;
}

/// {"codim": p, "entries": [[i, j, "q"], ...]}
inline Json to_json(const BettiDiagram& d) {
  Json entries = Json::array();
  for (const auto& [key, v] : d.entries()) entries.push_back({key.first, key.second, to_json(v)});
  return {{"codim", d.codim()}, {"entries", entries}};
}

inline BettiDiagram diagram_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("codim") || !j.contains("entries") ||
      !j.at("entries").is_array())
    throw Error(Errc::ParseError, "diagram needs \"codim\" and an \"entries\" array");
  const int p = int_from_json(j.at("codim"), "codim");
  if (p < 0) throw Error(Errc::ParseError, "codim must be nonnegative");
  BettiDiagram d(p);
  for (const auto& e : j.at("entries")) {
    if (!e.is_array() || e.size() != 3)
      throw Error(Errc::ParseError, "diagram entry must be [column, row, value]");
    const int i = int_from_json(e[0], "column");
    if (i < 0 || i > p)
      throw Error(Errc::ParseError, "column " + std::to_string(i) + " outside 0.." + std::to_string(p));
    d.add(i, int_from_json(e[1], "row"), rational_from_json(e[2]));
  }
  return d;
}

inline Json to_json(const PureType& t) { return t.shifts(); }

inline PureType pure_type_from_json(const Json& j) {
  if (!j.is_array()) throw Error(Errc::ParseError, "pure type must be an array of shifts");
  std::vector<int> d;
  for (const auto& v : j) d.push_back(int_from_json(v, "shift"));
  return PureType(std::move(d));
}

/// {"codim": p, "terms": [{"coeff": "q", "type": [d0, ...]}, ...]}
inline Json to_json(const PureCombo& combo) {
  Json terms = Json::array();
  for (const auto& t : combo.terms) terms.push_back({{"coeff", to_json(t.coeff)}, {"type", to_json(t.type)}});
  return {{"codim", combo.codim}, {"terms", terms}};
}

inline PureCombo pure_combo_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("codim") || !j.contains("terms") || !j.at("terms").is_array())
    throw Error(Errc::ParseError, "combination needs \"codim\" and a \"terms\" array");
  PureCombo combo;
  combo.codim = int_from_json(j.at("codim"), "codim");
  for (const auto& t : j.at("terms")) {
    if (!t.is_object() || !t.contains("coeff") || !t.contains("type"))
      throw Error(Errc::ParseError, "term needs \"coeff\" and \"type\"");
    PureType type = pure_type_from_json(t.at("type"));
    if (type.codim() != combo.codim)
      throw Error(Errc::ParseError, "term " + type.str() + " has the wrong codimension");
    combo.terms.push_back({rational_from_json(t.at("coeff")), std::move(type)});
  }
  return combo;
}

/// {"amounts": [[k, l, "b"], ...]}
inline Json to_json(const CancellationCertificate& cert) {
  Json amounts = Json::array();
  for (const auto& [key, b] : cert.amounts) amounts.push_back({key.first, key.second, to_json(b)});
  return {{"amounts", amounts}};
}

inline CancellationCertificate certificate_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("amounts") || !j.at("amounts").is_array())
    throw Error(Errc::ParseError, "certificate needs an \"amounts\" array");
  CancellationCertificate cert;
  for (const auto& e : j.at("amounts")) {
    if (!e.is_array() || e.size() != 3)
      throw Error(Errc::ParseError, "amount must be [column, row, value]");
    cert.add(int_from_json(e[0], "column"), int_from_json(e[1], "row"), rational_from_json(e[2]));
  }
  return cert;
}

/// Parses JSON text, turning syntax errors into ParseError.
inline Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::exception& e) {
    throw Error(Errc::ParseError, std::string("malformed JSON: ") + e.what());
  }
}

/// Grid with column i and row j - i, "-" for zero, right-aligned columns
/// separated by one space. One line per row, each ending in a newline.
inline std::string render_diagram(const BettiDiagram& d) {
  if (d.is_zero()) return "";
  const int p = d.codim();
  int lo = 0;
  int hi = 0;
  bool first = true;
  for (const auto& [key, v] : d.entries()) {
    const int row = key.second - key.first;
    lo = first ? row : std::min(lo, row);
    hi = first ? row : std::max(hi, row);
    first = false;
  }
  const auto rows = static_cast<std::size_t>(hi - lo + 1);
  const auto cols = static_cast<std::size_t>(p + 1);
  std::vector<std::vector<std::string>> cells(rows, std::vector<std::string>(cols, "-"));
  for (const auto& [key, v] : d.entries())
    cells[static_cast<std::size_t>(key.second - key.first - lo)][static_cast<std::size_t>(key.first)] =
        to_string(v);
  std::vector<std::size_t> width(cols, 1);
  for (const auto& row : cells)
    for (std::size_t i = 0; i < cols; ++i) width[i] = std::max(width[i], row[i].size());
  std::ostringstream out;
  for (const auto& row : cells) {
    for (std::size_t i = 0; i < cols; ++i) {
      if (i) out << ' ';
      out << std::string(width[i] - row[i].size(), ' ') << row[i];
    }
    out << '\n';
  }
  return out.str();
}

/// "1 + 3t + 6t^2", with rational coefficients as "n/d".
inline std::string hvector_str(const HVector& h) {
  if (h.is_zero()) return "0";
  std::string out;
  for (const auto& [d, v] : h.coeffs()) {
    std::string coeff = to_string(v < 0 ? Rational(-v) : v);
    if (out.empty())
      out += v < 0 ? "-" : "";
    else
      out += v < 0 ? " - " : " + ";
    if (d == 0 || coeff != "1") out += coeff;
    if (d != 0) out += d == 1 ? "t" : "t^" + std::to_string(d);
  }
  return out;
}

}  // namespace levelcone
