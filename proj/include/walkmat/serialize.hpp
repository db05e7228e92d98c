#ifndef WALKMAT_SERIALIZE_HPP
#define WALKMAT_SERIALIZE_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "walkmat/canonical.hpp"
#include "walkmat/error.hpp"
#include "walkmat/graph_io.hpp"
#include "walkmat/oracle.hpp"
#include "walkmat/polynomial.hpp"
#include "walkmat/reconstruct.hpp"
#include "walkmat/spectral.hpp"
#include "walkmat/walk.hpp"

namespace walkmat {

using Json = nlohmann::ordered_json;

/// A JSON number when |x| < 2^53, a decimal string otherwise.
inline Json json_integer(const Integer& x) {
  static const Integer limit = Integer(1) << 53;
  if (abs(x) < limit) return Json(x.get_si());
  return Json(x.get_str());
}

inline Json json_rational(const Rational& x) {
  if (x.is_integer()) return json_integer(x.num());
  return Json(x.to_string());
}

inline Json json_one_based(std::span<const std::size_t> perm) {
  Json out = Json::array();
  for (std::size_t p : perm) out.push_back(p + 1);
  return out;
}

inline Json to_json(const IntPolynomial& p) {
  Json out = Json::array();
  for (const Integer& c : p.coefficients()) out.push_back(json_integer(c));
  return out;
}

inline Json to_json(const WalkMatrix& w) {
  Json cols = Json::array();
  for (std::size_t k = 0; k < w.order(); ++k) {
    Json col = Json::array();
    for (std::size_t v = 0; v < w.order(); ++v) col.push_back(w.matrix()(v, k).to_string());
    cols.push_back(std::move(col));
  }
  return Json{{"n", w.order()}, {"set", w.set().one_based()}, {"columns", std::move(cols)}};
}

inline Json to_json(const ExactMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(json_rational(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

inline Json to_json(const SpectralSummary& s, const NumericRealization* numeric = nullptr) {
  Json out{{"rank", s.rank}, {"main_poly", to_json(s.main_poly)}};
  if (s.char_poly) out["char_poly"] = to_json(*s.char_poly);
  if (numeric) out["mu"] = numeric->mu;
  return out;
}

inline std::string_view to_string(ReconstructionResult::Status s) noexcept {
  switch (s) {
    case ReconstructionResult::Status::Unique: return "unique";
    case ReconstructionResult::Status::Pair: return "pair";
    case ReconstructionResult::Status::Undetermined: return "undetermined";
  }
  return "unknown";
}

inline Json to_json(const ReconstructionResult& r) {
  Json graphs = Json::array();
  for (const Graph& g : r.graphs) graphs.push_back(emit_graph6(g));
  Json out{{"status", to_string(r.status)}, {"graphs", std::move(graphs)}};
  if (r.reason) out["reason"] = to_string(*r.reason);
  return out;
}

inline Json to_json(const IsoCertificate& c) {
  Json out{{"verdict", to_string(c.verdict)}};
  if (!c.perm.empty()) out["permutation"] = json_one_based(c.perm);
  if (!c.perm2.empty()) out["permutation2"] = json_one_based(c.perm2);
  if (!c.reason.empty()) out["reason"] = c.reason;
  return out;
}

inline Json to_json(const RankStats& s) {
  Json hist = Json::object();
  for (auto [r, c] : s.rank_histogram) hist[std::to_string(r)] = c;
  return Json{{"n", s.n},
              {"trials", s.trials},
              {"seed", s.seed},
              {"random_set", s.random_set},
              {"full_rank_count", s.full_rank_count},
              {"full_rank_fraction", s.full_rank_fraction()},
              {"rank_histogram", std::move(hist)}};
}

/// JSON lines: one record per rank class, then one per walk-equivalent group of classes.
inline std::string to_json_lines(const RoundtripReport& rep) {
  std::ostringstream os;
  for (const auto& [r, c] : rep.by_rank) {
    os << Json{{"n", rep.n},     {"rank", r},           {"graphs", c.graphs},     {"unique_ok", c.unique_ok},
               {"pair_ok", c.pair_ok}, {"excluded", c.excluded}, {"failures", c.failures}}
              .dump()
       << '\n';
  }
  for (const auto& group : rep.walk_equivalent) {
    os << Json{{"n", rep.n}, {"walk_equivalent", group}}.dump() << '\n';
  }
  for (const auto& f : rep.failures) os << Json{{"n", rep.n}, {"failure", f}}.dump() << '\n';
  return os.str();
}

// ---------------------------------------------------------------------------------------------
// Walk matrix input.

namespace detail {

inline Rational rational_from_json(const Json& v) {
  if (v.is_number_integer()) return Rational(Integer(std::to_string(v.get<std::int64_t>())));
  if (v.is_string()) return Rational::parse(v.get<std::string>());
  throw Error(Errc::MalformedInput, "walk matrix entries must be integers or decimal strings");
}

}  // namespace detail

inline WalkMatrix walk_matrix_from_json(const Json& j) {
  try {
    const auto n = j.at("n").get<std::size_t>();
    const Json& cols = j.at("columns");
    if (cols.size() != n) throw Error(Errc::DimensionMismatch, "column count differs from n");
    ExactMatrix m(n, n, [&](std::size_t v, std::size_t k) {
      if (cols[k].size() != n) throw Error(Errc::DimensionMismatch, "column length differs from n");
      return detail::rational_from_json(cols[k][v]);
    });
    WalkMatrix w = WalkMatrix::from_matrix(std::move(m));
    if (j.contains("set") && w.set().one_based() != j.at("set").get<std::vector<std::size_t>>()) {
      throw Error(Errc::InvalidWalkMatrix, "\"set\" disagrees with column 0");
    }
    return w;
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::MalformedInput, e.what());
  }
}

/// Plain text: optional `# set: i,j,k` header, then n rows of n integers.
inline WalkMatrix walk_matrix_from_text(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::vector<std::vector<Rational>> rows;
  std::optional<std::vector<std::size_t>> declared;
  while (std::getline(in, line)) {
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    if (line[first] == '#') {
      const auto at = line.find("set:");
      if (at != std::string::npos) {
        std::vector<std::size_t> idx;
        std::string body = line.substr(at + 4);
        for (char& c : body)
          if (c == ',') c = ' ';
        std::istringstream is(body);
        long x;
        while (is >> x) {
          if (x < 1) throw Error(Errc::MalformedHeader, "set indices are one-based");
          idx.push_back(static_cast<std::size_t>(x));
        }
        declared = std::move(idx);
      }
      continue;
    }
    std::istringstream is(line);
    std::vector<Rational> row;
    std::string tok;
    while (is >> tok) row.push_back(Rational::parse(tok));
    rows.push_back(std::move(row));
  }
  const std::size_t n = rows.size();
  if (n == 0) throw Error(Errc::MalformedInput, "empty walk matrix");
  for (const auto& r : rows)
    if (r.size() != n) throw Error(Errc::DimensionMismatch, "walk matrix must be square");
  ExactMatrix m(n, n, [&](std::size_t i, std::size_t j) { return rows[i][j]; });
  WalkMatrix w = WalkMatrix::from_matrix(std::move(m));
  if (declared) {
    std::vector<std::size_t> sorted = *declared;
    std::sort(sorted.begin(), sorted.end());
    if (w.set().one_based() != sorted) throw Error(Errc::InvalidWalkMatrix, "set header disagrees with column 0");
  }
  return w;
}

inline std::string walk_matrix_to_text(const WalkMatrix& w) {
  std::ostringstream os;
  os << "# set: ";
  const auto idx = w.set().one_based();
  for (std::size_t i = 0; i < idx.size(); ++i) os << (i ? "," : "") << idx[i];
  os << '\n' << w.matrix();
  return os.str();
}

/// JSON object or the text format, by the first non-blank character.
inline WalkMatrix parse_walk_matrix(std::string_view text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string_view::npos && text[first] == '{') {
    Json j;
    try {
      j = Json::parse(text);
    } catch (const nlohmann::json::exception& e) {
      throw Error(Errc::MalformedInput, e.what());
    }
    return walk_matrix_from_json(j);
  }
  return walk_matrix_from_text(text);
}

}  // namespace walkmat

#endif  // WALKMAT_SERIALIZE_HPP
