#ifndef WALKMAT_CANONICAL_HPP
#define WALKMAT_CANONICAL_HPP

#include <algorithm>
#include <compare>
#include <cstddef>
#include <numeric>
#include <optional>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "walkmat/error.hpp"
#include "walkmat/graph.hpp"
#include "walkmat/linalg.hpp"
#include "walkmat/matrix.hpp"
#include "walkmat/spectral.hpp"
#include "walkmat/walk.hpp"

namespace walkmat {

/// Rows sorted in descending lexicographic order. Row perm[i] of `matrix` is row i of the input;
/// `ties` lists the input indices of every run of two or more identical rows.
struct LexForm {
  ExactMatrix matrix;
  std::vector<std::size_t> perm;
  std::vector<std::vector<std::size_t>> ties;
};

inline std::strong_ordering compare_rows(std::span<const Rational> a, std::span<const Rational> b) {
  for (std::size_t k = 0; k < std::min(a.size(), b.size()); ++k)
    if (auto c = a[k] <=> b[k]; c != 0) return c;
  return a.size() <=> b.size();
}

inline LexForm lex_form(const ExactMatrix& w) {
  const std::size_t n = w.rows();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return compare_rows(w.row(a), w.row(b)) > 0; });
  LexForm out;
  out.perm.assign(n, 0);
  for (std::size_t pos = 0; pos < n; ++pos) out.perm[order[pos]] = pos;
  out.matrix = w.permute_rows(out.perm);
  for (std::size_t pos = 0; pos < n;) {
    std::size_t end = pos + 1;
    while (end < n && compare_rows(w.row(order[pos]), w.row(order[end])) == 0) ++end;
    if (end - pos > 1) out.ties.emplace_back(order.begin() + static_cast<std::ptrdiff_t>(pos),
                                             order.begin() + static_cast<std::ptrdiff_t>(end));
    pos = end;
  }
  return out;
}

inline LexForm lex_form(const WalkMatrix& w) { return lex_form(w.matrix()); }

inline bool walk_equivalent(const WalkMatrix& a, const WalkMatrix& b) {
  if (a.order() != b.order()) throw Error(Errc::OrderMismatch, "walk matrices of different order");
  return lex_form(a).matrix == lex_form(b).matrix;
}

/// Cycle notation with one-based labels, fixed points included: "(v3,v1,v4)(v2)".
inline std::string cycle_notation(std::span<const std::size_t> perm) {
  std::vector<bool> seen(perm.size(), false);
  std::ostringstream os;
  for (std::size_t start = 0; start < perm.size(); ++start) {
    if (seen[start]) continue;
    os << '(';
    std::size_t v = start;
    bool first = true;
    do {
      seen[v] = true;
      os << (first ? "" : ",") << Graph::label(v);
      first = false;
      v = perm[v];
    } while (v != start);
    os << ')';
  }
  return os.str();
}

inline std::vector<std::size_t> invert(std::span<const std::size_t> perm) {
  std::vector<std::size_t> inv(perm.size());
  for (std::size_t i = 0; i < perm.size(); ++i) inv[perm[i]] = i;
  return inv;
}

/// True iff relabelling g1 by perm gives exactly g2 and carries s1 onto s2.
inline bool is_isomorphism(const Graph& g1, const VertexSet& s1, const Graph& g2, const VertexSet& s2,
                           std::span<const std::size_t> perm) {
  const std::size_t n = g1.order();
  if (g2.order() != n || perm.size() != n) return false;
  std::vector<bool> hit(n, false);
  for (std::size_t p : perm) {
    if (p >= n || hit[p]) return false;
    hit[p] = true;
  }
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v)
      if (g1.has_edge(u, v) != g2.has_edge(perm[u], perm[v])) return false;
  return s1.mapped(perm) == s2;
}

enum class Verdict { Isomorphic, IsomorphicPair, NotIsomorphic, Inconclusive };

constexpr std::string_view to_string(Verdict v) noexcept {
  switch (v) {
    case Verdict::Isomorphic: return "isomorphic";
    case Verdict::IsomorphicPair: return "isomorphic_pair";
    case Verdict::NotIsomorphic: return "not_isomorphic";
    case Verdict::Inconclusive: return "inconclusive";
  }
  return "unknown";
}

struct IsoCertificate {
  Verdict verdict = Verdict::Inconclusive;
  std::vector<std::size_t> perm;   // vertex i of the first graph -> perm[i] of the second
  std::vector<std::size_t> perm2;  // second isomorphism for IsomorphicPair
  std::string reason;              // set for Inconclusive
};

/// Decides whether some isomorphism g1 -> g2 carries s1 onto s2, using lex forms of the walk
/// matrices. Definitive only when rank(W^{s1}) >= n-1; every returned permutation is verified.
inline IsoCertificate certify_isomorphism(const Graph& g1, const VertexSet& s1, const Graph& g2, const VertexSet& s2) {
  const std::size_t n = g1.order();
  if (g2.order() != n || s1.universe() != n || s2.universe() != n) {
    throw Error(Errc::OrderMismatch, "graphs or vertex sets of different order");
  }
  const WalkMatrix w1 = walk_matrix(g1, s1);
  const WalkMatrix w2 = walk_matrix(g2, s2);
  const LexForm l1 = lex_form(w1);
  const LexForm l2 = lex_form(w2);
  const std::size_t r = rank(w1.matrix());
  if (r + 1 < n) {
    return {Verdict::Inconclusive, {}, {}, "RankTooLow"};
  }
  if (l1.matrix != l2.matrix) return {Verdict::NotIsomorphic, {}, {}, {}};

  const std::vector<std::size_t> h2_inv = invert(l2.perm);
  std::vector<std::size_t> g(n);
  for (std::size_t i = 0; i < n; ++i) g[i] = h2_inv[l1.perm[i]];
  std::vector<std::vector<std::size_t>> candidates{g};
  if (l1.ties.size() == 1 && l1.ties.front().size() == 2) {
    const std::size_t a = l1.ties.front()[0];
    const std::size_t b = l1.ties.front()[1];
    std::vector<std::size_t> swapped = g;
    std::swap(swapped[a], swapped[b]);
    candidates.push_back(std::move(swapped));
  }
  std::vector<std::vector<std::size_t>> verified;
  for (auto& c : candidates)
    if (is_isomorphism(g1, s1, g2, s2, c)) verified.push_back(std::move(c));
  if (verified.empty()) return {Verdict::Inconclusive, {}, {}, "VerificationFailed"};
  if (verified.size() == 1) return {Verdict::Isomorphic, std::move(verified[0]), {}, {}};
  return {Verdict::IsomorphicPair, std::move(verified[0]), std::move(verified[1]), {}};
}

/// Automorphisms of g mapping s1 onto s2.
inline IsoCertificate certify_set_automorphism(const Graph& g, const VertexSet& s1, const VertexSet& s2) {
  return certify_isomorphism(g, s1, g, s2);
}

/// Checks W1 == W2  <=>  (s1 == s2 and A_W1 == A_W2) on graphs sharing one vertex set.
/// Returns the common truth value; a disagreement raises TheoremViolation.
inline bool restriction_equivalence_check(const Graph& g1, const VertexSet& s1, const Graph& g2, const VertexSet& s2) {
  if (g1.order() != g2.order()) throw Error(Errc::OrderMismatch, "graphs of different order");
  const WalkMatrix w1 = walk_matrix(g1, s1);
  const WalkMatrix w2 = walk_matrix(g2, s2);
  const bool same_walk = w1 == w2;
  const bool same_restriction = s1 == s2 && restriction(w1) == restriction(w2);
  if (same_walk != same_restriction) {
    throw Error(Errc::TheoremViolation, same_walk ? "equal walk matrices but different restrictions"
                                                  : "equal restrictions but different walk matrices");
  }
  return same_walk;
}

}  // namespace walkmat

#endif  // WALKMAT_CANONICAL_HPP
