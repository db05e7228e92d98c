#ifndef WALKMAT_ORACLE_HPP
#define WALKMAT_ORACLE_HPP

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <limits>
#include <map>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <thread>
#include <vector>

#include <Eigen/Eigenvalues>

#include "walkmat/canonical.hpp"
#include "walkmat/error.hpp"
#include "walkmat/graph.hpp"
#include "walkmat/graph_io.hpp"
#include "walkmat/linalg.hpp"
#include "walkmat/rational.hpp"
#include "walkmat/reconstruct.hpp"
#include "walkmat/walk.hpp"

namespace walkmat {

/// Runs fn(i) for i in [0, count) on up to `jobs` threads. Callers write into slot i of a
/// preallocated result vector, so the reduction order never depends on scheduling.
inline void parallel_for(std::size_t jobs, std::size_t count, const std::function<void(std::size_t)>& fn) {
  jobs = std::max<std::size_t>(1, std::min(jobs, count));
  if (jobs == 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::atomic<bool> failed{false};
  std::vector<std::thread> pool;
  for (std::size_t t = 0; t < jobs; ++t) {
    pool.emplace_back([&] {
      for (std::size_t i; (i = next.fetch_add(1)) < count && !failed.load();) {
        try {
          fn(i);
        } catch (...) {
          if (!failed.exchange(true)) failure = std::current_exception();
        }
      }
    });
  }
  for (auto& th : pool) th.join();
  if (failure) std::rethrow_exception(failure);
}

struct WalkCountTable {
  std::vector<std::vector<Integer>> counts;  // counts[v][k]
};

/// Walk counts by pushing along each edge in both directions; no matrix code involved.
inline WalkCountTable count_walks(const Graph& g, const VertexSet& s, std::size_t max_k) {
  const std::size_t n = g.order();
  const auto edges = g.edges();
  std::vector<Integer> cur(n, 0);
  for (std::size_t v : s.members()) cur[v] = 1;
  WalkCountTable t;
  t.counts.assign(n, std::vector<Integer>(max_k + 1));
  for (std::size_t k = 0;; ++k) {
    for (std::size_t v = 0; v < n; ++v) t.counts[v][k] = cur[v];
    if (k == max_k) break;
    std::vector<Integer> next(n, 0);
    for (auto [a, b] : edges) {
      next[a - 1] += cur[b - 1];
      next[b - 1] += cur[a - 1];
    }
    cur = std::move(next);
  }
  return t;
}

/// Backtracking search for an isomorphism g1 -> g2 (perm[i] is the image of vertex i).
inline std::optional<std::vector<std::size_t>> brute_force_isomorphic(const Graph& g1, const Graph& g2) {
  constexpr std::size_t cap = 10;
  const std::size_t n = g1.order();
  if (n > cap || g2.order() > cap) throw Error(Errc::TooLarge, "brute-force isomorphism is capped at 10 vertices");
  if (g2.order() != n || g1.edge_count() != g2.edge_count()) return std::nullopt;
  const auto d1 = g1.degree_sequence();
  const auto d2 = g2.degree_sequence();
  {
    auto s1 = d1, s2 = d2;
    std::sort(s1.begin(), s1.end());
    std::sort(s2.begin(), s2.end());
    if (s1 != s2) return std::nullopt;
  }
  std::vector<std::size_t> perm(n, n);
  std::vector<bool> used(n, false);
  std::function<bool(std::size_t)> extend = [&](std::size_t v) {
    if (v == n) return true;
    for (std::size_t w = 0; w < n; ++w) {
      if (used[w] || d1[v] != d2[w]) continue;
      bool ok = true;
      for (std::size_t u = 0; u < v && ok; ++u) ok = g1.has_edge(u, v) == g2.has_edge(perm[u], w);
      if (!ok) continue;
      perm[v] = w;
      used[w] = true;
      if (extend(v + 1)) return true;
      used[w] = false;
    }
    return false;
  };
  if (!extend(0)) return std::nullopt;
  return perm;
}

/// Number of eigenspaces of A onto which the characteristic vector of s projects with norm > tol.
inline std::size_t main_eigenvalue_count(const Graph& g, const VertexSet& s, double tol = 1e-7) {
  const std::size_t n = g.order();
  if (n == 0) return 0;
  const auto ni = static_cast<Eigen::Index>(n);
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(ni, ni);
  for (auto [u, v] : g.edges()) {
    a(static_cast<Eigen::Index>(u - 1), static_cast<Eigen::Index>(v - 1)) = 1.0;
    a(static_cast<Eigen::Index>(v - 1), static_cast<Eigen::Index>(u - 1)) = 1.0;
  }
  Eigen::VectorXd e = Eigen::VectorXd::Zero(ni);
  for (std::size_t v : s.members()) e(static_cast<Eigen::Index>(v)) = 1.0;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(a);
  const Eigen::VectorXd& lambda = es.eigenvalues();  // ascending
  const Eigen::VectorXd coords = es.eigenvectors().transpose() * e;
  const double cluster = 1e-6 * std::max(1.0, lambda.cwiseAbs().maxCoeff());
  std::size_t count = 0;
  for (Eigen::Index i = 0; i < ni;) {
    Eigen::Index j = i + 1;
    while (j < ni && lambda(j) - lambda(j - 1) <= cluster) ++j;
    if (coords.segment(i, j - i).norm() > tol) ++count;
    i = j;
  }
  return count;
}

/// True iff the eigenspace projection count equals the exact rank of W^S.
inline bool float_eigencheck(const Graph& g, const VertexSet& s, double tol = 1e-7) {
  return main_eigenvalue_count(g, s, tol) == rank(walk_matrix(g, s).matrix());
}

/// G(n, 1/2): one top bit of the engine per vertex pair, pairs in row-major upper-triangle order.
inline Graph random_graph(std::size_t n, std::mt19937_64& rng) {
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t u = 1; u <= n; ++u)
    for (std::size_t v = u + 1; v <= n; ++v)
      if (rng() >> 63) edges.emplace_back(u, v);
  return Graph::from_edge_list(n, std::span<const std::pair<std::size_t, std::size_t>>(edges));
}

/// Uniform non-empty subset, by rejection.
inline VertexSet random_vertex_set(std::size_t n, std::mt19937_64& rng) {
  for (;;) {
    std::vector<std::size_t> members;
    for (std::size_t v = 0; v < n; ++v)
      if (rng() >> 63) members.push_back(v);
    if (!members.empty()) return VertexSet(n, std::move(members));
  }
}

inline std::vector<std::size_t> random_permutation(std::size_t n, std::mt19937_64& rng) {
  std::vector<std::size_t> p(n);
  for (std::size_t i = 0; i < n; ++i) p[i] = i;
  for (std::size_t i = n; i > 1; --i) std::swap(p[i - 1], p[rng() % i]);
  return p;
}

/// Engine for trial t of a run seeded with `seed`; independent of how trials are scheduled.
inline std::mt19937_64 trial_engine(std::uint64_t seed, std::uint64_t t) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(t), static_cast<std::uint32_t>(t >> 32)};
  return std::mt19937_64(seq);
}

struct RankStats {
  std::size_t n = 0;
  std::size_t trials = 0;
  std::size_t full_rank_count = 0;
  std::map<std::size_t, std::size_t> rank_histogram;
  std::uint64_t seed = 0;
  bool random_set = false;

  double full_rank_fraction() const {
    return trials == 0 ? 0.0 : static_cast<double>(full_rank_count) / static_cast<double>(trials);
  }
};

inline constexpr std::uint64_t default_seed = 20240611;

/// Rank distribution of W^V (or W^S for a random non-empty S) over G(n, 1/2) samples.
inline RankStats rank_statistics(std::size_t n, std::size_t trials, std::uint64_t seed, std::size_t jobs = 1,
                                 bool random_set = false) {
  if (n == 0 || trials == 0) throw Error(Errc::MalformedInput, "rank_statistics needs n >= 1 and trials >= 1");
  std::vector<std::size_t> ranks(trials);
  parallel_for(jobs, trials, [&](std::size_t t) {
    auto rng = trial_engine(seed, t);
    const Graph g = random_graph(n, rng);
    const VertexSet s = random_set ? random_vertex_set(n, rng) : VertexSet::all(n);
    ranks[t] = rank(walk_matrix(g, s).matrix());
  });
  RankStats out;
  out.n = n;
  out.trials = trials;
  out.seed = seed;
  out.random_set = random_set;
  for (std::size_t r : ranks) {
    ++out.rank_histogram[r];
    if (r == n) ++out.full_rank_count;
  }
  return out;
}

/// Canonical relabelling: vertices ordered by colour refinement, ties broken by the permutation
/// within colour cells that gives the lexicographically least upper-triangle bit string.
inline Graph canonical_graph(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<std::size_t> colour(n, 0);
  for (std::size_t classes = 1;;) {
    std::vector<std::pair<std::vector<std::size_t>, std::size_t>> sig(n);
    for (std::size_t v = 0; v < n; ++v) {
      sig[v].first.push_back(colour[v]);
      std::vector<std::size_t> nc;
      for (std::size_t u : g.neighbors(v)) nc.push_back(colour[u]);
      std::sort(nc.begin(), nc.end());
      sig[v].first.insert(sig[v].first.end(), nc.begin(), nc.end());
      sig[v].second = v;
    }
    std::vector<std::vector<std::size_t>> keys;
    for (auto& s : sig) keys.push_back(s.first);
    std::sort(keys.begin(), keys.end());
    keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
    for (std::size_t v = 0; v < n; ++v)
      colour[v] = static_cast<std::size_t>(std::lower_bound(keys.begin(), keys.end(), sig[v].first) - keys.begin());
    if (keys.size() == classes) break;
    classes = keys.size();
  }
  std::vector<std::vector<std::size_t>> cells;
  for (std::size_t c = 0;; ++c) {
    std::vector<std::size_t> cell;
    for (std::size_t v = 0; v < n; ++v)
      if (colour[v] == c) cell.push_back(v);
    if (cell.empty()) break;
    cells.push_back(std::move(cell));
  }

  std::vector<std::size_t> order, best_order;
  std::vector<bool> best_bits;
  auto bits_of = [&](const std::vector<std::size_t>& ord) {
    std::vector<bool> bits;
    bits.reserve(n * (n - 1) / 2);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) bits.push_back(g.has_edge(ord[i], ord[j]));
    return bits;
  };
  std::function<void(std::size_t)> walk_cells = [&](std::size_t c) {
    if (c == cells.size()) {
      auto bits = bits_of(order);
      if (best_order.empty() || bits < best_bits) {
        best_bits = std::move(bits);
        best_order = order;
      }
      return;
    }
    auto cell = cells[c];
    do {
      order.insert(order.end(), cell.begin(), cell.end());
      walk_cells(c + 1);
      order.resize(order.size() - cell.size());
    } while (std::next_permutation(cell.begin(), cell.end()));
  };
  walk_cells(0);
  std::vector<std::size_t> perm(n);
  for (std::size_t pos = 0; pos < n; ++pos) perm[best_order[pos]] = pos;
  return g.relabel(perm);
}

/// One representative per isomorphism class on n vertices, in canonical labelling.
inline std::vector<Graph> graph_classes(std::size_t n) {
  std::vector<Graph> level{Graph(0)};
  for (std::size_t k = 1; k <= n; ++k) {
    std::map<std::string, Graph> seen;
    for (const Graph& h : level) {
      const auto base = h.edges();
      for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (k - 1)); ++mask) {
        auto edges = base;
        for (std::size_t u = 0; u + 1 < k; ++u)
          if (mask >> u & 1) edges.emplace_back(u + 1, k);
        Graph c = canonical_graph(Graph::from_edge_list(k, std::span<const std::pair<std::size_t, std::size_t>>(edges)));
        seen.emplace(emit_graph6(c), std::move(c));
      }
    }
    level.clear();
    for (auto& [key, gr] : seen) level.push_back(std::move(gr));
  }
  return level;
}

struct RankClassCounts {
  std::size_t graphs = 0;
  std::size_t unique_ok = 0;    // reconstruct returned Unique(original)
  std::size_t pair_ok = 0;      // original found among rank n-2 candidates
  std::size_t excluded = 0;     // below rank n-2
  std::size_t failures = 0;
};

struct RoundtripReport {
  std::size_t n = 0;
  std::size_t classes = 0;
  std::map<std::size_t, RankClassCounts> by_rank;
  std::vector<std::string> failures;                         // graph6 of failing graphs
  std::vector<std::vector<std::string>> walk_equivalent;     // non-isomorphic classes sharing lex(W^V)

  std::size_t failure_count() const { return failures.size(); }
};

/// Outcome of the round trip W^V -> reconstruct for a single graph.
struct RoundtripOutcome {
  std::size_t rank = 0;
  enum class Kind { UniqueOk, PairOk, Excluded, Failure } kind = Kind::Excluded;
};

inline RoundtripOutcome roundtrip_one(const Graph& g, const VertexSet& s) {
  const std::size_t n = g.order();
  const WalkMatrix w = walk_matrix(g, s);
  RoundtripOutcome out;
  out.rank = rank(w.matrix());
  using Kind = RoundtripOutcome::Kind;
  if (out.rank + 2 < n) return out;
  ReconstructionInput in{w, std::nullopt};
  if (out.rank + 2 == n && !s.is_all()) in.edge_count_hint = g.edge_count();
  const ReconstructionResult res = reconstruct(in);
  if (out.rank + 1 >= n) {
    out.kind = res.status == ReconstructionResult::Status::Unique && res.graphs.front() == g ? Kind::UniqueOk : Kind::Failure;
  } else {
    const bool found = std::find(res.graphs.begin(), res.graphs.end(), g) != res.graphs.end();
    out.kind = found ? Kind::PairOk : Kind::Failure;
  }
  return out;
}

/// Every isomorphism class on n <= 7 vertices: W^V is reconstructed and compared with the original.
inline RoundtripReport exhaustive_roundtrip(std::size_t n, std::size_t jobs = 1) {
  if (n == 0 || n > 7) throw Error(Errc::TooLarge, "exhaustive round trip supports 1 <= n <= 7");
  const std::vector<Graph> classes = graph_classes(n);
  std::vector<RoundtripOutcome> outcomes(classes.size());
  std::vector<ExactMatrix> lex(classes.size());
  parallel_for(jobs, classes.size(), [&](std::size_t i) {
    outcomes[i] = roundtrip_one(classes[i], VertexSet::all(n));
    lex[i] = lex_form(walk_matrix(classes[i], VertexSet::all(n))).matrix;
  });
  RoundtripReport rep;
  rep.n = n;
  rep.classes = classes.size();
  std::map<std::string, std::vector<std::string>> groups;
  for (std::size_t i = 0; i < classes.size(); ++i) {
    auto& c = rep.by_rank[outcomes[i].rank];
    ++c.graphs;
    switch (outcomes[i].kind) {
      case RoundtripOutcome::Kind::UniqueOk: ++c.unique_ok; break;
      case RoundtripOutcome::Kind::PairOk: ++c.pair_ok; break;
      case RoundtripOutcome::Kind::Excluded: ++c.excluded; break;
      case RoundtripOutcome::Kind::Failure:
        ++c.failures;
        rep.failures.push_back(emit_graph6(classes[i]));
        break;
    }
    std::ostringstream key;
    key << lex[i];
    groups[key.str()].push_back(emit_graph6(classes[i]));
  }
  for (auto& [key, members] : groups)
    if (members.size() > 1) rep.walk_equivalent.push_back(std::move(members));
  return rep;
}

/// All graphs on the vertex order of W whose walk matrix for the set in column 0 equals W.
/// Search over adjacency rows using sum_{u ~ v} W[u][k] = W[v][k+1]; at most `limit` results.
inline std::vector<Graph> realizations_of_walk_matrix(const WalkMatrix& w, std::size_t limit = 16) {
  const std::size_t n = w.order();
  if (n > 12) throw Error(Errc::TooLarge, "realization search is capped at 12 vertices");
  const ExactMatrix& m = w.matrix();
  std::vector<std::vector<std::int64_t>> val(n, std::vector<std::int64_t>(n));
  for (std::size_t v = 0; v < n; ++v)
    for (std::size_t k = 0; k < n; ++k) {
      const Integer& x = m(v, k).num();
      if (!x.fits_slong_p()) throw Error(Errc::TooLarge, "walk matrix entry exceeds 64 bits");
      val[v][k] = x.get_si();
    }
  // residual[v][k] = W[v][k+1] - sum over chosen neighbours u of W[u][k], k < n-1
  std::vector<std::vector<std::int64_t>> residual(n, std::vector<std::int64_t>(n - 1));
  for (std::size_t v = 0; v < n; ++v)
    for (std::size_t k = 0; k + 1 < n; ++k) residual[v][k] = val[v][k + 1];
  std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
  std::vector<Graph> out;

  auto apply = [&](std::size_t a, std::size_t b, int sign) {
    bool ok = true;
    for (std::size_t k = 0; k + 1 < n; ++k) {
      residual[a][k] -= sign * val[b][k];
      residual[b][k] -= sign * val[a][k];
      ok = ok && residual[a][k] >= 0 && residual[b][k] >= 0;
    }
    return ok;
  };
  auto zero = [&](std::size_t v) {
    return std::all_of(residual[v].begin(), residual[v].end(), [](std::int64_t x) { return x == 0; });
  };
  std::function<void(std::size_t, std::size_t)> search = [&](std::size_t v, std::size_t u) {
    if (out.size() >= limit) return;
    if (v + 1 >= n) {
      if (n == 0 || zero(n - 1)) {
        std::vector<std::pair<std::size_t, std::size_t>> edges;
        for (std::size_t a = 0; a < n; ++a)
          for (std::size_t b = a + 1; b < n; ++b)
            if (adj[a][b]) edges.emplace_back(a + 1, b + 1);
        Graph g = Graph::from_edge_list(n, std::span<const std::pair<std::size_t, std::size_t>>(edges));
        if (walk_matrix(g, VertexSet::from_characteristic(m.col(0))) == w) out.push_back(std::move(g));
      }
      return;
    }
    if (u == n) {
      if (zero(v)) search(v + 1, v + 2);
      return;
    }
    if (apply(v, u, 1)) {
      adj[v][u] = adj[u][v] = true;
      search(v, u + 1);
      adj[v][u] = adj[u][v] = false;
    }
    apply(v, u, -1);
    search(v, u + 1);
  };
  search(0, 1);
  return out;
}

}  // namespace walkmat

#endif  // WALKMAT_ORACLE_HPP
