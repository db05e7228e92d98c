#ifndef WALKMAT_TOOLS_CLI_HPP
#define WALKMAT_TOOLS_CLI_HPP

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "walkmat.hpp"

namespace walkmat::cli {

enum ExitCode : int { Ok = 0, Negative = 1, Usage = 2, DataError = 3, Inconclusive = 4 };

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Io {
  std::istream& in;
  std::ostream& out;
  std::ostream& err;
};

inline std::string read_source(const std::string& path, std::istream& in) {
  if (path == "-") return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  std::ifstream f(path, std::ios::binary);
  if (!f) throw Error(Errc::MalformedInput, "cannot read " + path);
  return {std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>()};
}

inline GraphFormat parse_format(const std::string& f) {
  if (f == "auto") return GraphFormat::Auto;
  if (f == "graph6") return GraphFormat::Graph6;
  if (f == "edges") return GraphFormat::EdgeList;
  if (f == "matrix") return GraphFormat::Matrix;
  throw UsageError("unknown format " + f);
}

/// `V`, a comma list of one-based indices, or `@file` holding such a list.
inline VertexSet parse_set(const std::string& spec, std::size_t n, std::istream& in) {
  std::string body = spec;
  if (!body.empty() && body[0] == '@') body = read_source(body.substr(1), in);
  const auto first = body.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) throw UsageError("empty set specifier");
  if (body.substr(first, 1) == "V" && body.find_first_not_of(" \t\r\n", first + 1) == std::string::npos) {
    return VertexSet::all(n);
  }
  std::vector<std::size_t> idx;
  for (char& c : body)
    if (c == ',') c = ' ';
  std::istringstream is(body);
  std::string tok;
  while (is >> tok) {
    std::size_t used = 0;
    long v = 0;
    try {
      v = std::stol(tok, &used);
    } catch (const std::exception&) {
      throw UsageError("bad set element '" + tok + "'");
    }
    if (used != tok.size()) throw UsageError("bad set element '" + tok + "'");
    if (v < 1 || static_cast<std::size_t>(v) > n) throw Error(Errc::IndexOutOfRange, "set element " + tok);
    idx.push_back(static_cast<std::size_t>(v));
  }
  if (idx.empty()) throw Error(Errc::EmptySet, "empty vertex set");
  return VertexSet::from_one_based(n, idx);
}

inline void print_matrix(std::ostream& os, const ExactMatrix& m) {
  std::vector<std::vector<std::string>> cells(m.rows());
  std::vector<std::size_t> width(m.cols(), 0);
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      cells[i].push_back(m(i, j).to_string());
      width[j] = std::max(width[j], cells[i][j].size());
    }
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) os << ' ';
      os << std::string(width[j] - cells[i][j].size(), ' ') << cells[i][j];
    }
    os << '\n';
  }
}

struct GraphArgs {
  std::string path;
  std::string format = "auto";
  std::string set = "V";
};

struct Loaded {
  Graph g;
  VertexSet s;
};

inline Loaded load(const GraphArgs& a, std::istream& in) {
  Graph g = parse_graph(read_source(a.path, in), parse_format(a.format));
  VertexSet s = parse_set(a.set, g.order(), in);
  return {std::move(g), std::move(s)};
}

inline int run(int argc, const char* const* argv, Io io) {
  CLI::App app{"Walk matrices of graphs: walk counts, main polynomials, reconstruction and certificates."};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all");

  std::string output = "table";
  std::size_t jobs = 1;
  auto add_output = [&](CLI::App* sub) {
    sub->add_option("--output,-o", output, "table or json")->check(CLI::IsMember({"table", "json"}));
  };
  auto add_graph = [&](CLI::App* sub, GraphArgs& a) {
    sub->add_option("input", a.path, "graph file, or - for stdin")->required();
    sub->add_option("--format,-f", a.format, "auto, graph6, edges or matrix")
        ->check(CLI::IsMember({"auto", "graph6", "edges", "matrix"}));
    sub->add_option("--set,-s", a.set, "V, a list like 1,3,4, or @file");
    add_output(sub);
  };

  GraphArgs one;
  auto* walk = app.add_subcommand("walk", "print the walk matrix W^S");
  add_graph(walk, one);
  auto* mainpoly = app.add_subcommand("mainpoly", "print rank(W^S) and the main polynomial");
  add_graph(mainpoly, one);
  bool numeric = false;
  auto* spectral = app.add_subcommand("spectral", "print the spectral summary");
  add_graph(spectral, one);
  spectral->add_flag("--numeric", numeric, "also realize the main eigenvalues and eigenvectors numerically");
  auto* restrict_cmd = app.add_subcommand("restrict", "print the W-restriction A_W");
  add_graph(restrict_cmd, one);
  bool labels = false;
  auto* canon = app.add_subcommand("canon", "print lex(W^S) and its reordering permutation");
  add_graph(canon, one);
  canon->add_flag("--labels", labels, "append the vertex label to each sorted row");

  std::string walk_path;
  std::optional<std::size_t> edges;
  auto* recon = app.add_subcommand("reconstruct", "recover adjacency matrices from a walk matrix");
  recon->add_option("input", walk_path, "walk matrix (JSON or text), or - for stdin")->required();
  recon->add_option("--edges,-m", edges, "edge count, needed at rank n-2 when S is not V");
  add_output(recon);

  GraphArgs first, second;
  auto add_pair = [&](CLI::App* sub) {
    sub->add_option("first", first.path, "first graph")->required();
    sub->add_option("second", second.path, "second graph")->required();
    sub->add_option("--format,-f", first.format, "auto, graph6, edges or matrix")
        ->check(CLI::IsMember({"auto", "graph6", "edges", "matrix"}));
    sub->add_option("--set1", first.set, "vertex set of the first graph");
    sub->add_option("--set2", second.set, "vertex set of the second graph");
    add_output(sub);
  };
  auto* iso = app.add_subcommand("iso", "isomorphism certificate for two (graph, set) pairs");
  add_pair(iso);
  auto* equiv = app.add_subcommand("equiv", "walk equivalence of two (graph, set) pairs");
  add_pair(equiv);

  std::size_t n = 8, trials = 1000;
  std::optional<std::uint64_t> seed;
  bool random_set = false;
  auto* stats = app.add_subcommand("stats", "rank distribution of W over random graphs");
  stats->add_option("--n", n, "order")->check(CLI::Range(1, 64));
  stats->add_option("--trials", trials, "number of samples")->check(CLI::PositiveNumber);
  stats->add_option("--seed", seed, "generator seed (default: WALKMAT_SEED or built-in)");
  stats->add_flag("--random-set", random_set, "use a random non-empty S instead of V");
  stats->add_option("--jobs,-j", jobs, "worker threads")->check(CLI::PositiveNumber);
  add_output(stats);
  std::size_t rt_n = 5;
  auto* roundtrip = app.add_subcommand("roundtrip", "reconstruct every graph on n <= 7 vertices from W^V");
  roundtrip->add_option("--n", rt_n, "order")->check(CLI::Range(1, 7));
  roundtrip->add_option("--jobs,-j", jobs, "worker threads")->check(CLI::PositiveNumber);
  add_output(roundtrip);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, io.out, io.err);
    return code == 0 ? Ok : Usage;
  }
  second.format = first.format;
  const bool json = output == "json";
  std::ostream& out = io.out;

  try {
    if (walk->parsed()) {
      const auto [g, s] = load(one, io.in);
      const WalkMatrix w = walk_matrix(g, s);
      if (json) out << to_json(w).dump() << '\n';
      else print_matrix(out, w.matrix());
      return Ok;
    }
    if (mainpoly->parsed()) {
      const auto [g, s] = load(one, io.in);
      const SpectralSummary sum = spectral_summary(g, s);
      if (json) out << Json{{"rank", sum.rank}, {"main_poly", to_json(sum.main_poly)}}.dump() << '\n';
      else out << "rank " << sum.rank << '\n' << "main_poly " << sum.main_poly.to_string() << '\n';
      return Ok;
    }
    if (spectral->parsed()) {
      const auto [g, s] = load(one, io.in);
      const WalkMatrix w = walk_matrix(g, s);
      const SpectralSummary sum = spectral_summary(w);
      std::optional<NumericRealization> real;
      if (numeric) real = main_eigen_realize(w, sum);
      if (json) {
        out << to_json(sum, real ? &*real : nullptr).dump() << '\n';
      } else {
        out << "rank " << sum.rank << '\n' << "main_poly " << sum.main_poly.to_string() << '\n';
        if (sum.char_poly) out << "char_poly " << sum.char_poly->to_string() << '\n';
        if (real) {
          out << "mu";
          for (double m : real->mu) out << ' ' << m;
          out << '\n' << "reconstruction_error " << real->reconstruction_error << '\n';
        }
      }
      return Ok;
    }
    if (restrict_cmd->parsed()) {
      const auto [g, s] = load(one, io.in);
      const ExactMatrix a = restriction(g, s);
      if (json) out << to_json(a).dump() << '\n';
      else print_matrix(out, a);
      return Ok;
    }
    if (canon->parsed()) {
      const auto [g, s] = load(one, io.in);
      const LexForm lf = lex_form(walk_matrix(g, s));
      const std::vector<std::size_t> from = invert(lf.perm);
      if (json) {
        Json j{{"matrix", to_json(lf.matrix)}, {"permutation", json_one_based(lf.perm)},
               {"cycles", cycle_notation(lf.perm)}};
        if (labels) {
          Json l = Json::array();
          for (std::size_t v : from) l.push_back(Graph::label(v));
          j["labels"] = std::move(l);
        }
        out << j.dump() << '\n';
      } else {
        std::ostringstream body;
        print_matrix(body, lf.matrix);
        std::istringstream rows(body.str());
        std::string row;
        for (std::size_t pos = 0; std::getline(rows, row); ++pos) {
          out << row;
          if (labels) out << "  " << Graph::label(from[pos]);
          out << '\n';
        }
        out << "permutation " << cycle_notation(lf.perm) << '\n';
      }
      return Ok;
    }
    if (recon->parsed()) {
      const WalkMatrix w = parse_walk_matrix(read_source(walk_path, io.in));
      const ReconstructionResult r = reconstruct({w, edges});
      if (json) {
        out << to_json(r).dump() << '\n';
      } else {
        out << to_string(r.status) << '\n';
        for (const Graph& g : r.graphs) out << emit_graph6(g) << '\n';
        if (r.reason) out << "reason " << to_string(*r.reason) << '\n';
      }
      return r.status == ReconstructionResult::Status::Undetermined ? Inconclusive : Ok;
    }
    if (iso->parsed() || equiv->parsed()) {
      if (first.path == "-" && second.path == "-") throw UsageError("only one input may be stdin");
      const auto [g1, s1] = load(first, io.in);
      const auto [g2, s2] = load(second, io.in);
      if (iso->parsed()) {
        const IsoCertificate c = certify_isomorphism(g1, s1, g2, s2);
        if (json) {
          out << to_json(c).dump() << '\n';
        } else {
          out << to_string(c.verdict) << '\n';
          if (!c.perm.empty()) out << "permutation " << cycle_notation(c.perm) << '\n';
          if (!c.perm2.empty()) out << "permutation2 " << cycle_notation(c.perm2) << '\n';
          if (!c.reason.empty()) out << "reason " << c.reason << '\n';
        }
        switch (c.verdict) {
          case Verdict::Isomorphic:
          case Verdict::IsomorphicPair: return Ok;
          case Verdict::NotIsomorphic: return Negative;
          case Verdict::Inconclusive: return Inconclusive;
        }
      }
      const bool same = walk_equivalent(walk_matrix(g1, s1), walk_matrix(g2, s2));
      if (json) out << Json{{"walk_equivalent", same}}.dump() << '\n';
      else out << (same ? "walk-equivalent" : "not walk-equivalent") << '\n';
      return same ? Ok : Negative;
    }
    if (stats->parsed()) {
      if (!seed) {
        if (const char* env = std::getenv("WALKMAT_SEED")) {
          try {
            seed = std::stoull(env);
          } catch (const std::exception&) {
            throw UsageError("WALKMAT_SEED is not an unsigned integer");
          }
        } else {
          seed = default_seed;
        }
      }
      const RankStats st = rank_statistics(n, trials, *seed, jobs, random_set);
      if (json) {
        out << to_json(st).dump() << '\n';
      } else {
        out << "n " << st.n << "  trials " << st.trials << "  seed " << st.seed << '\n';
        for (auto [r, c] : st.rank_histogram) out << "rank " << r << ": " << c << '\n';
        out << "full rank fraction " << st.full_rank_fraction() << '\n';
      }
      return Ok;
    }
    if (roundtrip->parsed()) {
      const RoundtripReport rep = exhaustive_roundtrip(rt_n, jobs);
      if (json) {
        out << to_json_lines(rep);
      } else {
        out << "n " << rep.n << "  classes " << rep.classes << '\n';
        for (const auto& [r, c] : rep.by_rank) {
          out << "rank " << r << ": " << c.graphs << " graphs, " << c.unique_ok << " unique, " << c.pair_ok
              << " in pair, " << c.excluded << " excluded, " << c.failures << " failures\n";
        }
        for (const auto& grp : rep.walk_equivalent) {
          out << "walk-equivalent:";
          for (const auto& g6 : grp) out << ' ' << g6;
          out << '\n';
        }
        for (const auto& f : rep.failures) out << "failure " << f << '\n';
      }
      return rep.failures.empty() ? Ok : Negative;
    }
  } catch (const UsageError& e) {
    io.err << "usage error: " << e.what() << '\n';
    return Usage;
  } catch (const Error& e) {
    io.err << "error: " << to_string(e.code()) << ": " << e.what() << '\n';
    return DataError;
  }
  return Usage;
}

}  // namespace walkmat::cli

#endif  // WALKMAT_TOOLS_CLI_HPP
