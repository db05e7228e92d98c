#ifndef WALKMAT_TESTS_FIXTURES_HPP
#define WALKMAT_TESTS_FIXTURES_HPP

#include <fstream>
#include <iterator>
#include <string>
#include <vector>

#include "walkmat.hpp"

namespace fixtures {

using walkmat::ExactMatrix;
using walkmat::Graph;
using walkmat::VertexSet;
using walkmat::WalkMatrix;

inline std::string data_path(const std::string& name) { return std::string(WALKMAT_DATA_DIR) + "/" + name; }

inline std::string read_data(const std::string& name) {
  std::ifstream f(data_path(name));
  return {std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>()};
}

inline ExactMatrix rows(const std::vector<std::vector<long>>& r) { return ExactMatrix::from_rows(r); }

inline Graph quad4() { return Graph::from_edge_list(4, {{1, 2}, {2, 3}, {2, 4}, {3, 4}}); }

inline VertexSet set_of(std::size_t n, std::vector<std::size_t> one_based) {
  return VertexSet::from_one_based(n, one_based);
}

// Walk matrices printed for the four-vertex example graph.
inline ExactMatrix quad4_wv() { return rows({{1, 1, 3, 5}, {1, 3, 5, 13}, {1, 2, 5, 10}, {1, 2, 5, 10}}); }
inline ExactMatrix quad4_w1() { return rows({{1, 0, 1, 0}, {0, 1, 0, 3}, {0, 0, 1, 1}, {0, 0, 1, 1}}); }
inline ExactMatrix quad4_w2() { return rows({{0, 1, 0, 3}, {1, 0, 3, 2}, {0, 1, 1, 4}, {0, 1, 1, 4}}); }
inline ExactMatrix quad4_w3() { return rows({{0, 0, 1, 1}, {0, 1, 1, 4}, {1, 0, 2, 2}, {0, 1, 1, 3}}); }
inline ExactMatrix quad4_w4() { return rows({{0, 0, 1, 1}, {0, 1, 1, 4}, {0, 1, 1, 3}, {1, 0, 2, 2}}); }

inline ExactMatrix bits(const std::vector<std::string>& r) {
  std::vector<std::vector<long>> out;
  for (const auto& s : r) {
    std::vector<long> row;
    for (char c : s) row.push_back(c == '1' ? 1 : 0);
    out.push_back(row);
  }
  return ExactMatrix::from_rows(out);
}

inline ExactMatrix pair8_a1() {
  return bits({"00011010", "00101001", "01001100", "10000100", "11100010", "00110000", "10001000", "01000000"});
}
inline ExactMatrix pair8_a2() {
  return bits({"00101001", "00011010", "10001100", "01000100", "11100010", "00110000", "01001000", "10000000"});
}
inline ExactMatrix pair8_w() {
  return rows({{1, 3, 8, 23, 64, 181, 506, 1425},
               {1, 3, 8, 23, 64, 181, 506, 1425},
               {1, 3, 9, 24, 69, 190, 539, 1502},
               {1, 2, 5, 13, 37, 101, 287, 797},
               {1, 4, 11, 32, 89, 252, 705, 1984},
               {1, 2, 5, 14, 37, 106, 291, 826},
               {1, 2, 7, 19, 55, 153, 433, 1211},
               {1, 1, 3, 8, 23, 64, 181, 506}});
}

inline ExactMatrix weq7_w() {
  return rows({{1, 4, 11, 35, 104, 318, 960},
               {1, 3, 9, 27, 82, 248, 752},
               {1, 2, 7, 20, 62, 186, 566},
               {1, 2, 8, 22, 70, 208, 636},
               {1, 2, 7, 20, 62, 186, 566},
               {1, 3, 9, 27, 82, 248, 752},
               {1, 4, 11, 35, 104, 318, 960}});
}

inline ExactMatrix weq9_w() {
  return rows({{1, 4, 18, 72, 300, 1222, 5028, 20586, 84480},
               {1, 4, 16, 67, 272, 1121, 4586, 18827, 77162},
               {1, 5, 20, 83, 339, 1393, 5707, 23413, 95989},
               {1, 5, 20, 83, 339, 1393, 5707, 23413, 95989},
               {1, 4, 16, 67, 272, 1121, 4586, 18827, 77162},
               {1, 3, 13, 52, 215, 878, 3607, 14778, 60625},
               {1, 4, 16, 65, 267, 1093, 4485, 18385, 75403},
               {1, 4, 16, 65, 267, 1093, 4485, 18385, 75403},
               {1, 3, 13, 52, 215, 878, 3607, 14778, 60625}});
}

// Only drawings of these graphs exist; the labelled versions were found by searching for
// realizations of the printed walk matrices and are frozen here.
inline Graph weq7_g() { return walkmat::parse_graph6("F{@Kw"); }
inline Graph weq7_gstar() { return walkmat::parse_graph6("FsPcw"); }
inline Graph weq9_g() { return walkmat::parse_graph6("H|dQ`[i"); }
inline Graph weq9_gstar() { return walkmat::parse_graph6("H|dbGsX"); }

inline Graph cycle(std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> e;
  for (std::size_t i = 1; i <= n; ++i) e.emplace_back(i, i % n + 1);
  return Graph::from_edge_list(n, std::span<const std::pair<std::size_t, std::size_t>>(e));
}

inline Graph two_triangles() { return Graph::from_edge_list(6, {{1, 2}, {2, 3}, {1, 3}, {4, 5}, {5, 6}, {4, 6}}); }

inline Graph cube() {
  return Graph::from_edge_list(8, {{1, 2}, {2, 3}, {3, 4}, {4, 1}, {5, 6}, {6, 7}, {7, 8}, {8, 5}, {1, 5}, {2, 6}, {3, 7}, {4, 8}});
}

inline Graph wagner() {
  return Graph::from_edge_list(8, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {7, 8}, {8, 1}, {1, 5}, {2, 6}, {3, 7}, {4, 8}});
}

inline Graph complete(std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> e;
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = i + 1; j <= n; ++j) e.emplace_back(i, j);
  return Graph::from_edge_list(n, std::span<const std::pair<std::size_t, std::size_t>>(e));
}

}  // namespace fixtures

#endif  // WALKMAT_TESTS_FIXTURES_HPP
