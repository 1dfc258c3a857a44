#ifndef SEAWEED_MEANDER_HPP
#define SEAWEED_MEANDER_HPP

#include "seaweed/rootsys.hpp"

#include <string>
#include <vector>

namespace seaweed {

/// Two compositions of n describing a type A seaweed: block sizes cut out
/// of {1..n} by the missing simple roots of S (top) and T (bottom).
struct CompositionPair {
  int n = 0;
  std::vector<int> a, b;
};

/// Arc diagram on n vertices: within each block of size k, position i is
/// joined to position k+1-i. Every vertex carries at most one top and one
/// bottom arc, so components are paths or cycles.
struct MeanderGraph {
  int n = 0;
  std::vector<int> top, bottom; // partner vertex (0-based) or -1
  int cycles = 0;
  int paths = 0; // isolated vertices count as paths
};

/// S, T subsets of Pi for type A_{n-1} to the compositions of n.
CompositionPair compositions_from_subsets(const RootSystem& rs, Subset s, Subset t);

MeanderGraph build_meander(const CompositionPair& cp);

/// Dergachev-Kirillov index of the seaweed in sl_n: 2*cycles + paths - 1.
int meander_index_sl(const CompositionPair& cp);

/// Arc diagram as a standalone SVG document.
std::string meander_svg(const CompositionPair& cp);

} // namespace seaweed

#endif
