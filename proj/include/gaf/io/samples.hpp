#pragma once

#include <random>
#include <string>
#include <vector>

#include "gaf/exact/lattice.hpp"
#include "gaf/tree/tree.hpp"

namespace gaf::io {

/// Graph with a list of automorphisms given as image lists (images[v-1] is the image of v).
struct SymmetricSample {
  int n = 0;
  std::vector<tree::Edge> edges;
  std::vector<std::string> colors;  // one per edge for cell graphs, empty for trees
  std::vector<std::vector<int>> generators;
};

/// Random tree on at most max_vertices vertices built from repeated identical branches, with generators
/// that permute identical branches. Every generator fixes a common root; vertices are relabeled at random.
SymmetricSample random_symmetric_tree(std::mt19937& rng, int max_vertices, int max_generators = 4);

/// Same construction with cliques of 2..max_cell vertices glued at vertices in a tree pattern.
/// Every cell gets its own color.
SymmetricSample random_symmetric_cell_graph(std::mt19937& rng, int max_vertices, int max_cell, int max_generators = 4);

/// Finite group of lattice isometries x -> L(x - c) + c with L signed permutations and c half-integral
/// or integral.
std::vector<exact::LatticeIsometry> random_lattice_generators(std::mt19937& rng, std::size_t n);

}  // namespace gaf::io
