#pragma once

#include "arborpack/graph.hpp"
#include "arborpack/rational.hpp"
#include "arborpack/subpartition.hpp"

namespace arborpack {

struct RatioWitness {
  Rational value;
  SubPartition witness;  // first attaining family in canonical enumeration order
};

struct GammaWitness {
  Rational value;
  VertexSet witness;  // first attaining set in ascending bit-pattern order
};

// min over subpartitions P with |P| >= 2 of (sum of in-degrees of the parts)
// divided by |P| - 1. Requires n >= 2.
RatioWitness nu_f_digraph(const Digraph& d);

// Undirected analogue: min over full partitions P with |P| >= 2 of the number
// of crossing edges divided by |P| - 1. Requires n >= 2.
RatioWitness nu_f_graph(const Graph& g);

// max over X with |X| >= 2 of |E(X)| / (|X| - 1). Requires n >= 2.
GammaWitness gamma_f(const Graph& g);

// k + (d-1)/d
Rational theorem_threshold(int k, int d);

// whether nu_f(d) exceeds the threshold strictly; exact arithmetic
bool hypothesis_holds(const Digraph& d, int k, int d_param);

}  // namespace arborpack
