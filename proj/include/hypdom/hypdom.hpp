#pragma once

// Umbrella header for the hypdom library: (total) domatic and (total)
// edge-domatic numbers of uniform hypergraphs, with closed-form rules for the
// complete and complete bipartite families, explicit witness constructors,
// and an exact solver.

#include "hypdom/adjacency.hpp"
#include "hypdom/baranyai.hpp"
#include "hypdom/bitset.hpp"
#include "hypdom/combinatorics.hpp"
#include "hypdom/construct.hpp"
#include "hypdom/domination.hpp"
#include "hypdom/error.hpp"
#include "hypdom/formula.hpp"
#include "hypdom/hypergraph.hpp"
#include "hypdom/io.hpp"
#include "hypdom/partition.hpp"
#include "hypdom/solver.hpp"
