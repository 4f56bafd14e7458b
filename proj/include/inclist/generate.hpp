#pragma once

#include <cstdint>
#include <random>
#include <string_view>
#include <vector>

#include "inclist/bridge.hpp"
#include "inclist/graph.hpp"
#include "inclist/io.hpp"

// Instance generators. All of them are deterministic for a given engine state.

namespace inclist {

using Rng = std::mt19937_64;

/// k4, k33, prism, petersen, tri-multi (two vertices, three parallel edges).
/// Throws PreconditionError for an unknown name.
Multigraph named_graph(std::string_view name);

/// The cycle C_n, n >= 3 (n = 2 gives a double edge).
Multigraph make_cycle(int n);

/// Connected simple cubic graph from the pairing model, regenerating on a
/// loop, a parallel edge or a disconnected result. n even, n >= 4.
Multigraph random_cubic(int n, Rng& rng);

/// Connected loopless cubic multigraph from the pairing model: loops cause
/// regeneration, parallel edges are kept. n even, n >= 2.
Multigraph random_cubic_multigraph(int n, Rng& rng);

/// Connected loopless subcubic multigraph: a pairing-model multigraph on the
/// degree sequence (3, ..., 3) (one vertex of degree 2 when n is odd), then
/// each edge dropped with probability `drop`; regenerated until connected.
Multigraph random_subcubic_multigraph(int n, double drop, Rng& rng);

/// Simple cubic graph with bridges: a hub vertex with three chains of
/// blocks. Inner blocks are cubic graphs minus an edge, end blocks are cubic
/// graphs with one subdivided edge. `chain_length` >= 1 blocks per chain.
Multigraph random_bridged_cubic(int chain_length, Rng& rng);

/// Simple semicubic graph whose core (pendent vertices removed) is
/// 2-connected, built from a 2-connected cubic graph on `core_n` vertices by
/// subdividing a few edges and removing a matching, hanging a pendent vertex
/// on every vertex that lost degree. At least one pendent vertex.
Multigraph random_semicubic(int core_n, Rng& rng);

/// Star K_{1,k}.
Multigraph make_star(int k);

/// Random (2,3)-bipartite graph: the subdivision of a random subcubic
/// multigraph on `n` branch vertices with some half-edges removed, vertices
/// shuffled.
BipartiteGraph random_bipartite23(int n, Rng& rng);

/// Every incidence gets a uniform k-subset of [0, universe).
ListAssignment random_lists(const Multigraph& g, int k, int universe, Rng& rng);

/// Every edge gets a uniform k-subset of [0, universe).
EdgeLists random_edge_lists(const Multigraph& g, int k, int universe, Rng& rng);

/// All connected simple cubic graphs on n vertices up to isomorphism
/// (n even, intended for n <= 10).
std::vector<Multigraph> connected_cubic_graphs(int n);

/// Isomorphism test for small simple graphs.
bool isomorphic(const Multigraph& a, const Multigraph& b);

}  // namespace inclist
