#pragma once

#include <string>
#include <utility>
#include <vector>

#include "pam/model.hpp"

namespace pam {

using EdgeList = std::vector<std::pair<int, int>>;

// Directed graph on k position-labeled vertices; position 1 is the oldest.
// Parallel edges are repeated (source, target) pairs. The underlying
// undirected graph must be connected.
struct OrderedSubgraph {
    int k = 0;
    EdgeList edges;

    OrderedSubgraph(int k_, EdgeList edges_);
};

// Same structure, vertex ids carry no age semantics.
struct UnorderedDigraph {
    int k = 0;
    EdgeList edges;

    UnorderedDigraph(int k_, EdgeList edges_);
};

bool is_attainable(const OrderedSubgraph& h, int m);

// all permutations of vertex ids to positions whose relabeling is attainable
std::vector<OrderedSubgraph> attainable_orderings(const UnorderedDigraph& g, int m);

// isomorphism-distinct unions of two copies of h overlapping in at least one
// vertex-pair edge (the fully identical union excluded); identifications that
// contradict the two copies' age orders are dropped
std::vector<UnorderedDigraph> merge_copies(const OrderedSubgraph& h);

// lexicographically minimal relabeled edge multiset; equal iff isomorphic
EdgeList canonical_form(int k, const EdgeList& edges);

int out_degree(const EdgeList& edges, int v);
int in_degree(const EdgeList& edges, int v);

// "2>1,3>1,3>2" or a JSON object {"k": int, "edges": [[s,t],...]}
EdgeList parse_edge_spec(const std::string& text, int& k_out);

std::string format_edge_spec(const EdgeList& edges);

} // namespace pam
