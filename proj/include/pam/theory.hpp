#pragma once

#include <vector>

#include "pam/model.hpp"
#include "pam/subgraph.hpp"

namespace pam {

// E[X^a (1-X)^b] for X ~ Beta(alpha, beta)
double beta_moment(double alpha, double beta, int a, int b);

// one candidate labeled edge: receiver u, sender v, label j in [m]
struct LabeledEdge {
    int u = 0;
    int v = 0;
    int j = 1;
};

// finite set of distinct labeled edges whose joint presence probability is exact
struct EdgeSet {
    std::vector<LabeledEdge> edges;

    void validate(int m, int t) const;
};

// per-vertex exponents of psi_v (a_v) and (1 - psi_v) (b_v)
struct MomentProfile {
    std::vector<int> a; // 1-based, size t+1
    std::vector<int> b;
};

MomentProfile moment_profile(const EdgeSet& es, int t);

// P(all edges of es present); independent of the labels j
double exact_embedding_probability(const EdgeSet& es, const ModelParams& params, int t);

// number of valid label assignments: product of falling factorials m...(m-d_out+1)
long long label_multiplicity(const OrderedSubgraph& h, int m);

// E[#labeled triangles] at finite t via the separable O(t) sum
double exact_triangle_expectation(const ModelParams& params, long long t);

// O(t^3) oracle of the same sum
double exact_triangle_expectation_bruteforce(const ModelParams& params, int t);

// leading term of the triangle phase transition (three regimes in tau)
double asymptotic_triangle_expectation(const ModelParams& params, double t);

struct BoundCheckReport {
    double min_ratio = 0.0;
    double max_ratio = 0.0;
    std::size_t tuples = 0;
};

// ratio of the exact probability to prod_l u_l^{chi-1} v_l^{-chi} over a tuple grid
BoundCheckReport edge_probability_envelope_check(const std::vector<EdgeSet>& grid, const ModelParams& params,
                                   int t);

} // namespace pam
