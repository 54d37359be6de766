#pragma once

#include <cstdint>
#include <vector>

#include "pam/graph.hpp"
#include "pam/subgraph.hpp"

namespace pam {

// labeled triangle count: ordered pairs of distinct out-edges of w landing on
// u < v, times the number of labeled edges v -> u
std::uint64_t count_triangles(const PAGraph& g);

// labeled occurrences of an attainable (H, pi): order-preserving injective
// vertex maps combined with distinct-label edge assignments
std::uint64_t count_ordered(const PAGraph& g, const OrderedSubgraph& h);

// exhaustive oracle over all vertex tuples, t <= 30, k <= 4
std::uint64_t brute_force_count(const PAGraph& g, const OrderedSubgraph& h);

struct ScalingRow {
    long long t = 0;
    double mean = 0.0;
    double stderr_ = 0.0;
    double predicted = 0.0; // t^{k+B} log^{r-1} t
};

struct ScalingResult {
    std::vector<ScalingRow> rows;
    double corrected_slope = 0.0; // slope of log(mean / log^{r-1} t) vs log t
    double exponent = 0.0;        // predicted k + B
    int log_power = 0;
};

ScalingResult scaling_experiment(const ModelParams& params, const OrderedSubgraph& h,
                                 const std::vector<long long>& t_list, int replicas, Seed seed);

} // namespace pam
