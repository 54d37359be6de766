#pragma once

#include <string>
#include <vector>

#include "pam/model.hpp"
#include "pam/optimizer.hpp"
#include "pam/subgraph.hpp"

namespace pam {

struct MergedShapeRow {
    std::string id; // canonical inline edge spec
    double exponent = 0.0;
    int log_power = 0;
    std::string exponent_sym;
    bool violates = false; // not o(doubled): blocks the criterion
};

struct ConcentrationVerdict {
    double own_exponent = 0.0;
    int own_log_power = 0;
    double doubled_exponent = 0.0;
    int doubled_log_power = 0;
    bool applicable = true;   // false when E[N_t] stays bounded
    bool criterion_met = false;
    std::vector<MergedShapeRow> merged; // attainable merged shapes only
};

// the second-moment criterion: every attainable merged shape must have
// (exponent, log_power) lexicographically strictly below twice h's
ConcentrationVerdict classify(const OrderedSubgraph& h, const ModelParams& params);

struct VarianceRow {
    long long t = 0;
    double mean = 0.0;
    double variance = 0.0;
    double ratio = 0.0; // variance / mean^2
    std::vector<double> normalized; // count / mean per replica, histogram-ready
};

std::vector<VarianceRow> variance_experiment(const ModelParams& params, const OrderedSubgraph& h,
                                             const std::vector<long long>& t_list, int replicas,
                                             Seed seed);

} // namespace pam
