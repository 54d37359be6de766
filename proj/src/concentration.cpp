#include "pam/concentration.hpp"

#include <cmath>
#include <stdexcept>

#include "pam/census.hpp"
#include "pam/experiment.hpp"
#include "pam/graph.hpp"

namespace pam {

namespace {

constexpr double kTol = 1e-9;

bool lex_less(double e1, int l1, double e2, int l2) {
    if (e1 < e2 - kTol) return true;
    return std::abs(e1 - e2) < kTol && l1 < l2;
}

} // namespace

ConcentrationVerdict classify(const OrderedSubgraph& h, const ModelParams& params) {
    if (h.k > 5) throw std::invalid_argument("classify: k > 5");
    const ExponentReport own = solve_B(h, params);

    ConcentrationVerdict v;
    v.own_exponent = own.exponent;
    v.own_log_power = own.log_power;
    v.doubled_exponent = 2.0 * own.exponent;
    v.doubled_log_power = 2 * own.log_power;

    if (std::abs(own.exponent) < kTol && own.log_power == 0) {
        // E[N_t] bounded: the criterion presumes a diverging expectation
        v.applicable = false;
        return v;
    }

    bool met = true;
    for (const auto& shape : merge_copies(h)) {
        std::vector<OrderedSubgraph> orderings;
        try {
            orderings = attainable_orderings(shape, params.m);
        } catch (const std::invalid_argument&) {
            continue;
        }
        if (orderings.empty()) continue; // unattainable shapes never occur
        const auto rep = solve_B_unordered(shape, params);
        MergedShapeRow row;
        row.id = format_edge_spec(shape.edges);
        row.exponent = rep.best.exponent;
        row.log_power = rep.best.log_power;
        row.exponent_sym = rep.best.exponent_sym.as_tau_string();
        row.violates = !lex_less(row.exponent, row.log_power, v.doubled_exponent,
                                 v.doubled_log_power);
        met = met && !row.violates;
        v.merged.push_back(std::move(row));
    }
    v.criterion_met = met;
    return v;
}

std::vector<VarianceRow> variance_experiment(const ModelParams& params, const OrderedSubgraph& h,
                                             const std::vector<long long>& t_list, int replicas,
                                             Seed seed) {
    if (replicas < 2) throw std::invalid_argument("variance_experiment: replicas >= 2");
    std::vector<VarianceRow> rows;
    for (std::size_t ti = 0; ti < t_list.size(); ++ti) {
        const long long t = t_list[ti];
        if (t < 2) throw std::invalid_argument("variance_experiment: t >= 2");
        std::vector<double> counts(replicas);
        parallel_for(replicas, [&](int r) {
            Seed s{seed.value, seed.stream + 1 + ti * 1000003ULL + static_cast<std::uint64_t>(r)};
            PAGraph g = generate_sequential(params, static_cast<int>(t), s);
            counts[r] = static_cast<double>(count_ordered(g, h));
        });
        VarianceRow row;
        row.t = t;
        for (double c : counts) row.mean += c;
        row.mean /= replicas;
        for (double c : counts) row.variance += (c - row.mean) * (c - row.mean);
        row.variance /= (replicas - 1);
        row.ratio = row.mean != 0.0 ? row.variance / (row.mean * row.mean) : 0.0;
        row.normalized.reserve(replicas);
        for (double c : counts) row.normalized.push_back(row.mean != 0.0 ? c / row.mean : 0.0);
        rows.push_back(std::move(row));
    }
    return rows;
}

} // namespace pam
