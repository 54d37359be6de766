#pragma once

#include <string>
#include <vector>

#include "pam/model.hpp"
#include "pam/subgraph.hpp"

namespace pam {

enum class DegreeClass { old_hub, young_constant, free_vertex };

const char* to_string(DegreeClass c);

// Exponents live on the lattice P + Q*chi with integer P, Q; chi = (tau-2)/(tau-1).
struct LinChi {
    long long p = 0;
    long long q = 0;

    double value(double chi) const { return p + q * chi; }
    std::string as_tau_string() const; // e.g. "(3-tau)/(tau-1)"
    bool operator==(const LinChi&) const = default;
};

struct ExponentReport {
    std::vector<double> beta;   // beta(i) per position, i = 1..k
    double B = 0.0;             // optimal value of the max-over-s problem
    std::vector<int> optimizers;
    int r = 0;                  // number of optimizers
    double exponent = 0.0;      // k + B
    int log_power = 0;          // r - 1
    std::vector<DegreeClass> classes;
    LinChi exponent_sym;        // symbolic k + B (of the smallest optimizer)
    bool boundary_tie = false;  // optimizers disagree symbolically (phase boundary)
};

std::vector<double> beta_values(const OrderedSubgraph& h, const ModelParams& params);

ExponentReport solve_B(const OrderedSubgraph& h, const ModelParams& params);

struct UnorderedReport {
    ExponentReport best;
    std::vector<ExponentReport> per_ordering;
};

UnorderedReport solve_B_unordered(const UnorderedDigraph& g, const ModelParams& params);

struct AtlasRow {
    std::string id;       // canonical inline edge spec
    int k = 0;
    double exponent = 0.0;
    std::string exponent_sym;
    int log_power = 0;
    std::vector<DegreeClass> classes;
    bool depends_on_tau = false; // prediction changes somewhere inside tau in (2,3)
};

// all attainable connected simple digraphs on 3 and 4 vertices for params.m
std::vector<AtlasRow> atlas(const ModelParams& params);

// catalog behind the atlas, exposed for counting checks
std::vector<UnorderedDigraph> attainable_catalog(int k, int m);

} // namespace pam
