#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "pam/model.hpp"

namespace pam {

enum class Provenance { sequential, urn };

// Preferential attachment multigraph. Vertex v in {2..t} sends m labeled
// edges; targets[v-2][j] is the endpoint of v's (j+1)-th edge. Vertex 1 sends
// nothing. Self-loops are impossible by construction, parallel edges are not.
struct PAGraph {
    int t = 0;
    ModelParams params;
    std::vector<std::vector<int>> targets; // index v-2, v in 2..t
    Provenance provenance = Provenance::sequential;

    const std::vector<int>& out(int v) const { return targets[v - 2]; }

    // exact truncation to the first tp vertices (the model is a growth process)
    PAGraph prefix(int tp) const;
};

// Latent urn state: psi[k] indexed 1..t (psi[1] == 1), interval endpoints
// S[0..t] with S[0] = 0 and S[t] = 1.
struct UrnRealization {
    std::vector<double> psi; // size t+1, entry 0 unused
    std::vector<double> S;   // size t+1
    ModelParams params;
};

PAGraph generate_sequential(const ModelParams& params, int t, Seed seed);

std::pair<PAGraph, UrnRealization> generate_urn(const ModelParams& params, int t, Seed seed);

// which interval [S_{k-1}, S_k) contains u
int interval_lookup(const std::vector<double>& S, double u);

// total degree per vertex, 1-based position 0 unused
std::vector<long long> degree_sequence(const PAGraph& g);

void write_edge_list(const PAGraph& g, std::ostream& os);
PAGraph read_edge_list(std::istream& is);
void save_graph(const PAGraph& g, const std::string& path);
PAGraph load_graph(const std::string& path);

// Hill estimator over the top-k order statistics of the degree sequence;
// returns the implied power-law exponent (1 + 1/gamma_hat).
double hill_tail_exponent(const std::vector<long long>& degrees, int top_k);

} // namespace pam
