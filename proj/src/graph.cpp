#include "pam/graph.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "pam/rng.hpp"

namespace pam {

namespace {

// Fenwick tree over per-vertex attachment weights (degree + delta); supports
// O(log n) weight updates and prefix-sum inversion for sampling.
class WeightTree {
public:
    explicit WeightTree(int n) : n_(n), tree_(n + 1, 0.0) {}

    void add(int i, double w) {
        for (; i <= n_; i += i & (-i)) tree_[i] += w;
    }

    double total() const {
        double s = 0.0;
        for (int i = n_; i > 0; i -= i & (-i)) s += tree_[i];
        return s;
    }

    // smallest i with prefix_sum(i) > x
    int find(double x) const {
        int pos = 0;
        int pw = 1;
        while ((pw << 1) <= n_) pw <<= 1;
        for (; pw > 0; pw >>= 1) {
            if (pos + pw <= n_ && tree_[pos + pw] <= x) {
                pos += pw;
                x -= tree_[pos];
            }
        }
        return pos + 1;
    }

private:
    int n_;
    std::vector<double> tree_;
};

} // namespace

PAGraph PAGraph::prefix(int tp) const {
    if (tp < 2 || tp > t) throw std::invalid_argument("prefix: bad size");
    PAGraph g{tp, params, {}, provenance};
    g.targets.assign(targets.begin(), targets.begin() + (tp - 1));
    return g;
}

PAGraph generate_sequential(const ModelParams& params, int t, Seed seed) {
    if (t < 2) throw std::invalid_argument("generate_sequential: t must be >= 2");
    const int m = params.m;
    const double delta = params.delta;

    PAGraph g{t, params, {}, Provenance::sequential};
    g.targets.reserve(t - 1);
    g.targets.emplace_back(std::vector<int>(m, 1)); // vertex 2 -> vertex 1, all m edges

    if (t == 2) return g;

    Rng rng(seed);
    WeightTree w(t);
    // vertices 1 and 2 both start with full degree m
    w.add(1, m + delta);
    w.add(2, m + delta);

    for (int v = 3; v <= t; ++v) {
        std::vector<int> tg(m);
        for (int j = 1; j <= m; ++j) {
            const double denom = 2.0 * m * (v - 2) + (j - 1) + (v - 1) * delta;
            const double tot = w.total();
            if (std::abs(tot - denom) > 1e-6 * std::max(1.0, std::abs(denom)))
                throw std::logic_error("generate_sequential: weight total drifted from closed form");
            int u;
            do {
                u = w.find(rng.uniform01() * tot);
            } while (u >= v); // guards the measure-zero x == tot edge case
            tg[j - 1] = u;
            w.add(u, 1.0); // intermediate degree update before the next edge
        }
        g.targets.push_back(std::move(tg));
        w.add(v, m + delta);
    }
    return g;
}

std::pair<PAGraph, UrnRealization> generate_urn(const ModelParams& params, int t, Seed seed) {
    if (t < 2) throw std::invalid_argument("generate_urn: t must be >= 2");
    const int m = params.m;
    const double delta = params.delta;

    Rng rng(seed);
    UrnRealization urn{std::vector<double>(t + 1, 0.0), std::vector<double>(t + 1, 0.0), params};
    urn.psi[1] = 1.0;
    for (int k = 2; k <= t; ++k) {
        const double a = m + delta;
        const double b = m * (2.0 * k - 3.0) + (k - 1) * delta;
        urn.psi[k] = rng.beta(a, b);
    }

    // S_k = prod_{h=k+1}^t (1 - psi_h), accumulated in log space; S_0 = 0
    // because psi_1 = 1.
    urn.S[t] = 1.0;
    double acc = 0.0;
    for (int k = t - 1; k >= 1; --k) {
        acc += std::log1p(-urn.psi[k + 1]);
        urn.S[k] = std::exp(acc);
    }
    urn.S[0] = 0.0;

    PAGraph g{t, params, {}, Provenance::urn};
    g.targets.reserve(t - 1);
    for (int v = 2; v <= t; ++v) {
        std::vector<int> tg(m);
        for (int j = 0; j < m; ++j) {
            const double u = rng.uniform01() * urn.S[v - 1];
            tg[j] = interval_lookup(urn.S, u);
        }
        g.targets.push_back(std::move(tg));
    }
    return {std::move(g), std::move(urn)};
}

int interval_lookup(const std::vector<double>& S, double u) {
    if (!(u >= 0.0) || u >= S.back())
        throw std::invalid_argument("interval_lookup: point outside [0,1)");
    // I_k = [S_{k-1}, S_k): first index with S[k] > u
    auto it = std::upper_bound(S.begin(), S.end(), u);
    return static_cast<int>(it - S.begin());
}

std::vector<long long> degree_sequence(const PAGraph& g) {
    std::vector<long long> deg(g.t + 1, 0);
    for (int v = 2; v <= g.t; ++v) {
        deg[v] += g.params.m; // out-degree
        for (int u : g.out(v)) deg[u] += 1;
    }
    return deg;
}

void write_edge_list(const PAGraph& g, std::ostream& os) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", g.params.delta);
    os << "PAM " << g.t << ' ' << g.params.m << ' ' << buf << ' '
       << (g.provenance == Provenance::sequential ? "sequential" : "urn") << '\n';
    for (int v = 2; v <= g.t; ++v)
        for (int j = 0; j < g.params.m; ++j)
            os << v << ' ' << (j + 1) << ' ' << g.out(v)[j] << '\n';
}

PAGraph read_edge_list(std::istream& is) {
    std::string magic, prov;
    int t, m;
    double delta;
    if (!(is >> magic >> t >> m >> delta >> prov) || magic != "PAM")
        throw std::runtime_error("read_edge_list: bad header");
    PAGraph g{t, ModelParams(m, delta), {}, prov == "urn" ? Provenance::urn : Provenance::sequential};
    g.targets.assign(t - 1, std::vector<int>(m, 0));
    int v, j, u;
    while (is >> v >> j >> u) {
        if (v < 2 || v > t || j < 1 || j > m || u < 1 || u >= v)
            throw std::runtime_error("read_edge_list: bad edge line");
        g.targets[v - 2][j - 1] = u;
    }
    return g;
}

void save_graph(const PAGraph& g, const std::string& path) {
    std::ofstream f(path);
    if (!f) throw std::runtime_error("cannot open " + path);
    write_edge_list(g, f);
}

PAGraph load_graph(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::runtime_error("cannot open " + path);
    return read_edge_list(f);
}

double hill_tail_exponent(const std::vector<long long>& degrees, int top_k) {
    std::vector<long long> d;
    d.reserve(degrees.size());
    for (std::size_t i = 1; i < degrees.size(); ++i)
        if (degrees[i] > 0) d.push_back(degrees[i]);
    std::sort(d.begin(), d.end(), std::greater<>());
    if (top_k < 2 || top_k >= static_cast<int>(d.size()))
        throw std::invalid_argument("hill_tail_exponent: bad top_k");
    double s = 0.0;
    for (int i = 0; i < top_k; ++i)
        s += std::log(static_cast<double>(d[i])) - std::log(static_cast<double>(d[top_k]));
    return 1.0 + top_k / s;
}

} // namespace pam
