#include "pam/census.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "pam/experiment.hpp"
#include "pam/optimizer.hpp"

namespace pam {

std::uint64_t count_triangles(const PAGraph& g) {
    const int m = g.params.m;
    if (m < 2) return 0;
    std::uint64_t total = 0;
    for (int w = 3; w <= g.t; ++w) {
        const auto& tg = g.out(w);
        for (int j2 = 0; j2 < m; ++j2)
            for (int j3 = 0; j3 < m; ++j3) {
                if (j2 == j3) continue;
                int u = tg[j2], v = tg[j3];
                if (u >= v) continue;
                // multiplicity of v -> u gives the j1 choices
                for (int x : g.out(v)) total += (x == u);
            }
    }
    return total;
}

namespace {

std::uint64_t falling(int n, int k) {
    std::uint64_t f = 1;
    for (int i = 0; i < k; ++i) {
        if (n - i <= 0) return 0;
        f *= static_cast<std::uint64_t>(n - i);
    }
    return f;
}

// label assignments for one embedded sender: product over distinct targets of
// falling(#parallel graph edges, #required H edges)
std::uint64_t sender_ways(const PAGraph& g, int gv, const std::vector<int>& targets) {
    // targets: embedded graph vertices the sender must hit, with multiplicity
    std::uint64_t ways = 1;
    std::size_t i = 0;
    while (i < targets.size()) {
        std::size_t j = i;
        while (j < targets.size() && targets[j] == targets[i]) ++j;
        int avail = 0;
        for (int x : g.out(gv)) avail += (x == targets[i]);
        ways *= falling(avail, static_cast<int>(j - i));
        if (ways == 0) return 0;
        i = j;
    }
    return ways;
}

struct Embedder {
    const PAGraph& g;
    const OrderedSubgraph& h;
    std::vector<std::vector<int>> inEdges;  // per position: younger sources
    std::vector<std::vector<int>> outReq;   // per position: its (older) targets
    std::vector<int> phi;                   // position -> graph vertex
    std::uint64_t total = 0;

    Embedder(const PAGraph& g_, const OrderedSubgraph& h_) : g(g_), h(h_) {
        inEdges.assign(h.k + 1, {});
        outReq.assign(h.k + 1, {});
        for (auto [s, t] : h.edges) {
            inEdges[t].push_back(s);
            outReq[s].push_back(t);
        }
        phi.assign(h.k + 1, 0);
    }

    // positions filled young -> old so every in-edge source is already placed
    void place(int pos) {
        if (pos == 0) {
            std::uint64_t ways = 1;
            for (int p = 1; p <= h.k && ways; ++p) {
                if (outReq[p].empty()) continue;
                std::vector<int> tg;
                tg.reserve(outReq[p].size());
                for (int q : outReq[p]) tg.push_back(phi[q]);
                std::sort(tg.begin(), tg.end());
                ways *= sender_ways(g, phi[p], tg);
            }
            total += ways;
            return;
        }
        const int upper = (pos == h.k) ? g.t : phi[pos + 1] - 1;
        if (!inEdges[pos].empty()) {
            // candidates limited to out-targets of an already placed source
            const int src = inEdges[pos].front();
            std::vector<int> cand;
            for (int x : g.out(phi[src]))
                if (x <= upper && x >= pos) cand.push_back(x);
            std::sort(cand.begin(), cand.end());
            cand.erase(std::unique(cand.begin(), cand.end()), cand.end());
            for (int v : cand) {
                if (!feasible(pos, v)) continue;
                phi[pos] = v;
                place(pos - 1);
            }
        } else {
            for (int v = upper; v >= pos; --v) {
                if (!feasible(pos, v)) continue;
                phi[pos] = v;
                place(pos - 1);
            }
        }
        phi[pos] = 0;
    }

    bool feasible(int pos, int v) const {
        for (int p = pos + 1; p <= h.k; ++p)
            if (phi[p] == v) return false;
        // every younger source of pos must actually have an edge to v
        for (int src : inEdges[pos]) {
            bool hit = false;
            for (int x : g.out(phi[src])) hit |= (x == v);
            if (!hit) return false;
        }
        return true;
    }
};

} // namespace

std::uint64_t count_ordered(const PAGraph& g, const OrderedSubgraph& h) {
    if (h.k > 5) throw std::invalid_argument("count_ordered: k > 5");
    if (!is_attainable(h, g.params.m)) return 0;
    if (g.t < h.k) return 0;
    Embedder e(g, h);
    e.place(h.k);
    return e.total;
}

std::uint64_t brute_force_count(const PAGraph& g, const OrderedSubgraph& h) {
    if (g.t > 30 || h.k > 4) throw std::invalid_argument("brute_force_count: size guard");
    // enumerate all increasing vertex tuples and all per-edge labeled-edge
    // choices, definitionally
    std::vector<int> tuple(h.k + 1, 0);
    std::uint64_t total = 0;

    auto edgeChoices = [&](const std::vector<int>& phi) {
        // assign each H-edge a labeled graph edge; labels per sender distinct
        std::uint64_t cnt = 0;
        const std::size_t ne = h.edges.size();
        std::vector<int> pick(ne, 0); // label index per H-edge
        for (;;) {
            bool ok = true;
            for (std::size_t i = 0; i < ne && ok; ++i) {
                auto [s, t] = h.edges[i];
                if (g.out(phi[s])[pick[i]] != phi[t]) ok = false;
                for (std::size_t j = 0; j < i && ok; ++j)
                    if (h.edges[j].first == s && pick[j] == pick[i]) ok = false;
            }
            if (ok) ++cnt;
            std::size_t pos = 0;
            while (pos < ne && pick[pos] == g.params.m - 1) pick[pos++] = 0;
            if (pos == ne) break;
            ++pick[pos];
        }
        return cnt;
    };

    std::vector<int> phi(h.k + 1, 0);
    // increasing tuples phi[1] < ... < phi[k]
    std::vector<int> idx(h.k + 1, 0);
    int p = 1;
    idx[1] = 1;
    while (p >= 1) {
        if (p > h.k) {
            for (int q = 1; q <= h.k; ++q) phi[q] = idx[q];
            total += edgeChoices(phi);
            --p;
            ++idx[p];
            continue;
        }
        if (idx[p] > g.t) {
            --p;
            if (p >= 1) ++idx[p];
            continue;
        }
        ++p;
        if (p <= h.k) idx[p] = idx[p - 1] + 1;
    }
    return total;
}

ScalingResult scaling_experiment(const ModelParams& params, const OrderedSubgraph& h,
                                 const std::vector<long long>& t_list, int replicas, Seed seed) {
    if (replicas < 1) throw std::invalid_argument("scaling_experiment: replicas >= 1");
    const auto rep = solve_B(h, params);

    ScalingResult res;
    res.exponent = rep.exponent;
    res.log_power = rep.log_power;

    for (std::size_t ti = 0; ti < t_list.size(); ++ti) {
        const long long t = t_list[ti];
        if (t < 2) throw std::invalid_argument("scaling_experiment: t >= 2");
        std::vector<double> counts(replicas);
        parallel_for(replicas, [&](int r) {
            Seed s{seed.value, seed.stream + 1 + ti * 1000003ULL + static_cast<std::uint64_t>(r)};
            PAGraph g = generate_sequential(params, static_cast<int>(t), s);
            counts[r] = static_cast<double>(count_ordered(g, h));
        });
        double mean = 0.0;
        for (double c : counts) mean += c;
        mean /= replicas;
        double var = 0.0;
        for (double c : counts) var += (c - mean) * (c - mean);
        var = replicas > 1 ? var / (replicas - 1) : 0.0;
        const double lt = std::log(static_cast<double>(t));
        res.rows.push_back({t, mean, std::sqrt(var / replicas),
                            std::pow(static_cast<double>(t), rep.exponent) *
                                std::pow(lt, rep.log_power)});
    }

    // least-squares slope of log(mean / log^{r-1} t) against log t
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    int n = 0;
    for (const auto& row : res.rows) {
        if (row.mean <= 0) continue;
        const double x = std::log(static_cast<double>(row.t));
        const double y = std::log(row.mean) - res.log_power * std::log(x);
        sx += x; sy += y; sxx += x * x; sxy += x * y;
        ++n;
    }
    if (n >= 2) res.corrected_slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
    return res;
}

} // namespace pam
