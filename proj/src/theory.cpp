#include "pam/theory.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

namespace pam {

double beta_moment(double alpha, double beta, int a, int b) {
    if (!(alpha > 0.0) || !(beta > 0.0) || a < 0 || b < 0)
        throw std::invalid_argument("beta_moment: need alpha,beta > 0 and a,b >= 0");
    double ls = 0.0;
    for (int i = 0; i < a; ++i) ls += std::log(alpha + i);
    for (int j = 0; j < b; ++j) ls += std::log(beta + j);
    for (int r = 0; r < a + b; ++r) ls -= std::log(alpha + beta + r);
    return std::exp(ls);
}

void EdgeSet::validate(int m, int t) const {
    std::map<std::pair<int, int>, int> perSender; // (v, j) used once
    std::map<int, int> outdeg;
    std::map<std::vector<int>, int> seen;
    for (const auto& e : edges) {
        if (e.u < 1 || e.v < 2 || e.u >= e.v || e.v > t)
            throw std::invalid_argument("EdgeSet: need 1 <= u < v <= t, v >= 2");
        if (e.j < 1 || e.j > m)
            throw std::invalid_argument("EdgeSet: label out of range");
        if (++perSender[{e.v, e.j}] > 1)
            throw std::invalid_argument("EdgeSet: labeled edge (v, j) repeated");
        if (++outdeg[e.v] > m)
            throw std::invalid_argument("EdgeSet: sender out-degree exceeds m");
        if (++seen[{e.u, e.v, e.j}] > 1)
            throw std::invalid_argument("EdgeSet: duplicate edge");
    }
}

MomentProfile moment_profile(const EdgeSet& es, int t) {
    MomentProfile mp{std::vector<int>(t + 2, 0), std::vector<int>(t + 2, 0)};
    for (const auto& e : es.edges) {
        mp.a[e.u] += 1;
        // every vertex strictly between receiver and sender contributes a
        // (1 - psi) factor; mark the range with a difference array
        mp.b[e.u + 1] += 1;
        mp.b[e.v] -= 1;
    }
    for (int v = 1; v <= t; ++v) mp.b[v] += mp.b[v - 1];
    return mp;
}

double exact_embedding_probability(const EdgeSet& es, const ModelParams& params, int t) {
    es.validate(params.m, t);
    const auto mp = moment_profile(es, t);
    const double m = params.m, d = params.delta;
    double lp = 0.0;
    for (int v = 2; v <= t; ++v) {
        if (mp.a[v] == 0 && mp.b[v] == 0) continue;
        const double alpha = m + d;
        const double beta = m * (2.0 * v - 3.0) + (v - 1) * d;
        lp += std::log(beta_moment(alpha, beta, mp.a[v], mp.b[v]));
    }
    // psi_1 == 1: psi-powers contribute 1; a (1-psi_1) factor can never arise
    // since no edge has a vertex older than 1 strictly inside its range
    return std::exp(lp);
}

long long label_multiplicity(const OrderedSubgraph& h, int m) {
    long long total = 1;
    for (int v = 1; v <= h.k; ++v) {
        const int d = out_degree(h.edges, v);
        for (int i = 0; i < d; ++i) total *= (m - i);
        if (total <= 0) return 0;
    }
    return total;
}

namespace {

struct TriangleTerms {
    // all indexed by vertex k in 2..t
    double g(int k) const { // E[(1-psi_k)^2]
        const double b = bk(k), s = a + b;
        return b * (b + 1) / (s * (s + 1));
    }
    double h(int k) const { // E[psi(1-psi)] / E[(1-psi)^2]
        const double b = bk(k), s = a + b;
        return (a * b / (s * (s + 1))) / g(k);
    }
    double p2(int k) const { // E[psi_k^2]; psi_1 == 1
        if (k == 1) return 1.0;
        const double b = bk(k), s = a + b;
        return a * (a + 1) / (s * (s + 1));
    }
    double bk(int k) const { return m * (2.0 * k - 3.0) + (k - 1) * d; }
    double m, d, a;
};

} // namespace

double exact_triangle_expectation(const ModelParams& params, long long t) {
    if (params.m < 2)
        throw std::invalid_argument("exact_triangle_expectation: triangles need m >= 2");
    if (t < 3) throw std::invalid_argument("exact_triangle_expectation: t >= 3 required");

    const TriangleTerms tt{static_cast<double>(params.m), params.delta,
                           params.m + params.delta};

    // E = m^2 (m-1) sum_{u<v<w} p2(u) h(v) prod_{k=u+1}^{w-1} g(k).
    // With G(x) = sum_{k=2}^{x} log g(k) the inner product is exp(G(w-1)-G(u)),
    // so two suffix accumulations make the triple sum a single pass over u.
    std::vector<double> G(t + 1, 0.0);
    for (long long x = 2; x <= t; ++x) G[x] = G[x - 1] + std::log(tt.g(static_cast<int>(x)));

    // V[v] = sum_{v'=v}^{t-1} h(v') * S1(v'), S1(v') = sum_{x=v'}^{t-1} exp(G(x))
    std::vector<double> V(t + 2, 0.0);
    double s1 = 0.0;
    for (long long v = t - 1; v >= 2; --v) {
        s1 += std::exp(G[v]);
        V[v] = V[v + 1] + tt.h(static_cast<int>(v)) * s1;
    }

    double total = 0.0;
    for (long long u = 1; u <= t - 2; ++u)
        total += tt.p2(static_cast<int>(u)) * std::exp(-G[u]) * V[u + 1];

    return params.m * static_cast<double>(params.m) * (params.m - 1) * total;
}

double exact_triangle_expectation_bruteforce(const ModelParams& params, int t) {
    if (params.m < 2 || t < 3)
        throw std::invalid_argument("exact_triangle_expectation_bruteforce: bad input");
    if (t > 300)
        throw std::invalid_argument("exact_triangle_expectation_bruteforce: t too large");
    const TriangleTerms tt{static_cast<double>(params.m), params.delta,
                           params.m + params.delta};
    double total = 0.0;
    for (int u = 1; u <= t - 2; ++u)
        for (int v = u + 1; v <= t - 1; ++v)
            for (int w = v + 1; w <= t; ++w) {
                double prod = 1.0;
                for (int k = u + 1; k <= w - 1; ++k) prod *= tt.g(k);
                total += tt.p2(u) * tt.h(v) * prod;
            }
    return params.m * static_cast<double>(params.m) * (params.m - 1) * total;
}

double asymptotic_triangle_expectation(const ModelParams& params, double t) {
    if (params.m < 2)
        throw std::invalid_argument("asymptotic_triangle_expectation: triangles need m >= 2");
    const double m = params.m, d = params.delta;
    const double lt = std::log(t);
    if (d == 0.0) return m * (m - 1) * (m + 1) / 48.0 * lt * lt * lt;
    const double C = m * m * (m - 1) * (m + d) * (m + d + 1) / (d * d * (2 * m + d));
    if (d > 0.0) return C * lt; // tau > 3
    const double tau = params.tau();
    return C * std::pow(t, (3.0 - tau) / (tau - 1.0)) * lt; // 2 < tau < 3
}

BoundCheckReport edge_probability_envelope_check(const std::vector<EdgeSet>& grid, const ModelParams& params,
                                   int t) {
    BoundCheckReport rep;
    const double chi = params.chi();
    bool first = true;
    for (const auto& es : grid) {
        const double p = exact_embedding_probability(es, params, t);
        double lref = 0.0;
        for (const auto& e : es.edges)
            lref += (chi - 1.0) * std::log(static_cast<double>(e.u)) -
                    chi * std::log(static_cast<double>(e.v));
        const double ratio = p / std::exp(lref);
        if (first) {
            rep.min_ratio = rep.max_ratio = ratio;
            first = false;
        } else {
            rep.min_ratio = std::min(rep.min_ratio, ratio);
            rep.max_ratio = std::max(rep.max_ratio, ratio);
        }
        ++rep.tuples;
    }
    return rep;
}

} // namespace pam
