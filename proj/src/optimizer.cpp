#include "pam/optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

namespace pam {

namespace {

constexpr double kTieTol = 1e-9;

struct Degrees {
    std::vector<int> din, dout; // 1-based
};

Degrees degrees_of(const OrderedSubgraph& h) {
    Degrees d{std::vector<int>(h.k + 1, 0), std::vector<int>(h.k + 1, 0)};
    for (auto [s, t] : h.edges) {
        d.dout[s]++;
        d.din[t]++;
    }
    return d;
}

ExponentReport solve_for_chi(const OrderedSubgraph& h, double chi) {
    const int k = h.k;
    const auto deg = degrees_of(h);

    ExponentReport rep;
    rep.beta.resize(k);
    for (int i = 1; i <= k; ++i)
        rep.beta[i - 1] = chi * (deg.din[i] - deg.dout[i]) - deg.din[i];

    // candidate at s: -s + sum_{i>s} beta(i); on the lattice this is
    // (C_s) + (A_s) chi with integer coefficients
    std::vector<double> cand(k + 1);
    std::vector<LinChi> candSym(k + 1);
    {
        long long A = 0, C = 0;
        for (int i = 1; i <= k; ++i) {
            A += deg.din[i] - deg.dout[i];
            C -= deg.din[i];
        }
        for (int s = 0; s <= k; ++s) {
            candSym[s] = {C - s, A};
            cand[s] = candSym[s].value(chi);
            if (s < k) { // peel position s+1 off the tail sum
                A -= deg.din[s + 1] - deg.dout[s + 1];
                C += deg.din[s + 1];
            }
        }
    }

    // exact identity: the s=0 candidate is minus the edge count
    const long long ell = static_cast<long long>(h.edges.size());
    if (candSym[0].q != 0 || candSym[0].p != -ell)
        throw std::logic_error("solve_B: s=0 candidate != -#edges");

    rep.B = *std::max_element(cand.begin(), cand.end());
    for (int s = 0; s <= k; ++s)
        if (std::abs(cand[s] - rep.B) < kTieTol) rep.optimizers.push_back(s);
    rep.r = static_cast<int>(rep.optimizers.size());
    rep.exponent = k + rep.B;
    rep.log_power = rep.r - 1;

    const LinChi bSym = candSym[rep.optimizers.front()];
    rep.exponent_sym = {k + bSym.p, bSym.q};
    for (int s : rep.optimizers)
        if (!(candSym[s] == bSym)) rep.boundary_tie = true;

    // strict-gap property between consecutive optimizers
    for (std::size_t i = 0; i + 1 < rep.optimizers.size(); ++i) {
        const int s2 = rep.optimizers[i + 1];
        for (int st = rep.optimizers[i] + 1; st < s2; ++st) {
            double tail = 0.0;
            for (int j = st + 1; j <= s2; ++j) tail += rep.beta[j - 1];
            if (!(tail < s2 - st - kTieTol))
                throw std::logic_error("solve_B: strict gap property violated");
        }
    }

    // degree classes from the optimizer span
    const int lo = rep.optimizers.front();
    const int hi = rep.optimizers.back();
    rep.classes.resize(k);
    for (int i = 1; i <= k; ++i) {
        if (i <= lo) rep.classes[i - 1] = DegreeClass::old_hub;
        else if (i > hi) rep.classes[i - 1] = DegreeClass::young_constant;
        else rep.classes[i - 1] = DegreeClass::free_vertex;
    }
    return rep;
}

UnorderedReport solve_unordered_for_chi(const UnorderedDigraph& g, int m, double chi) {
    auto orderings = attainable_orderings(g, m);
    if (orderings.empty())
        throw std::invalid_argument("solve_B_unordered: subgraph not attainable for this m");
    UnorderedReport rep;
    bool first = true;
    for (auto& h : orderings) {
        ExponentReport r = solve_for_chi(h, chi);
        const bool better =
            first || r.B > rep.best.B + kTieTol ||
            (std::abs(r.B - rep.best.B) < kTieTol && r.r > rep.best.r);
        if (better) rep.best = r;
        rep.per_ordering.push_back(std::move(r));
        first = false;
    }
    return rep;
}

} // namespace

const char* to_string(DegreeClass c) {
    switch (c) {
        case DegreeClass::old_hub: return "old-hub";
        case DegreeClass::young_constant: return "young-constant";
        default: return "free";
    }
}

std::string LinChi::as_tau_string() const {
    if (q == 0) return std::to_string(p);
    // p + q chi = (a tau + b)/(tau - 1) with a = p+q, b = -(p+2q)
    const long long a = p + q;
    const long long b = -(p + 2 * q);
    std::string num;
    auto tauTerm = [](long long c) {
        if (c == 1) return std::string("tau");
        if (c == -1) return std::string("-tau");
        return std::to_string(c) + "*tau";
    };
    if (a == 0) {
        num = std::to_string(b);
    } else if (b == 0) {
        num = tauTerm(a);
    } else if (a > 0) {
        num = "(" + tauTerm(a) + (b > 0 ? "+" : "") + std::to_string(b) + ")";
    } else {
        num = "(" + std::to_string(b) + tauTerm(a) + ")"; // e.g. (3-tau)
    }
    return num + "/(tau-1)";
}

std::vector<double> beta_values(const OrderedSubgraph& h, const ModelParams& params) {
    if (!is_attainable(h, params.m))
        throw std::invalid_argument("beta_values: subgraph not attainable for this m");
    const double chi = params.chi();
    const auto deg = degrees_of(h);
    std::vector<double> beta(h.k);
    for (int i = 1; i <= h.k; ++i)
        beta[i - 1] = chi * (deg.din[i] - deg.dout[i]) - deg.din[i];
    return beta;
}

ExponentReport solve_B(const OrderedSubgraph& h, const ModelParams& params) {
    if (!is_attainable(h, params.m))
        throw std::invalid_argument("solve_B: subgraph not attainable for this m");
    return solve_for_chi(h, params.chi());
}

UnorderedReport solve_B_unordered(const UnorderedDigraph& g, const ModelParams& params) {
    return solve_unordered_for_chi(g, params.m, params.chi());
}

std::vector<UnorderedDigraph> attainable_catalog(int k, int m) {
    // enumerate simple digraphs on k labeled vertices, keep connected ones
    // with at least one attainable ordering, dedup by isomorphism
    std::vector<std::pair<int, int>> slots;
    for (int s = 1; s <= k; ++s)
        for (int t = 1; t <= k; ++t)
            if (s != t) slots.emplace_back(s, t);
    const int n = static_cast<int>(slots.size());
    std::set<EdgeList> seen;
    std::vector<UnorderedDigraph> out;
    for (std::uint64_t mask = 1; mask < (1ULL << n); ++mask) {
        EdgeList edges;
        for (int i = 0; i < n; ++i)
            if (mask & (1ULL << i)) edges.push_back(slots[i]);
        // reject 2-cycles early: never attainable
        bool twoCycle = false;
        for (auto [s, t] : edges)
            for (auto [s2, t2] : edges)
                if (s == t2 && t == s2) twoCycle = true;
        if (twoCycle) continue;
        try {
            UnorderedDigraph g(k, edges);
            if (attainable_orderings(g, m).empty()) continue;
            EdgeList canon = canonical_form(k, edges);
            if (seen.insert(canon).second) out.emplace_back(k, canon);
        } catch (const std::invalid_argument&) {
            continue; // disconnected
        }
    }
    return out;
}

std::vector<AtlasRow> atlas(const ModelParams& params) {
    std::vector<AtlasRow> rows;
    const double chi = params.chi();
    for (int k : {3, 4}) {
        for (auto& g : attainable_catalog(k, params.m)) {
            auto rep = solve_unordered_for_chi(g, params.m, chi);
            AtlasRow row;
            row.id = format_edge_spec(g.edges);
            row.k = k;
            row.exponent = rep.best.exponent;
            row.exponent_sym = rep.best.exponent_sym.as_tau_string();
            row.log_power = rep.best.log_power;
            row.classes = rep.best.classes;

            // probe chi across tau in (2,3): if the symbolic prediction moves,
            // the cell depends on tau inside that regime
            LinChi ref{};
            int refLog = -1;
            bool first = true;
            for (double probe = 0.02; probe < 0.5; probe += 0.04) {
                auto pr = solve_unordered_for_chi(g, params.m, probe).best;
                if (pr.boundary_tie) { row.depends_on_tau = true; break; }
                if (first) {
                    ref = pr.exponent_sym;
                    refLog = pr.log_power;
                    first = false;
                } else if (!(pr.exponent_sym == ref) || pr.log_power != refLog) {
                    row.depends_on_tau = true;
                    break;
                }
            }
            rows.push_back(std::move(row));
        }
    }
    return rows;
}

} // namespace pam
