#include "pam/subgraph.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace pam {

namespace {

void validate(int k, const EdgeList& edges, const char* what) {
    if (k < 1) throw std::invalid_argument(std::string(what) + ": k must be >= 1");
    std::vector<int> comp(k);
    std::iota(comp.begin(), comp.end(), 0);
    auto find = [&](int x) {
        while (comp[x] != x) x = comp[x] = comp[comp[x]];
        return x;
    };
    for (auto [s, t] : edges) {
        if (s < 1 || s > k || t < 1 || t > k)
            throw std::invalid_argument(std::string(what) + ": vertex id out of range");
        if (s == t)
            throw std::invalid_argument(std::string(what) + ": self-loops not allowed");
        comp[find(s - 1)] = find(t - 1);
    }
    for (int v = 1; v < k; ++v)
        if (find(v) != find(0))
            throw std::invalid_argument(std::string(what) + ": graph must be connected");
}

} // namespace

OrderedSubgraph::OrderedSubgraph(int k_, EdgeList edges_) : k(k_), edges(std::move(edges_)) {
    validate(k, edges, "OrderedSubgraph");
}

UnorderedDigraph::UnorderedDigraph(int k_, EdgeList edges_) : k(k_), edges(std::move(edges_)) {
    validate(k, edges, "UnorderedDigraph");
}

int out_degree(const EdgeList& edges, int v) {
    int d = 0;
    for (auto [s, t] : edges) d += (s == v);
    return d;
}

int in_degree(const EdgeList& edges, int v) {
    int d = 0;
    for (auto [s, t] : edges) d += (t == v);
    return d;
}

bool is_attainable(const OrderedSubgraph& h, int m) {
    for (auto [s, t] : h.edges)
        if (s <= t) return false; // only younger -> older is realizable
    for (int v = 1; v <= h.k; ++v)
        if (out_degree(h.edges, v) > m) return false;
    return true;
}

std::vector<OrderedSubgraph> attainable_orderings(const UnorderedDigraph& g, int m) {
    if (g.k > 10) throw std::invalid_argument("attainable_orderings: k > 10");
    std::vector<int> perm(g.k);
    std::iota(perm.begin(), perm.end(), 1);
    std::vector<OrderedSubgraph> out;
    do {
        // perm[v-1] = position assigned to vertex v
        EdgeList rel;
        rel.reserve(g.edges.size());
        bool ok = true;
        for (auto [s, t] : g.edges) {
            int ps = perm[s - 1], pt = perm[t - 1];
            if (ps <= pt) { ok = false; break; }
            rel.emplace_back(ps, pt);
        }
        if (!ok) continue;
        OrderedSubgraph h(g.k, std::move(rel));
        if (is_attainable(h, m)) out.push_back(std::move(h));
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

EdgeList canonical_form(int k, const EdgeList& edges) {
    std::vector<int> perm(k);
    std::iota(perm.begin(), perm.end(), 1);
    EdgeList best;
    bool first = true;
    do {
        EdgeList rel;
        rel.reserve(edges.size());
        for (auto [s, t] : edges) rel.emplace_back(perm[s - 1], perm[t - 1]);
        std::sort(rel.begin(), rel.end());
        if (first || rel < best) {
            best = std::move(rel);
            first = false;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

namespace {

// combined "older than" constraints of the two copies must be acyclic
bool order_consistent(int k, const std::vector<int>& image) {
    std::map<int, std::vector<int>> adj;
    for (int i = 1; i < k; ++i) {
        adj[i].push_back(i + 1);              // copy 1 keeps its own age order
        adj[image[i - 1]].push_back(image[i]); // copy 2's order carried onto the union
    }
    std::map<int, int> state;
    std::vector<int> stack;
    for (auto& [start, _] : adj) {
        if (state[start]) continue;
        // iterative DFS with gray/black marking
        stack.push_back(start);
        std::vector<std::pair<int, std::size_t>> path;
        path.emplace_back(start, 0);
        state[start] = 1;
        while (!path.empty()) {
            auto& [u, idx] = path.back();
            auto it = adj.find(u);
            if (it == adj.end() || idx >= it->second.size()) {
                state[u] = 2;
                path.pop_back();
                continue;
            }
            int w = it->second[idx++];
            if (state[w] == 1) return false;
            if (state[w] == 0) {
                state[w] = 1;
                path.emplace_back(w, 0);
            }
        }
    }
    return true;
}

} // namespace

std::vector<UnorderedDigraph> merge_copies(const OrderedSubgraph& h) {
    if (h.k > 6) throw std::invalid_argument("merge_copies: k > 6");
    const int k = h.k;

    std::map<std::pair<int, int>, int> h1;
    for (auto e : h.edges) h1[e]++;

    std::set<EdgeList> seen;
    std::vector<UnorderedDigraph> out;

    // choose which copy-2 vertices are identified with copy-1 positions:
    // subset of copy-2 positions + injective image among copy-1 positions
    std::vector<int> verts(k);
    std::iota(verts.begin(), verts.end(), 1);

    for (int j = 1; j <= k; ++j) {
        std::vector<int> subsetMask(k, 0);
        std::fill(subsetMask.end() - j, subsetMask.end(), 1);
        do {
            std::vector<int> sub;
            for (int i = 0; i < k; ++i)
                if (subsetMask[i]) sub.push_back(i + 1);
            std::vector<int> img(verts);
            std::sort(img.begin(), img.end());
            do {
                // rho: sub[i] -> img[i], remaining copy-2 vertices get fresh ids
                std::vector<int> full(k + 1, 0);
                {
                    std::size_t si = 0;
                    int fresh = k + 1;
                    for (int v = 1; v <= k; ++v) {
                        if (si < sub.size() && sub[si] == v) full[v] = img[si++];
                        else full[v] = fresh++;
                    }
                }
                std::vector<int> image(k);
                for (int v = 1; v <= k; ++v) image[v - 1] = full[v];
                if (!order_consistent(k, image)) continue;

                std::map<std::pair<int, int>, int> h2;
                for (auto [s, t] : h.edges) h2[{full[s], full[t]}]++;

                std::vector<std::pair<int, int>> common;
                for (auto& [pq, c] : h2)
                    if (h1.count(pq)) common.push_back(pq);
                if (common.empty()) continue;

                // per common vertex pair, sigma labeled edges are shared
                std::vector<int> maxs;
                for (auto pq : common) maxs.push_back(std::min(h1.at(pq), h2.at(pq)));
                std::vector<int> sigma(common.size(), 0);
                for (;;) {
                    std::map<std::pair<int, int>, int> uni = h1;
                    for (auto& [pq, c] : h2) uni[pq] += c;
                    for (std::size_t i = 0; i < common.size(); ++i) uni[common[i]] -= sigma[i];
                    if (uni != h1) { // skip the two-identical-copies union
                        std::set<int> used;
                        for (auto& [pq, c] : uni) {
                            used.insert(pq.first);
                            used.insert(pq.second);
                        }
                        std::map<int, int> remap;
                        int next = 1;
                        for (int v : used) remap[v] = next++;
                        EdgeList el;
                        for (auto& [pq, c] : uni)
                            for (int r = 0; r < c; ++r)
                                el.emplace_back(remap[pq.first], remap[pq.second]);
                        EdgeList canon = canonical_form(static_cast<int>(used.size()), el);
                        if (seen.insert(canon).second)
                            out.emplace_back(static_cast<int>(used.size()), canon);
                    }
                    // odometer over sigma
                    std::size_t pos = 0;
                    while (pos < sigma.size() && sigma[pos] == maxs[pos]) sigma[pos++] = 0;
                    if (pos == sigma.size()) break;
                    ++sigma[pos];
                }
            } while (std::next_permutation(img.begin(), img.end()));
        } while (std::next_permutation(subsetMask.begin(), subsetMask.end()));
    }
    return out;
}

EdgeList parse_edge_spec(const std::string& text, int& k_out) {
    EdgeList edges;
    int k = 0;
    auto firstNonSpace = text.find_first_not_of(" \t\r\n");
    if (firstNonSpace != std::string::npos && text[firstNonSpace] == '{') {
        auto j = nlohmann::json::parse(text);
        k = j.at("k").get<int>();
        for (auto& e : j.at("edges"))
            edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
    } else {
        std::stringstream ss(text);
        std::string item;
        while (std::getline(ss, item, ',')) {
            auto gt = item.find('>');
            if (gt == std::string::npos)
                throw std::invalid_argument("parse_edge_spec: expected 's>t' items");
            int s = std::stoi(item.substr(0, gt));
            int t = std::stoi(item.substr(gt + 1));
            edges.emplace_back(s, t);
            k = std::max({k, s, t});
        }
    }
    for (auto [s, t] : edges) k = std::max({k, s, t});
    k_out = k;
    return edges;
}

std::string format_edge_spec(const EdgeList& edges) {
    std::string s;
    for (std::size_t i = 0; i < edges.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(edges[i].first) + ">" + std::to_string(edges[i].second);
    }
    return s;
}

} // namespace pam
