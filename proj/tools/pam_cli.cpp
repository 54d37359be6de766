#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "pam/census.hpp"
#include "pam/concentration.hpp"
#include "pam/graph.hpp"
#include "pam/optimizer.hpp"
#include "pam/theory.hpp"

using nlohmann::json;

namespace {

constexpr const char* kVersion = "1.0.0";

// exit codes: 2 invalid input/params, 3 file I/O
struct CliError : std::runtime_error {
    int code;
    CliError(int c, const std::string& msg) : std::runtime_error(msg), code(c) {}
};

std::string read_text(const std::string& pathOrInline) {
    // file paths are distinguished from inline specs by existence on disk
    std::ifstream f(pathOrInline);
    if (f) {
        std::stringstream ss;
        ss << f.rdbuf();
        return ss.str();
    }
    return pathOrInline;
}

pam::EdgeList parse_subgraph(const std::string& spec, int& k) {
    try {
        return pam::parse_edge_spec(read_text(spec), k);
    } catch (const std::exception& e) {
        throw CliError(2, std::string("bad subgraph spec: ") + e.what());
    }
}

std::vector<long long> parse_t_list(const std::string& s) {
    std::vector<long long> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(std::stoll(item));
    for (std::size_t i = 1; i < out.size(); ++i)
        if (out[i] <= out[i - 1]) throw CliError(2, "t list must be strictly increasing");
    return out;
}

void write_output(const std::string& path, const std::string& content) {
    if (path.empty() || path == "-") {
        std::cout << content;
        return;
    }
    std::ofstream f(path);
    if (!f) throw CliError(3, "cannot write " + path);
    f << content;
}

json report_to_json(const pam::ExponentReport& r) {
    json j;
    j["beta"] = r.beta;
    j["B"] = r.B;
    j["optimizers"] = r.optimizers;
    j["r"] = r.r;
    j["exponent"] = r.exponent;
    j["exponent_sym"] = r.exponent_sym.as_tau_string();
    j["log_power"] = r.log_power;
    std::vector<std::string> cls;
    for (auto c : r.classes) cls.emplace_back(pam::to_string(c));
    j["classes"] = cls;
    j["boundary_tie"] = r.boundary_tie;
    return j;
}

json envelope(const json& config, const json& results) {
    return json{{"config", config}, {"results", results}, {"version", kVersion}};
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"preferential attachment subgraph analytics"};
    app.require_subcommand(1);

    int m = 2;
    double delta = 0.0;
    long long t = 1000;
    std::uint64_t seedValue = 0;
    std::string subgraphSpec, graphPath, outPath, tListStr = "1000", edgesPath;
    int replicas = 10;
    bool urn = false, ordered = false, asCsv = false;

    auto addParams = [&](CLI::App* cmd) {
        cmd->add_option("--m", m, "edges per vertex")->required();
        cmd->add_option("--delta", delta, "attachment shift")->required();
    };

    auto* gen = app.add_subcommand("generate", "generate a PA graph");
    addParams(gen);
    gen->add_option("--t", t, "vertex count")->required();
    gen->add_option("--seed", seedValue, "random seed")->required();
    gen->add_option("--out", outPath, "output file")->required();
    gen->add_flag("--urn", urn, "use the urn construction");

    auto* cnt = app.add_subcommand("count", "count subgraph occurrences");
    cnt->add_option("--graph", graphPath, "edge list file")->required();
    cnt->add_option("--subgraph", subgraphSpec, "subgraph (inline or file)")->required();

    auto* pred = app.add_subcommand("predict", "predict count scaling");
    addParams(pred);
    pred->add_option("--subgraph", subgraphSpec)->required();
    pred->add_flag("--ordered", ordered, "vertex ids are age positions");
    pred->add_option("--out", outPath);

    auto* atl = app.add_subcommand("atlas", "attainable 3/4-vertex catalog with exponents");
    addParams(atl);
    atl->add_option("--out", outPath);

    auto* tri = app.add_subcommand("triangles", "triangle expectations");
    auto* triExact = tri->add_subcommand("exact", "finite-t exact sum");
    auto* triAsym = tri->add_subcommand("asymptotic", "leading-order value");
    for (auto* c : {triExact, triAsym}) {
        addParams(c);
        c->add_option("--t", t)->required();
    }

    auto* emb = app.add_subcommand("embed-prob", "exact labeled edge-set probability");
    addParams(emb);
    emb->add_option("--edges", edgesPath, "file of 'u v j' lines")->required();
    emb->add_option("--t", t)->required();

    auto* exp = app.add_subcommand("experiment", "Monte Carlo experiments");
    auto* scal = exp->add_subcommand("scaling", "mean counts across t");
    addParams(scal);
    scal->add_option("--subgraph", subgraphSpec)->required();
    scal->add_option("--t", tListStr, "comma-separated t values")->required();
    scal->add_option("--replicas", replicas)->required();
    scal->add_option("--seed", seedValue)->required();
    scal->add_option("--out", outPath);
    scal->add_flag("--csv", asCsv);

    auto* conc = app.add_subcommand("concentration", "conditional concentration");
    auto* concCls = conc->add_subcommand("classify", "symbolic criterion");
    addParams(concCls);
    concCls->add_option("--subgraph", subgraphSpec)->required();
    concCls->add_option("--out", outPath);
    auto* concExp = conc->add_subcommand("experiment", "empirical variance");
    addParams(concExp);
    concExp->add_option("--subgraph", subgraphSpec)->required();
    concExp->add_option("--t", tListStr)->required();
    concExp->add_option("--replicas", replicas)->required();
    concExp->add_option("--seed", seedValue)->required();
    concExp->add_option("--out", outPath);

    CLI11_PARSE(app, argc, argv);

    try {
        if (gen->parsed()) {
            pam::ModelParams params(m, delta);
            pam::Seed seed{seedValue, 0};
            pam::PAGraph g = urn
                ? pam::generate_urn(params, static_cast<int>(t), seed).first
                : pam::generate_sequential(params, static_cast<int>(t), seed);
            pam::save_graph(g, outPath);
        } else if (cnt->parsed()) {
            if (!std::ifstream(graphPath)) throw CliError(3, "cannot open " + graphPath);
            pam::PAGraph g = pam::load_graph(graphPath);
            int k = 0;
            auto edges = parse_subgraph(subgraphSpec, k);
            pam::OrderedSubgraph h(k, edges);
            std::uint64_t c = pam::count_ordered(g, h);
            json cfg{{"graph", graphPath}, {"subgraph", pam::format_edge_spec(edges)}};
            std::cout << envelope(cfg, json{{"count", c}}).dump(2) << '\n';
        } else if (pred->parsed()) {
            pam::ModelParams params(m, delta);
            int k = 0;
            auto edges = parse_subgraph(subgraphSpec, k);
            json cfg{{"m", m}, {"delta", delta},
                     {"subgraph", pam::format_edge_spec(edges)}, {"ordered", ordered}};
            json res;
            if (ordered) {
                res = report_to_json(pam::solve_B(pam::OrderedSubgraph(k, edges), params));
            } else {
                auto rep = pam::solve_B_unordered(pam::UnorderedDigraph(k, edges), params);
                res = report_to_json(rep.best);
                res["orderings"] = rep.per_ordering.size();
            }
            write_output(outPath, envelope(cfg, res).dump(2) + "\n");
        } else if (atl->parsed()) {
            pam::ModelParams params(m, delta);
            std::ostringstream csv;
            csv << "id,k,exponent,exponent_sym,log_power,depends_on_tau,classes\n";
            for (const auto& row : pam::atlas(params)) {
                csv << row.id << ',' << row.k << ',' << row.exponent << ','
                    << row.exponent_sym << ',' << row.log_power << ','
                    << (row.depends_on_tau ? 1 : 0) << ',';
                for (std::size_t i = 0; i < row.classes.size(); ++i)
                    csv << (i ? "|" : "") << pam::to_string(row.classes[i]);
                csv << '\n';
            }
            write_output(outPath, csv.str());
        } else if (triExact->parsed()) {
            pam::ModelParams params(m, delta);
            std::printf("%.12g\n", pam::exact_triangle_expectation(params, t));
        } else if (triAsym->parsed()) {
            pam::ModelParams params(m, delta);
            std::printf("%.12g\n",
                        pam::asymptotic_triangle_expectation(params, static_cast<double>(t)));
        } else if (emb->parsed()) {
            pam::ModelParams params(m, delta);
            std::ifstream f(edgesPath);
            if (!f) throw CliError(3, "cannot open " + edgesPath);
            pam::EdgeSet es;
            int u, v, j;
            while (f >> u >> v >> j) es.edges.push_back({u, v, j});
            std::printf("%.12g\n",
                        pam::exact_embedding_probability(es, params, static_cast<int>(t)));
        } else if (scal->parsed()) {
            pam::ModelParams params(m, delta);
            int k = 0;
            auto edges = parse_subgraph(subgraphSpec, k);
            pam::OrderedSubgraph h(k, edges);
            auto res = pam::scaling_experiment(params, h, parse_t_list(tListStr), replicas,
                                               {seedValue, 0});
            if (asCsv) {
                std::ostringstream csv;
                csv << "t,mean,stderr,predicted,corrected_slope\n";
                for (const auto& row : res.rows)
                    csv << row.t << ',' << row.mean << ',' << row.stderr_ << ','
                        << row.predicted << ',' << res.corrected_slope << '\n';
                write_output(outPath, csv.str());
            } else {
                json rows = json::array();
                for (const auto& row : res.rows)
                    rows.push_back({{"t", row.t}, {"mean", row.mean},
                                    {"stderr", row.stderr_}, {"predicted", row.predicted}});
                json cfg{{"m", m}, {"delta", delta}, {"subgraph", pam::format_edge_spec(edges)},
                         {"t", tListStr}, {"replicas", replicas}, {"seed", seedValue}};
                json out{{"rows", rows}, {"corrected_slope", res.corrected_slope},
                         {"exponent", res.exponent}, {"log_power", res.log_power}};
                write_output(outPath, envelope(cfg, out).dump(2) + "\n");
            }
        } else if (concCls->parsed()) {
            pam::ModelParams params(m, delta);
            int k = 0;
            auto edges = parse_subgraph(subgraphSpec, k);
            auto v = pam::classify(pam::OrderedSubgraph(k, edges), params);
            json merged = json::array();
            for (const auto& row : v.merged)
                merged.push_back({{"id", row.id}, {"exponent", row.exponent},
                                  {"log_power", row.log_power},
                                  {"exponent_sym", row.exponent_sym},
                                  {"violates", row.violates}});
            json cfg{{"m", m}, {"delta", delta}, {"subgraph", pam::format_edge_spec(edges)}};
            json res{{"own", {{"exponent", v.own_exponent}, {"log_power", v.own_log_power}}},
                     {"doubled", {{"exponent", v.doubled_exponent},
                                  {"log_power", v.doubled_log_power}}},
                     {"applicable", v.applicable},
                     {"criterion_met", v.criterion_met},
                     {"merged", merged}};
            write_output(outPath, envelope(cfg, res).dump(2) + "\n");
        } else if (concExp->parsed()) {
            pam::ModelParams params(m, delta);
            int k = 0;
            auto edges = parse_subgraph(subgraphSpec, k);
            pam::OrderedSubgraph h(k, edges);
            auto rows = pam::variance_experiment(params, h, parse_t_list(tListStr), replicas,
                                                 {seedValue, 0});
            std::ostringstream csv;
            csv << "t,replica,count,normalized\n";
            for (const auto& row : rows)
                for (std::size_t r = 0; r < row.normalized.size(); ++r)
                    csv << row.t << ',' << r << ',' << row.normalized[r] * row.mean << ','
                        << row.normalized[r] << '\n';
            write_output(outPath, csv.str());
        }
    } catch (const CliError& e) {
        std::cerr << json{{"error", e.what()}, {"code", e.code}}.dump() << '\n';
        return e.code;
    } catch (const std::exception& e) {
        std::cerr << json{{"error", e.what()}, {"code", 2}}.dump() << '\n';
        return 2;
    }
    return 0;
}
