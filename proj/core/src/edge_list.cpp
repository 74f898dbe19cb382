#include "alphamod/edge_list.hpp"

#include <fstream>
#include <set>
#include <sstream>
#include <unordered_map>

#include <nlohmann/json.hpp>

#include "alphamod/errors.hpp"

namespace alphamod {

namespace {

std::ifstream open_or_throw(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open file: " + path);
    return in;
}

}  // namespace

LoadedGraph load_edge_list(const std::string& path, const std::string& labels_path) {
    std::ifstream in = open_or_throw(path);

    std::unordered_map<std::string, int> index;
    std::vector<std::string> names;
    std::vector<std::pair<int, int>> edges;
    std::set<std::pair<int, int>> seen;
    LoadedGraph out;

    auto node_id = [&](const std::string& tok) {
        auto it = index.find(tok);
        if (it != index.end()) return it->second;
        const int id = static_cast<int>(names.size());
        index.emplace(tok, id);
        names.push_back(tok);
        return id;
    };

    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string u, v;
        if (!(ls >> u)) continue;  // blank line
        if (!(ls >> v))
            throw ParseError(path + ":" + std::to_string(lineno) + ": expected two node tokens");
        std::string extra;
        if (ls >> extra)
            throw ParseError(path + ":" + std::to_string(lineno) + ": trailing tokens");
        int a = node_id(u), b = node_id(v);
        if (a == b) {
            ++out.self_loops_dropped;
            continue;
        }
        if (a > b) std::swap(a, b);
        if (!seen.insert({a, b}).second) {
            ++out.duplicate_edges;
            continue;
        }
        edges.emplace_back(a, b);
    }
    if (names.empty()) throw ParseError(path + ": no edges found");

    Graph::Builder builder(static_cast<int>(names.size()));
    for (auto [a, b] : edges) builder.add_edge(a, b);
    auto [graph, kept] = std::move(builder).finalize();
    out.isolated_dropped = static_cast<int>(names.size()) - static_cast<int>(kept.size());
    out.node_names.reserve(kept.size());
    for (int old : kept) out.node_names.push_back(names[old]);
    out.graph = std::move(graph);

    if (!labels_path.empty()) {
        std::ifstream lin = open_or_throw(labels_path);
        std::unordered_map<std::string, int> final_index;
        for (std::size_t i = 0; i < out.node_names.size(); ++i)
            final_index.emplace(out.node_names[i], static_cast<int>(i));

        std::unordered_map<std::string, int> label_ids;
        std::vector<int> labels(out.node_names.size(), -1);
        int lno = 0;
        while (std::getline(lin, line)) {
            ++lno;
            const auto hash = line.find('#');
            if (hash != std::string::npos) line.erase(hash);
            std::istringstream ls(line);
            std::string node, label;
            if (!(ls >> node)) continue;
            if (!(ls >> label))
                throw ParseError(labels_path + ":" + std::to_string(lno) + ": expected node and label");
            auto it = final_index.find(node);
            if (it == final_index.end()) {
                if (index.count(node)) continue;  // label of a dropped isolated node
                throw LabelMismatch(labels_path + ":" + std::to_string(lno) +
                                    ": unknown node '" + node + "'");
            }
            auto lit = label_ids.find(label);
            if (lit == label_ids.end())
                lit = label_ids.emplace(label, static_cast<int>(label_ids.size())).first;
            labels[it->second] = lit->second;
        }
        for (std::size_t i = 0; i < labels.size(); ++i)
            if (labels[i] < 0)
                throw LabelMismatch("node '" + out.node_names[i] + "' has no label");
        out.graph.set_labels(std::move(labels));
    }
    return out;
}

void save_edge_list(const Graph& graph, const std::string& path,
                    const std::vector<std::string>* node_names) {
    std::ofstream outf(path);
    if (!outf) throw ParseError("cannot write file: " + path);
    for (auto [i, j] : graph.edges()) {
        if (node_names)
            outf << (*node_names)[i] << ' ' << (*node_names)[j] << '\n';
        else
            outf << i << ' ' << j << '\n';
    }
}

void save_labels(const std::vector<int>& labels, const std::string& path,
                 const std::vector<std::string>* node_names) {
    std::ofstream outf(path);
    if (!outf) throw ParseError("cannot write file: " + path);
    for (std::size_t i = 0; i < labels.size(); ++i) {
        if (node_names)
            outf << (*node_names)[i] << ' ' << labels[i] << '\n';
        else
            outf << i << ' ' << labels[i] << '\n';
    }
}

void save_latent_sidecar(const LatentModel& latent, const std::string& path) {
    nlohmann::json j;
    j["n"] = latent.params.n;
    j["k"] = latent.params.k;
    j["proportions"] = std::vector<double>(latent.params.proportions.data(),
                                           latent.params.proportions.data() + latent.params.k);
    std::vector<std::vector<double>> m(latent.params.k, std::vector<double>(latent.params.k));
    for (int a = 0; a < latent.params.k; ++a)
        for (int b = 0; b < latent.params.k; ++b) m[a][b] = latent.params.affinity(a, b);
    j["affinity"] = m;
    if (latent.params.weight_law.kind == WeightLawSpec::Kind::Discrete) {
        std::vector<std::vector<double>> atoms;
        for (const auto& a : latent.params.weight_law.atoms) atoms.push_back({a.q, a.mass});
        j["weight_law"] = {{"kind", "discrete"}, {"atoms", atoms}};
    } else {
        j["weight_law"] = {{"kind", "powerlaw"},
                           {"exponent", latent.params.weight_law.exponent},
                           {"q_lo", latent.params.weight_law.q_lo},
                           {"q_hi", latent.params.weight_law.q_hi}};
    }
    j["q"] = std::vector<double>(latent.q.data(), latent.q.data() + latent.q.size());
    j["labels"] = latent.labels;

    std::ofstream outf(path);
    if (!outf) throw ParseError("cannot write file: " + path);
    outf << j.dump(2) << '\n';
}

LatentModel load_latent_sidecar(const std::string& path) {
    std::ifstream in = open_or_throw(path);
    nlohmann::json j;
    in >> j;

    LatentModel latent;
    latent.params.n = j.at("n").get<int>();
    latent.params.k = j.at("k").get<int>();
    const auto props = j.at("proportions").get<std::vector<double>>();
    latent.params.proportions = Eigen::Map<const Eigen::VectorXd>(props.data(), props.size());
    const auto m = j.at("affinity").get<std::vector<std::vector<double>>>();
    latent.params.affinity.resize(latent.params.k, latent.params.k);
    for (int a = 0; a < latent.params.k; ++a)
        for (int b = 0; b < latent.params.k; ++b) latent.params.affinity(a, b) = m[a][b];
    const auto& wl = j.at("weight_law");
    if (wl.at("kind") == "discrete") {
        std::vector<WeightMeasure::Atom> atoms;
        for (const auto& a : wl.at("atoms")) atoms.push_back({a[0].get<double>(), a[1].get<double>()});
        latent.params.weight_law = WeightLawSpec::discrete(std::move(atoms));
    } else {
        latent.params.weight_law = WeightLawSpec::power_law(
            wl.at("exponent").get<double>(), wl.at("q_lo").get<double>(), wl.at("q_hi").get<double>());
    }
    const auto q = j.at("q").get<std::vector<double>>();
    latent.q = Eigen::Map<const Eigen::VectorXd>(q.data(), q.size());
    latent.labels = j.at("labels").get<std::vector<int>>();
    return latent;
}

}  // namespace alphamod
