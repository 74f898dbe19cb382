#include "alphamod/graph.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "alphamod/errors.hpp"
#include "alphamod/rng.hpp"

namespace alphamod {

void DcsbmParams::validate() const {
    if (n < 2) throw InvalidParams("n must be at least 2");
    if (k < 1) throw InvalidParams("k must be at least 1");
    if (proportions.size() != k) throw InvalidParams("proportions length != k");
    double sum = 0.0;
    for (int a = 0; a < k; ++a) {
        if (!(proportions[a] > 0.0)) throw InvalidParams("class proportions must be positive");
        sum += proportions[a];
    }
    if (std::abs(sum - 1.0) > 1e-9) throw InvalidParams("class proportions must sum to 1");
    if (affinity.rows() != k || affinity.cols() != k) throw InvalidParams("affinity must be k x k");
    if (!affinity.isApprox(affinity.transpose(), 1e-12)) throw InvalidParams("affinity must be symmetric");
    weight_law.validate();
    if (static_cast<double>(n) * proportions.minCoeff() < 2.0)
        throw InvalidParams("smallest class would have fewer than 2 nodes");
}

std::vector<int> DcsbmParams::class_sizes() const {
    std::vector<int> sizes(k);
    std::vector<std::pair<double, int>> rema(k);
    int assigned = 0;
    for (int a = 0; a < k; ++a) {
        const double raw = proportions[a] * n;
        sizes[a] = static_cast<int>(std::floor(raw));
        rema[a] = {raw - sizes[a], a};
        assigned += sizes[a];
    }
    std::sort(rema.begin(), rema.end(), [](auto& x, auto& y) { return x.first > y.first; });
    for (int i = 0; i < n - assigned; ++i) sizes[rema[i % k].second] += 1;
    return sizes;
}

namespace {

// upper triangle, i < j
std::size_t tri_index(int n, int i, int j) {
    const std::size_t row = static_cast<std::size_t>(i);
    const std::size_t nn = static_cast<std::size_t>(n);
    return row * nn - row * (row + 1) / 2 + static_cast<std::size_t>(j - i - 1);
}

}  // namespace

std::size_t Graph::bit_index(int i, int j) const { return tri_index(n_, i, j); }

Graph::Builder::Builder(int n) : n_(n) {
    if (n < 1) throw InvalidParams("graph must have at least one node");
    const std::size_t nbits = static_cast<std::size_t>(n) * (n - 1) / 2;
    bits_.assign((nbits + 63) / 64, 0);
}

void Graph::Builder::add_edge(int i, int j) {
    if (i == j) return;
    if (i > j) std::swap(i, j);
    const std::size_t idx = tri_index(n_, i, j);
    bits_[idx >> 6] |= (std::uint64_t{1} << (idx & 63));
}

bool Graph::Builder::has_edge(int i, int j) const {
    if (i == j) return false;
    if (i > j) std::swap(i, j);
    const std::size_t idx = tri_index(n_, i, j);
    return (bits_[idx >> 6] >> (idx & 63)) & 1;
}

std::pair<Graph, std::vector<int>> Graph::Builder::finalize() && {
    std::vector<int> deg(n_, 0);
    for (int i = 0; i < n_; ++i)
        for (int j = i + 1; j < n_; ++j)
            if (has_edge(i, j)) {
                ++deg[i];
                ++deg[j];
            }
    std::vector<int> kept;
    kept.reserve(n_);
    for (int i = 0; i < n_; ++i)
        if (deg[i] > 0) kept.push_back(i);
    if (kept.empty()) throw EmptyGraph("graph has no edges");

    Graph g;
    if (static_cast<int>(kept.size()) == n_) {
        g.n_ = n_;
        g.bits_ = std::move(bits_);
        g.degrees_ = std::move(deg);
    } else {
        g.n_ = static_cast<int>(kept.size());
        const std::size_t nbits = static_cast<std::size_t>(g.n_) * (g.n_ - 1) / 2;
        g.bits_.assign((nbits + 63) / 64, 0);
        g.degrees_.assign(g.n_, 0);
        for (int a = 0; a < g.n_; ++a)
            for (int b = a + 1; b < g.n_; ++b)
                if (has_edge(kept[a], kept[b])) {
                    const std::size_t idx = g.bit_index(a, b);
                    g.bits_[idx >> 6] |= (std::uint64_t{1} << (idx & 63));
                    ++g.degrees_[a];
                    ++g.degrees_[b];
                }
    }
    g.twice_edges_ = std::accumulate(g.degrees_.begin(), g.degrees_.end(), std::int64_t{0});
    return {std::move(g), std::move(kept)};
}

Graph::Graph(int n, const std::vector<std::pair<int, int>>& edges) {
    Builder b(n);
    for (auto [i, j] : edges) {
        if (i < 0 || i >= n || j < 0 || j >= n) throw InvalidParams("edge endpoint out of range");
        b.add_edge(i, j);
    }
    auto [g, kept] = std::move(b).finalize();
    if (static_cast<int>(kept.size()) != n)
        throw InvalidParams("explicit edge list left isolated nodes; use Builder/loader");
    *this = std::move(g);
}

bool Graph::has_edge(int i, int j) const {
    if (i == j) return false;
    if (i > j) std::swap(i, j);
    const std::size_t idx = bit_index(i, j);
    return (bits_[idx >> 6] >> (idx & 63)) & 1;
}

void Graph::set_labels(std::vector<int> labels) {
    if (static_cast<int>(labels.size()) != n_) throw LabelMismatch("label vector length != n");
    labels_ = std::move(labels);
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(static_cast<std::size_t>(twice_edges_ / 2));
    for (int i = 0; i < n_; ++i)
        for (int j = i + 1; j < n_; ++j)
            if (has_edge(i, j)) out.emplace_back(i, j);
    return out;
}

Eigen::MatrixXd Graph::dense_adjacency() const {
    Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n_, n_);
    for (int i = 0; i < n_; ++i)
        for (int j = i + 1; j < n_; ++j)
            if (has_edge(i, j)) {
                a(i, j) = 1.0;
                a(j, i) = 1.0;
            }
    return a;
}

Eigen::VectorXd Graph::degree_vector() const {
    Eigen::VectorXd d(n_);
    for (int i = 0; i < n_; ++i) d[i] = degrees_[i];
    return d;
}

Eigen::VectorXd LatentModel::proportions() const {
    const int k = params.k;
    Eigen::VectorXd c = Eigen::VectorXd::Zero(k);
    for (int g : labels) c[g] += 1.0;
    return c / static_cast<double>(labels.size());
}

std::pair<Graph, LatentModel> sample_dcsbm(const DcsbmParams& params, std::uint64_t seed) {
    params.validate();
    const int n = params.n;
    const int k = params.k;

    std::vector<int> labels(n);
    {
        const std::vector<int> sizes = params.class_sizes();
        int pos = 0;
        for (int a = 0; a < k; ++a)
            for (int i = 0; i < sizes[a]; ++i) labels[pos++] = a;
    }

    Eigen::VectorXd q(n);
    for (int i = 0; i < n; ++i)
        q[i] = params.weight_law.sample(uniform_at(seed, 0x71e57a5eULL, static_cast<std::uint64_t>(i)));

    const double sqrt_n = std::sqrt(static_cast<double>(n));
    Eigen::MatrixXd c_factor = Eigen::MatrixXd::Ones(k, k) + params.affinity / sqrt_n;
    if (c_factor.minCoeff() <= 0.0)
        throw InvalidProbability("1 + M_ab/sqrt(n) must stay positive");
    const double q_max = q.maxCoeff();
    if (q_max * q_max * c_factor.maxCoeff() >= 1.0)
        throw InvalidProbability("some edge probability q_i q_j C_ab reaches 1");

    Graph::Builder b(n);
    for (int i = 0; i < n; ++i) {
        const double qi = q[i];
        const int gi = labels[i];
        for (int j = i + 1; j < n; ++j) {
            const double p = qi * q[j] * c_factor(gi, labels[j]);
            if (uniform_at(seed, static_cast<std::uint64_t>(i), static_cast<std::uint64_t>(j)) < p)
                b.add_edge(i, j);
        }
    }
    auto [graph, kept] = std::move(b).finalize();

    LatentModel latent;
    latent.params = params;
    if (static_cast<int>(kept.size()) == n) {
        latent.q = q;
        latent.labels = labels;
    } else {
        latent.q.resize(kept.size());
        latent.labels.resize(kept.size());
        for (std::size_t a = 0; a < kept.size(); ++a) {
            latent.q[a] = q[kept[a]];
            latent.labels[a] = labels[kept[a]];
        }
    }
    graph.set_labels(latent.labels);
    return {std::move(graph), std::move(latent)};
}

WeightEstimate estimate_weights(const Graph& graph, int bins) {
    if (graph.n() == 0 || graph.twice_edges() == 0) throw EmptyGraph("cannot estimate weights");
    const int n = graph.n();
    const double norm = std::sqrt(static_cast<double>(graph.twice_edges()));

    WeightEstimate est;
    est.q_hat.resize(n);
    for (int i = 0; i < n; ++i) {
        double qh = graph.degrees()[i] / norm;
        if (qh <= 0.0 || qh >= 1.0) {
            qh = std::min(std::max(qh, 1e-6), 1.0 - 1e-6);
            ++est.clipped;
        }
        est.q_hat[i] = qh;
    }

    const double lo = est.q_hat.minCoeff();
    const double hi = est.q_hat.maxCoeff();
    if (hi - lo < 1e-12 || bins <= 1) {
        est.mu_hat = WeightMeasure::single_atom(0.5 * (lo + hi));
        return est;
    }
    std::vector<double> sum(static_cast<std::size_t>(bins), 0.0);
    std::vector<int> count(static_cast<std::size_t>(bins), 0);
    for (int i = 0; i < n; ++i) {
        int b = static_cast<int>((est.q_hat[i] - lo) / (hi - lo) * bins);
        b = std::min(std::max(b, 0), bins - 1);
        sum[b] += est.q_hat[i];
        ++count[b];
    }
    std::vector<WeightMeasure::Atom> atoms;
    for (int b = 0; b < bins; ++b)
        if (count[b] > 0)
            atoms.push_back({sum[b] / count[b], static_cast<double>(count[b]) / n});
    est.mu_hat = WeightMeasure(std::move(atoms));
    return est;
}

}  // namespace alphamod
