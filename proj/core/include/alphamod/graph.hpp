#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "alphamod/measure.hpp"

namespace alphamod {

/// Ground-truth generative model: K classes with proportions c, affinity
/// deltas M (C_ab = 1 + M_ab/sqrt(n)) and a weight law for the q_i.
struct DcsbmParams {
    int n = 0;
    int k = 0;
    Eigen::VectorXd proportions;  // length k, positive, sums to 1
    Eigen::MatrixXd affinity;     // k x k symmetric
    WeightLawSpec weight_law;

    void validate() const;

    /// Deterministic class sizes: largest-remainder rounding of n*c_a.
    std::vector<int> class_sizes() const;
};

/// Undirected simple graph with packed upper-triangular adjacency bits.
/// Isolated nodes are rejected at construction; dense matrices are only
/// materialized by the operator builders.
class Graph {
public:
    Graph() = default;
    /// Construct from an explicit edge list over nodes 0..n-1.
    Graph(int n, const std::vector<std::pair<int, int>>& edges);

    int n() const { return n_; }
    std::int64_t twice_edges() const { return twice_edges_; }
    const std::vector<int>& degrees() const { return degrees_; }

    bool has_edge(int i, int j) const;

    const std::optional<std::vector<int>>& labels() const { return labels_; }
    void set_labels(std::vector<int> labels);

    std::vector<std::pair<int, int>> edges() const;

    /// Write the adjacency into a dense symmetric 0/1 matrix.
    Eigen::MatrixXd dense_adjacency() const;

    Eigen::VectorXd degree_vector() const;

    /// Builder used by the samplers/parsers; bits must be set before
    /// finalize() computes degrees and drops nothing (degree-0 check only).
    class Builder {
    public:
        explicit Builder(int n);
        void add_edge(int i, int j);
        bool has_edge(int i, int j) const;
        /// Returns the graph plus the kept-node remap (old index per new node);
        /// isolated nodes are dropped.
        std::pair<Graph, std::vector<int>> finalize() &&;

    private:
        int n_;
        std::vector<std::uint64_t> bits_;
    };

private:
    std::size_t bit_index(int i, int j) const;

    int n_ = 0;
    std::int64_t twice_edges_ = 0;
    std::vector<std::uint64_t> bits_;
    std::vector<int> degrees_;
    std::optional<std::vector<int>> labels_;
};

/// Per-node latent state of a generated graph; retained as the oracle for
/// the random-equivalent operator.
struct LatentModel {
    Eigen::VectorXd q;
    std::vector<int> labels;
    DcsbmParams params;

    /// Empirical class proportions of the realized labels.
    Eigen::VectorXd proportions() const;
};

/// Sample a DCSBM graph: P_ij = q_i q_j (1 + M_{g_i g_j}/sqrt(n)).
std::pair<Graph, LatentModel> sample_dcsbm(const DcsbmParams& params, std::uint64_t seed);

struct WeightEstimate {
    Eigen::VectorXd q_hat;  // d_i / sqrt(d' 1)
    WeightMeasure mu_hat;   // histogram-compressed empirical measure
    int clipped = 0;        // q_hat values clipped into (0,1)
};

/// Lemma-1 estimator of the intrinsic weights and their empirical law.
WeightEstimate estimate_weights(const Graph& graph, int bins = 200);

}  // namespace alphamod
