#pragma once

#include <string>
#include <vector>

#include "alphamod/graph.hpp"

namespace alphamod {

/// Result of parsing an edge-list file. Node tokens are arbitrary strings
/// mapped to dense indices in first-seen order; the report records how the
/// file was cleaned up.
struct LoadedGraph {
    Graph graph;
    std::vector<std::string> node_names;  // per final node index
    int self_loops_dropped = 0;
    int duplicate_edges = 0;
    int isolated_dropped = 0;
};

/// Lines are "u v" (whitespace separated tokens); '#' starts a comment line.
/// Self-loops are dropped with a warning count, duplicates collapsed,
/// isolated nodes removed. Optional labels file has "node label" lines.
LoadedGraph load_edge_list(const std::string& path, const std::string& labels_path = "");

void save_edge_list(const Graph& graph, const std::string& path,
                    const std::vector<std::string>* node_names = nullptr);

void save_labels(const std::vector<int>& labels, const std::string& path,
                 const std::vector<std::string>* node_names = nullptr);

/// Sidecar with everything needed to rebuild oracle quantities for a
/// generated graph: per-node q and label plus the generative parameters.
void save_latent_sidecar(const LatentModel& latent, const std::string& path);
LatentModel load_latent_sidecar(const std::string& path);

}  // namespace alphamod
