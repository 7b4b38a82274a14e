#include "plutus/graph.hpp"

#include <algorithm>
#include <string>

namespace plutus {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::SelfLoop: return "SelfLoop";
    case ErrorKind::VertexOutOfRange: return "VertexOutOfRange";
    case ErrorKind::NonFiniteCoordinate: return "NonFiniteCoordinate";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::EmptyGraph: return "EmptyGraph";
    case ErrorKind::DisconnectedInput: return "DisconnectedInput";
    case ErrorKind::GraphNotMConnected: return "GraphNotMConnected";
    case ErrorKind::InfeasibleKDominance: return "InfeasibleKDominance";
    case ErrorKind::Infeasible2Connectivity: return "Infeasible2Connectivity";
    case ErrorKind::Infeasible3Connectivity: return "Infeasible3Connectivity";
    case ErrorKind::IterationCapExceeded: return "IterationCapExceeded";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::Parse: return "Parse";
    case ErrorKind::Io: return "Io";
  }
  return "Unknown";
}

Graph Graph::from_edge_list(int n, std::span<const Edge> edges) {
  if (n < 0) {
    throw Error(ErrorKind::InvalidArgument, "negative node count");
  }
  Graph g;
  g.adjacency_.resize(n);
  for (const auto& [u, v] : edges) {
    if (u < 0 || u >= n || v < 0 || v >= n) {
      throw Error(ErrorKind::VertexOutOfRange,
                  "edge (" + std::to_string(u) + "," + std::to_string(v) +
                      ") outside 0.." + std::to_string(n - 1));
    }
    if (u == v) {
      throw Error(ErrorKind::SelfLoop, "self-loop at " + std::to_string(u), {u});
    }
    g.adjacency_[u].push_back(v);
    g.adjacency_[v].push_back(u);
  }
  for (auto& list : g.adjacency_) {
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
    g.edge_count_ += list.size();
  }
  g.edge_count_ /= 2;
  return g;
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  if (!contains(u) || !contains(v)) return false;
  const auto& list = adjacency_[u];
  return std::binary_search(list.begin(), list.end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (Vertex u = 0; u < node_count(); ++u) {
    for (Vertex v : adjacency_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

VertexSet Graph::vertices() const {
  VertexSet all(node_count());
  for (Vertex v = 0; v < node_count(); ++v) all[v] = v;
  return all;
}

VertexMask make_mask(int n, std::span<const Vertex> vertices) {
  VertexMask mask(n, 0);
  for (Vertex v : vertices) mask[v] = 1;
  return mask;
}

VertexSet normalized(VertexSet vertices) {
  std::sort(vertices.begin(), vertices.end());
  vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
  return vertices;
}

std::size_t induced_edge_count(const Graph& g, std::span<const Vertex> subset) {
  const VertexMask in = make_mask(g.node_count(), subset);
  std::size_t count = 0;
  for (Vertex u : subset) {
    for (Vertex v : g.neighbors(u)) {
      if (in[v] && u < v) ++count;
    }
  }
  return count;
}

}  // namespace plutus
