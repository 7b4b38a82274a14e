#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace plutus {

using Vertex = int;
// Sorted, duplicate-free list of vertex ids.
using VertexSet = std::vector<Vertex>;

enum class ErrorKind {
  SelfLoop,
  VertexOutOfRange,
  NonFiniteCoordinate,
  InvalidArgument,
  EmptyGraph,
  DisconnectedInput,
  GraphNotMConnected,
  InfeasibleKDominance,
  Infeasible2Connectivity,
  Infeasible3Connectivity,
  IterationCapExceeded,
  TooLarge,
  Parse,
  Io,
};

std::string_view to_string(ErrorKind kind);

// Every failure raised by the library. Carries the vertices that explain
// the failure when there are any (a stuck leaf block, a bad point, ...).
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message, VertexSet witness = {})
      : std::runtime_error(std::string(to_string(kind)) + ": " + message),
        kind_(kind),
        witness_(std::move(witness)) {}

  ErrorKind kind() const noexcept { return kind_; }
  const VertexSet& witness() const noexcept { return witness_; }

 private:
  ErrorKind kind_;
  VertexSet witness_;
};

}  // namespace plutus
