#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "gframes/errors.hpp"

namespace gframes {

/// Undirected weighted edge, 1-based endpoints with u < v.
struct Edge {
  int u = 0;
  int v = 0;
  double weight = 1.0;

  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Undirected weighted graph on vertices 1..N with strictly positive edge
/// weights, no self-loops and no duplicate unordered pairs. Immutable after
/// construction.
class Graph {
public:
  /// Validates and canonicalizes the edge set (u < v, sorted).
  Graph(int n_vertices, std::vector<Edge> edges);

  /// Parses the edge-list text format: '#' starts a comment, blank lines are
  /// skipped, an optional header "n <N>" fixes the vertex count, every other
  /// line is "i j [w]" with 1-based indices and w defaulting to 1.0.
  /// `n_hint` supplies the vertex count when the header is absent (0 = none).
  static Graph parse_edge_list(std::istream& in, int n_hint = 0);
  static Graph parse_edge_list(const std::string& text, int n_hint = 0);

  int num_vertices() const { return n_; }
  const std::vector<Edge>& edges() const { return edges_; }

  /// Serializes back to the edge-list format, header included. Weights are
  /// printed with 17 significant digits so parse(to_edge_list()) reproduces
  /// the edge set exactly.
  std::string to_edge_list() const;

private:
  int n_;
  std::vector<Edge> edges_;
};

enum class OperatorKind { laplacian, adjacency };

const char* to_string(OperatorKind kind);
OperatorKind operator_kind_from_string(std::string_view name);

/// Real symmetric matrix associated with a graph. The matrix is assembled
/// symmetrically, so matrix == matrix.transpose() holds exactly.
struct GraphOperator {
  OperatorKind kind;
  Eigen::MatrixXd matrix;
};

/// Graph Laplacian L = D - W: diagonal entry i is the (ascending-index) sum
/// of incident weights, off-diagonal (i,j) is -w(i,j).
GraphOperator laplacian(const Graph& g);

/// Weighted adjacency matrix W with zero diagonal.
GraphOperator adjacency(const Graph& g);

struct Connectivity {
  int components = 0;
  bool connected() const { return components == 1; }
};

/// Breadth-first component count. Diagnostic only: nothing in the library
/// requires connectivity.
Connectivity connectivity_check(const Graph& g);

/// Dense row-major decimal dump, 17 significant digits per entry.
std::string dump_operator(const GraphOperator& op);

} // namespace gframes
