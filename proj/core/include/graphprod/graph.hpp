#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace gp {

struct SpecError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Finite simplicial graph: no loops, symmetric adjacency.
struct VertexGraph {
  int vertex_count = 0;
  std::vector<std::vector<bool>> adj;

  static VertexGraph from_edges(int n, const std::vector<std::pair<int, int>>& edges);

  bool adjacent(int v, int w) const { return adj[v][w]; }
  bool in_star(int v, int w) const { return v == w || adj[v][w]; }

  std::vector<int> link(int v) const;
  std::vector<int> star(int v) const;

  /// Exact maximum clique size, by exhaustive search.
  int kappa() const;
};

/// Finite group given by its Cayley table. Element 0 is the identity.
struct VertexGroup {
  int order = 1;
  std::vector<std::vector<int>> table;  // table[a][b] = a*b
  std::vector<int> inv;

  int mul(int a, int b) const { return table[a][b]; }
  int inverse(int a) const { return inv[a]; }

  /// Checks closure, identity, inverses and associativity; throws SpecError.
  void validate() const;
};

VertexGroup cyclic_group(int n);
VertexGroup dihedral_group(int n);   // order 2n
VertexGroup symmetric_group(int n);  // order n!

struct ProductSpec {
  std::string name;
  VertexGraph graph;
  std::vector<VertexGroup> groups;
  int kappa = 1;  // cached max clique size of graph
};

/// Validates graph and groups, caches kappa.
ProductSpec make_spec(std::string name, VertexGraph graph, std::vector<VertexGroup> groups);

/// Group-spec documents:
///   {"vertices": n, "edges": [[i,j],...],
///    "groups": [{"family":"cyclic","n":2} | {"table":[[...]]}, ...]}
ProductSpec load_spec_text(const std::string& json_text, const std::string& name = "spec");
ProductSpec load_spec_file(const std::string& path);

}  // namespace gp
