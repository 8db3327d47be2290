#include "graphprod/graph.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <sstream>

#include <json.hpp>

namespace gp {

VertexGraph VertexGraph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
  if (n <= 0) throw SpecError("vertex count must be positive");
  VertexGraph g;
  g.vertex_count = n;
  g.adj.assign(n, std::vector<bool>(n, false));
  for (auto [i, j] : edges) {
    if (i < 0 || j < 0 || i >= n || j >= n) throw SpecError("edge endpoint out of range");
    if (i == j) throw SpecError("loop edge not allowed");
    g.adj[i][j] = true;
    g.adj[j][i] = true;
  }
  return g;
}

std::vector<int> VertexGraph::link(int v) const {
  std::vector<int> out;
  for (int w = 0; w < vertex_count; ++w)
    if (adj[v][w]) out.push_back(w);
  return out;
}

std::vector<int> VertexGraph::star(int v) const {
  std::vector<int> out;
  for (int w = 0; w < vertex_count; ++w)
    if (w == v || adj[v][w]) out.push_back(w);
  return out;
}

namespace {

void max_clique_rec(const VertexGraph& g, std::vector<int>& current, int next, int& best) {
  best = std::max(best, static_cast<int>(current.size()));
  for (int v = next; v < g.vertex_count; ++v) {
    bool ok = true;
    for (int u : current)
      if (!g.adjacent(u, v)) { ok = false; break; }
    if (!ok) continue;
    current.push_back(v);
    max_clique_rec(g, current, v + 1, best);
    current.pop_back();
  }
}

}  // namespace

int VertexGraph::kappa() const {
  int best = 0;
  std::vector<int> current;
  max_clique_rec(*this, current, 0, best);
  return std::max(best, 1);
}

void VertexGroup::validate() const {
  const int n = order;
  if (n <= 0) throw SpecError("group order must be positive");
  if (static_cast<int>(table.size()) != n) throw SpecError("Cayley table has wrong row count");
  for (const auto& row : table) {
    if (static_cast<int>(row.size()) != n) throw SpecError("Cayley table has wrong column count");
    for (int x : row)
      if (x < 0 || x >= n) throw SpecError("Cayley table entry out of range");
  }
  for (int a = 0; a < n; ++a) {
    if (table[0][a] != a || table[a][0] != a)
      throw SpecError("element 0 is not an identity of the Cayley table");
  }
  if (static_cast<int>(inv.size()) != n) throw SpecError("inverse table has wrong size");
  for (int a = 0; a < n; ++a) {
    if (inv[a] < 0 || inv[a] >= n || table[a][inv[a]] != 0 || table[inv[a]][a] != 0)
      throw SpecError("element without a two-sided inverse");
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (table[table[a][b]][c] != table[a][table[b][c]])
          throw SpecError("Cayley table is not associative");
}

namespace {

VertexGroup finish_group(std::vector<std::vector<int>> table) {
  VertexGroup g;
  g.order = static_cast<int>(table.size());
  g.table = std::move(table);
  g.inv.assign(g.order, -1);
  for (int a = 0; a < g.order; ++a)
    for (int b = 0; b < g.order; ++b)
      if (g.table[a][b] == 0) g.inv[a] = b;
  g.validate();
  return g;
}

}  // namespace

VertexGroup cyclic_group(int n) {
  if (n <= 0) throw SpecError("cyclic group order must be positive");
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) t[a][b] = (a + b) % n;
  return finish_group(std::move(t));
}

VertexGroup dihedral_group(int n) {
  if (n <= 0) throw SpecError("dihedral parameter must be positive");
  // element i + n*s denotes r^i s^s, with s r = r^{-1} s
  const int o = 2 * n;
  auto rot = [n](int e) { return e % n; };
  auto flip = [n](int e) { return e / n; };
  std::vector<std::vector<int>> t(o, std::vector<int>(o));
  for (int a = 0; a < o; ++a) {
    for (int b = 0; b < o; ++b) {
      int ra = rot(a), sa = flip(a), rb = rot(b), sb = flip(b);
      int r = sa ? (ra - rb % n + n) % n : (ra + rb) % n;
      int s = (sa + sb) % 2;
      t[a][b] = r + n * s;
    }
  }
  return finish_group(std::move(t));
}

VertexGroup symmetric_group(int n) {
  if (n <= 0 || n > 6) throw SpecError("symmetric group parameter must be in 1..6");
  std::vector<std::vector<int>> perms;
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  do {
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  // lexicographic rank; identity has rank 0
  auto rank_of = [&](const std::vector<int>& q) {
    return static_cast<int>(std::lower_bound(perms.begin(), perms.end(), q) - perms.begin());
  };
  const int o = static_cast<int>(perms.size());
  std::vector<std::vector<int>> t(o, std::vector<int>(o));
  for (int a = 0; a < o; ++a) {
    for (int b = 0; b < o; ++b) {
      std::vector<int> c(n);
      for (int i = 0; i < n; ++i) c[i] = perms[a][perms[b][i]];
      t[a][b] = rank_of(c);
    }
  }
  return finish_group(std::move(t));
}

ProductSpec make_spec(std::string name, VertexGraph graph, std::vector<VertexGroup> groups) {
  const int n = graph.vertex_count;
  if (n <= 0) throw SpecError("empty vertex graph");
  for (int v = 0; v < n; ++v) {
    if (graph.adj[v][v]) throw SpecError("adjacency has a loop");
    for (int w = 0; w < n; ++w)
      if (graph.adj[v][w] != graph.adj[w][v]) throw SpecError("adjacency not symmetric");
  }
  if (static_cast<int>(groups.size()) != n)
    throw SpecError("number of vertex groups differs from vertex count");
  for (const auto& g : groups) g.validate();
  ProductSpec spec;
  spec.name = std::move(name);
  spec.graph = std::move(graph);
  spec.groups = std::move(groups);
  spec.kappa = spec.graph.kappa();
  return spec;
}

ProductSpec load_spec_text(const std::string& json_text, const std::string& name) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::exception& e) {
    throw SpecError(std::string("malformed group-spec document: ") + e.what());
  }
  if (!doc.contains("vertices") || !doc["vertices"].is_number_integer())
    throw SpecError("group-spec document missing integer 'vertices'");
  const int n = doc["vertices"].get<int>();
  std::vector<std::pair<int, int>> edges;
  if (doc.contains("edges")) {
    for (const auto& e : doc["edges"]) {
      if (!e.is_array() || e.size() != 2) throw SpecError("edge must be a pair [i,j]");
      edges.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
  }
  if (!doc.contains("groups") || !doc["groups"].is_array())
    throw SpecError("group-spec document missing 'groups' array");
  std::vector<VertexGroup> groups;
  for (const auto& g : doc["groups"]) {
    if (g.contains("family")) {
      const std::string fam = g["family"].get<std::string>();
      const int k = g.value("n", 0);
      if (fam == "cyclic")
        groups.push_back(cyclic_group(k));
      else if (fam == "dihedral")
        groups.push_back(dihedral_group(k));
      else if (fam == "symmetric")
        groups.push_back(symmetric_group(k));
      else
        throw SpecError("unknown group family: " + fam);
    } else if (g.contains("table")) {
      std::vector<std::vector<int>> table;
      for (const auto& row : g["table"]) table.push_back(row.get<std::vector<int>>());
      const int o = static_cast<int>(table.size());
      VertexGroup vg;
      vg.order = o;
      vg.table = std::move(table);
      vg.inv.assign(o, 0);
      for (int a = 0; a < o; ++a) {
        vg.inv[a] = -1;
        for (int b = 0; b < o; ++b) {
          if (a < static_cast<int>(vg.table.size()) && b < static_cast<int>(vg.table[a].size()) &&
              vg.table[a][b] == 0) {
            vg.inv[a] = b;
            break;
          }
        }
        if (vg.inv[a] < 0) throw SpecError("table row without an identity column");
      }
      groups.push_back(std::move(vg));
    } else {
      throw SpecError("group entry needs 'family' or 'table'");
    }
  }
  std::string spec_name = doc.value("name", name);
  return make_spec(spec_name, VertexGraph::from_edges(n, edges), std::move(groups));
}

ProductSpec load_spec_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SpecError("cannot open spec file: " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return load_spec_text(ss.str(), path);
}

}  // namespace gp
