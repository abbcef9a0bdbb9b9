#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace antimagic {

// Input fails a documented precondition (caller's fault, recoverable).
struct precondition_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Bytes that do not parse into the domain types.
struct malformed_input_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Structural facts about the graph rule out the operation (odd cycle, odd
// degree in a place that must be even, ...).
struct structural_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A guaranteed-by-construction invariant failed; always a bug.
struct internal_error : std::logic_error {
    using std::logic_error::logic_error;
};

// Construction ran in unsafe mode and produced a certificate the verifier
// rejects (or could not run at all); the input is a counterexample candidate.
struct counterexample_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Floor division for b > 0; C++ '/' truncates toward zero and would give
// (0-1)/2 == 0 instead of the -1 the degree-bound formulas need.
inline long long floordiv(long long a, long long b) {
    long long q = a / b, r = a % b;
    return (r != 0 && (r < 0) != (b < 0)) ? q - 1 : q;
}

inline void require(bool ok, const char* what) {
    if (!ok) throw internal_error(what);
}

// Simple undirected graph; vertices are dense ids 0..vertex_count-1.
// Edge endpoint order is preserved as given (document round-trips depend on
// it); duplicate detection uses the unordered pair.
struct Graph {
    int vertex_count = 0;
    std::vector<std::pair<int, int>> edges;
    std::vector<std::vector<std::pair<int, int>>> adjacency; // (neighbor, edge id)

    int edge_count() const { return (int)edges.size(); }
    int degree(int v) const { return (int)adjacency[v].size(); }

    static Graph from_edges(int n, std::vector<std::pair<int, int>> e) {
        if (n < 0) throw malformed_input_error("negative vertex count");
        Graph g;
        g.vertex_count = n;
        g.adjacency.resize(n);
        std::set<std::pair<int, int>> seen;
        for (auto [u, v] : e) {
            if (u < 0 || u >= n || v < 0 || v >= n)
                throw malformed_input_error("edge endpoint out of range: " +
                                            std::to_string(u) + " " + std::to_string(v));
            if (u == v)
                throw malformed_input_error("self-loop at vertex " + std::to_string(u));
            std::pair<int, int> key = std::minmax(u, v);
            if (!seen.insert(key).second)
                throw malformed_input_error("duplicate edge " + std::to_string(u) + " " +
                                            std::to_string(v));
            int id = (int)g.edges.size();
            g.edges.push_back({u, v});
            g.adjacency[u].push_back({v, id});
            g.adjacency[v].push_back({u, id});
        }
        return g;
    }
};

// Same skeleton with duplicate pairs permitted; only used internally for the
// phantom-augmented graph in trail decomposition.
struct MultiGraph {
    int vertex_count = 0;
    std::vector<std::pair<int, int>> edges;
    std::vector<std::vector<std::pair<int, int>>> adjacency;

    int edge_count() const { return (int)edges.size(); }

    explicit MultiGraph(int n = 0) : vertex_count(n), adjacency(n) {}

    int add_edge(int u, int v) {
        if (u == v) throw internal_error("multigraph self-loop");
        int id = (int)edges.size();
        edges.push_back({u, v});
        adjacency[u].push_back({v, id});
        adjacency[v].push_back({u, id});
        return id;
    }
};

// Per edge id: true means the arc runs edges[e].first -> edges[e].second.
struct Orientation {
    std::vector<std::uint8_t> tail_is_first;

    int tail(const Graph& g, int e) const {
        return tail_is_first[e] ? g.edges[e].first : g.edges[e].second;
    }
    int head(const Graph& g, int e) const {
        return tail_is_first[e] ? g.edges[e].second : g.edges[e].first;
    }
};

// Per edge id: a positive label. declared_set, when nonempty, names the exact
// label set the producing construction promises (checked by that construction).
struct Labeling {
    std::vector<long long> labels;
    std::vector<long long> declared_set;
};

struct Certificate {
    Graph graph;
    Orientation orientation;
    Labeling labeling;
    std::vector<long long> sums;
};

// s(v) = sum of labels entering v minus sum of labels leaving v.
// Validates that the labeling covers every edge exactly once with distinct
// labels; isolated vertices get sum 0.
inline std::vector<long long> oriented_vertex_sums(const Graph& g, const Orientation& o,
                                                   const Labeling& l) {
    size_t m = g.edges.size();
    if (o.tail_is_first.size() != m || l.labels.size() != m)
        throw malformed_input_error("labeling/orientation does not cover every edge");
    std::set<long long> distinct(l.labels.begin(), l.labels.end());
    if (distinct.size() != m) throw malformed_input_error("duplicate labels");
    std::vector<long long> s(g.vertex_count, 0);
    for (size_t e = 0; e < m; e++) {
        s[o.head(g, (int)e)] += l.labels[e];
        s[o.tail(g, (int)e)] -= l.labels[e];
    }
    return s;
}

struct Verdict {
    enum class Kind { accept, duplicate_label, label_out_of_range, duplicate_sum };
    Kind kind = Kind::accept;
    int edge_a = -1, edge_b = -1;   // offending edges for label violations
    int vertex_a = -1, vertex_b = -1; // offending vertices for duplicate_sum
    std::string message;

    bool accepted() const { return kind == Kind::accept; }
};

// Ground truth: accept iff labels are a bijection onto [1, m] and all vertex
// sums are pairwise distinct. Reports the first violation deterministically:
// out-of-range by edge id, then duplicate label by edge id, then duplicate
// sum by vertex id.
inline Verdict verify_antimagic(const Certificate& cert) {
    const Graph& g = cert.graph;
    long long m = g.edge_count();
    if ((long long)cert.labeling.labels.size() != m ||
        (long long)cert.orientation.tail_is_first.size() != m)
        throw malformed_input_error("certificate does not cover every edge");
    Verdict v;
    for (int e = 0; e < m; e++) {
        long long lab = cert.labeling.labels[e];
        if (lab < 1 || lab > m) {
            v.kind = Verdict::Kind::label_out_of_range;
            v.edge_a = e;
            v.message = "label " + std::to_string(lab) + " on edge " + std::to_string(e) +
                        " outside [1, " + std::to_string(m) + "]";
            return v;
        }
    }
    std::map<long long, int> first_edge;
    for (int e = 0; e < m; e++) {
        auto [it, fresh] = first_edge.insert({cert.labeling.labels[e], e});
        if (!fresh) {
            v.kind = Verdict::Kind::duplicate_label;
            v.edge_a = it->second;
            v.edge_b = e;
            v.message = "label " + std::to_string(cert.labeling.labels[e]) +
                        " duplicated on edges " + std::to_string(it->second) + " and " +
                        std::to_string(e);
            return v;
        }
    }
    std::vector<long long> s(g.vertex_count, 0);
    for (int e = 0; e < m; e++) {
        s[cert.orientation.head(g, e)] += cert.labeling.labels[e];
        s[cert.orientation.tail(g, e)] -= cert.labeling.labels[e];
    }
    std::map<long long, int> first_vertex;
    for (int u = 0; u < g.vertex_count; u++) {
        auto [it, fresh] = first_vertex.insert({s[u], u});
        if (!fresh) {
            v.kind = Verdict::Kind::duplicate_sum;
            v.vertex_a = it->second;
            v.vertex_b = u;
            v.message = "vertices " + std::to_string(it->second) + " and " +
                        std::to_string(u) + " share sum " + std::to_string(s[u]);
            return v;
        }
    }
    v.message = "antimagic";
    return v;
}

struct NotBipartiteError : structural_error {
    std::vector<int> odd_cycle; // closed walk of odd length witnessing the reject
    explicit NotBipartiteError(std::vector<int> cycle)
        : structural_error("graph is not bipartite (odd cycle of length " +
                           std::to_string(cycle.size() - 1) + ")"),
          odd_cycle(std::move(cycle)) {}
};

struct Bipartition {
    std::vector<int> side; // 0/1 per vertex
    std::vector<int> X, Y; // side 0 and side 1 vertex lists, ascending
};

// Per-component BFS 2-coloring; the smallest vertex of each component gets
// side 0. Throws NotBipartiteError carrying an odd closed walk.
inline Bipartition bipartition(const Graph& g) {
    Bipartition b;
    b.side.assign(g.vertex_count, -1);
    std::vector<int> parent(g.vertex_count, -1);
    std::vector<int> queue;
    for (int root = 0; root < g.vertex_count; root++) {
        if (b.side[root] != -1) continue;
        b.side[root] = 0;
        queue.clear();
        queue.push_back(root);
        for (size_t qi = 0; qi < queue.size(); qi++) {
            int u = queue[qi];
            for (auto [w, e] : g.adjacency[u]) {
                if (b.side[w] == -1) {
                    b.side[w] = 1 - b.side[u];
                    parent[w] = u;
                    queue.push_back(w);
                } else if (b.side[w] == b.side[u]) {
                    // walk both endpoints up to the root; the two tree paths
                    // plus edge (u,w) contain an odd closed walk
                    std::vector<int> up, wp;
                    for (int x = u; x != -1; x = parent[x]) up.push_back(x);
                    for (int x = w; x != -1; x = parent[x]) wp.push_back(x);
                    std::vector<int> cycle(up.rbegin(), up.rend());
                    cycle.insert(cycle.end(), wp.begin(), wp.end());
                    throw NotBipartiteError(std::move(cycle));
                }
            }
        }
    }
    for (int v = 0; v < g.vertex_count; v++)
        (b.side[v] == 0 ? b.X : b.Y).push_back(v);
    return b;
}

// A subgraph that shares the parent's vertex universe; parent_edge maps the
// subgraph's edge ids back to the parent's.
struct EdgeSubset {
    Graph graph;
    std::vector<int> parent_edge;
};

inline EdgeSubset subgraph_from_edges(const Graph& g, const std::vector<int>& edge_ids) {
    EdgeSubset s;
    std::vector<std::pair<int, int>> e;
    e.reserve(edge_ids.size());
    for (int id : edge_ids) e.push_back(g.edges[id]);
    s.graph = Graph::from_edges(g.vertex_count, std::move(e));
    s.parent_edge = edge_ids;
    return s;
}

} // namespace antimagic
