#include "stronggenus/graph.hpp"

#include <algorithm>
#include <queue>
#include <sstream>

namespace stronggenus {

Graph::Graph(int vertex_count, const std::vector<std::pair<int, int>>& edges)
    : n_(vertex_count) {
    if (vertex_count <= 0)
        fail(Errc::InvalidParameter, "graph needs at least one vertex");
    edge_u_.reserve(edges.size());
    edge_v_.reserve(edges.size());
    darts_at_.assign(n_, {});
    for (size_t i = 0; i < edges.size(); ++i) {
        auto [u, v] = edges[i];
        if (u < 0 || u >= n_ || v < 0 || v >= n_)
            fail(Errc::VertexOutOfRange,
                 "edge " + std::to_string(i + 1) + " references a vertex out of range");
        if (u == v)
            fail(Errc::LoopRejected, "edge " + std::to_string(i + 1) + " is a loop");
        edge_u_.push_back(u);
        edge_v_.push_back(v);
        darts_at_[u].push_back(dart_of(static_cast<int>(i), 0));
        darts_at_[v].push_back(dart_of(static_cast<int>(i), 1));
    }
    // handshake: every dart is attached to exactly one vertex
    size_t total = 0;
    for (const auto& ds : darts_at_) total += ds.size();
    if (total != 2 * edge_u_.size())
        fail(Errc::InternalError, "handshake violated");
}

bool Graph::adjacent(int u, int v) const {
    for (int d : darts_at_[u])
        if (far_endpoint(d) == v) return true;
    return false;
}

std::optional<int> Graph::find_edge(int u, int v) const {
    std::optional<int> best;
    for (int d : darts_at_[u]) {
        if (far_endpoint(d) == v) {
            int e = edge_of(d);
            if (!best || e < *best) best = e;
        }
    }
    return best;
}

std::vector<int> Graph::edges_between(int u, int v) const {
    std::vector<int> out;
    for (int d : darts_at_[u])
        if (far_endpoint(d) == v) out.push_back(edge_of(d));
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::pair<int, int>> Graph::edge_list() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(edge_u_.size());
    for (size_t e = 0; e < edge_u_.size(); ++e)
        out.emplace_back(edge_u_[e], edge_v_[e]);
    return out;
}

Graph parse_graph(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    int n = -1, m = -1;
    std::vector<std::pair<int, int>> edges;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string tag;
        if (!(ls >> tag)) continue; // blank
        if (tag[0] == '#') continue;
        if (tag == "p") {
            if (n >= 0)
                fail(Errc::MalformedInput,
                     "line " + std::to_string(lineno) + ": duplicate header");
            if (!(ls >> n >> m) || n <= 0 || m < 0)
                fail(Errc::MalformedInput,
                     "line " + std::to_string(lineno) + ": bad header");
        } else if (tag == "e") {
            if (n < 0)
                fail(Errc::MalformedInput,
                     "line " + std::to_string(lineno) + ": edge before header");
            int u, v;
            if (!(ls >> u >> v))
                fail(Errc::MalformedInput,
                     "line " + std::to_string(lineno) + ": bad edge line");
            if (u < 1 || u > n || v < 1 || v > n)
                fail(Errc::VertexOutOfRange,
                     "line " + std::to_string(lineno) + ": vertex out of range");
            if (u == v)
                fail(Errc::LoopRejected,
                     "line " + std::to_string(lineno) + ": loop edges are not allowed");
            edges.emplace_back(u - 1, v - 1);
        } else {
            fail(Errc::MalformedInput,
                 "line " + std::to_string(lineno) + ": unknown line type '" + tag + "'");
        }
    }
    if (n < 0) fail(Errc::MalformedInput, "missing header");
    if (static_cast<int>(edges.size()) != m)
        fail(Errc::MalformedInput, "expected " + std::to_string(m) + " edges, got " +
                                       std::to_string(edges.size()));
    return Graph(n, edges);
}

std::string write_graph(const Graph& g) {
    std::ostringstream out;
    out << "p " << g.vertex_count() << " " << g.edge_count() << "\n";
    for (int e = 0; e < g.edge_count(); ++e) {
        auto [u, v] = g.edge_endpoints(e);
        out << "e " << u + 1 << " " << v + 1 << "\n";
    }
    return out.str();
}

bool is_connected(const Graph& g) {
    int n = g.vertex_count();
    std::vector<char> seen(n, 0);
    std::queue<int> q;
    q.push(0);
    seen[0] = 1;
    int count = 1;
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        for (int d : g.darts_at(v)) {
            int w = g.far_endpoint(d);
            if (!seen[w]) {
                seen[w] = 1;
                ++count;
                q.push(w);
            }
        }
    }
    return count == n;
}

bool is_cubic(const Graph& g) {
    for (int v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) != 3) return false;
    return true;
}

namespace {

// Unit-capacity max-flow on the vertex-split network, counting internally
// disjoint s-t paths. Vertices split into in/out nodes with capacity 1.
int local_connectivity(const Graph& g, int s, int t) {
    int n = g.vertex_count();
    // node ids: in(v) = 2v, out(v) = 2v+1
    struct Arc {
        int to, cap;
    };
    std::vector<Arc> arcs;
    std::vector<std::vector<int>> adj(2 * n);
    auto add_arc = [&](int a, int b, int cap) {
        adj[a].push_back(static_cast<int>(arcs.size()));
        arcs.push_back({b, cap});
        adj[b].push_back(static_cast<int>(arcs.size()));
        arcs.push_back({a, 0});
    };
    for (int v = 0; v < n; ++v) add_arc(2 * v, 2 * v + 1, v == s || v == t ? n : 1);
    for (int e = 0; e < g.edge_count(); ++e) {
        auto [u, v] = g.edge_endpoints(e);
        add_arc(2 * u + 1, 2 * v, 1);
        add_arc(2 * v + 1, 2 * u, 1);
    }
    int source = 2 * s + 1, sink = 2 * t;
    int flow = 0;
    while (true) {
        std::vector<int> pred_arc(2 * n, -1);
        std::queue<int> q;
        q.push(source);
        std::vector<char> seen(2 * n, 0);
        seen[source] = 1;
        while (!q.empty() && !seen[sink]) {
            int a = q.front();
            q.pop();
            for (int id : adj[a]) {
                if (arcs[id].cap > 0 && !seen[arcs[id].to]) {
                    seen[arcs[id].to] = 1;
                    pred_arc[arcs[id].to] = id;
                    q.push(arcs[id].to);
                }
            }
        }
        if (!seen[sink]) break;
        for (int v = sink; v != source;) {
            int id = pred_arc[v];
            arcs[id].cap -= 1;
            arcs[id ^ 1].cap += 1;
            v = arcs[id ^ 1].to;
        }
        ++flow;
    }
    return flow;
}

} // namespace

int connectivity(const Graph& g) {
    int n = g.vertex_count();
    if (n == 1) return 0;
    if (!is_connected(g)) return 0;
    bool complete = true;
    for (int u = 0; u < n && complete; ++u)
        for (int v = u + 1; v < n && complete; ++v)
            if (!g.adjacent(u, v)) complete = false;
    if (complete) return n - 1;
    int best = n;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (!g.adjacent(u, v)) best = std::min(best, local_connectivity(g, u, v));
    return best;
}

std::optional<int> girth(const Graph& g) {
    // For each edge, shortest alternative u-v path avoiding that edge id.
    std::optional<int> best;
    int n = g.vertex_count();
    for (int e = 0; e < g.edge_count(); ++e) {
        auto [u, v] = g.edge_endpoints(e);
        std::vector<int> dist(n, -1);
        std::queue<int> q;
        q.push(u);
        dist[u] = 0;
        while (!q.empty() && dist[v] < 0) {
            int a = q.front();
            q.pop();
            for (int d : g.darts_at(a)) {
                if (Graph::edge_of(d) == e) continue;
                int b = g.far_endpoint(d);
                if (dist[b] < 0) {
                    dist[b] = dist[a] + 1;
                    q.push(b);
                }
            }
        }
        if (dist[v] >= 0) {
            int cyc = dist[v] + 1;
            if (!best || cyc < *best) best = cyc;
        }
    }
    return best;
}

Graph suppress_degree_two(const Graph& g) {
    if (!is_connected(g))
        fail(Errc::InvalidParameter, "suppress_degree_two requires a connected graph");
    int n = g.vertex_count();
    std::vector<int> new_id(n, -1);
    int kept = 0;
    for (int v = 0; v < n; ++v)
        if (g.degree(v) != 2) new_id[v] = kept++;
    if (kept == 0)
        fail(Errc::DegenerateCycle, "graph is a cycle; suppression would leave a loop");

    std::vector<char> used(g.edge_count(), 0);
    std::vector<std::pair<int, int>> edges;
    for (int v = 0; v < n; ++v) {
        if (new_id[v] < 0) continue;
        for (int d0 : g.darts_at(v)) {
            if (used[Graph::edge_of(d0)]) continue;
            // walk through degree-2 vertices until another kept vertex
            int d = d0;
            used[Graph::edge_of(d)] = 1;
            int w = g.far_endpoint(d);
            while (g.degree(w) == 2) {
                const auto& ds = g.darts_at(w);
                int next = (ds[0] == Graph::mate(d)) ? ds[1] : ds[0];
                d = next;
                used[Graph::edge_of(d)] = 1;
                w = g.far_endpoint(d);
            }
            if (w == v)
                fail(Errc::DegenerateCycle,
                     "suppression of a pendant cycle would create a loop");
            edges.emplace_back(new_id[v], new_id[w]);
        }
    }
    // the used[] marks consume each chain on first traversal, so the scan from
    // the chain's other endpoint skips it
    return Graph(kept, edges);
}

bool is_subdivision_of_3connected(const Graph& g) {
    if (!is_connected(g)) return false;
    try {
        Graph h = suppress_degree_two(g);
        return connectivity(h) >= 3;
    } catch (const Error& err) {
        if (err.code() == Errc::DegenerateCycle) return false;
        throw;
    }
}

Graph subdivide_edge(const Graph& g, int e) {
    if (e < 0 || e >= g.edge_count())
        fail(Errc::InvalidParameter, "subdivide_edge: no such edge");
    auto edges = g.edge_list();
    int w = g.vertex_count();
    auto [u, v] = edges[e];
    edges[e] = {u, w};
    edges.emplace_back(w, v);
    return Graph(g.vertex_count() + 1, edges);
}

Graph remove_edge(const Graph& g, int e) {
    if (e < 0 || e >= g.edge_count())
        fail(Errc::InvalidParameter, "remove_edge: no such edge");
    auto edges = g.edge_list();
    edges.erase(edges.begin() + e);
    return Graph(g.vertex_count(), edges);
}

} // namespace stronggenus
