#include "stronggenus/embedding.hpp"

#include <algorithm>
#include <queue>
#include <set>
#include <sstream>

namespace stronggenus {

bool FaceWalk::is_cycle() const {
    if (darts.size() < 2) return false;
    std::vector<int> vs = vertices;
    std::sort(vs.begin(), vs.end());
    if (std::adjacent_find(vs.begin(), vs.end()) != vs.end()) return false;
    std::vector<int> es;
    es.reserve(darts.size());
    for (int d : darts) es.push_back(Graph::edge_of(d));
    std::sort(es.begin(), es.end());
    return std::adjacent_find(es.begin(), es.end()) == es.end();
}

std::vector<int> FaceWalk::odd_edges() const {
    std::vector<int> es;
    es.reserve(darts.size());
    for (int d : darts) es.push_back(Graph::edge_of(d));
    std::sort(es.begin(), es.end());
    std::vector<int> out;
    for (size_t i = 0; i < es.size();) {
        size_t j = i;
        while (j < es.size() && es[j] == es[i]) ++j;
        if ((j - i) % 2 == 1) out.push_back(es[i]);
        i = j;
    }
    return out;
}

bool FaceWalk::contains_vertex(int v) const {
    return std::find(vertices.begin(), vertices.end(), v) != vertices.end();
}

std::vector<int> EulerianSubgraph::vertex_set(const Graph& g) const {
    std::vector<int> vs;
    for (int e : edges) {
        auto [u, v] = g.edge_endpoints(e);
        vs.push_back(u);
        vs.push_back(v);
    }
    std::sort(vs.begin(), vs.end());
    vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
    return vs;
}

Embedding::Embedding(Graph graph, std::vector<std::vector<int>> rotations,
                     std::vector<int8_t> signature)
    : graph_(std::move(graph)), rotations_(std::move(rotations)),
      signature_(std::move(signature)) {
    int n = graph_.vertex_count();
    if (static_cast<int>(rotations_.size()) != n)
        fail(Errc::InvalidParameter, "one rotation per vertex required");
    if (signature_.empty()) signature_.assign(graph_.edge_count(), 1);
    if (static_cast<int>(signature_.size()) != graph_.edge_count())
        fail(Errc::InvalidParameter, "one signature entry per edge required");
    for (int8_t s : signature_) {
        if (s != 1 && s != -1)
            fail(Errc::InvalidParameter, "signatures must be +1 or -1");
        if (s == -1) all_positive_ = false;
    }
    rot_pos_.assign(graph_.dart_count(), -1);
    for (int v = 0; v < n; ++v) {
        const auto& rot = rotations_[v];
        if (static_cast<int>(rot.size()) != graph_.degree(v))
            fail(Errc::InvalidParameter,
                 "rotation at vertex " + std::to_string(v + 1) + " has wrong size");
        for (size_t i = 0; i < rot.size(); ++i) {
            int d = rot[i];
            if (d < 0 || d >= graph_.dart_count() || graph_.endpoint(d) != v ||
                rot_pos_[d] != -1)
                fail(Errc::InvalidParameter,
                     "rotation at vertex " + std::to_string(v + 1) +
                         " is not a permutation of its darts");
            rot_pos_[d] = static_cast<int>(i);
        }
    }
}

int Embedding::succ(int dart) const {
    const auto& rot = rotations_[graph_.endpoint(dart)];
    size_t i = rot_pos_[dart];
    return rot[(i + 1) % rot.size()];
}

int Embedding::pred(int dart) const {
    const auto& rot = rotations_[graph_.endpoint(dart)];
    size_t i = rot_pos_[dart];
    return rot[(i + rot.size() - 1) % rot.size()];
}

namespace {

// Trace state: walking along dart d with side s. States are encoded as
// 2*d + (s<0). One traversal step: cross the edge (the side flips on negative
// signature), then turn to the rotation successor (side +1) or predecessor
// (side -1) at the far endpoint. Orbits of this map come in mirror pairs, one
// pair per face; the mirror of (d,s) is (mate(d), -s*sig).
struct Tracer {
    const Embedding& e;

    int next(int state) const {
        int d = state >> 1;
        int s = (state & 1) ? -1 : 1;
        int s2 = s * e.signature(Graph::edge_of(d));
        int md = Graph::mate(d);
        int d2 = s2 > 0 ? e.succ(md) : e.pred(md);
        return 2 * d2 + (s2 < 0);
    }
    int mirror(int state) const {
        int d = state >> 1;
        int s = (state & 1) ? -1 : 1;
        int s2 = -s * e.signature(Graph::edge_of(d));
        return 2 * Graph::mate(d) + (s2 < 0);
    }
};

} // namespace

std::vector<FaceWalk> trace_faces(const Embedding& e) {
    const Graph& g = e.graph();
    Tracer tracer{e};
    int states = 2 * g.dart_count();
    std::vector<char> seen(states, 0);
    std::vector<FaceWalk> faces;
    for (int start = 0; start < states; ++start) {
        if (seen[start]) continue;
        FaceWalk walk;
        int s = start;
        do {
            seen[s] = 1;
            walk.darts.push_back(s >> 1);
            walk.sides.push_back((s & 1) ? -1 : 1);
            walk.vertices.push_back(g.endpoint(s >> 1));
            s = tracer.next(s);
        } while (s != start);
        // consume the mirror orbit; it describes the same face walked backwards
        int m0 = tracer.mirror(start);
        if (seen[m0])
            fail(Errc::InternalError, "face orbit paired with itself");
        int ms = m0;
        do {
            seen[ms] = 1;
            ms = tracer.next(ms);
        } while (ms != m0);
        faces.push_back(std::move(walk));
    }
    return faces;
}

int euler_characteristic(const Embedding& e) {
    const Graph& g = e.graph();
    int f = static_cast<int>(trace_faces(e).size());
    return g.vertex_count() - g.edge_count() + f;
}

SurfaceKind surface_of(const Embedding& e) {
    const Graph& g = e.graph();
    // flip-normalize the signature over a spanning tree; orientable iff every
    // non-tree edge then carries +1 (i.e. every cycle has positive product)
    int n = g.vertex_count();
    std::vector<int> phi(n, 0);
    std::queue<int> q;
    phi[0] = 1;
    q.push(0);
    bool orientable = true;
    std::vector<int> order;
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        order.push_back(v);
        for (int d : g.darts_at(v)) {
            int w = g.far_endpoint(d);
            if (phi[w] == 0) {
                phi[w] = phi[v] * e.signature(Graph::edge_of(d));
                q.push(w);
            }
        }
    }
    for (int ed = 0; ed < g.edge_count() && orientable; ++ed) {
        auto [u, v] = g.edge_endpoints(ed);
        if (phi[u] * e.signature(ed) * phi[v] != 1) orientable = false;
    }
    int chi = euler_characteristic(e);
    if (orientable) {
        if ((2 - chi) % 2 != 0)
            fail(Errc::OddCharacteristicOrientable,
                 "orientable scheme traced to odd euler characteristic");
        return SurfaceKind{true, (2 - chi) / 2};
    }
    return SurfaceKind{false, 2 - chi};
}

bool is_strong(const Embedding& e) {
    for (const FaceWalk& w : trace_faces(e))
        if (!w.is_cycle()) return false;
    return true;
}

namespace {

bool connected_after_deleting(const Graph& g, const std::vector<char>& deleted) {
    int n = g.vertex_count();
    int start = -1, remaining = 0;
    for (int v = 0; v < n; ++v)
        if (!deleted[v]) {
            if (start < 0) start = v;
            ++remaining;
        }
    if (remaining == 0) return true; // empty graph counts as connected
    std::vector<char> seen(n, 0);
    std::queue<int> q;
    q.push(start);
    seen[start] = 1;
    int count = 1;
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        for (int d : g.darts_at(v)) {
            int w = g.far_endpoint(d);
            if (!deleted[w] && !seen[w]) {
                seen[w] = 1;
                ++count;
                q.push(w);
            }
        }
    }
    return count == remaining;
}

} // namespace

bool is_polyhedral(const Embedding& e) {
    const Graph& g = e.graph();
    for (const FaceWalk& w : trace_faces(e)) {
        if (!w.is_cycle()) return false;
        // induced: the vertex set of the walk spans no edges beyond its own
        std::vector<char> on_walk(g.vertex_count(), 0);
        for (int v : w.vertices) on_walk[v] = 1;
        int spanned = 0;
        for (int ed = 0; ed < g.edge_count(); ++ed) {
            auto [u, v] = g.edge_endpoints(ed);
            if (on_walk[u] && on_walk[v]) ++spanned;
        }
        if (spanned != w.length()) return false;
        if (!connected_after_deleting(g, on_walk)) return false;
    }
    return true;
}

namespace {

std::vector<std::vector<int>> faces_of_vertex_index(const Graph& g,
                                                    const std::vector<FaceWalk>& faces) {
    std::vector<std::vector<int>> at(g.vertex_count());
    for (size_t f = 0; f < faces.size(); ++f) {
        std::vector<int> vs = faces[f].vertices;
        std::sort(vs.begin(), vs.end());
        vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
        for (int v : vs) at[v].push_back(static_cast<int>(f));
    }
    return at;
}

// BFS levels over faces: level 1 = faces containing x, level k+1 = faces
// sharing a vertex with a level-k face. Returns (levels, level of first face
// containing y).
std::pair<std::vector<int>, int> face_levels(const Graph& g,
                                             const std::vector<FaceWalk>& faces,
                                             const std::vector<std::vector<int>>& at,
                                             int x, int y) {
    std::vector<int> level(faces.size(), 0);
    std::queue<int> q;
    for (int f : at[x]) {
        level[f] = 1;
        q.push(f);
    }
    int found = 0;
    for (int f : at[y])
        if (level[f] == 1) found = 1;
    while (!q.empty() && !found) {
        int f = q.front();
        q.pop();
        std::vector<int> vs = faces[f].vertices;
        for (int v : vs) {
            for (int f2 : at[v]) {
                if (level[f2] == 0) {
                    level[f2] = level[f] + 1;
                    if (faces[f2].contains_vertex(y)) found = level[f2];
                    q.push(f2);
                }
            }
            if (found) break;
        }
    }
    return {level, found};
}

} // namespace

int facial_distance(const Embedding& e, int x, int y) {
    const Graph& g = e.graph();
    if (x == y) fail(Errc::SameVertex, "facial distance requires two distinct vertices");
    if (x < 0 || x >= g.vertex_count() || y < 0 || y >= g.vertex_count())
        fail(Errc::VertexOutOfRange, "facial distance: vertex out of range");
    auto faces = trace_faces(e);
    auto at = faces_of_vertex_index(g, faces);
    auto [level, found] = face_levels(g, faces, at, x, y);
    if (!found)
        fail(Errc::InternalError, "face chain search did not reach the target");
    return found;
}

std::vector<EulerianSubgraph> face_bfs_layers(const Embedding& e, int x, int y) {
    const Graph& g = e.graph();
    int r = facial_distance(e, x, y) - 1;
    std::vector<EulerianSubgraph> layers;
    if (r == 0) return layers;

    auto faces = trace_faces(e);
    std::vector<std::vector<int>> face_edges(faces.size());
    for (size_t f = 0; f < faces.size(); ++f) face_edges[f] = faces[f].odd_edges();

    // literal layering: int(Q_1) = faces meeting x; int(Q_i) adds every face
    // meeting the previous boundary Q_{i-1}
    std::vector<char> in_region(faces.size(), 0);
    for (size_t f = 0; f < faces.size(); ++f)
        if (faces[f].contains_vertex(x)) in_region[f] = 1;

    std::vector<char> edge_parity(g.edge_count(), 0);
    auto recompute_boundary = [&]() {
        std::fill(edge_parity.begin(), edge_parity.end(), 0);
        for (size_t f = 0; f < faces.size(); ++f)
            if (in_region[f])
                for (int ed : face_edges[f]) edge_parity[ed] ^= 1;
    };

    std::vector<char> claimed(g.vertex_count(), 0); // vertices used by earlier layers
    for (int i = 1; i <= r; ++i) {
        recompute_boundary();
        EulerianSubgraph q;
        for (int ed = 0; ed < g.edge_count(); ++ed)
            if (edge_parity[ed]) q.edges.push_back(ed);
        if (q.edges.empty())
            fail(Errc::LayeringDegenerate, "layer " + std::to_string(i) + " is empty");
        auto vs = q.vertex_set(g);
        for (int v : vs) {
            if (v == x || v == y)
                fail(Errc::LayeringDegenerate,
                     "layer " + std::to_string(i) + " touches a terminal");
            if (claimed[v])
                fail(Errc::LayeringDegenerate,
                     "layer " + std::to_string(i) + " is not disjoint from earlier layers");
        }
        for (int v : vs) claimed[v] = 1;

        // decompose the even-degree edge set into edge-disjoint cycles
        std::vector<std::vector<int>> inc(g.vertex_count());
        std::vector<char> used(g.edge_count(), 0);
        for (int ed : q.edges) {
            auto [u, v] = g.edge_endpoints(ed);
            inc[u].push_back(ed);
            inc[v].push_back(ed);
        }
        for (int ed0 : q.edges) {
            if (used[ed0]) continue;
            std::vector<int> cyc;
            int start = g.edge_endpoints(ed0).first;
            int v = start;
            int ecur = ed0;
            do {
                used[ecur] = 1;
                cyc.push_back(v);
                auto [a, b] = g.edge_endpoints(ecur);
                v = (a == v) ? b : a;
                if (v == start) break;
                int enext = -1;
                for (int cand : inc[v])
                    if (!used[cand]) {
                        enext = cand;
                        break;
                    }
                if (enext < 0)
                    fail(Errc::LayeringDegenerate, "layer does not decompose into cycles");
                ecur = enext;
            } while (true);
            q.cycles.push_back(std::move(cyc));
        }
        layers.push_back(std::move(q));

        if (i == r) break;
        // grow the region: add every face meeting the boundary just emitted
        std::vector<char> on_boundary(g.vertex_count(), 0);
        for (int v : layers.back().vertex_set(g)) on_boundary[v] = 1;
        for (size_t f = 0; f < faces.size(); ++f) {
            if (in_region[f]) continue;
            for (int v : faces[f].vertices)
                if (on_boundary[v]) {
                    in_region[f] = 1;
                    break;
                }
        }
    }
    return layers;
}

Embedding parse_embedding(const std::string& text) {
    // first pass: the graph block
    std::istringstream in(text);
    std::string line;
    std::string graph_block;
    std::vector<std::string> rot_lines, sig_lines;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::string tag;
        if (!(ls >> tag)) continue;
        if (tag[0] == '#') continue;
        if (tag == "p" || tag == "e") graph_block += line + "\n";
        else if (tag == "r") rot_lines.push_back(line);
        else if (tag == "s") sig_lines.push_back(line);
        else fail(Errc::MalformedInput, "unknown line type '" + tag + "'");
    }
    Graph g = parse_graph(graph_block);

    auto parse_dart = [&](const std::string& tok) {
        if (tok.size() < 2) fail(Errc::MalformedInput, "bad dart token '" + tok + "'");
        char side = tok.back();
        if (side != 'a' && side != 'b')
            fail(Errc::MalformedInput, "bad dart token '" + tok + "'");
        int eid;
        try {
            eid = std::stoi(tok.substr(0, tok.size() - 1));
        } catch (...) {
            fail(Errc::MalformedInput, "bad dart token '" + tok + "'");
        }
        if (eid < 1 || eid > g.edge_count())
            fail(Errc::MalformedInput, "dart token '" + tok + "' out of range");
        return Graph::dart_of(eid - 1, side == 'b' ? 1 : 0);
    };

    std::vector<std::vector<int>> rotations(g.vertex_count());
    std::vector<char> have(g.vertex_count(), 0);
    for (const auto& rl : rot_lines) {
        std::istringstream ls(rl);
        std::string tag, colon;
        int v;
        if (!(ls >> tag >> v >> colon) || colon != ":" || v < 1 || v > g.vertex_count())
            fail(Errc::MalformedInput, "bad rotation line '" + rl + "'");
        if (have[v - 1]) fail(Errc::MalformedInput, "duplicate rotation for vertex");
        have[v - 1] = 1;
        std::string tok;
        while (ls >> tok) rotations[v - 1].push_back(parse_dart(tok));
    }
    for (int v = 0; v < g.vertex_count(); ++v)
        if (!have[v] && g.degree(v) > 0)
            fail(Errc::MalformedInput,
                 "missing rotation for vertex " + std::to_string(v + 1));

    std::vector<int8_t> signature(g.edge_count(), 1);
    for (const auto& sl : sig_lines) {
        std::istringstream ls(sl);
        std::string tag;
        int eid, val;
        if (!(ls >> tag >> eid >> val) || eid < 1 || eid > g.edge_count() ||
            (val != -1 && val != 1))
            fail(Errc::MalformedInput, "bad signature line '" + sl + "'");
        signature[eid - 1] = static_cast<int8_t>(val);
    }
    return Embedding(std::move(g), std::move(rotations), std::move(signature));
}

std::string write_embedding(const Embedding& e) {
    const Graph& g = e.graph();
    std::ostringstream out;
    out << write_graph(g);
    auto dart_token = [](int d) {
        return std::to_string(Graph::edge_of(d) + 1) + ((d & 1) ? "b" : "a");
    };
    for (int v = 0; v < g.vertex_count(); ++v) {
        const auto& rot = e.rotation(v);
        if (rot.empty()) continue;
        size_t start = std::min_element(rot.begin(), rot.end()) - rot.begin();
        out << "r " << v + 1 << " :";
        for (size_t i = 0; i < rot.size(); ++i)
            out << " " << dart_token(rot[(start + i) % rot.size()]);
        out << "\n";
    }
    for (int ed = 0; ed < g.edge_count(); ++ed)
        if (e.signature(ed) == -1) out << "s " << ed + 1 << " -1\n";
    return out.str();
}

Embedding reflected(const Embedding& e) {
    auto rots = e.rotations();
    for (auto& r : rots) std::reverse(r.begin(), r.end());
    return Embedding(e.graph(), std::move(rots), e.signatures());
}

std::vector<int> rotation_key(const Embedding& e) {
    std::vector<int> key;
    const Graph& g = e.graph();
    for (int v = 0; v < g.vertex_count(); ++v) {
        const auto& rot = e.rotation(v);
        if (rot.empty()) continue;
        size_t best = std::min_element(rot.begin(), rot.end()) - rot.begin();
        for (size_t i = 0; i < rot.size(); ++i)
            key.push_back(rot[(best + i) % rot.size()]);
    }
    return key;
}

Embedding canonical_orientation(const Embedding& e) {
    Embedding m = reflected(e);
    return rotation_key(m) < rotation_key(e) ? m : e;
}

} // namespace stronggenus
