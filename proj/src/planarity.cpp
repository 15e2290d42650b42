#include "stronggenus/planarity.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <queue>
#include <set>
#include <sstream>

#include "stronggenus/homology.hpp"

namespace stronggenus {

namespace {

// ---- biconnected components ------------------------------------------------

std::vector<std::vector<int>> biconnected_blocks(const Graph& g) {
    int n = g.vertex_count();
    std::vector<int> num(n, -1), low(n, 0);
    std::vector<std::vector<int>> blocks;
    std::vector<int> edge_stack;
    int counter = 0;

    // iterative DFS over darts so parallel edges are handled per edge id
    struct Frame {
        int v;
        int parent_edge;
        size_t di;
    };
    for (int root = 0; root < n; ++root) {
        if (num[root] >= 0) continue;
        std::vector<Frame> stack;
        num[root] = low[root] = counter++;
        stack.push_back({root, -1, 0});
        while (!stack.empty()) {
            Frame& fr = stack.back();
            const auto& ds = g.darts_at(fr.v);
            if (fr.di < ds.size()) {
                int d = ds[fr.di++];
                int e = Graph::edge_of(d);
                if (e == fr.parent_edge) continue;
                int w = g.far_endpoint(d);
                if (num[w] < 0) {
                    edge_stack.push_back(e);
                    num[w] = low[w] = counter++;
                    stack.push_back({w, e, 0});
                } else if (num[w] < num[fr.v]) {
                    edge_stack.push_back(e);
                    low[fr.v] = std::min(low[fr.v], num[w]);
                }
            } else {
                stack.pop_back();
                if (!stack.empty()) {
                    Frame& up = stack.back();
                    low[up.v] = std::min(low[up.v], low[fr.v]);
                    if (low[fr.v] >= num[up.v]) {
                        // fr.parent_edge closes a block
                        std::vector<int> block;
                        while (true) {
                            int e = edge_stack.back();
                            edge_stack.pop_back();
                            block.push_back(e);
                            if (e == fr.parent_edge) break;
                        }
                        std::sort(block.begin(), block.end());
                        blocks.push_back(std::move(block));
                    }
                }
            }
        }
    }
    std::sort(blocks.begin(), blocks.end());
    return blocks;
}

// ---- incremental planar embedding of one 2-connected block ------------------

struct BlockEmbedder {
    const Graph& g;
    const std::vector<int>& block; // edge ids, ascending
    std::vector<char> in_block_edge;
    std::vector<char> embedded_edge;
    std::vector<char> embedded_vertex;
    std::map<int, std::vector<int>> rot; // partial rotations, block vertices only

    explicit BlockEmbedder(const Graph& graph, const std::vector<int>& edges)
        : g(graph), block(edges), in_block_edge(g.edge_count(), 0),
          embedded_edge(g.edge_count(), 0), embedded_vertex(g.vertex_count(), 0) {
        for (int e : block) in_block_edge[e] = 1;
    }

    int rot_succ(int dart) const {
        const auto& r = rot.at(g.endpoint(dart));
        size_t i = std::find(r.begin(), r.end(), dart) - r.begin();
        return r[(i + 1) % r.size()];
    }

    // faces of the embedded subgraph (all-positive orientable trace)
    std::vector<std::vector<int>> faces() const {
        std::vector<std::vector<int>> out;
        std::set<int> seen;
        for (const auto& [v, r] : rot) {
            for (int d0 : r) {
                if (seen.count(d0)) continue;
                std::vector<int> walk;
                int d = d0;
                do {
                    seen.insert(d);
                    walk.push_back(d);
                    d = rot_succ(Graph::mate(d));
                } while (d != d0);
                out.push_back(std::move(walk));
            }
        }
        return out;
    }

    static std::vector<int> walk_vertices(const Graph& g, const std::vector<int>& walk) {
        std::vector<int> vs;
        vs.reserve(walk.size());
        for (int d : walk) vs.push_back(g.endpoint(d));
        return vs;
    }

    // seed with any cycle of the block
    void embed_initial_cycle() {
        // DFS by darts; first back edge closes a cycle
        int start = g.endpoint(Graph::dart_of(block[0], 0));
        std::map<int, int> parent_dart; // vertex -> dart leading to it
        std::vector<int> order;
        std::map<int, size_t> idx;
        std::vector<int> stack = {start};
        parent_dart[start] = -1;
        std::vector<int> cycle_darts;
        std::function<bool(int)> dfs = [&](int v) -> bool {
            for (int d : g.darts_at(v)) {
                if (!in_block_edge[Graph::edge_of(d)]) continue;
                if (parent_dart.count(v) && parent_dart[v] >= 0 &&
                    Graph::edge_of(d) == Graph::edge_of(parent_dart[v]))
                    continue;
                int w = g.far_endpoint(d);
                if (!parent_dart.count(w)) {
                    parent_dart[w] = d;
                    if (dfs(w)) return true;
                } else {
                    // back edge: build cycle w -> ... -> v -> w
                    std::vector<int> up;
                    int cur = v;
                    while (cur != w) {
                        int pd = parent_dart[cur];
                        up.push_back(pd);
                        cur = g.endpoint(pd);
                    }
                    std::reverse(up.begin(), up.end());
                    up.push_back(d);
                    cycle_darts = std::move(up);
                    return true;
                }
            }
            return false;
        };
        dfs(start);
        if (cycle_darts.empty())
            fail(Errc::InternalError, "2-connected block without a cycle");
        for (int d : cycle_darts) {
            embedded_edge[Graph::edge_of(d)] = 1;
            int v = g.endpoint(d);
            embedded_vertex[v] = 1;
        }
        for (size_t i = 0; i < cycle_darts.size(); ++i) {
            int d = cycle_darts[i];
            int prev = cycle_darts[(i + cycle_darts.size() - 1) % cycle_darts.size()];
            rot[g.endpoint(d)] = {d, Graph::mate(prev)};
        }
    }

    struct Fragment {
        std::vector<int> edges;       // ascending
        std::vector<int> attachments; // ascending embedded vertices
    };

    std::vector<Fragment> fragments() const {
        std::vector<Fragment> out;
        // chords
        for (int e : block) {
            if (embedded_edge[e]) continue;
            auto [u, v] = g.edge_endpoints(e);
            if (embedded_vertex[u] && embedded_vertex[v]) {
                Fragment f;
                f.edges = {e};
                f.attachments = {std::min(u, v), std::max(u, v)};
                if (f.attachments[0] == f.attachments[1]) f.attachments.pop_back();
                out.push_back(std::move(f));
            }
        }
        // components of the non-embedded part
        std::vector<int> comp(g.vertex_count(), -1);
        int nc = 0;
        for (int v = 0; v < g.vertex_count(); ++v) {
            if (embedded_vertex[v] || comp[v] >= 0) continue;
            bool touches_block = false;
            for (int d : g.darts_at(v))
                if (in_block_edge[Graph::edge_of(d)]) touches_block = true;
            if (!touches_block) continue;
            std::queue<int> q;
            q.push(v);
            comp[v] = nc;
            while (!q.empty()) {
                int a = q.front();
                q.pop();
                for (int d : g.darts_at(a)) {
                    if (!in_block_edge[Graph::edge_of(d)]) continue;
                    int b = g.far_endpoint(d);
                    if (!embedded_vertex[b] && comp[b] < 0) {
                        comp[b] = nc;
                        q.push(b);
                    }
                }
            }
            ++nc;
        }
        std::vector<Fragment> comps(nc);
        for (int e : block) {
            if (embedded_edge[e]) continue;
            auto [u, v] = g.edge_endpoints(e);
            int c = -1;
            if (!embedded_vertex[u]) c = comp[u];
            if (!embedded_vertex[v]) c = std::max(c, comp[v]);
            if (c < 0) continue; // chord, already listed
            comps[c].edges.push_back(e);
            if (embedded_vertex[u]) comps[c].attachments.push_back(u);
            if (embedded_vertex[v]) comps[c].attachments.push_back(v);
        }
        for (auto& f : comps) {
            if (f.edges.empty()) continue;
            std::sort(f.edges.begin(), f.edges.end());
            std::sort(f.attachments.begin(), f.attachments.end());
            f.attachments.erase(std::unique(f.attachments.begin(), f.attachments.end()),
                                f.attachments.end());
            out.push_back(std::move(f));
        }
        std::sort(out.begin(), out.end(),
                  [](const Fragment& a, const Fragment& b) { return a.edges < b.edges; });
        return out;
    }

    // dart path between two distinct attachments through the fragment
    std::vector<int> fragment_path(const Fragment& f) const {
        std::vector<char> frag_edge(g.edge_count(), 0);
        for (int e : f.edges) frag_edge[e] = 1;
        int src = f.attachments[0];
        std::map<int, int> via; // vertex -> dart used to reach it
        std::queue<int> q;
        q.push(src);
        via[src] = -1;
        int goal = -1;
        while (!q.empty() && goal < 0) {
            int v = q.front();
            q.pop();
            for (int d : g.darts_at(v)) {
                if (!frag_edge[Graph::edge_of(d)]) continue;
                int w = g.far_endpoint(d);
                if (via.count(w)) continue;
                // do not pass through other attachments except as the endpoint
                via[w] = d;
                if (embedded_vertex[w]) {
                    goal = w;
                    break;
                }
                q.push(w);
            }
        }
        if (goal < 0)
            fail(Errc::InternalError, "fragment path search failed");
        std::vector<int> path;
        int cur = goal;
        while (via[cur] >= 0) {
            path.push_back(via[cur]);
            cur = g.endpoint(via[cur]);
        }
        std::reverse(path.begin(), path.end());
        return path;
    }

    void insert_before(int v, int ref_dart, int new_dart) {
        auto& r = rot[v];
        auto it = std::find(r.begin(), r.end(), ref_dart);
        r.insert(it, new_dart);
    }

    // embed the dart path into face F (given as a dart walk)
    void embed_path(const std::vector<int>& path, const std::vector<int>& face) {
        int u = g.endpoint(path.front());
        int v = g.far_endpoint(path.back());
        size_t L = face.size();
        size_t ju = L, jv = L;
        for (size_t i = 0; i < L; ++i) {
            int ev = g.endpoint(face[i]);
            if (ev == u && ju == L) ju = i;
            if (ev == v && jv == L) jv = i;
        }
        if (ju == L || jv == L)
            fail(Errc::InternalError, "face does not expose the path endpoints");
        insert_before(u, face[ju], path.front());
        insert_before(v, face[jv], Graph::mate(path.back()));
        for (size_t i = 0; i + 1 < path.size(); ++i) {
            int mid = g.far_endpoint(path[i]);
            rot[mid] = {Graph::mate(path[i]), path[i + 1]};
            embedded_vertex[mid] = 1;
        }
        for (int d : path) embedded_edge[Graph::edge_of(d)] = 1;
    }

    // returns false when the block is not planar
    bool run() {
        embed_initial_cycle();
        while (true) {
            auto frags = fragments();
            if (frags.empty()) return true;
            auto fs = faces();
            std::vector<std::vector<int>> face_vs;
            face_vs.reserve(fs.size());
            for (const auto& w : fs) {
                auto vs = walk_vertices(g, w);
                std::sort(vs.begin(), vs.end());
                face_vs.push_back(std::move(vs));
            }
            auto admissible = [&](const Fragment& f) {
                std::vector<int> out;
                for (size_t i = 0; i < fs.size(); ++i) {
                    bool ok = true;
                    for (int a : f.attachments)
                        if (!std::binary_search(face_vs[i].begin(), face_vs[i].end(), a)) {
                            ok = false;
                            break;
                        }
                    if (ok) out.push_back(static_cast<int>(i));
                }
                return out;
            };
            int pick = -1, pick_face = -1;
            for (size_t i = 0; i < frags.size(); ++i) {
                auto adm = admissible(frags[i]);
                if (adm.empty()) return false;
                if (adm.size() == 1) {
                    pick = static_cast<int>(i);
                    pick_face = adm[0];
                    break;
                }
                if (pick < 0) {
                    pick = static_cast<int>(i);
                    pick_face = adm[0];
                }
            }
            embed_path(fragment_path(frags[pick]), fs[pick_face]);
        }
    }
};

} // namespace

std::optional<Embedding> planar_embedding(const Graph& g) {
    if (!is_connected(g))
        fail(Errc::InvalidParameter, "planar_embedding requires a connected graph");
    auto blocks = biconnected_blocks(g);
    // per-vertex rotation contributions per block, blocks in canonical order
    std::vector<std::vector<int>> rotations(g.vertex_count());
    for (const auto& block : blocks) {
        if (block.size() == 1) {
            int e = block[0];
            auto [u, v] = g.edge_endpoints(e);
            rotations[u].push_back(Graph::dart_of(e, 0));
            rotations[v].push_back(Graph::dart_of(e, 1));
            continue;
        }
        BlockEmbedder be(g, block);
        if (!be.run()) return std::nullopt;
        for (const auto& [v, r] : be.rot)
            rotations[v].insert(rotations[v].end(), r.begin(), r.end());
    }
    Embedding e(g, std::move(rotations));
    if (euler_characteristic(e) != 2)
        fail(Errc::InternalError, "planar embedding did not trace to euler 2");
    return canonical_orientation(e);
}

bool cycle_separates(const Embedding& e, const std::vector<int>& cycle, int x, int y) {
    const Graph& g = e.graph();
    Bitvec cvec = cycle_edge_vector(g, cycle);
    for (int v : cycle)
        if (v == x || v == y)
            fail(Errc::InvalidParameter, "separating test: cycle touches a terminal");
    auto faces = trace_faces(e);
    // union faces across every edge that is not on the cycle
    std::vector<int> dsu(faces.size());
    for (size_t i = 0; i < dsu.size(); ++i) dsu[i] = static_cast<int>(i);
    std::function<int(int)> find = [&](int a) {
        while (dsu[a] != a) a = dsu[a] = dsu[dsu[a]];
        return a;
    };
    std::vector<std::vector<int>> at_edge(g.edge_count());
    for (size_t f = 0; f < faces.size(); ++f)
        for (int d : faces[f].darts) at_edge[Graph::edge_of(d)].push_back(static_cast<int>(f));
    for (int ed = 0; ed < g.edge_count(); ++ed) {
        if (cvec.test(ed)) continue;
        for (size_t i = 1; i < at_edge[ed].size(); ++i)
            dsu[find(at_edge[ed][i])] = find(at_edge[ed][0]);
    }
    auto side_of = [&](int v) {
        int side = -1;
        for (size_t f = 0; f < faces.size(); ++f) {
            if (!faces[f].contains_vertex(v)) continue;
            int s = find(static_cast<int>(f));
            if (side < 0) side = s;
            else if (side != s)
                fail(Errc::InternalError, "faces at a vertex fall on both sides");
        }
        return side;
    };
    return side_of(x) != side_of(y);
}

namespace {

// all simple cycles avoiding the marked vertices, as vertex sequences;
// intended for small graphs only
std::vector<std::vector<int>> simple_cycles_avoiding(const Graph& g,
                                                     const std::vector<char>& banned) {
    std::vector<std::vector<int>> out;
    int n = g.vertex_count();
    // 2-cycles from parallel edge pairs
    for (int u = 0; u < n; ++u) {
        if (banned[u]) continue;
        for (int v = u + 1; v < n; ++v) {
            if (banned[v]) continue;
            if (g.edges_between(u, v).size() >= 2) out.push_back({u, v});
        }
    }
    std::vector<int> path;
    std::vector<char> on_path(n, 0);
    std::function<void(int, int)> extend = [&](int root, int v) {
        for (int d : g.darts_at(v)) {
            int w = g.far_endpoint(d);
            if (banned[w]) continue;
            if (w == root && path.size() >= 3 && path[1] < path.back()) {
                out.push_back(path);
                continue;
            }
            if (w <= root || on_path[w]) continue;
            path.push_back(w);
            on_path[w] = 1;
            extend(root, w);
            on_path[w] = 0;
            path.pop_back();
        }
    };
    for (int root = 0; root < n; ++root) {
        if (banned[root]) continue;
        path = {root};
        std::fill(on_path.begin(), on_path.end(), 0);
        on_path[root] = 1;
        extend(root, root);
    }
    return out;
}

// maximum pairwise vertex-disjoint subfamily, exhaustive with memo-free
// branch and bound; cycles must all separate x from y so any disjoint family
// is nested
std::vector<int> max_disjoint_family(const Graph& g,
                                     const std::vector<std::vector<int>>& cycles) {
    size_t k = cycles.size();
    std::vector<std::vector<char>> conflict(k, std::vector<char>(k, 0));
    for (size_t i = 0; i < k; ++i) {
        std::vector<char> in_i(g.vertex_count(), 0);
        for (int v : cycles[i]) in_i[v] = 1;
        for (size_t j = i + 1; j < k; ++j)
            for (int v : cycles[j])
                if (in_i[v]) {
                    conflict[i][j] = conflict[j][i] = 1;
                    break;
                }
    }
    std::vector<int> best, cur;
    std::function<void(size_t)> go = [&](size_t i) {
        if (cur.size() + (k - i) <= best.size()) return;
        if (i == k) {
            if (cur.size() > best.size()) best = cur;
            return;
        }
        bool ok = true;
        for (int c : cur)
            if (conflict[c][i]) {
                ok = false;
                break;
            }
        if (ok) {
            cur.push_back(static_cast<int>(i));
            go(i + 1);
            cur.pop_back();
        }
        go(i + 1);
    };
    go(0);
    return best;
}

} // namespace

NestedCertificate nested_cycle_certificate(const Embedding& planar, int x, int y) {
    const Graph& g = planar.graph();
    if (euler_characteristic(planar) != 2)
        fail(Errc::InvalidParameter, "certificate extraction requires a planar embedding");
    int r = facial_distance(planar, x, y) - 1;
    NestedCertificate cert;
    cert.x = x;
    cert.y = y;
    if (r == 0) return cert;

    bool layered_ok = true;
    try {
        auto layers = face_bfs_layers(planar, x, y);
        for (const auto& layer : layers) {
            const std::vector<int>* chosen = nullptr;
            for (const auto& cyc : layer.cycles) {
                if (cycle_separates(planar, cyc, x, y)) {
                    if (chosen) {
                        chosen = nullptr;
                        break;
                    }
                    chosen = &cyc;
                }
            }
            if (!chosen) {
                layered_ok = false;
                break;
            }
            cert.cycles.push_back(*chosen);
        }
    } catch (const Error& err) {
        if (err.code() != Errc::LayeringDegenerate) throw;
        layered_ok = false;
    }
    if (layered_ok && static_cast<int>(cert.cycles.size()) == r &&
        verify_certificate(g, cert, planar))
        return cert;

    // layered extraction failed; fall back to exhaustive search on small inputs
    if (g.vertex_count() > 16)
        fail(Errc::ExtractionFailed,
             "layered extraction failed and the graph is too large for the fallback");
    std::vector<char> banned(g.vertex_count(), 0);
    banned[x] = banned[y] = 1;
    auto all = simple_cycles_avoiding(g, banned);
    std::vector<std::vector<int>> separating;
    for (auto& c : all)
        if (cycle_separates(planar, c, x, y)) separating.push_back(std::move(c));
    auto family = max_disjoint_family(g, separating);
    cert.cycles.clear();
    for (int i : family) cert.cycles.push_back(separating[i]);
    // innermost first: order by how many family members sit on x's side
    std::stable_sort(cert.cycles.begin(), cert.cycles.end(),
                     [&](const std::vector<int>& a, const std::vector<int>& b) {
                         return !cycle_separates(planar, b, x, a[0]) &&
                                cycle_separates(planar, a, x, b[0]);
                     });
    if (static_cast<int>(cert.cycles.size()) != r || !verify_certificate(g, cert, planar))
        fail(Errc::ExtractionFailed, "certificate extraction could not match the facial distance");
    return cert;
}

bool verify_certificate(const Graph& g, const NestedCertificate& cert,
                        const Embedding& planar, std::vector<std::string>* reasons) {
    auto note = [&](const std::string& s) {
        if (reasons) reasons->push_back(s);
    };
    if (cert.x == cert.y || cert.x < 0 || cert.y < 0 || cert.x >= g.vertex_count() ||
        cert.y >= g.vertex_count()) {
        note("terminals invalid");
        return false;
    }
    try {
        CycleSet cs(g, cert.cycles); // validates cycles and pairwise disjointness
        (void)cs;
    } catch (const Error& err) {
        note(std::string("cycles invalid: ") + err.what());
        return false;
    }
    for (const auto& c : cert.cycles)
        for (int v : c)
            if (v == cert.x || v == cert.y) {
                note("a cycle touches a terminal");
                return false;
            }

    bool combinatorial = is_subdivision_of_3connected(g);
    auto separates = [&](const std::vector<int>& cyc, int a, int b) {
        if (combinatorial) {
            std::vector<char> deleted(g.vertex_count(), 0);
            for (int v : cyc) deleted[v] = 1;
            // BFS from a avoiding deleted; separated iff b unreached
            std::vector<char> seen(g.vertex_count(), 0);
            std::queue<int> q;
            q.push(a);
            seen[a] = 1;
            while (!q.empty()) {
                int v = q.front();
                q.pop();
                for (int d : g.darts_at(v)) {
                    int w = g.far_endpoint(d);
                    if (!deleted[w] && !seen[w]) {
                        seen[w] = 1;
                        q.push(w);
                    }
                }
            }
            return !seen[b];
        }
        return cycle_separates(planar, cyc, a, b);
    };

    for (size_t i = 0; i < cert.cycles.size(); ++i) {
        if (!separates(cert.cycles[i], cert.x, cert.y)) {
            note("cycle " + std::to_string(i + 1) + " does not separate the terminals");
            return false;
        }
    }
    // nesting order: earlier cycles on x's side of later ones
    for (size_t i = 0; i < cert.cycles.size(); ++i) {
        for (size_t j = i + 1; j < cert.cycles.size(); ++j) {
            if (separates(cert.cycles[j], cert.x, cert.cycles[i][0])) {
                note("cycle " + std::to_string(i + 1) + " is not inside cycle " +
                     std::to_string(j + 1));
                return false;
            }
        }
    }
    return true;
}

NestedCertificate parse_certificate(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    NestedCertificate cert;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string tag;
        if (!(ls >> tag)) continue;
        if (tag[0] == '#') continue;
        if (tag == "x" || tag == "y") {
            int v;
            if (!(ls >> v) || v < 1)
                fail(Errc::MalformedInput,
                     "line " + std::to_string(lineno) + ": bad terminal line");
            (tag == "x" ? cert.x : cert.y) = v - 1;
        } else if (tag == "c") {
            std::vector<int> cyc;
            int v;
            while (ls >> v) {
                if (v < 1)
                    fail(Errc::MalformedInput,
                         "line " + std::to_string(lineno) + ": bad cycle vertex");
                cyc.push_back(v - 1);
            }
            cert.cycles.push_back(std::move(cyc));
        } else {
            fail(Errc::MalformedInput,
                 "line " + std::to_string(lineno) + ": unknown line type");
        }
    }
    if (cert.x < 0 || cert.y < 0)
        fail(Errc::MalformedInput, "certificate missing a terminal");
    return cert;
}

std::string write_certificate(const NestedCertificate& cert) {
    std::ostringstream out;
    out << "x " << cert.x + 1 << "\n";
    out << "y " << cert.y + 1 << "\n";
    for (const auto& c : cert.cycles) {
        out << "c";
        for (int v : c) out << " " << v + 1;
        out << "\n";
    }
    return out.str();
}

} // namespace stronggenus
