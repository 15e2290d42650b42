#include "stronggenus/search.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <mutex>
#include <queue>
#include <thread>

#include "stronggenus/bounds.hpp"

namespace stronggenus {

namespace {

using Clock = std::chrono::steady_clock;

std::vector<int> bfs_vertex_order(const Graph& g) {
    int n = g.vertex_count();
    int root = 0;
    for (int v = 1; v < n; ++v)
        if (g.degree(v) > g.degree(root)) root = v;
    std::vector<int> order;
    std::vector<char> seen(n, 0);
    std::queue<int> q;
    q.push(root);
    seen[root] = 1;
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        order.push_back(v);
        for (int d : g.darts_at(v)) {
            int w = g.far_endpoint(d);
            if (!seen[w]) {
                seen[w] = 1;
                q.push(w);
            }
        }
    }
    return order;
}

// all rotations at v (full dart sequences, first dart fixed), lex order
std::vector<std::vector<int>> rotation_candidates(const Graph& g, int v) {
    std::vector<int> darts = g.darts_at(v);
    std::sort(darts.begin(), darts.end());
    std::vector<std::vector<int>> out;
    if (darts.empty()) {
        out.push_back({});
        return out;
    }
    std::vector<int> tail(darts.begin() + 1, darts.end());
    do {
        std::vector<int> rot;
        rot.reserve(darts.size());
        rot.push_back(darts[0]);
        rot.insert(rot.end(), tail.begin(), tail.end());
        out.push_back(std::move(rot));
    } while (std::next_permutation(tail.begin(), tail.end()));
    return out;
}

struct Shared {
    std::atomic<int> best_value;
    std::atomic<bool> expired{false};
    std::atomic<size_t> next_task{0};
    std::mutex merge_mutex;
    std::optional<int> merged_value;
    std::optional<std::vector<std::vector<int>>> merged_witness;
    std::vector<int> merged_key;
    std::uint64_t total_nodes = 0;
    bool any_timeout = false;
};

struct Engine {
    const Graph& g;
    SearchQuantity quantity;
    SearchOptions opts;
    int cap;
    Shared& shared;
    Clock::time_point deadline;
    bool has_deadline;

    int n, m;
    std::vector<int> order;                            // branch order
    std::vector<std::vector<std::vector<int>>> cands;  // per depth
    int min_face_len;

    // incremental face bookkeeping ------------------------------------------
    // every dart is one traversal step; linking step p -> step c merges the
    // open segment ending at p with the one starting at c, or closes a face
    struct Seg {
        int head, tail, len;
        std::uint64_t mask;
        bool dup;
    };
    std::vector<Seg> seg;
    std::vector<int> at_head, at_tail; // dart -> open segment id, or -1
    int f_closed = 0;
    int u_open = 0;
    int bad_faces = 0; // closed faces that are not cycles (strong search)
    int open_dup = 0;  // open segments already repeating a vertex

    struct Journal {
        bool close;
        int a, b, p, c;
        int old_tail, old_len;
        std::uint64_t old_mask;
        bool old_dup;
        bool was_bad;
        int dup_delta;
    };
    std::vector<Journal> journal;
    std::vector<int> choice; // candidate index per depth
    std::uint64_t nodes = 0;

    std::optional<int> local_value;
    std::vector<std::vector<int>> local_witness;
    std::vector<int> local_key;
    bool timed_out = false;

    Engine(const Graph& graph, SearchQuantity q, const SearchOptions& o, int cap_eff,
           Shared& sh, Clock::time_point dl, bool has_dl)
        : g(graph), quantity(q), opts(o), cap(cap_eff), shared(sh), deadline(dl),
          has_deadline(has_dl) {
        n = g.vertex_count();
        m = g.edge_count();
        order = bfs_vertex_order(g);
        bool reflection_fixed = false;
        for (int v : order) {
            auto cs = rotation_candidates(g, v);
            if (!reflection_fixed && g.degree(v) >= 3) {
                // quotient by the global mirror image: genus and strongness are
                // invariant, so force one orientation at the first branching vertex
                std::vector<std::vector<int>> keep;
                for (auto& r : cs)
                    if (r[1] < r.back()) keep.push_back(std::move(r));
                cs = std::move(keep);
                reflection_fixed = true;
            }
            cands.push_back(std::move(cs));
        }
        bool parallel = false;
        for (int v = 0; v < n && !parallel; ++v)
            for (int d : g.darts_at(v))
                if (g.edges_between(v, g.far_endpoint(d)).size() >= 2) parallel = true;
        int min_deg = n ? g.degree(0) : 0;
        for (int v = 0; v < n; ++v) min_deg = std::min(min_deg, g.degree(v));
        if (quantity == SearchQuantity::StrongGenus) {
            auto gi = girth(g);
            min_face_len = gi ? *gi : 2 * m + 1; // forests admit no strong faces
        } else {
            min_face_len = (parallel || min_deg <= 1) ? 2 : 3;
        }

        seg.resize(2 * m);
        at_head.assign(2 * m, 0);
        at_tail.assign(2 * m, 0);
        reset();
        choice.assign(order.size(), -1);
    }

    void reset() {
        for (int d = 0; d < 2 * m; ++d) {
            seg[d] = {d, d, 1, std::uint64_t{1} << g.endpoint(d), false};
            at_head[d] = d;
            at_tail[d] = d;
        }
        f_closed = 0;
        u_open = 2 * m;
        bad_faces = 0;
        open_dup = 0;
        journal.clear();
    }

    // link traversal step p to step c; returns false only for bookkeeping use
    void link(int p, int c) {
        int a = at_tail[p];
        int b = at_head[c];
        Journal j{};
        j.p = p;
        j.c = c;
        j.a = a;
        j.b = b;
        if (a == b) {
            j.close = true;
            bool bad = seg[a].dup ||
                       (seg[a].len == 2 &&
                        Graph::edge_of(seg[a].head) == Graph::edge_of(seg[a].tail));
            j.was_bad = bad;
            j.dup_delta = seg[a].dup ? -1 : 0;
            open_dup += j.dup_delta;
            ++f_closed;
            u_open -= seg[a].len;
            if (bad) ++bad_faces;
            at_tail[p] = -1;
            at_head[c] = -1;
        } else {
            j.close = false;
            j.old_tail = seg[a].tail;
            j.old_len = seg[a].len;
            j.old_mask = seg[a].mask;
            j.old_dup = seg[a].dup;
            bool new_dup = seg[a].dup || seg[b].dup || (seg[a].mask & seg[b].mask) != 0;
            j.dup_delta = (new_dup ? 1 : 0) - (seg[a].dup ? 1 : 0) - (seg[b].dup ? 1 : 0);
            open_dup += j.dup_delta;
            seg[a].dup = new_dup;
            seg[a].mask |= seg[b].mask;
            seg[a].len += seg[b].len;
            seg[a].tail = seg[b].tail;
            at_tail[p] = -1;
            at_head[c] = -1;
            at_tail[seg[b].tail] = a;
        }
        journal.push_back(j);
    }

    void unlink() {
        Journal j = journal.back();
        journal.pop_back();
        open_dup -= j.dup_delta;
        if (j.close) {
            --f_closed;
            u_open += seg[j.a].len;
            if (j.was_bad) --bad_faces;
            at_tail[j.p] = j.a;
            at_head[j.c] = j.a;
        } else {
            at_tail[seg[j.b].tail] = j.b;
            seg[j.a].tail = j.old_tail;
            seg[j.a].len = j.old_len;
            seg[j.a].mask = j.old_mask;
            seg[j.a].dup = j.old_dup;
            at_tail[j.p] = j.a;
            at_head[j.c] = j.b;
        }
    }

    void assign(int v, const std::vector<int>& rot) {
        int d = static_cast<int>(rot.size());
        for (int i = 0; i < d; ++i) link(Graph::mate(rot[i]), rot[(i + 1) % d]);
    }

    void unassign(int v) {
        for (int i = 0; i < g.degree(v); ++i) unlink();
    }

    bool strong_mode() const { return quantity == SearchQuantity::StrongGenus; }

    // true when the subtree below the current state cannot contain a
    // qualifying embedding of genus <= min(cap, best). A repeated vertex in a
    // closed face or an open segment is permanent, so strong search cuts there
    // regardless of the prune flag; values are unaffected.
    bool prunable() {
        if (strong_mode() && (bad_faces > 0 || open_dup > 0)) return true;
        if (!opts.prune) return false;
        int best = shared.best_value.load(std::memory_order_relaxed);
        int cap_eff = std::min(cap, best);
        int f_ub = f_closed + u_open / min_face_len;
        int want_par = ((m - n) % 2 + 2) % 2;
        if ((f_ub % 2 + 2) % 2 != want_par) --f_ub;
        if (f_ub < f_closed) return true; // parity leaves no room
        int chi_ub = n - m + f_ub;
        int genus_lb = (2 - chi_ub) / 2;
        return genus_lb > cap_eff;
    }

    void record_leaf() {
        int chi = n - m + f_closed;
        if ((2 - chi) % 2 != 0)
            fail(Errc::InternalError, "leaf traced to odd euler characteristic");
        int genus = (2 - chi) / 2;
        int best = shared.best_value.load(std::memory_order_relaxed);
        if (genus > std::min(cap, best)) return;
        if (strong_mode() && bad_faces > 0) return;
        // materialize the rotation system and keep the lexicographically least
        // representative of {rotation, mirror image}
        std::vector<std::vector<int>> rots(n);
        for (size_t i = 0; i < order.size(); ++i) rots[order[i]] = cands[i][choice[i]];
        Embedding e(g, rots);
        Embedding c = canonical_orientation(e);
        std::vector<int> key = rotation_key(c);
        key.insert(key.begin(), genus);
        if (!local_value || genus < *local_value ||
            (genus == *local_value && key < local_key)) {
            local_value = genus;
            local_key = std::move(key);
            local_witness = c.rotations();
        }
        // publish the value so other workers can tighten their pruning
        int cur = shared.best_value.load(std::memory_order_relaxed);
        while (genus < cur &&
               !shared.best_value.compare_exchange_weak(cur, genus, std::memory_order_relaxed))
            ;
    }

    bool check_time() {
        if (!has_deadline) return false;
        if ((nodes & 0xfff) != 0) return false;
        if (Clock::now() >= deadline) {
            shared.expired.store(true, std::memory_order_relaxed);
            return true;
        }
        return shared.expired.load(std::memory_order_relaxed);
    }

    void dfs(size_t depth) {
        if (timed_out || shared.expired.load(std::memory_order_relaxed)) {
            timed_out = true;
            return;
        }
        if (depth == order.size()) {
            record_leaf();
            return;
        }
        int v = order[depth];
        for (size_t ci = 0; ci < cands[depth].size(); ++ci) {
            ++nodes;
            if (check_time()) {
                timed_out = true;
                return;
            }
            choice[depth] = static_cast<int>(ci);
            assign(v, cands[depth][ci]);
            if (!prunable()) dfs(depth + 1);
            unassign(v);
            if (timed_out) return;
        }
        choice[depth] = -1;
    }

    // run the engine over one task prefix
    void run_prefix(const std::vector<int>& prefix) {
        reset();
        bool ok = true;
        size_t depth = 0;
        for (; depth < prefix.size(); ++depth) {
            int v = order[depth];
            choice[depth] = prefix[depth];
            ++nodes;
            assign(v, cands[depth][prefix[depth]]);
            if (prunable()) {
                ok = false;
                ++depth;
                break;
            }
        }
        if (ok) dfs(prefix.size());
        for (size_t i = depth; i-- > 0;) unassign(order[i]);
    }
};

SearchResult run_search(const Graph& g, SearchQuantity quantity, const SearchOptions& opts) {
    if (!is_connected(g))
        fail(Errc::InvalidParameter, "genus search requires a connected graph");
    if (g.edge_count() == 0)
        fail(Errc::InvalidParameter, "genus search requires at least one edge");
    if (g.vertex_count() > 64)
        fail(Errc::InvalidParameter, "genus search supports at most 64 vertices");

    int cap_eff = std::min<long long>(opts.cap, max_genus_ub(g.vertex_count(), g.edge_count()));
    bool has_deadline = opts.timeout_sec > 0;
    auto deadline = Clock::now() + std::chrono::duration_cast<Clock::duration>(
                                       std::chrono::duration<double>(
                                           has_deadline ? opts.timeout_sec : 0.0));

    Shared shared;
    shared.best_value.store(cap_eff + 1);

    // fixed-size task split keeps results independent of the worker count
    Engine probe(g, quantity, opts, cap_eff, shared, deadline, has_deadline);
    std::vector<std::vector<int>> tasks{{}};
    size_t task_depth = 0;
    const size_t target_tasks = 64;
    while (task_depth < probe.order.size() && tasks.size() < target_tasks) {
        std::vector<std::vector<int>> next;
        for (const auto& t : tasks)
            for (size_t ci = 0; ci < probe.cands[task_depth].size(); ++ci) {
                auto t2 = t;
                t2.push_back(static_cast<int>(ci));
                next.push_back(std::move(t2));
            }
        tasks = std::move(next);
        ++task_depth;
    }

    int threads = std::max(1, opts.threads);
    auto worker = [&]() {
        Engine eng(g, quantity, opts, cap_eff, shared, deadline, has_deadline);
        while (true) {
            size_t i = shared.next_task.fetch_add(1);
            if (i >= tasks.size()) break;
            eng.run_prefix(tasks[i]);
            if (eng.timed_out) break;
        }
        std::lock_guard<std::mutex> lock(shared.merge_mutex);
        shared.total_nodes += eng.nodes;
        shared.any_timeout = shared.any_timeout || eng.timed_out;
        if (eng.local_value) {
            if (!shared.merged_value || *eng.local_value < *shared.merged_value ||
                (*eng.local_value == *shared.merged_value && eng.local_key < shared.merged_key)) {
                shared.merged_value = eng.local_value;
                shared.merged_key = eng.local_key;
                shared.merged_witness = eng.local_witness;
            }
        }
    };
    if (threads == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }

    SearchResult res;
    res.quantity = quantity;
    res.nodes = shared.total_nodes;
    res.exhaustive = !shared.any_timeout && !shared.expired.load();
    res.cap_used = cap_eff;
    if (shared.merged_value) {
        res.value = shared.merged_value;
        res.witness = Embedding(g, *shared.merged_witness);
    }
    return res;
}

} // namespace

SearchResult min_genus(const Graph& g, const SearchOptions& opts) {
    return run_search(g, SearchQuantity::MinGenus, opts);
}

SearchResult strong_genus(const Graph& g, const SearchOptions& opts) {
    return run_search(g, SearchQuantity::StrongGenus, opts);
}

std::uint64_t rotation_count(const Graph& g) {
    std::uint64_t total = 1;
    for (int v = 0; v < g.vertex_count(); ++v) {
        std::uint64_t f = 1;
        for (int k = 2; k < g.degree(v); ++k) f *= k;
        if (total > std::numeric_limits<std::uint64_t>::max() / std::max<std::uint64_t>(f, 1))
            return std::numeric_limits<std::uint64_t>::max();
        total *= f;
    }
    return total;
}

void enumerate_rotations(const Graph& g,
                         const std::function<bool(const Embedding&)>& visit) {
    if (g.edge_count() == 0) return;
    int n = g.vertex_count();
    std::vector<std::vector<std::vector<int>>> cands;
    cands.reserve(n);
    for (int v = 0; v < n; ++v) cands.push_back(rotation_candidates(g, v));
    std::vector<size_t> idx(n, 0);
    while (true) {
        std::vector<std::vector<int>> rots(n);
        for (int v = 0; v < n; ++v) rots[v] = cands[v][idx[v]];
        if (!visit(Embedding(g, std::move(rots)))) return;
        int v = n - 1;
        while (v >= 0) {
            if (++idx[v] < cands[v].size()) break;
            idx[v] = 0;
            --v;
        }
        if (v < 0) return;
    }
}

} // namespace stronggenus
