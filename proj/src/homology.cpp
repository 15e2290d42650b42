#include "stronggenus/homology.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

namespace stronggenus {

int Bitvec::lowest_set() const {
    for (size_t w = 0; w < words_.size(); ++w)
        if (words_[w]) return static_cast<int>(w * 64 + std::countr_zero(words_[w]));
    return -1;
}

Bitvec cycle_edge_vector(const Graph& g, const std::vector<int>& cycle) {
    size_t k = cycle.size();
    if (k < 2) fail(Errc::InvalidCycle, "a cycle needs at least two vertices");
    std::vector<int> sorted = cycle;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        fail(Errc::InvalidCycle, "cycle repeats a vertex");
    for (int v : cycle)
        if (v < 0 || v >= g.vertex_count())
            fail(Errc::InvalidCycle, "cycle vertex out of range");
    Bitvec vec(g.edge_count());
    if (k == 2) {
        auto es = g.edges_between(cycle[0], cycle[1]);
        if (es.size() < 2)
            fail(Errc::InvalidCycle, "2-cycles require parallel edges");
        vec.set(es[0]);
        vec.set(es[1]);
        return vec;
    }
    for (size_t i = 0; i < k; ++i) {
        int u = cycle[i], v = cycle[(i + 1) % k];
        auto e = g.find_edge(u, v);
        if (!e)
            fail(Errc::InvalidCycle, "consecutive cycle vertices " + std::to_string(u + 1) +
                                         "," + std::to_string(v + 1) + " are not adjacent");
        vec.set(*e);
    }
    return vec;
}

CycleSet::CycleSet(const Graph& g, std::vector<std::vector<int>> cycles)
    : cycles_(std::move(cycles)) {
    std::vector<char> touched(g.vertex_count(), 0);
    for (const auto& c : cycles_) {
        vectors_.push_back(cycle_edge_vector(g, c));
        for (int v : c) {
            if (touched[v])
                fail(Errc::InvalidCycle, "cycles are not pairwise vertex-disjoint");
            touched[v] = 1;
        }
    }
}

Bitvec CycleSet::union_vector(int edge_count) const {
    Bitvec u(edge_count);
    for (const auto& v : vectors_) u ^= v;
    return u;
}

FaceSpan::FaceSpan(const Embedding& e) : edge_count_(e.graph().edge_count()) {
    for (const FaceWalk& w : trace_faces(e)) {
        Bitvec v(edge_count_);
        for (int ed : w.odd_edges()) v.set(ed);
        reduce(v);
        int p = v.lowest_set();
        if (p >= 0) {
            basis_.push_back(std::move(v));
            pivots_.push_back(p);
        }
    }
}

void FaceSpan::reduce(Bitvec& v) const {
    for (size_t i = 0; i < basis_.size(); ++i)
        if (v.test(pivots_[i])) v ^= basis_[i];
}

bool FaceSpan::contains(Bitvec v) const {
    reduce(v);
    return !v.any();
}

bool FaceSpan::independent_mod_span(const std::vector<Bitvec>& vs) const {
    std::vector<Bitvec> extra;
    std::vector<int> extra_pivots;
    for (Bitvec v : vs) {
        reduce(v);
        for (size_t i = 0; i < extra.size(); ++i)
            if (v.test(extra_pivots[i])) v ^= extra[i];
        int p = v.lowest_set();
        if (p < 0) return false;
        extra.push_back(std::move(v));
        extra_pivots.push_back(p);
    }
    return true;
}

bool is_surface_separating(const FaceSpan& span, const CycleSet& cs, int edge_count) {
    if (cs.size() == 0)
        fail(Errc::InvalidParameter, "surface separation needs a non-empty cycle set");
    return span.contains(cs.union_vector(edge_count));
}

bool homologically_independent(const FaceSpan& span, const CycleSet& cs) {
    return span.independent_mod_span(cs.edge_vectors());
}

bool is_surface_separating(const Embedding& e, const CycleSet& cs) {
    FaceSpan span(e);
    return is_surface_separating(span, cs, e.graph().edge_count());
}

bool homologically_independent(const Embedding& e, const CycleSet& cs) {
    FaceSpan span(e);
    return homologically_independent(span, cs);
}

CycleSet parse_cycles(const Graph& g, const std::string& text) {
    std::istringstream in(text);
    std::string line;
    std::vector<std::vector<int>> cycles;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string tag;
        if (!(ls >> tag)) continue;
        if (tag[0] == '#') continue;
        if (tag != "c")
            fail(Errc::MalformedInput,
                 "line " + std::to_string(lineno) + ": expected a 'c' line");
        std::vector<int> cyc;
        int v;
        while (ls >> v) {
            if (v < 1 || v > g.vertex_count())
                fail(Errc::VertexOutOfRange,
                     "line " + std::to_string(lineno) + ": vertex out of range");
            cyc.push_back(v - 1);
        }
        cycles.push_back(std::move(cyc));
    }
    return CycleSet(g, std::move(cycles));
}

std::string write_cycles(const CycleSet& cs) {
    std::ostringstream out;
    for (const auto& c : cs.cycles()) {
        out << "c";
        for (int v : c) out << " " << v + 1;
        out << "\n";
    }
    return out.str();
}

} // namespace stronggenus
