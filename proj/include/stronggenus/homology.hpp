#pragma once

#include <cstdint>
#include <vector>

#include "stronggenus/embedding.hpp"
#include "stronggenus/graph.hpp"

namespace stronggenus {

/// Bit-packed GF(2) vector over edge ids.
class Bitvec {
public:
    Bitvec() = default;
    explicit Bitvec(int bits) : bits_(bits), words_((bits + 63) / 64, 0) {}

    int size() const { return bits_; }
    bool test(int i) const { return (words_[i >> 6] >> (i & 63)) & 1; }
    void set(int i) { words_[i >> 6] |= uint64_t{1} << (i & 63); }
    void flip(int i) { words_[i >> 6] ^= uint64_t{1} << (i & 63); }
    bool any() const {
        for (uint64_t w : words_)
            if (w) return true;
        return false;
    }
    int lowest_set() const; // -1 if zero
    Bitvec& operator^=(const Bitvec& o) {
        for (size_t i = 0; i < words_.size(); ++i) words_[i] ^= o.words_[i];
        return *this;
    }
    bool operator==(const Bitvec&) const = default;

private:
    int bits_ = 0;
    std::vector<uint64_t> words_;
};

/// Pairwise vertex-disjoint cycles of a graph, given as vertex sequences.
/// Construction validates each sequence against the graph and derives the
/// GF(2) edge vectors (per hop the smallest joining edge id; a 2-cycle uses
/// the two smallest parallel edges).
class CycleSet {
public:
    CycleSet(const Graph& g, std::vector<std::vector<int>> cycles);

    const std::vector<std::vector<int>>& cycles() const { return cycles_; }
    const std::vector<Bitvec>& edge_vectors() const { return vectors_; }
    int size() const { return static_cast<int>(cycles_.size()); }
    /// XOR of all member vectors; equals the union since members are disjoint.
    Bitvec union_vector(int edge_count) const;

private:
    std::vector<std::vector<int>> cycles_;
    std::vector<Bitvec> vectors_;
};

/// Edge vector of one cycle given by its vertex sequence (validates it).
Bitvec cycle_edge_vector(const Graph& g, const std::vector<int>& cycle);

/// GF(2) row space of the facial-walk boundary vectors of an embedding.
/// Build once per embedding and reuse; membership tests are then cheap.
class FaceSpan {
public:
    explicit FaceSpan(const Embedding& e);

    int rank() const { return static_cast<int>(basis_.size()); }
    /// True iff v lies in the span of the face boundary vectors.
    bool contains(Bitvec v) const;
    /// True iff the vectors are linearly independent modulo the face span.
    bool independent_mod_span(const std::vector<Bitvec>& vs) const;

private:
    int edge_count_;
    std::vector<Bitvec> basis_; // reduced, each with a distinct pivot
    std::vector<int> pivots_;
    void reduce(Bitvec& v) const;
};

/// True iff the union of the cycles equals a GF(2) sum of facial walks of e.
bool is_surface_separating(const Embedding& e, const CycleSet& cs);

/// True iff no non-empty subset of the family is surface-separating;
/// equivalently (for disjoint cycles) the edge vectors are independent modulo
/// the face span. The empty family is vacuously independent.
bool homologically_independent(const Embedding& e, const CycleSet& cs);

/// Cached variants for callers holding a FaceSpan already.
bool is_surface_separating(const FaceSpan& span, const CycleSet& cs, int edge_count);
bool homologically_independent(const FaceSpan& span, const CycleSet& cs);

/// Parse/write the cycle-set text format: one `c v1 v2 ... vk` line per cycle,
/// 1-based vertices.
CycleSet parse_cycles(const Graph& g, const std::string& text);
std::string write_cycles(const CycleSet& cs);

} // namespace stronggenus
