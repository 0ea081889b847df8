// Disjointness graphs of segments and Kneser graphs, over a bitset
// adjacency core.
#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "dlab/geometry.hpp"

namespace dlab {

// Undirected graph as packed adjacency rows; immutable once built.
struct BitGraph {
    int n = 0;
    int words = 0;
    std::vector<std::uint64_t> bits;

    void init(int vertices) {
        n = vertices;
        words = (n + 63) / 64;
        bits.assign(static_cast<size_t>(n) * words, 0);
    }
    void add_edge(int u, int v) {
        bits[static_cast<size_t>(u) * words + v / 64] |= std::uint64_t{1} << (v % 64);
        bits[static_cast<size_t>(v) * words + u / 64] |= std::uint64_t{1} << (u % 64);
    }
    bool edge(int u, int v) const {
        return bits[static_cast<size_t>(u) * words + v / 64] >> (v % 64) & 1;
    }
    const std::uint64_t* row(int u) const { return bits.data() + static_cast<size_t>(u) * words; }
    int degree(int u) const;
    long long edge_count() const;
    friend bool operator==(const BitGraph&, const BitGraph&) = default;
};

// D(P): one vertex per segment spanned by P (in lexicographic SegmentId
// order), edges between disjoint segments.
struct DisjointnessGraph {
    PointSet owner;
    std::vector<SegmentId> vertices;
    BitGraph g;

    int vertex_index(SegmentId e) const;  // throws std::invalid_argument if absent
};

DisjointnessGraph build_disjointness(const PointSet& ps);

// Subgraph induced by segments with both endpoints in the point subset Q;
// equals build_disjointness of the restricted point set up to relabeling.
DisjointnessGraph induced(const DisjointnessGraph& dg, const std::vector<int>& point_subset);

// KG(n,k): vertices are k-subsets of {0..n-1} in lexicographic order,
// edges between disjoint subsets.
struct KneserGraph {
    int n = 0;
    int k = 0;
    std::vector<std::vector<int>> vertices;
    BitGraph g;
};

KneserGraph build_kneser(int n, int k);

// Number of Kneser edges missing from D(P) under the natural vertex
// bijection; equals the crossing count of P.
long long kg_embedding_gap(const PointSet& ps);

// DIMACS graph format: "p edge V E" then one "e u v" line per edge,
// vertices 1-based.
void export_dimacs(const BitGraph& g, std::ostream& out);
BitGraph import_dimacs(std::istream& in);

}  // namespace dlab
