#include "dlab/graph.hpp"

#include <algorithm>
#include <bit>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace dlab {

int BitGraph::degree(int u) const {
    int d = 0;
    for (int w = 0; w < words; ++w) d += std::popcount(row(u)[w]);
    return d;
}

long long BitGraph::edge_count() const {
    long long total = 0;
    for (int u = 0; u < n; ++u) total += degree(u);
    return total / 2;
}

int DisjointnessGraph::vertex_index(SegmentId e) const {
    auto it = std::lower_bound(vertices.begin(), vertices.end(), e);
    if (it == vertices.end() || *it != e)
        throw std::invalid_argument("segment not a vertex of this graph");
    return static_cast<int>(it - vertices.begin());
}

DisjointnessGraph build_disjointness(const PointSet& ps) {
    DisjointnessGraph dg;
    dg.owner = ps;
    int n = ps.size();
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) dg.vertices.emplace_back(i, j);
    int v = static_cast<int>(dg.vertices.size());
    dg.g.init(v);
    for (int a = 0; a < v; ++a)
        for (int b = a + 1; b < v; ++b)
            if (segment_relation(ps, dg.vertices[a], dg.vertices[b]) == SegRelation::Disjoint)
                dg.g.add_edge(a, b);
    return dg;
}

DisjointnessGraph induced(const DisjointnessGraph& dg, const std::vector<int>& point_subset) {
    std::vector<char> in_q(dg.owner.size(), 0);
    for (int p : point_subset) in_q.at(p) = 1;
    DisjointnessGraph out;
    out.owner = dg.owner;  // same point indices remain valid
    std::vector<int> keep;
    for (size_t v = 0; v < dg.vertices.size(); ++v)
        if (in_q[dg.vertices[v].i] && in_q[dg.vertices[v].j]) {
            keep.push_back(static_cast<int>(v));
            out.vertices.push_back(dg.vertices[v]);
        }
    int m = static_cast<int>(keep.size());
    out.g.init(m);
    for (int a = 0; a < m; ++a)
        for (int b = a + 1; b < m; ++b)
            if (dg.g.edge(keep[a], keep[b])) out.g.add_edge(a, b);
    return out;
}

KneserGraph build_kneser(int n, int k) {
    if (k < 1 || n < k) throw std::invalid_argument("build_kneser: need 1 <= k <= n");
    KneserGraph kg;
    kg.n = n;
    kg.k = k;
    std::vector<int> sub(k);
    for (int i = 0; i < k; ++i) sub[i] = i;
    while (true) {
        kg.vertices.push_back(sub);
        int pos = k - 1;
        while (pos >= 0 && sub[pos] == n - k + pos) --pos;
        if (pos < 0) break;
        ++sub[pos];
        for (int i = pos + 1; i < k; ++i) sub[i] = sub[i - 1] + 1;
    }
    int v = static_cast<int>(kg.vertices.size());
    kg.g.init(v);
    auto disjoint = [](const std::vector<int>& a, const std::vector<int>& b) {
        for (int x : a)
            for (int y : b)
                if (x == y) return false;
        return true;
    };
    for (int a = 0; a < v; ++a)
        for (int b = a + 1; b < v; ++b)
            if (disjoint(kg.vertices[a], kg.vertices[b])) kg.g.add_edge(a, b);
    return kg;
}

long long kg_embedding_gap(const PointSet& ps) {
    DisjointnessGraph dg = build_disjointness(ps);
    KneserGraph kg = build_kneser(ps.size(), 2);
    // the vertex orders coincide: lexicographic pairs
    long long gap = 0;
    for (int a = 0; a < dg.g.n; ++a)
        for (int b = a + 1; b < dg.g.n; ++b) {
            bool de = dg.g.edge(a, b), ke = kg.g.edge(a, b);
            if (de && !ke) throw std::logic_error("disjointness edge outside Kneser graph");
            if (ke && !de) ++gap;
        }
    return gap;
}

void export_dimacs(const BitGraph& g, std::ostream& out) {
    out << "p edge " << g.n << ' ' << g.edge_count() << '\n';
    for (int u = 0; u < g.n; ++u)
        for (int v = u + 1; v < g.n; ++v)
            if (g.edge(u, v)) out << "e " << u + 1 << ' ' << v + 1 << '\n';
}

BitGraph import_dimacs(std::istream& in) {
    BitGraph g;
    std::string line;
    long long edges_declared = -1, edges_seen = 0;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == 'c') continue;
        std::istringstream ls(line);
        char tag;
        ls >> tag;
        if (tag == 'p') {
            std::string fmt;
            int n;
            ls >> fmt >> n >> edges_declared;
            if (fmt != "edge" || !ls) throw std::runtime_error("bad DIMACS header");
            g.init(n);
        } else if (tag == 'e') {
            int u, v;
            ls >> u >> v;
            if (!ls || g.n == 0 || u < 1 || v < 1 || u > g.n || v > g.n)
                throw std::runtime_error("bad DIMACS edge line");
            g.add_edge(u - 1, v - 1);
            ++edges_seen;
        }
    }
    if (edges_declared >= 0 && edges_declared != edges_seen)
        throw std::runtime_error("DIMACS edge count mismatch");
    return g;
}

}  // namespace dlab
