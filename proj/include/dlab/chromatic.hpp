// Exact chromatic number machinery: maximum pairwise-disjoint segment
// families (cliques of D), DSATUR, constrained k-colorability search with
// certified refutation, and CNF / DIMACS export.
#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "dlab/coloring.hpp"
#include "dlab/graph.hpp"

namespace dlab {

// Color constraints for k_colorable.  Reserved-color encoding: a vertex in
// unique_color_vertices is pinned to a dedicated color (k-1, k-2, ... in
// list order) which is forbidden on every other vertex.
struct ColorConstraints {
    std::vector<std::pair<int, int>> fixed;      // (vertex, color)
    std::vector<int> unique_color_vertices;
    std::vector<std::pair<int, int>> forbidden;  // (vertex, color)

    bool empty() const {
        return fixed.empty() && unique_color_vertices.empty() && forbidden.empty();
    }
};

enum class KStatus { Yes, No, Unknown };

struct KResult {
    KStatus status = KStatus::Unknown;
    Coloring witness;       // valid when status == Yes
    std::uint64_t nodes = 0;
    bool inconsistent_pins = false;  // refuted before search started
};

// Is g properly k-colorable subject to the constraints?  No is returned
// only when the search space was exhausted; hitting the node budget gives
// Unknown.  Deterministic for fixed arguments.
KResult k_colorable(const BitGraph& g, int k, const ColorConstraints& cons = {},
                    std::uint64_t budget = 50'000'000);

// Maximum clique of the underlying graph; on D(P) this is a maximum
// family of pairwise disjoint segments.
std::vector<int> max_clique(const BitGraph& g);
std::vector<SegmentId> max_disjoint_family(const DisjointnessGraph& dg);

// DSATUR heuristic coloring (upper bound witness), deterministic.
Coloring dsatur(const BitGraph& g);

enum class EvidenceKind { None, ExhaustedSearch, ExternalProofRef };

struct ChromaticCertificate {
    int chi_lb = 0;
    int chi_ub = 0;
    Coloring witness;  // proper coloring with chi_ub colors
    EvidenceKind evidence = EvidenceKind::None;
    std::uint64_t evidence_nodes = 0;
    std::string external_ref;
    std::uint64_t total_nodes = 0;
    double wall_ms = 0;

    bool exact() const { return chi_lb == chi_ub && evidence != EvidenceKind::None; }
};

// Exact chromatic number when the budget allows, otherwise a bracket
// [chi_lb, chi_ub] with a heuristic witness.
ChromaticCertificate chromatic_number(const BitGraph& g, std::uint64_t budget = 50'000'000);

// Checks a certificate against the graph: witness proper and using chi_ub
// colors, bounds ordered, exactness backed by evidence.
bool verify_certificate(const BitGraph& g, const ChromaticCertificate& cert);

// CNF for "g is k-colorable": variable of vertex v, color c is v*k+c+1;
// at-least-one clause per vertex, one conflict clause per edge and color,
// optional at-most-one clauses per vertex.
void export_cnf_kcolor(const BitGraph& g, int k, std::ostream& out, bool at_most_one = false);

}  // namespace dlab
