// Constructions of the point families the library studies: convex
// polygons, double chains, and the 16-point configuration X with roles
// A, B, T1, T2.  Also the point-set text format.
#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "dlab/geometry.hpp"

namespace dlab {

// n points in convex position, no horizontal or vertical segment.
PointSet make_convex(int n);

// The double chain C_{k,l}: k-point lower chain, l-point upper chain, the
// chains curving toward each other (lower concave down, upper concave up),
// each point of one chain strictly beyond every line spanned by the other.
// Output order: lower chain left to right, then upper chain left to right.
PointSet make_double_chain(int k, int l);

// Checks the double-chain property for a set whose first k points are the
// lower chain and remaining l the upper chain.
bool is_double_chain(const PointSet& ps, int k, int l);

// --- point-set text format ----------------------------------------------
// line 1: n
// lines 2..n+1: "x y"
// optional final line: "labels R1 R2 ... Rn" with role names A B T1 T2 -
// '#' starts a comment line; blank lines ignored.
PointSet read_pointset(std::istream& in);
PointSet read_pointset_file(const std::string& path);
void write_pointset(const PointSet& ps, std::ostream& out);
void write_pointset_file(const PointSet& ps, const std::string& path);

// Path of the canonical candidate file: $DLAB_DATA if set, else the
// repository data file.
std::string canonical_x_path();
PointSet load_canonical_x();

struct XReport {
    struct Item {
        std::string name;
        bool pass = false;
        std::string detail;
    };
    std::vector<Item> items;
    bool all_pass() const;
    std::string first_failure() const;
};

// Runs every structural requirement on a labeled 16-point candidate:
// cardinalities, general position, no convex hexagon, no axis-parallel
// segment, negative slopes inside T1 and T2, the four double-chain order
// types, the A|T2 vs B|T1 order-type match, and separability of
// A, B, T1, T2, A|B, T1|T2.
XReport verify_x_properties(const PointSet& ps);

struct XCandidate {
    PointSet points;
    std::uint64_t seed = 0;
    std::uint64_t attempt = 0;  // accepted attempt index
    std::string trace;          // one line per attempt
};

struct x_search_error : std::runtime_error {
    XReport best_report;
    std::string trace;
    x_search_error(const std::string& msg, XReport rep, std::string tr)
        : std::runtime_error(msg), best_report(std::move(rep)), trace(std::move(tr)) {}
};

// Seeded search for a configuration passing verify_x_properties plus the
// exact chromatic screen (chi of the two mixed 8-point families equals 6,
// and no 5-coloring exists for any of the 25 two-chain bridge families).
// Deterministic: a given (seed, budget) always yields the same candidate.
XCandidate search_x(std::uint64_t seed, std::uint64_t budget);

}  // namespace dlab
