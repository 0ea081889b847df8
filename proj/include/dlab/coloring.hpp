// Proper colorings of disjointness graphs and the structural vocabulary on
// them: color classes as thrackles or stars, apex counting, separability,
// clean segments, the distance-ordered triangle analysis for a segment
// between the two big chains, and the pentagon-based recoloring that gives
// one segment a private color.
#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "dlab/graph.hpp"

namespace dlab {

struct Coloring {
    std::vector<int> color;  // per vertex
    int colors_used = 0;
};

int count_colors(const std::vector<int>& color);

// Adjacent vertices must get different colors (same color is allowed only
// on incident or crossing segment pairs, which are the non-edges).
bool is_proper(const BitGraph& g, const Coloring& c);

// The n-2 coloring that puts the triangle of the first three points of
// `order` in one class and, for every later point p, all segments from p
// back to earlier points in a fresh star class.
Coloring greedy_star_coloring(const PointSet& ps, const std::vector<int>& order);

// Extends a coloring of the segments inside `sub` (a point subset, as a
// coloring of induced(D(ps), sub)) to all of ps: each point outside sub is
// added in increasing index order and its back-segments form a fresh star.
Coloring extend_coloring(const PointSet& ps, const std::vector<int>& sub, const Coloring& inner);

// (n-3)-coloring built from a convex hexagon: 3-color the hexagon's
// disjointness graph exactly, then extend by stars.  Throws
// std::runtime_error if the set has no convex hexagon.
Coloring hexagon_upper_coloring(const PointSet& ps);

enum class ClassKind { Thrackle, Star };

struct ClassInfo {
    int color = -1;
    std::vector<int> members;          // vertex indices
    ClassKind kind = ClassKind::Star;
    std::vector<int> incident_points;  // points touched by members
    std::vector<int> apices;           // empty for thrackles and for the
                                       // 3-cycle star of a triangle
};

// Classifies the color classes of gamma restricted to the segments inside
// point subset Q.  A class is a thrackle if two members cross, otherwise a
// star; a singleton {e} is a 2-star whose apices are both endpoints.
std::vector<ClassInfo> classify_classes(const DisjointnessGraph& dg, const Coloring& gamma,
                                        const std::vector<int>& Q);

// Number of points of Q that are the apex of some star of gamma|Q.
int gamma_star(const DisjointnessGraph& dg, const Coloring& gamma, const std::vector<int>& Q);

// Segments with no endpoint in Q that cross at least one segment spanned
// by Q.
std::vector<SegmentId> q_plus(const PointSet& ps, const std::vector<int>& Q);

// Q is separable with respect to gamma if no segment of q_plus(Q) uses a
// color present on the segments inside Q.
bool is_separable_wrt(const DisjointnessGraph& dg, const Coloring& gamma,
                      const std::vector<int>& Q);

// A segment of Q is clean if no other segment spanned by Q crosses it.
bool is_clean(const PointSet& ps, const std::vector<int>& Q, SegmentId e);

// --- distance-ordered triangle analysis ---------------------------------
// For a segment ell = ab between the two 5-chains of the canonical
// 16-point set, under a coloring gamma: U is the set of cluster points v
// whose two segments to a and b share a color different from gamma(ell).
// When |U| < 6 the remaining cluster points are ordered by distance to
// ell (ties by point index), v0 closest; the triangle on ell and v0 has
// the other sides ell1 = (v0,a) and ell2 = (v0,b).  When |U| < 5 the
// triangles on ell1 and ell2 with v1 are formed the same way.
struct Def1Result {
    std::vector<int> U;
    std::vector<int> v_order;  // defined when |U| < 6
    bool tie_broken = false;
    struct Triangle {
        SegmentId base;
        int apex;
        SegmentId side1, side2;
    };
    std::optional<Triangle> delta;           // |U| < 6
    std::optional<Triangle> delta1, delta2;  // |U| < 5
};

Def1Result def1_analyze(const DisjointnessGraph& dg, const Coloring& gamma, SegmentId ell);

// --- pentagon recoloring -------------------------------------------------
struct prop4_ineligible : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// The 20 role-labeled segments excluded from the pentagon recoloring.
std::vector<SegmentId> prop4_excluded(const PointSet& x);
bool prop4_eligible(const PointSet& x, SegmentId e);

struct Prop4Result {
    Coloring coloring;        // 14 colors, gamma(e) unique
    std::array<int, 5> pentagon{};
    int unique_color = -1;
};

// For an eligible segment e of the canonical configuration: find a convex
// pentagon with e as a side, 3-color its disjointness graph so that
// gamma(e) is used once, extend by stars to a proper 14-coloring of D(X).
// Throws prop4_ineligible for excluded segments, std::runtime_error if no
// pentagon exists.
Prop4Result prop4_coloring(const DisjointnessGraph& dx, SegmentId e);

// Number of 3-colorings (as color partitions) of a convex pentagon's
// disjointness graph in which the color of hull side e is used only once.
int pentagon_unique_color_count(const PointSet& pent, SegmentId e);

// --- certificate text format --------------------------------------------
// line 1: "colors c"; then "i j color" per segment in lexicographic
// order; optional final line "evidence ...".
void write_coloring(const DisjointnessGraph& dg, const Coloring& c, std::ostream& out,
                    const std::string& evidence = "");
Coloring read_coloring(const DisjointnessGraph& dg, std::istream& in,
                       std::string* evidence = nullptr);

}  // namespace dlab
