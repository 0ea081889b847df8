// Exact planar geometry over integer coordinates: orientation, segment
// relations, order types, convex-position subsets, point-to-segment
// distance comparison.  All predicates are decided in integer arithmetic;
// no floating point anywhere.
#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace dlab {

using Coord = std::int64_t;

// Coordinates admitted by the library.  Orientation determinants of points
// within this bound fit comfortably in 128-bit signed arithmetic.
inline constexpr Coord coord_bound = Coord{1} << 30;

struct budget_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Point {
    Coord x = 0;
    Coord y = 0;
    friend bool operator==(const Point&, const Point&) = default;
};

enum class Role : std::uint8_t { Unlabeled, A, B, T1, T2 };

std::string role_name(Role r);
Role role_from_name(const std::string& s);  // throws std::invalid_argument

// A finite planar point set, optionally with per-point role labels.
struct PointSet {
    std::vector<Point> points;
    std::vector<Role> labels;  // empty, or one label per point

    int size() const { return static_cast<int>(points.size()); }
    bool labeled() const { return !labels.empty(); }
    const Point& operator[](int i) const { return points[i]; }
    std::vector<int> with_role(Role r) const;
    bool all_distinct() const;
};

// Sign of the signed area of triangle pqr: +1 counterclockwise, -1
// clockwise, 0 collinear.
int orient(Point p, Point q, Point r);

// Unordered pair of point indices naming a segment; stored with i < j.
struct SegmentId {
    int i = 0;
    int j = 1;
    SegmentId() = default;
    SegmentId(int a, int b);  // throws std::invalid_argument if a == b
    friend auto operator<=>(const SegmentId&, const SegmentId&) = default;
    bool contains(int p) const { return p == i || p == j; }
};

enum class SegRelation { Incident, Crossing, Disjoint };

// Relation of two distinct segments: Incident if they share an endpoint
// index, Crossing if the closed segments intersect without a shared
// endpoint, Disjoint otherwise.  Throws std::invalid_argument if e == f.
SegRelation segment_relation(const PointSet& ps, SegmentId e, SegmentId f);

// True iff all points are distinct and no three are collinear.
bool in_general_position(const PointSet& ps);

struct CrossingPairs {
    long long count = 0;
    std::vector<std::pair<SegmentId, SegmentId>> pairs;
};

// All crossing pairs of segments spanned by the point set.
CrossingPairs crossing_pairs(const PointSet& ps);

// Searches for an orientation-preserving bijection between two point sets
// (same order type).  Returns the image of each index of `a` in `b`, or
// nullopt if none exists.  Mirror images do not match.  Throws
// budget_error for sets larger than 12 points.
std::optional<std::vector<int>> same_order_type(const PointSet& a, const PointSet& b);

struct ConvexSubset {
    bool found = false;
    std::vector<int> witness;  // point indices, increasing
};

// Does the set contain k points in convex position?  Exhaustive; returns
// the lexicographically first witness.
ConvexSubset convex_k_subset(const PointSet& ps, int k);

// Indices of the convex hull in counterclockwise order, strict turns only
// (points interior to hull edges are not reported).
std::vector<int> convex_hull(const PointSet& ps);

enum class Ordering { Less, Equal, Greater };

// Compares the Euclidean distances from points p and q to the closed
// segment e, exactly.  Throws std::invalid_argument if p or q is an
// endpoint of e.
Ordering dist_cmp(const PointSet& ps, int p, int q, SegmentId e);

// Leftmost / rightmost endpoint of a segment (smaller/larger x; ties by y,
// which cannot occur when no segment is vertical).
int leftmost_endpoint(const PointSet& ps, SegmentId e);
int rightmost_endpoint(const PointSet& ps, SegmentId e);

}  // namespace dlab
