#include "dlab/geometry.hpp"

#include <algorithm>
#include <array>
#include <numeric>

namespace dlab {

using I128 = __int128;
using U128 = unsigned __int128;

std::string role_name(Role r) {
    switch (r) {
        case Role::Unlabeled: return "-";
        case Role::A: return "A";
        case Role::B: return "B";
        case Role::T1: return "T1";
        case Role::T2: return "T2";
    }
    return "?";
}

Role role_from_name(const std::string& s) {
    if (s == "A") return Role::A;
    if (s == "B") return Role::B;
    if (s == "T1") return Role::T1;
    if (s == "T2") return Role::T2;
    if (s == "-") return Role::Unlabeled;
    throw std::invalid_argument("unknown role label: " + s);
}

std::vector<int> PointSet::with_role(Role r) const {
    std::vector<int> out;
    for (int i = 0; i < size(); ++i)
        if (i < static_cast<int>(labels.size()) && labels[i] == r) out.push_back(i);
    return out;
}

bool PointSet::all_distinct() const {
    auto sorted = points;
    std::sort(sorted.begin(), sorted.end(), [](const Point& a, const Point& b) {
        return a.x != b.x ? a.x < b.x : a.y < b.y;
    });
    return std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
}

int orient(Point p, Point q, Point r) {
    I128 det = I128(q.x - p.x) * I128(r.y - p.y) - I128(q.y - p.y) * I128(r.x - p.x);
    return det > 0 ? 1 : det < 0 ? -1 : 0;
}

SegmentId::SegmentId(int a, int b) : i(std::min(a, b)), j(std::max(a, b)) {
    if (a == b) throw std::invalid_argument("degenerate segment");
}

namespace {

bool on_segment(Point a, Point b, Point p) {
    // assumes p collinear with ab
    return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) &&
           std::min(a.y, b.y) <= p.y && p.y <= std::max(a.y, b.y);
}

// closed-segment intersection, robust to collinear configurations
bool segments_intersect(Point a, Point b, Point c, Point d) {
    int o1 = orient(a, b, c), o2 = orient(a, b, d);
    int o3 = orient(c, d, a), o4 = orient(c, d, b);
    if (o1 != o2 && o3 != o4) return true;
    if (o1 == 0 && on_segment(a, b, c)) return true;
    if (o2 == 0 && on_segment(a, b, d)) return true;
    if (o3 == 0 && on_segment(c, d, a)) return true;
    if (o4 == 0 && on_segment(c, d, b)) return true;
    return false;
}

}  // namespace

SegRelation segment_relation(const PointSet& ps, SegmentId e, SegmentId f) {
    if (e == f) throw std::invalid_argument("segment_relation: identical segments");
    if (e.contains(f.i) || e.contains(f.j)) return SegRelation::Incident;
    if (segments_intersect(ps[e.i], ps[e.j], ps[f.i], ps[f.j])) return SegRelation::Crossing;
    return SegRelation::Disjoint;
}

bool in_general_position(const PointSet& ps) {
    if (!ps.all_distinct()) return false;
    int n = ps.size();
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int k = j + 1; k < n; ++k)
                if (orient(ps[i], ps[j], ps[k]) == 0) return false;
    return true;
}

CrossingPairs crossing_pairs(const PointSet& ps) {
    CrossingPairs out;
    int n = ps.size();
    std::vector<SegmentId> segs;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) segs.emplace_back(i, j);
    for (size_t a = 0; a < segs.size(); ++a)
        for (size_t b = a + 1; b < segs.size(); ++b)
            if (segment_relation(ps, segs[a], segs[b]) == SegRelation::Crossing) {
                ++out.count;
                out.pairs.emplace_back(segs[a], segs[b]);
            }
    return out;
}

namespace {

// Backtracking search for an orientation-preserving bijection a -> b.
struct OrderTypeSearch {
    const PointSet& a;
    const PointSet& b;
    int n;
    std::vector<int> map;   // a-index -> b-index or -1
    std::vector<char> used; // b-index taken

    bool consistent(int k) {
        // check all triples whose largest a-index is k
        for (int i = 0; i < k; ++i)
            for (int j = i + 1; j < k; ++j) {
                int o1 = orient(a[i], a[j], a[k]);
                int o2 = orient(b[map[i]], b[map[j]], b[map[k]]);
                if (o1 != o2) return false;
            }
        return true;
    }

    bool extend(int k) {
        if (k == n) return true;
        for (int cand = 0; cand < n; ++cand) {
            if (used[cand]) continue;
            map[k] = cand;
            used[cand] = 1;
            if (consistent(k) && extend(k + 1)) return true;
            used[cand] = 0;
            map[k] = -1;
        }
        return false;
    }
};

}  // namespace

std::optional<std::vector<int>> same_order_type(const PointSet& a, const PointSet& b) {
    if (a.size() != b.size()) return std::nullopt;
    if (a.size() > 12) throw budget_error("same_order_type: more than 12 points");
    OrderTypeSearch s{a, b, a.size(), std::vector<int>(a.size(), -1),
                      std::vector<char>(a.size(), 0)};
    if (s.extend(0)) return s.map;
    return std::nullopt;
}

std::vector<int> convex_hull(const PointSet& ps) {
    int n = ps.size();
    std::vector<int> idx(n);
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(), [&](int p, int q) {
        return ps[p].x != ps[q].x ? ps[p].x < ps[q].x : ps[p].y < ps[q].y;
    });
    if (n < 3) return idx;
    std::vector<int> hull(2 * n);
    int h = 0;
    for (int ii = 0; ii < n; ++ii) {  // lower
        int p = idx[ii];
        while (h >= 2 && orient(ps[hull[h - 2]], ps[hull[h - 1]], ps[p]) <= 0) --h;
        hull[h++] = p;
    }
    int lower = h + 1;
    for (int ii = n - 2; ii >= 0; --ii) {  // upper
        int p = idx[ii];
        while (h >= lower && orient(ps[hull[h - 2]], ps[hull[h - 1]], ps[p]) <= 0) --h;
        hull[h++] = p;
    }
    hull.resize(h - 1);
    return hull;
}

namespace {

bool subset_convex(const PointSet& ps, const std::vector<int>& sub) {
    PointSet tmp;
    for (int i : sub) tmp.points.push_back(ps[i]);
    return static_cast<int>(convex_hull(tmp).size()) == static_cast<int>(sub.size());
}

}  // namespace

ConvexSubset convex_k_subset(const PointSet& ps, int k) {
    ConvexSubset out;
    int n = ps.size();
    if (k < 3 || k > n) return out;
    std::vector<int> sub(k);
    // lexicographic enumeration of k-subsets
    for (int i = 0; i < k; ++i) sub[i] = i;
    while (true) {
        if (subset_convex(ps, sub)) {
            out.found = true;
            out.witness = sub;
            return out;
        }
        int pos = k - 1;
        while (pos >= 0 && sub[pos] == n - k + pos) --pos;
        if (pos < 0) break;
        ++sub[pos];
        for (int i = pos + 1; i < k; ++i) sub[i] = sub[i - 1] + 1;
    }
    return out;
}

namespace {

// Compare a*b vs c*d where a,c are unsigned 128-bit and b,d unsigned
// 64-bit, via 192-bit decomposition.  Exact distance comparisons need
// products of a squared cross term (up to ~2^126) and a squared length
// (up to ~2^63), which exceed 128 bits.
int cmp_mul_192(U128 a, std::uint64_t b, U128 c, std::uint64_t d) {
    auto split = [](U128 v, std::uint64_t m) {
        U128 lo = (U128)(std::uint64_t)v * m;
        U128 hi = (v >> 64) * m + (lo >> 64);
        return std::pair<U128, std::uint64_t>(hi, (std::uint64_t)lo);
    };
    auto [h1, l1] = split(a, b);
    auto [h2, l2] = split(c, d);
    if (h1 != h2) return h1 < h2 ? -1 : 1;
    if (l1 != l2) return l1 < l2 ? -1 : 1;
    return 0;
}

// squared distance from z to the closed segment [s,t] as a fraction
// num/den with den in {1, |t-s|^2}
struct Dist2 {
    U128 num;
    std::uint64_t den;
};

Dist2 point_segment_dist2(Point s, Point t, Point z) {
    I128 dx = t.x - s.x, dy = t.y - s.y;
    I128 wx = z.x - s.x, wy = z.y - s.y;
    I128 len2 = dx * dx + dy * dy;
    I128 dot = dx * wx + dy * wy;
    if (dot <= 0) return {U128(wx * wx + wy * wy), 1};
    if (dot >= len2) {
        I128 ux = z.x - t.x, uy = z.y - t.y;
        return {U128(ux * ux + uy * uy), 1};
    }
    I128 cr = dx * wy - dy * wx;
    U128 cr2 = cr < 0 ? U128(-cr) : U128(cr);
    return {cr2 * cr2, (std::uint64_t)len2};
}

}  // namespace

Ordering dist_cmp(const PointSet& ps, int p, int q, SegmentId e) {
    if (e.contains(p) || e.contains(q))
        throw std::invalid_argument("dist_cmp: point is an endpoint of the segment");
    Dist2 a = point_segment_dist2(ps[e.i], ps[e.j], ps[p]);
    Dist2 b = point_segment_dist2(ps[e.i], ps[e.j], ps[q]);
    int c = cmp_mul_192(a.num, b.den, b.num, a.den);
    return c < 0 ? Ordering::Less : c > 0 ? Ordering::Greater : Ordering::Equal;
}

int leftmost_endpoint(const PointSet& ps, SegmentId e) {
    const Point &a = ps[e.i], &b = ps[e.j];
    if (a.x != b.x) return a.x < b.x ? e.i : e.j;
    return a.y < b.y ? e.i : e.j;
}

int rightmost_endpoint(const PointSet& ps, SegmentId e) {
    return leftmost_endpoint(ps, e) == e.i ? e.j : e.i;
}

}  // namespace dlab
