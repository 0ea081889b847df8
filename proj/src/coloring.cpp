#include "dlab/coloring.hpp"

#include <algorithm>
#include <istream>
#include <map>
#include <ostream>
#include <set>
#include <sstream>

#include "dlab/chromatic.hpp"

namespace dlab {

int count_colors(const std::vector<int>& color) {
    std::set<int> seen;
    for (int c : color)
        if (c >= 0) seen.insert(c);
    return static_cast<int>(seen.size());
}

bool is_proper(const BitGraph& g, const Coloring& c) {
    if (static_cast<int>(c.color.size()) != g.n) return false;
    for (int v = 0; v < g.n; ++v)
        if (c.color[v] < 0) return false;
    for (int u = 0; u < g.n; ++u)
        for (int v = u + 1; v < g.n; ++v)
            if (g.edge(u, v) && c.color[u] == c.color[v]) return false;
    return true;
}

Coloring greedy_star_coloring(const PointSet& ps, const std::vector<int>& order) {
    int n = ps.size();
    if (n < 3) throw std::invalid_argument("greedy_star_coloring: need at least 3 points");
    if (static_cast<int>(order.size()) != n)
        throw std::invalid_argument("greedy_star_coloring: order must list every point");
    std::vector<int> pos(n, -1);
    for (int r = 0; r < n; ++r) {
        int p = order[r];
        if (p < 0 || p >= n || pos[p] != -1)
            throw std::invalid_argument("greedy_star_coloring: order is not a permutation");
        pos[p] = r;
    }
    Coloring col;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            int later = std::max(pos[i], pos[j]);
            col.color.push_back(later <= 2 ? 0 : later - 2);
        }
    col.colors_used = count_colors(col.color);
    return col;
}

Coloring extend_coloring(const PointSet& ps, const std::vector<int>& sub, const Coloring& inner) {
    int n = ps.size();
    std::vector<char> in_sub(n, 0);
    for (int p : sub) in_sub.at(p) = 1;
    // vertex order of the induced subgraph: lexicographic pairs within sub
    std::map<std::pair<int, int>, int> inner_index;
    {
        int idx = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (in_sub[i] && in_sub[j]) inner_index[{i, j}] = idx++;
        if (idx != static_cast<int>(inner.color.size()))
            throw std::invalid_argument("extend_coloring: inner coloring has wrong size");
    }
    int next_color = 0;
    for (int c : inner.color) next_color = std::max(next_color, c + 1);
    std::vector<int> star_color(n, -1);
    for (int p = 0; p < n; ++p)
        if (!in_sub[p]) star_color[p] = next_color++;
    Coloring out;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            if (in_sub[i] && in_sub[j])
                out.color.push_back(inner.color[inner_index[{i, j}]]);
            else if (!in_sub[i] && !in_sub[j])
                out.color.push_back(star_color[std::max(i, j)]);
            else
                out.color.push_back(star_color[in_sub[i] ? j : i]);
        }
    out.colors_used = count_colors(out.color);
    return out;
}

Coloring hexagon_upper_coloring(const PointSet& ps) {
    ConvexSubset hex = convex_k_subset(ps, 6);
    if (!hex.found) throw std::runtime_error("hexagon_upper_coloring: no convex hexagon");
    DisjointnessGraph sub = induced(build_disjointness(ps), hex.witness);
    KResult res = k_colorable(sub.g, 3);
    if (res.status != KStatus::Yes)
        throw std::logic_error("hexagon disjointness graph must be 3-colorable");
    return extend_coloring(ps, hex.witness, res.witness);
}

std::vector<ClassInfo> classify_classes(const DisjointnessGraph& dg, const Coloring& gamma,
                                        const std::vector<int>& Q) {
    std::vector<char> in_q(dg.owner.size(), 0);
    for (int p : Q) in_q.at(p) = 1;
    std::map<int, std::vector<int>> by_color;
    for (size_t v = 0; v < dg.vertices.size(); ++v) {
        SegmentId e = dg.vertices[v];
        if (in_q[e.i] && in_q[e.j]) by_color[gamma.color[v]].push_back(static_cast<int>(v));
    }
    std::vector<ClassInfo> out;
    for (auto& [color, members] : by_color) {
        ClassInfo info;
        info.color = color;
        info.members = members;
        bool crossing = false;
        for (size_t a = 0; a < members.size() && !crossing; ++a)
            for (size_t b = a + 1; b < members.size() && !crossing; ++b)
                if (segment_relation(dg.owner, dg.vertices[members[a]],
                                     dg.vertices[members[b]]) == SegRelation::Crossing)
                    crossing = true;
        info.kind = crossing ? ClassKind::Thrackle : ClassKind::Star;
        std::set<int> pts;
        for (int v : members) {
            pts.insert(dg.vertices[v].i);
            pts.insert(dg.vertices[v].j);
        }
        info.incident_points.assign(pts.begin(), pts.end());
        if (info.kind == ClassKind::Star) {
            // apex = point shared by every member; a singleton is a 2-star
            // with both endpoints as apices; the 3-cycle of a triangle has
            // no common point and hence no apex
            for (int p : info.incident_points) {
                bool in_all = true;
                for (int v : members)
                    if (!dg.vertices[v].contains(p)) {
                        in_all = false;
                        break;
                    }
                if (in_all) info.apices.push_back(p);
            }
        }
        out.push_back(std::move(info));
    }
    return out;
}

int gamma_star(const DisjointnessGraph& dg, const Coloring& gamma, const std::vector<int>& Q) {
    std::set<int> apex_points;
    for (const ClassInfo& info : classify_classes(dg, gamma, Q))
        if (info.kind == ClassKind::Star)
            for (int p : info.apices) apex_points.insert(p);
    return static_cast<int>(apex_points.size());
}

std::vector<SegmentId> q_plus(const PointSet& ps, const std::vector<int>& Q) {
    int n = ps.size();
    std::vector<char> in_q(n, 0);
    for (int p : Q) in_q.at(p) = 1;
    std::vector<SegmentId> inside;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (in_q[i] && in_q[j]) inside.emplace_back(i, j);
    std::vector<SegmentId> out;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            if (in_q[i] || in_q[j]) continue;
            SegmentId f(i, j);
            for (SegmentId e : inside)
                if (segment_relation(ps, e, f) == SegRelation::Crossing) {
                    out.push_back(f);
                    break;
                }
        }
    return out;
}

bool is_separable_wrt(const DisjointnessGraph& dg, const Coloring& gamma,
                      const std::vector<int>& Q) {
    std::vector<char> in_q(dg.owner.size(), 0);
    for (int p : Q) in_q.at(p) = 1;
    std::set<int> inside_colors;
    for (size_t v = 0; v < dg.vertices.size(); ++v)
        if (in_q[dg.vertices[v].i] && in_q[dg.vertices[v].j])
            inside_colors.insert(gamma.color[v]);
    for (SegmentId f : q_plus(dg.owner, Q))
        if (inside_colors.count(gamma.color[dg.vertex_index(f)])) return false;
    return true;
}

bool is_clean(const PointSet& ps, const std::vector<int>& Q, SegmentId e) {
    std::vector<char> in_q(ps.size(), 0);
    for (int p : Q) in_q.at(p) = 1;
    if (!in_q[e.i] || !in_q[e.j])
        throw std::invalid_argument("is_clean: segment not spanned by Q");
    for (size_t a = 0; a < Q.size(); ++a)
        for (size_t b = a + 1; b < Q.size(); ++b) {
            SegmentId f(Q[a], Q[b]);
            if (f == e) continue;
            if (segment_relation(ps, e, f) == SegRelation::Crossing) return false;
        }
    return true;
}

Def1Result def1_analyze(const DisjointnessGraph& dg, const Coloring& gamma, SegmentId ell) {
    const PointSet& x = dg.owner;
    if (!x.labeled()) throw std::invalid_argument("def1_analyze: point set has no roles");
    Role ri = x.labels[ell.i], rj = x.labels[ell.j];
    int a, b;
    if (ri == Role::A && rj == Role::B) {
        a = ell.i;
        b = ell.j;
    } else if (ri == Role::B && rj == Role::A) {
        a = ell.j;
        b = ell.i;
    } else {
        throw std::invalid_argument("def1_analyze: segment must join the two 5-chains");
    }
    std::vector<int> cluster = x.with_role(Role::T1);
    for (int p : x.with_role(Role::T2)) cluster.push_back(p);
    std::sort(cluster.begin(), cluster.end());

    Def1Result out;
    int ell_color = gamma.color[dg.vertex_index(ell)];
    std::vector<int> rest;
    for (int v : cluster) {
        int ca = gamma.color[dg.vertex_index(SegmentId(v, a))];
        int cb = gamma.color[dg.vertex_index(SegmentId(v, b))];
        if (ca == cb && ca != ell_color)
            out.U.push_back(v);
        else
            rest.push_back(v);
    }
    if (rest.empty()) return out;  // |U| = 6: nothing more is defined

    std::stable_sort(rest.begin(), rest.end(), [&](int p, int q) {
        return dist_cmp(x, p, q, ell) == Ordering::Less;
    });
    for (size_t i = 0; i + 1 < rest.size(); ++i)
        if (dist_cmp(x, rest[i], rest[i + 1], ell) == Ordering::Equal) out.tie_broken = true;
    out.v_order = rest;

    auto triangle = [](SegmentId base, int apex) {
        return Def1Result::Triangle{base, apex, SegmentId(apex, base.i), SegmentId(apex, base.j)};
    };
    out.delta = triangle(ell, rest[0]);
    if (rest.size() >= 2) {
        out.delta1 = triangle(out.delta->side1, rest[1]);
        out.delta2 = triangle(out.delta->side2, rest[1]);
    }
    return out;
}

std::vector<SegmentId> prop4_excluded(const PointSet& x) {
    std::vector<int> a = x.with_role(Role::A), b = x.with_role(Role::B);
    std::vector<int> t1 = x.with_role(Role::T1), t2 = x.with_role(Role::T2);
    if (a.size() != 5 || b.size() != 5 || t1.size() != 3 || t2.size() != 3)
        throw std::invalid_argument("prop4_excluded: point set is not a labeled 16-point set");
    std::vector<SegmentId> out;
    auto add = [&out](int p, int q) { out.emplace_back(p, q); };
    add(t1[0], t2[2]);
    add(b[0], t2[2]);
    add(b[0], t2[1]);
    add(b[0], t2[0]);
    add(b[0], a[4]);
    add(b[1], a[4]);
    for (int i = 0; i < 5; ++i) add(b[2], a[i]);
    for (int i = 0; i < 5; ++i) add(b[3], a[i]);
    add(b[4], t1[0]);
    add(b[4], t1[1]);
    add(b[4], t2[0]);
    add(b[4], a[0]);
    std::sort(out.begin(), out.end());
    return out;
}

bool prop4_eligible(const PointSet& x, SegmentId e) {
    std::vector<SegmentId> excl = prop4_excluded(x);
    return !std::binary_search(excl.begin(), excl.end(), e);
}

namespace {

// enumerate proper colorings of g with at most max_colors colors in
// canonical partition order (vertex 0 gets color 0, each vertex at most
// one more than the maximum used so far); calls fn for each
template <typename F>
void enumerate_colorings(const BitGraph& g, int max_colors, F&& fn) {
    std::vector<int> color(g.n, -1);
    auto rec = [&](auto&& self, int v, int used) -> void {
        if (v == g.n) {
            fn(color);
            return;
        }
        int limit = std::min(max_colors - 1, used);
        for (int c = 0; c <= limit; ++c) {
            bool ok = true;
            for (int u = 0; u < v; ++u)
                if (g.edge(u, v) && color[u] == c) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            color[v] = c;
            self(self, v + 1, std::max(used, c + 1));
            color[v] = -1;
        }
    };
    rec(rec, 0, 0);
}

}  // namespace

int pentagon_unique_color_count(const PointSet& pent, SegmentId e) {
    if (pent.size() != 5) throw std::invalid_argument("pentagon_unique_color_count: need 5 points");
    DisjointnessGraph dg = build_disjointness(pent);
    int ev = dg.vertex_index(e);
    int count = 0;
    enumerate_colorings(dg.g, 3, [&](const std::vector<int>& color) {
        for (size_t v = 0; v < color.size(); ++v)
            if (static_cast<int>(v) != ev && color[v] == color[ev]) return;
        ++count;
    });
    return count;
}

Prop4Result prop4_coloring(const DisjointnessGraph& dx, SegmentId e) {
    const PointSet& x = dx.owner;
    if (!prop4_eligible(x, e))
        throw prop4_ineligible("segment is in the excluded list");
    int n = x.size();
    std::vector<int> others;
    for (int p = 0; p < n; ++p)
        if (!e.contains(p)) others.push_back(p);

    auto e_is_hull_side = [&](const std::vector<int>& pts) {
        PointSet tmp;
        for (int p : pts) tmp.points.push_back(x[p]);
        std::vector<int> hull = convex_hull(tmp);
        if (hull.size() != pts.size()) return false;  // not in convex position
        int h = static_cast<int>(hull.size());
        for (int r = 0; r < h; ++r) {
            int p = pts[hull[r]], q = pts[hull[(r + 1) % h]];
            if (SegmentId(p, q) == e) return true;
        }
        return false;
    };

    int m = static_cast<int>(others.size());
    for (int ai = 0; ai < m; ++ai)
        for (int bi = ai + 1; bi < m; ++bi)
            for (int ci = bi + 1; ci < m; ++ci) {
                std::vector<int> pent = {e.i, e.j, others[ai], others[bi], others[ci]};
                std::sort(pent.begin(), pent.end());
                if (!e_is_hull_side(pent)) continue;
                DisjointnessGraph sub = induced(dx, pent);
                int ev = sub.vertex_index(e);
                std::vector<int> found;
                enumerate_colorings(sub.g, 3, [&](const std::vector<int>& color) {
                    if (!found.empty()) return;
                    for (size_t v = 0; v < color.size(); ++v)
                        if (static_cast<int>(v) != ev && color[v] == color[ev]) return;
                    found = color;
                });
                if (found.empty()) continue;
                Coloring inner{found, count_colors(found)};
                Prop4Result out;
                out.coloring = extend_coloring(x, pent, inner);
                std::copy(pent.begin(), pent.end(), out.pentagon.begin());
                out.unique_color = found[ev];
                return out;
            }
    throw std::runtime_error("prop4_coloring: no convex pentagon has the segment as a side");
}

void write_coloring(const DisjointnessGraph& dg, const Coloring& c, std::ostream& out,
                    const std::string& evidence) {
    out << "colors " << c.colors_used << '\n';
    for (size_t v = 0; v < dg.vertices.size(); ++v)
        out << dg.vertices[v].i << ' ' << dg.vertices[v].j << ' ' << c.color[v] << '\n';
    if (!evidence.empty()) out << "evidence " << evidence << '\n';
}

Coloring read_coloring(const DisjointnessGraph& dg, std::istream& in, std::string* evidence) {
    std::string line;
    Coloring c;
    c.color.assign(dg.vertices.size(), -1);
    int declared = -1;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ls(line);
        std::string head;
        ls >> head;
        if (head == "colors") {
            ls >> declared;
        } else if (head == "evidence") {
            if (evidence) {
                std::string rest;
                std::getline(ls, rest);
                *evidence = rest.empty() ? rest : rest.substr(1);
            }
        } else {
            int i = std::stoi(head), j, col;
            ls >> j >> col;
            if (!ls) throw std::runtime_error("bad coloring line: " + line);
            c.color[dg.vertex_index(SegmentId(i, j))] = col;
        }
    }
    for (int v : c.color)
        if (v < 0) throw std::runtime_error("coloring file missing a segment");
    c.colors_used = count_colors(c.color);
    if (declared >= 0 && declared != c.colors_used)
        throw std::runtime_error("coloring file color count mismatch");
    return c;
}

}  // namespace dlab
