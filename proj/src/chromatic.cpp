#include "dlab/chromatic.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <ostream>
#include <stdexcept>

namespace dlab {

namespace {

// ---- maximum clique: branch and bound over candidate bitsets ------------

struct CliqueSolver {
    const BitGraph& g;
    int words;
    std::vector<int> best, current;

    explicit CliqueSolver(const BitGraph& gg) : g(gg), words(gg.words) {}

    static int popcount_set(const std::vector<std::uint64_t>& s) {
        int c = 0;
        for (auto w : s) c += std::popcount(w);
        return c;
    }

    void expand(std::vector<std::uint64_t>& cand) {
        int remaining = popcount_set(cand);
        if (static_cast<int>(current.size()) + remaining <= static_cast<int>(best.size()))
            return;
        for (int w = 0; w < words; ++w) {
            while (cand[w]) {
                if (static_cast<int>(current.size()) + popcount_set(cand) <=
                    static_cast<int>(best.size()))
                    return;
                int v = w * 64 + std::countr_zero(cand[w]);
                cand[w] &= cand[w] - 1;
                current.push_back(v);
                std::vector<std::uint64_t> next(words);
                const std::uint64_t* row = g.row(v);
                for (int x = 0; x < words; ++x) next[x] = cand[x] & row[x];
                // only keep candidates after v to avoid permutations
                expand(next);
                current.pop_back();
            }
        }
        if (current.size() > best.size()) best = current;
    }

    std::vector<int> run(const std::vector<std::uint64_t>& init) {
        std::vector<std::uint64_t> cand = init;
        expand(cand);
        std::sort(best.begin(), best.end());
        return best;
    }
};

std::vector<std::uint64_t> full_vertex_set(const BitGraph& g) {
    std::vector<std::uint64_t> s(g.words, 0);
    for (int v = 0; v < g.n; ++v) s[v / 64] |= std::uint64_t{1} << (v % 64);
    return s;
}

}  // namespace

std::vector<int> max_clique(const BitGraph& g) {
    if (g.n == 0) return {};
    CliqueSolver s(g);
    return s.run(full_vertex_set(g));
}

std::vector<SegmentId> max_disjoint_family(const DisjointnessGraph& dg) {
    std::vector<SegmentId> out;
    for (int v : max_clique(dg.g)) out.push_back(dg.vertices[v]);
    return out;
}

// ---- DSATUR heuristic ----------------------------------------------------

Coloring dsatur(const BitGraph& g) {
    int n = g.n;
    Coloring col;
    col.color.assign(n, -1);
    if (n == 0) return col;
    // neighbor color sets, up to 128 colors (enough for <= 128 vertices)
    std::vector<std::array<std::uint64_t, 2>> seen(n, {0, 0});
    std::vector<int> sat(n, 0);
    for (int step = 0; step < n; ++step) {
        int pick = -1;
        for (int v = 0; v < n; ++v) {
            if (col.color[v] >= 0) continue;
            if (pick < 0 || sat[v] > sat[pick] ||
                (sat[v] == sat[pick] && g.degree(v) > g.degree(pick)))
                pick = v;
        }
        int c = 0;
        while (seen[pick][c / 64] >> (c % 64) & 1) ++c;
        col.color[pick] = c;
        for (int u = 0; u < n; ++u) {
            if (col.color[u] >= 0 || !g.edge(pick, u)) continue;
            if (!(seen[u][c / 64] >> (c % 64) & 1)) {
                seen[u][c / 64] |= std::uint64_t{1} << (c % 64);
                ++sat[u];
            }
        }
    }
    col.colors_used = count_colors(col.color);
    return col;
}

// ---- constrained k-colorability -----------------------------------------

namespace {

struct KSolver {
    const BitGraph& g;
    int n, k;
    std::uint32_t full;
    std::uint64_t budget;
    std::uint64_t nodes = 0;

    std::vector<std::uint32_t> dom;
    std::vector<int> color;       // -1 open, -2 peeled
    std::vector<int> static_deg;
    std::uint32_t anchored = 0;   // colors named by some constraint
    std::uint32_t used_mask = 0;
    std::vector<int> used_count;
    int open_count = 0;
    std::vector<int> peel_order;

    struct Change {
        int v;
        std::uint32_t removed;
    };

    KSolver(const BitGraph& gg, int kk, std::uint64_t b)
        : g(gg), n(gg.n), k(kk), full(kk >= 32 ? 0xffffffffu : (1u << kk) - 1), budget(b) {
        if (kk > 31) throw std::invalid_argument("k_colorable: k must be at most 31");
        dom.assign(n, full);
        color.assign(n, -1);
        used_count.assign(std::max(kk, 1), 0);
        static_deg.resize(n);
        for (int v = 0; v < n; ++v) static_deg[v] = g.degree(v);
        open_count = n;
    }

    bool assign_chain(int v0, int c0, std::vector<Change>& changes, std::vector<int>& assigned) {
        std::vector<std::pair<int, int>> queue{{v0, c0}};
        while (!queue.empty()) {
            auto [v, c] = queue.back();
            queue.pop_back();
            if (color[v] >= 0) {
                if (color[v] == c) continue;
                return false;
            }
            color[v] = c;
            assigned.push_back(v);
            --open_count;
            if (used_count[c]++ == 0) used_mask |= 1u << c;
            const std::uint64_t* row = g.row(v);
            for (int w = 0; w < g.words; ++w) {
                std::uint64_t bits = row[w];
                while (bits) {
                    int u = w * 64 + std::countr_zero(bits);
                    bits &= bits - 1;
                    if (color[u] != -1) continue;
                    std::uint32_t bit = 1u << c;
                    if (dom[u] & bit) {
                        dom[u] &= ~bit;
                        changes.push_back({u, bit});
                        if (dom[u] == 0) return false;
                        if (std::popcount(dom[u]) == 1)
                            queue.push_back({u, std::countr_zero(dom[u])});
                    }
                }
            }
        }
        return true;
    }

    void undo(const std::vector<Change>& changes, const std::vector<int>& assigned) {
        for (auto it = assigned.rbegin(); it != assigned.rend(); ++it) {
            int c = color[*it];
            color[*it] = -1;
            ++open_count;
            if (--used_count[c] == 0) used_mask &= ~(1u << c);
        }
        for (auto it = changes.rbegin(); it != changes.rend(); ++it) dom[it->v] |= it->removed;
    }

    std::uint32_t candidates(int v) const {
        std::uint32_t allowed = used_mask | anchored;
        std::uint32_t free_unused = full & ~allowed & ~used_mask;
        if (free_unused) allowed |= free_unused & (~free_unused + 1);  // lowest new color
        return dom[v] & allowed;
    }

    int select() const {
        int pick = -1, pick_size = 33;
        for (int v = 0; v < n; ++v) {
            if (color[v] != -1) continue;
            int s = std::popcount(dom[v]);
            if (s < pick_size || (s == pick_size && static_deg[v] > static_deg[pick])) {
                pick = v;
                pick_size = s;
            }
        }
        return pick;
    }

    KStatus search() {
        if (open_count == 0) return KStatus::Yes;
        int v = select();
        std::uint32_t cands = candidates(v);
        while (cands) {
            if (++nodes > budget) return KStatus::Unknown;
            int c = std::countr_zero(cands);
            cands &= cands - 1;
            std::vector<Change> changes;
            std::vector<int> assigned;
            bool ok = assign_chain(v, c, changes, assigned);
            if (ok) {
                KStatus s = search();
                if (s == KStatus::Yes) return s;  // keep assignment for witness
                undo(changes, assigned);
                if (s == KStatus::Unknown) return s;
            } else {
                undo(changes, assigned);
            }
        }
        return KStatus::No;
    }

    // removes vertices whose remaining degree is below k; they can always
    // be colored afterwards, so colorability is unaffected
    void peel() {
        std::vector<int> deg = static_deg;
        bool again = true;
        while (again) {
            again = false;
            for (int v = 0; v < n; ++v) {
                if (color[v] != -1 || deg[v] >= k) continue;
                color[v] = -2;
                --open_count;
                peel_order.push_back(v);
                for (int u = 0; u < n; ++u)
                    if (g.edge(v, u)) --deg[u];
                again = true;
            }
        }
    }

    void complete_peeled() {
        for (auto it = peel_order.rbegin(); it != peel_order.rend(); ++it) {
            int v = *it;
            std::uint32_t taken = 0;
            for (int u = 0; u < n; ++u)
                if (g.edge(v, u) && color[u] >= 0) taken |= 1u << color[u];
            std::uint32_t avail = full & ~taken;
            color[v] = std::countr_zero(avail);
        }
    }
};

}  // namespace

KResult k_colorable(const BitGraph& g, int k, const ColorConstraints& cons, std::uint64_t budget) {
    KResult out;
    if (k < 0) throw std::invalid_argument("k_colorable: negative k");
    if (k == 0 || g.n == 0) {
        out.status = (g.n == 0) ? KStatus::Yes : KStatus::No;
        out.witness.colors_used = 0;
        out.witness.color.assign(g.n, -1);
        return out;
    }

    KSolver s(g, k, budget);

    // validate and normalize constraints
    auto check_vertex = [&](int v) {
        if (v < 0 || v >= g.n) throw std::invalid_argument("constraint vertex out of range");
    };
    auto check_color = [&](int c) {
        if (c < 0 || c >= k) throw std::invalid_argument("constraint color out of range");
    };
    std::vector<std::pair<int, int>> pins = cons.fixed;
    for (auto [v, c] : pins) check_vertex(v), check_color(c);
    for (auto [v, c] : cons.forbidden) check_vertex(v), check_color(c);
    for (int i = 0; i < static_cast<int>(cons.unique_color_vertices.size()); ++i) {
        int v = cons.unique_color_vertices[i];
        check_vertex(v);
        int reserved = k - 1 - i;
        if (reserved < 0) {
            out.status = KStatus::No;
            out.inconsistent_pins = true;
            return out;
        }
        pins.emplace_back(v, reserved);
        for (int u = 0; u < g.n; ++u)
            if (u != v) s.dom[u] &= ~(1u << reserved);
        s.anchored |= 1u << reserved;
    }
    for (auto [v, c] : cons.forbidden) {
        s.dom[v] &= ~(1u << c);
        s.anchored |= 1u << c;
    }
    for (auto [v, c] : pins) s.anchored |= 1u << c;
    for (int v = 0; v < g.n; ++v)
        if (s.dom[v] == 0) {
            out.status = KStatus::No;
            out.inconsistent_pins = true;
            return out;
        }

    std::vector<KSolver::Change> init_changes;
    std::vector<int> init_assigned;
    for (auto [v, c] : pins) {
        if (s.color[v] == c) continue;
        if (s.color[v] >= 0 || !(s.dom[v] >> c & 1) ||
            !s.assign_chain(v, c, init_changes, init_assigned)) {
            out.status = KStatus::No;
            out.inconsistent_pins = true;
            return out;
        }
    }

    if (cons.empty()) {
        s.peel();
        if (s.open_count > 0) {
            // seed a maximum clique: its vertices need pairwise distinct
            // colors, so fixing them to 0,1,... loses no coloring up to
            // color exchange
            std::vector<std::uint64_t> still(g.words, 0);
            for (int v = 0; v < g.n; ++v)
                if (s.color[v] == -1) still[v / 64] |= std::uint64_t{1} << (v % 64);
            CliqueSolver cs(g);
            std::vector<int> clique = cs.run(still);
            if (static_cast<int>(clique.size()) > k) {
                out.status = KStatus::No;
                return out;
            }
            int next = 0;
            for (int v : clique)
                if (!s.assign_chain(v, next++, init_changes, init_assigned)) {
                    out.status = KStatus::No;  // cannot happen for a real clique
                    return out;
                }
        }
    }

    KStatus st = s.search();
    out.status = st;
    out.nodes = s.nodes;
    if (st == KStatus::Yes) {
        s.complete_peeled();
        out.witness.color = s.color;
        out.witness.colors_used = count_colors(s.color);
        if (!is_proper(g, out.witness))
            throw std::logic_error("k_colorable produced an improper coloring");
    }
    return out;
}

// ---- chromatic number ----------------------------------------------------

ChromaticCertificate chromatic_number(const BitGraph& g, std::uint64_t budget) {
    auto t0 = std::chrono::steady_clock::now();
    ChromaticCertificate cert;
    if (g.n == 0) {
        cert.chi_lb = cert.chi_ub = 0;
        cert.evidence = EvidenceKind::ExhaustedSearch;
        return cert;
    }
    std::vector<int> clique = max_clique(g);
    int lb = std::max<int>(1, static_cast<int>(clique.size()));
    Coloring heur = dsatur(g);
    int ub = heur.colors_used;

    int k = lb - 1;
    while (true) {
        KResult res = k_colorable(g, k, {}, budget);
        cert.total_nodes += res.nodes;
        if (res.status == KStatus::No) {
            cert.evidence = EvidenceKind::ExhaustedSearch;
            cert.evidence_nodes = res.nodes;
            ++k;
            if (k == ub) {
                cert.chi_lb = cert.chi_ub = ub;
                cert.witness = heur;
                break;
            }
        } else if (res.status == KStatus::Yes) {
            cert.chi_lb = cert.chi_ub = k;
            cert.witness = res.witness;
            break;
        } else {
            cert.chi_lb = k;
            cert.chi_ub = ub;
            cert.witness = heur;
            cert.evidence = EvidenceKind::None;
            cert.evidence_nodes = 0;
            break;
        }
    }
    cert.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
                       .count();
    return cert;
}

bool verify_certificate(const BitGraph& g, const ChromaticCertificate& cert) {
    if (cert.chi_lb > cert.chi_ub) return false;
    if (g.n == 0) return cert.chi_ub == 0;
    if (static_cast<int>(cert.witness.color.size()) != g.n) return false;
    if (!is_proper(g, cert.witness)) return false;
    if (count_colors(cert.witness.color) != cert.chi_ub) return false;
    if (cert.chi_lb == cert.chi_ub && cert.evidence == EvidenceKind::None) return false;
    return true;
}

void export_cnf_kcolor(const BitGraph& g, int k, std::ostream& out, bool at_most_one) {
    long long e = g.edge_count();
    long long clauses = g.n + e * k + (at_most_one ? (long long)g.n * k * (k - 1) / 2 : 0);
    out << "p cnf " << (long long)g.n * k << ' ' << clauses << '\n';
    auto var = [k](int v, int c) { return (long long)v * k + c + 1; };
    for (int v = 0; v < g.n; ++v) {
        for (int c = 0; c < k; ++c) out << var(v, c) << ' ';
        out << "0\n";
    }
    if (at_most_one)
        for (int v = 0; v < g.n; ++v)
            for (int c1 = 0; c1 < k; ++c1)
                for (int c2 = c1 + 1; c2 < k; ++c2)
                    out << -var(v, c1) << ' ' << -var(v, c2) << " 0\n";
    for (int u = 0; u < g.n; ++u)
        for (int v = u + 1; v < g.n; ++v)
            if (g.edge(u, v))
                for (int c = 0; c < k; ++c) out << -var(u, c) << ' ' << -var(v, c) << " 0\n";
}

}  // namespace dlab
