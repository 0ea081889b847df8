// Named, budgeted verification checks: the convex and double-chain
// chromatic formulas, the numbered structural claims about the canonical
// 16-point configuration, the global upper/lower coloring bounds, and the
// closed-form bound table.  Every check returns a report of per-instance
// pass/fail items plus machine-readable JSON-lines output.
#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "dlab/geometry.hpp"

namespace dlab {

enum class Verdict { Pass, Fail, Unknown };

std::string verdict_name(Verdict v);

struct CheckItem {
    std::string instance;
    std::string expected;
    std::string actual;
    Verdict verdict = Verdict::Unknown;
    std::string artifact;  // optional path of a certificate file
};

struct CheckReport {
    std::string check;
    std::vector<CheckItem> items;
    std::string note;
    bool stretch = false;  // Unknown tolerated when set
    double wall_ms = 0;

    // Fail dominates, then Unknown, else Pass.
    Verdict verdict() const;
    int count(Verdict v) const;
    std::string summary() const;  // one line: check, verdict, item tally
};

// Exit-code aggregation: true iff every report is Pass, or Unknown with
// the stretch flag set.
bool reports_ok(const std::vector<CheckReport>& reports);

// One JSON object per line: report header, then one line per item.
void write_report_jsonl(const std::vector<CheckReport>& reports, std::ostream& out);

// chi(D(C_n)) = n - max{m : m(m+1) <= 2n}
int convex_chi_formula(int n);
// chi(D(C_{k,l})) = k + l - max{m : m(m+1) <= 2l}, requires l >= max(3,k)
int double_chain_chi_formula(int k, int l);

// Options shared by the check runners.  `sample` <= 0 means the full
// instance family; artifact_dir empty means no certificate files.
struct CheckOptions {
    std::uint64_t budget = 50'000'000;
    int sample = 20;
    std::uint64_t seed = 2024;
    std::string artifact_dir;
};

CheckReport cmd_convex_table(int max_n, const CheckOptions& opt = {});
CheckReport cmd_double_chain_table(const std::vector<std::pair<int, int>>& pairs,
                                   const CheckOptions& opt = {});

// Numbered claims 3, 4, 5, 6, 7, 10.  4 and 10 need the canonical
// configuration; the rest ignore `x`.
CheckReport cmd_prop(int id, const PointSet& x, const CheckOptions& opt = {});

// Numbered claims 11, 13, 14, 16, 17, 18, 20, 21, 22, 23, 24, all
// quantified over instance families inside the canonical configuration.
CheckReport cmd_lemma(int id, const PointSet& x, const CheckOptions& opt = {});

enum class Theorem2Mode { Upper, Subsets, Full };

CheckReport cmd_theorem2(Theorem2Mode mode, const PointSet& x, const CheckOptions& opt = {});

// Closed-form bound table for one n: quotient lower bound, double-chain
// lower bound, the two upper bounds, and a transcription alert when the
// lower bounds exceed the upper bounds.
CheckReport cmd_bounds(int n);

}  // namespace dlab
