// command-line front end: generators, chi with certificates, claim checks
#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "dlab/checks.hpp"
#include "dlab/chromatic.hpp"
#include "dlab/coloring.hpp"
#include "dlab/graph.hpp"
#include "dlab/pointsets.hpp"

using namespace dlab;

namespace {

void print_report(const CheckReport& r, bool verbose) {
    std::cout << r.summary() << "\n";
    if (!r.note.empty()) std::cout << "  note: " << r.note << "\n";
    for (const CheckItem& it : r.items) {
        if (!verbose && it.verdict == Verdict::Pass) continue;
        std::cout << "  [" << verdict_name(it.verdict) << "] " << it.instance << ": expected "
                  << it.expected << ", got " << it.actual;
        if (!it.artifact.empty()) std::cout << " (" << it.artifact << ")";
        std::cout << "\n";
    }
}

int finish(const std::vector<CheckReport>& reps, bool verbose, const std::string& jsonl = "") {
    for (const CheckReport& r : reps) print_report(r, verbose);
    if (!jsonl.empty()) {
        std::ofstream out(jsonl);
        if (!out) {
            std::cerr << "error: cannot write " << jsonl << "\n";
            return 2;
        }
        write_report_jsonl(reps, out);
        std::cout << "wrote " << jsonl << "\n";
    }
    return reports_ok(reps) ? 0 : 1;
}

PointSet load_x() {
    try {
        return load_canonical_x();
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << "\n"
                  << "hint: run `dlab search-x --seed 1 --budget 500 -o data/x16.pts` or set "
                     "DLAB_DATA\n";
        std::exit(2);
    }
}

const std::vector<std::pair<int, int>> kDoubleChainPairs = {
    {1, 3}, {2, 3}, {3, 3}, {2, 4}, {3, 4}, {3, 5}, {4, 5}, {5, 5}};

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"disjointness graphs of segments: constructions, chi, claim checks"};
    app.require_subcommand(1);
    bool verbose = false;
    app.add_flag("-v,--verbose", verbose, "print every instance line, not just failures");

    CheckOptions opt;

    // gen
    auto* gen = app.add_subcommand("gen", "write a generated point set");
    gen->require_subcommand(1);
    int gen_n = 5, gen_k = 3, gen_l = 3;
    std::string gen_out;
    auto* gen_convex = gen->add_subcommand("convex", "points in convex position");
    gen_convex->add_option("--n", gen_n, "point count")->required()->check(CLI::Range(3, 1000));
    gen_convex->add_option("-o,--out", gen_out, "output file")->required();
    auto* gen_dchain = gen->add_subcommand("dchain", "double chain with k lower, l upper points");
    gen_dchain->add_option("--k", gen_k, "lower chain size")->required()->check(CLI::Range(1, 50));
    gen_dchain->add_option("--l", gen_l, "upper chain size")->required()->check(CLI::Range(1, 50));
    gen_dchain->add_option("-o,--out", gen_out, "output file")->required();

    // search-x
    auto* search = app.add_subcommand("search-x", "search a 16-point configuration candidate");
    std::uint64_t sx_seed = 1, sx_budget = 1000;
    std::string sx_out = "data/x16.pts";
    search->add_option("--seed", sx_seed, "search seed");
    search->add_option("--budget", sx_budget, "max attempts");
    search->add_option("-o,--out", sx_out, "output file");

    // chi
    auto* chi = app.add_subcommand("chi", "exact chromatic number of a point set's graph");
    std::string chi_file, chi_cnf;
    std::uint64_t chi_budget = 50'000'000;
    chi->add_option("file", chi_file, "point-set file")->required();
    chi->add_option("--budget", chi_budget, "search node budget");
    chi->add_option("--cnf-out", chi_cnf, "write DIMACS CNF for (upper bound - 1) colors");

    // verify
    auto* verify = app.add_subcommand("verify", "check a quantitative claim on the canonical set");
    verify->require_subcommand(1);
    int claim_id = 0;
    std::string t2_mode = "upper";
    auto add_opts = [&opt](CLI::App* cmd) {
        cmd->add_option("--sample", opt.sample,
                        "instances per sampled family; 0 runs the whole family");
        cmd->add_option("--budget", opt.budget, "search node budget per solver call");
        cmd->add_option("--seed", opt.seed, "sampling seed");
        cmd->add_option("--artifacts", opt.artifact_dir, "directory for certificate files");
    };
    auto* vprop = verify->add_subcommand("prop", "proposition-scale claims");
    vprop->add_option("--id", claim_id, "one of 3 4 5 6 7 10")->required();
    add_opts(vprop);
    auto* vlemma = verify->add_subcommand("lemma", "lemma-scale claims");
    vlemma->add_option("--id", claim_id, "one of 11 13 14 16 17 18 20 21 22 23 24")->required();
    add_opts(vlemma);
    auto* vthm = verify->add_subcommand("theorem2", "upper bound, subsets, or the full graph");
    vthm->add_option("--mode", t2_mode, "upper | subsets | full")
        ->check(CLI::IsMember({"upper", "subsets", "full"}));
    add_opts(vthm);

    // bounds
    auto* bounds = app.add_subcommand("bounds", "numeric bounds for one n");
    int bounds_n = 16;
    bounds->add_option("--n", bounds_n, "point count")->required()->check(CLI::Range(3, 1000000));

    // report
    auto* report = app.add_subcommand("report", "run every check and write a JSON-lines report");
    std::string report_out = "report.jsonl";
    report->add_option("-o,--out", report_out, "output file");
    add_opts(report);

    CLI11_PARSE(app, argc, argv);

    try {
        if (gen->parsed()) {
            PointSet ps = gen_convex->parsed() ? make_convex(gen_n)
                                               : make_double_chain(gen_k, gen_l);
            write_pointset_file(ps, gen_out);
            std::cout << "wrote " << gen_out << " (" << ps.size() << " points)\n";
            return 0;
        }
        if (search->parsed()) {
            try {
                XCandidate c = search_x(sx_seed, sx_budget);
                write_pointset_file(c.points, sx_out);
                std::cout << "accepted attempt " << c.attempt << " of seed " << c.seed << "\n"
                          << "wrote " << sx_out << "\n";
                if (verbose) std::cout << c.trace;
                return 0;
            } catch (const x_search_error& ex) {
                std::cerr << "search failed: " << ex.what() << "\n"
                          << "closest candidate failed at: " << ex.best_report.first_failure()
                          << "\n";
                if (verbose) std::cerr << ex.trace;
                return 1;
            }
        }
        if (chi->parsed()) {
            PointSet ps = read_pointset_file(chi_file);
            DisjointnessGraph dg = build_disjointness(ps);
            ChromaticCertificate cert = chromatic_number(dg.g, chi_budget);
            std::cout << chi_file << ": " << dg.g.n << " vertices, " << dg.g.edge_count()
                      << " edges\n";
            if (cert.exact())
                std::cout << "chi = " << cert.chi_ub << " (exact; refutation nodes "
                          << cert.evidence_nodes << ", total nodes " << cert.total_nodes << ")\n";
            else
                std::cout << "chi in [" << cert.chi_lb << "," << cert.chi_ub
                          << "] (budget exhausted after " << cert.total_nodes << " nodes)\n";
            if (!chi_cnf.empty()) {
                std::ofstream out(chi_cnf);
                if (!out) {
                    std::cerr << "error: cannot write " << chi_cnf << "\n";
                    return 2;
                }
                export_cnf_kcolor(dg.g, cert.chi_ub - 1, out);
                std::cout << "wrote " << chi_cnf << " (satisfiable iff " << cert.chi_ub - 1
                          << " colors suffice)\n";
            }
            return 0;
        }
        if (verify->parsed()) {
            PointSet x = load_x();
            std::vector<CheckReport> reps;
            if (vprop->parsed()) reps.push_back(cmd_prop(claim_id, x, opt));
            else if (vlemma->parsed()) reps.push_back(cmd_lemma(claim_id, x, opt));
            else {
                Theorem2Mode mode = t2_mode == "upper"     ? Theorem2Mode::Upper
                                    : t2_mode == "subsets" ? Theorem2Mode::Subsets
                                                           : Theorem2Mode::Full;
                reps.push_back(cmd_theorem2(mode, x, opt));
            }
            return finish(reps, verbose);
        }
        if (bounds->parsed()) {
            return finish({cmd_bounds(bounds_n)}, true);
        }
        if (report->parsed()) {
            PointSet x = load_x();
            std::vector<CheckReport> reps;
            reps.push_back(cmd_convex_table(10, opt));
            reps.push_back(cmd_double_chain_table(kDoubleChainPairs, opt));
            for (int id : {3, 4, 5, 6, 7, 10}) reps.push_back(cmd_prop(id, x, opt));
            for (int id : {11, 13, 14, 16, 17, 18, 20, 21, 22, 23, 24})
                reps.push_back(cmd_lemma(id, x, opt));
            reps.push_back(cmd_theorem2(Theorem2Mode::Upper, x, opt));
            reps.push_back(cmd_theorem2(Theorem2Mode::Subsets, x, opt));
            reps.push_back(cmd_theorem2(Theorem2Mode::Full, x, opt));
            for (int n : {7, 16, 17}) reps.push_back(cmd_bounds(n));
            return finish(reps, verbose, report_out);
        }
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 2;
    }
    return 2;
}
