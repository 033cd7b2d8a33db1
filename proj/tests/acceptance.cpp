// Acceptance gate: runs every release criterion at its stated tolerance and
// prints exactly one "CRITERION <i> PASS|FAIL" line per criterion. Exit code
// is the number of failed criteria. Wall-clock budgets are pinned below and
// enforced; value tolerances are exact throughout.
#include <chrono>
#include <cstdint>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "cdcrit/cli.hpp"
#include "cdcrit/criticality.hpp"
#include "cdcrit/domination.hpp"
#include "cdcrit/families.hpp"
#include "cdcrit/graph.hpp"
#include "cdcrit/hamiltonicity.hpp"
#include "oracles.hpp"

using namespace cdcrit;

namespace {

// Pinned wall-clock budgets (seconds) for criteria 1..7. Criterion 6 has no
// standalone figure (its work is folded into the earlier runtimes), so it
// inherits the most generous covering budget. Criterion 8 is a byte-equality
// re-run of the others and carries no separate budget.
constexpr double kBudgetS[7] = {120, 300, 600, 1800, 300, 1800, 600};

struct Gate {
    std::ostringstream report;
    int failures = 0;

    void require(bool cond, const std::string& what) {
        report << (cond ? "ok " : "FAIL ") << what << "\n";
        if (!cond) ++failures;
    }
    void note(const std::string& what) { report << "note " << what << "\n"; }
};

std::string b1_label(const B1Params& p) {
    std::string s = "stars=";
    for (std::size_t i = 0; i < p.star_sizes.size(); ++i)
        s += (i ? "-" : "") + std::to_string(p.star_sizes[i]);
    return s + ",iso=" + std::to_string(p.isolated);
}

std::vector<B1Params> star_grid() {
    std::vector<B1Params> grid;
    for (const std::vector<int>& stars : {std::vector<int>{1, 1}, {2, 1}, {2, 2}})
        for (int iso : {0, 1}) grid.push_back(B1Params{stars, iso});
    return grid;
}

// Criterion 1 - U(k) criticality and cut count: gamma_c = k, k-gamma_c-critical
// (exhaustive pair check), zeta = k-2, over the full pinned grid.
void criterion1(Gate& g) {
    for (int k : {4, 5, 6}) {
        for (const B1Params& bp : star_grid()) {
            FamilyInstance inst = build_Uk(k, bp);
            std::string label = "Uk(k=" + std::to_string(k) + "," + b1_label(bp) + ")";
            CriticalityReport r = criticality_report(inst.graph);
            g.require(r.gamma_c == k, label + " gamma_c=" + std::to_string(r.gamma_c) +
                                          " expected=" + std::to_string(k));
            g.require(r.is_critical, label + " critical");
            g.require(r.zeta == k - 2, label + " zeta=" + std::to_string(r.zeta) +
                                           " expected=" + std::to_string(k - 2));
        }
    }
}

// Criterion 2 - traceability for zeta in {k-3, k-2}: every criterion-1 instance
// and every G1 instance (k in {5,6}, full ell range, n_ell in {1,2}) yields a
// constructive Hamiltonian path that verifies, and the exact solver agrees.
void criterion2(Gate& g) {
    auto check_instance = [&](const FamilyInstance& inst, const std::string& label) {
        g.require(inst.graph.n <= 24, label + " n=" + std::to_string(inst.graph.n) + " <= 24");
        PathCertificate p = constructive_hamiltonian_path(inst.graph, inst.tag);
        PathVerdict v = verify_path(inst.graph, p.sequence);
        g.require(v.valid, label + " constructive path verifies" +
                               (v.valid ? "" : " (" + v.reason + ")"));
        g.require(hamiltonian_path_exact(inst.graph).has_value(), label + " exact agrees");
    };
    for (int k : {4, 5, 6})
        for (const B1Params& bp : star_grid())
            check_instance(build_Uk(k, bp), "Uk(k=" + std::to_string(k) + "," + b1_label(bp) + ")");
    for (int k : {5, 6})
        for (int ell = 1; ell <= k - 3; ++ell)
            for (int nell : {1, 2})
                for (const B1Params& bp : star_grid())
                    check_instance(build_G1(k, ell, nell, bp),
                                   "G1(k=" + std::to_string(k) + ",l=" + std::to_string(ell) +
                                       ",nl=" + std::to_string(nell) + "," + b1_label(bp) + ")");
}

// Criterion 3 - the N(6) package: gamma_c = 4 (exhaustive over all smaller
// subsets), 4-gamma_c-critical, zeta = 0, class-P membership with H = {b_i},
// and the structural witness S = B1 u B2 u {x} with omega = 15 > 14 = |S|+1.
void criterion3(Gate& g) {
    FamilyInstance inst = build_Ns(6);
    CriticalityReport r = criticality_report(inst.graph);
    g.require(r.gamma_c == 4, "Ns(6) gamma_c=" + std::to_string(r.gamma_c) + " expected=4");
    g.require(r.is_critical, "Ns(6) critical");
    g.require(r.zeta == 0, "Ns(6) zeta=" + std::to_string(r.zeta) + " expected=0");
    ClassPReport pr = check_class_P(inst.graph, inst.tag.role("B2"), 4);
    g.require(pr.verdict, "Ns(6) class-P membership" +
                              (pr.verdict ? std::string() : " (" + pr.failure + ")"));
    auto w = witness_search(inst.graph, inst.tag, 3);
    bool witness_ok = false;
    if (w) {
        WitnessVerdict wv = verify_nontraceability_witness(inst.graph, w->cut_set);
        witness_ok = wv.valid && w->cut_set.size() == 13 && w->component_count == 15;
    }
    g.require(witness_ok, "Ns(6) witness |S|=13 omega=15 > 14");
}

// Criterion 4 - theorem gl at (k=4, l=1): Pkl(N(6), [n1]) is 5-gamma_c-critical
// for n1 in {1,2}, with exhaustive per-pair search. The heaviest check.
void criterion4(Gate& g) {
    for (int n1 : {1, 2}) {
        FamilyInstance inst = build_Pkl(build_Ns(6), {n1});
        std::string label = "Pkl(s=6,l=1,n=" + std::to_string(n1) + ")";
        CriticalityReport r = criticality_report(inst.graph);
        g.require(r.gamma_c == 5, label + " gamma_c=" + std::to_string(r.gamma_c) + " expected=5");
        g.require(r.is_critical, label + " critical");
    }
}

// Criterion 5 - cut-vertex realizability: for k in {5,6} and zeta in 0..k-4,
// the parameterization (n_i = 1 for i <= zeta, else 2) has exactly zeta cut
// vertices and a valid witness with omega = 16 > 14 = |S|+1. Criticality is
// asserted only at the criterion-4 sizes (k=5); larger combinations record a
// skipped(size-limit) marker.
void criterion5(Gate& g) {
    for (int k : {5, 6}) {
        int l = k - 4;
        for (int zeta = 0; zeta <= k - 4; ++zeta) {
            std::vector<int> sizes;
            for (int i = 1; i <= l; ++i) sizes.push_back(i <= zeta ? 1 : 2);
            FamilyInstance inst = build_Pkl(build_Ns(6), sizes);
            std::string label =
                "F(k=" + std::to_string(k) + ",zeta=" + std::to_string(zeta) + ")";
            BlockCutDecomposition d = cut_vertices_and_blocks(inst.graph);
            g.require(d.zeta() == zeta, label + " zeta=" + std::to_string(d.zeta()) +
                                            " expected=" + std::to_string(zeta));
            auto w = witness_search(inst.graph, inst.tag, 3);
            bool witness_ok = false;
            if (w) {
                WitnessVerdict wv = verify_nontraceability_witness(inst.graph, w->cut_set);
                witness_ok = wv.valid && w->cut_set.size() == 13 && w->component_count == 16;
            }
            g.require(witness_ok, label + " witness |S|=13 omega=16 > 14");
            if (k == 5) {
                CriticalityReport r = criticality_report(inst.graph);
                bool crit = r.is_critical && r.gamma_c == k;
                g.require(crit, label + " critical with gamma_c=" + std::to_string(k));
            } else {
                g.note(label + " criticality skipped(size-limit)");
            }
        }
    }
}

// Criterion 6 - lemma audits: the D_xy size bounds and the cut-vertex component
// structure hold with zero violations on every critical instance from 1-4.
void criterion6(Gate& g) {
    std::vector<std::pair<std::string, FamilyInstance>> instances;
    for (int k : {4, 5, 6})
        for (const B1Params& bp : star_grid())
            instances.emplace_back("Uk(k=" + std::to_string(k) + "," + b1_label(bp) + ")",
                                   build_Uk(k, bp));
    instances.emplace_back("Ns(s=6)", build_Ns(6));
    for (int n1 : {1, 2})
        instances.emplace_back("Pkl(s=6,l=1,n=" + std::to_string(n1) + ")",
                               build_Pkl(build_Ns(6), {n1}));
    for (const auto& [label, inst] : instances) {
        CriticalityReport r = criticality_report(inst.graph);
        g.require(r.is_critical, label + " critical (precondition for the audits)");
        int v1 = 0, v2 = 0;
        for (const LemmaAudit& a : lemma1_audit(inst.graph, r.gamma_c))
            v1 += static_cast<int>(a.violations.size());
        for (const LemmaAudit& a : lemma2_audit(inst.graph))
            v2 += static_cast<int>(a.violations.size());
        g.require(v1 == 0, label + " lemma1 violations=" + std::to_string(v1));
        g.require(v2 == 0, label + " lemma2 violations=" + std::to_string(v2));
    }
}

// --- criterion 7 helpers -----------------------------------------------------

std::vector<Graph> all_graphs(int n) {
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
    std::vector<Graph> out;
    for (std::uint32_t mask = 0; mask < (1u << pairs.size()); ++mask) {
        std::vector<std::pair<int, int>> es;
        for (std::size_t b = 0; b < pairs.size(); ++b)
            if (mask & (1u << b)) es.push_back(pairs[b]);
        out.push_back(build_graph(n, es));
    }
    return out;
}

bool has_small_obstruction(const Graph& g, int bound) {
    std::vector<int> s;
    auto rec = [&](auto&& self, int from) -> bool {
        if (!s.empty() &&
            oracle::components_count(g, s) > static_cast<int>(s.size()) + 1)
            return true;
        if (static_cast<int>(s.size()) == bound) return false;
        for (int v = from; v < g.n; ++v) {
            s.push_back(v);
            if (self(self, v + 1)) return true;
            s.pop_back();
        }
        return false;
    };
    return rec(rec, 0);
}

bool is_hamiltonian_path(const Graph& g, const std::vector<int>& seq) {
    if (static_cast<int>(seq.size()) != g.n) return false;
    std::vector<char> seen(g.n, 0);
    for (int v : seq) {
        if (v < 0 || v >= g.n || seen[v]) return false;
        seen[v] = 1;
    }
    for (std::size_t i = 0; i + 1 < seq.size(); ++i)
        if (!g.has_edge(seq[i], seq[i + 1])) return false;
    return true;
}

// Criterion 7 - oracle-based property suites:
//  (a) n = max_leaf + gamma_c against independent spanning-tree enumeration,
//      exhaustive for n <= 5 and a fixed seeded 10^4 sample at n in {6,7};
//  (b) no graph with a solver-found Hamiltonian path has a vertex set of size
//      <= 3 whose removal leaves more than |S|+1 components;
//  (c) verify_path accepts the solver's outputs and judges every
//      single-transposition corruption exactly as a direct adjacency check.
void criterion7(Gate& g) {
    int identity_small = 0;
    bool identity_ok = true;
    for (int n = 3; n <= 5; ++n) {
        for (const Graph& gr : all_graphs(n)) {
            if (!oracle::is_connected(gr)) continue;
            ++identity_small;
            if (oracle::max_leaf(gr) + connected_domination_number(gr).value != n)
                identity_ok = false;
        }
    }
    // 4 + 38 + 728 connected labeled graphs on 3, 4, 5 vertices.
    g.require(identity_ok && identity_small == 770,
              "7a identity exhaustive on " + std::to_string(identity_small) +
                  " connected graphs, n <= 5");

    std::mt19937 rng(20260815u);
    bool sample_ok = true;
    for (int it = 0; it < 10000; ++it) {
        int n = (it % 5 < 3) ? 6 : 7;
        Graph gr = oracle::random_connected(rng, n);
        if (oracle::max_leaf(gr) + connected_domination_number(gr).value != n) sample_ok = false;
    }
    g.require(sample_ok, "7a identity on seeded 10^4 sample, n in {6,7}");

    std::mt19937 rng_b(777001u);
    int traced = 0;
    bool obstruction_free = true;
    for (int it = 0; it < 200; ++it) {
        int n = 4 + static_cast<int>(rng_b() % 5);
        Graph gr = oracle::random_connected(rng_b, n);
        if (!hamiltonian_path_exact(gr)) continue;
        ++traced;
        if (has_small_obstruction(gr, std::min(3, gr.n - 2))) obstruction_free = false;
    }
    g.require(obstruction_free && traced > 100,
              "7b no size-<=3 obstruction on " + std::to_string(traced) + " traceable samples");

    std::mt19937 rng_c(90210u);
    int accepted = 0, rejected = 0;
    bool verdicts_agree = true;
    for (int it = 0; it < 150; ++it) {
        int n = 4 + static_cast<int>(rng_c() % 5);
        Graph gr = oracle::random_connected(rng_c, n);
        auto p = hamiltonian_path_exact(gr);
        if (!p) continue;
        if (!verify_path(gr, p->sequence).valid) verdicts_agree = false;
        ++accepted;
        for (int i = 0; i < n; ++i) {
            for (int j = i + 1; j < n; ++j) {
                std::vector<int> corrupted = p->sequence;
                std::swap(corrupted[i], corrupted[j]);
                bool lib = verify_path(gr, corrupted).valid;
                bool ind = is_hamiltonian_path(gr, corrupted);
                if (lib != ind) verdicts_agree = false;
                if (!lib) ++rejected;
            }
        }
    }
    g.require(verdicts_agree && accepted > 100 && rejected > 500,
              "7c verify_path: " + std::to_string(accepted) + " certificates accepted, " +
                  std::to_string(rejected) + " corruptions rejected, verdicts exact");
}

using CriterionFn = void (*)(Gate&);
constexpr CriterionFn kCriteria[7] = {criterion1, criterion2, criterion3, criterion4,
                                      criterion5, criterion6, criterion7};

} // namespace

int main() {
    int failed = 0;
    std::vector<std::string> first_reports(7);

    for (int i = 0; i < 7; ++i) {
        Gate gate;
        auto t0 = std::chrono::steady_clock::now();
        kCriteria[i](gate);
        double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        first_reports[i] = gate.report.str();
        bool in_budget = elapsed <= kBudgetS[i];
        bool pass = gate.failures == 0 && in_budget;
        std::cout << "CRITERION " << (i + 1) << " " << (pass ? "PASS" : "FAIL") << "\n";
        if (!in_budget)
            std::cout << "  over budget: " << elapsed << "s > " << kBudgetS[i] << "s\n";
        std::istringstream lines(gate.report.str());
        std::string line;
        while (std::getline(lines, line))
            if (!pass || line.rfind("note ", 0) == 0) std::cout << "  " << line << "\n";
        if (!pass) ++failed;
    }

    // Criterion 8 - determinism: a second run of every criterion produces a
    // byte-identical report, and repeated CLI invocations are byte-identical
    // once the delimited timings block is stripped.
    {
        bool deterministic = true;
        std::ostringstream detail;
        for (int i = 0; i < 7; ++i) {
            Gate gate;
            kCriteria[i](gate);
            if (gate.report.str() != first_reports[i]) {
                deterministic = false;
                detail << "  criterion " << (i + 1) << " report differs between runs\n";
            }
        }
        for (std::string fmt : {"text", "structured"}) {
            std::vector<std::string> cmd{"verify-theorem", "mpm",        "--k", "4", "--stars",
                                         "1,1",            "--isolated", "0",   "--format", fmt};
            std::ostringstream o1, e1, o2, e2;
            int rc1 = cli::run(cmd, o1, e1);
            int rc2 = cli::run(cmd, o2, e2);
            if (rc1 != 0 || rc2 != 0 ||
                cli::strip_timings(o1.str()) != cli::strip_timings(o2.str())) {
                deterministic = false;
                detail << "  CLI " << fmt << " report differs between runs\n";
            }
        }
        std::cout << "CRITERION 8 " << (deterministic ? "PASS" : "FAIL") << "\n";
        std::cout << detail.str();
        if (!deterministic) ++failed;
    }

    std::cout << "acceptance: " << (8 - failed) << "/8 criteria passed\n";
    return failed;
}
