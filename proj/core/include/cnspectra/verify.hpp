#pragma once

#include <map>
#include <string>
#include <vector>

#include "cnspectra/graph.hpp"

namespace cns {

/// Which classification statements to sweep.
struct TheoremSelection {
    bool thm1 = false;   // per-n spectrum prediction vs brute force
    bool thm2 = false;   // whole-profile prediction vs brute force
    bool thm3 = false;   // A_2 table rows + member identification
    bool no0 = false;    // n >= 4: 0 belongs to every non-empty A_n
    bool no03 = false;   // 0 missing from A_3 forces the T class or S_5/S_7
    bool l02 = false;    // A_n = {0,2} forces Q_m with m <= n
    bool l2 = false;     // a value >= 3 in A_2 forces 2 in A_2
    bool l4cy = false;   // 4-cycle iff 2 in A_2
    bool rows01 = false; // A_2 = {1} iff D_l; A_2 = {0,1} means no 4-cycles
    bool exc = false;    // connectivity 2, 0,1 not in A_2: T'_l / T-class rows
    bool l023 = false;   // connectivity 2, A_2 in {{0,2},{0,2,3}}: K_{2,2}, K_{2,3}, S'
    bool appA = false;   // polyhedra in the Q class are exactly B_4, B_l, B'_l (l >= 5)
    bool appB = false;   // outerplanar A_2 row classification + A_2 within {0,1,2}
    bool appB_members = false;  // outerplanar table member annotations (has known
                                // counterexamples: sun graphs in the {1,2} row)

    static TheoremSelection all();
    /// Everything except appB_members (whose known counterexample would turn
    /// every sweep of a large-enough corpus red).
    static TheoremSelection standard();
    /// Comma list, e.g. "thm1,l4cy,appB", or "standard" / "all".
    static TheoremSelection parse(const std::string& list);
};

struct CheckStats {
    long checked = 0;
    long skipped = 0;
    long mismatches = 0;
    std::vector<std::string> counterexamples;  // certificates, capped

    void merge(const CheckStats& o);
};

struct VerificationReport {
    std::string corpus;
    std::map<std::string, CheckStats> checks;
    double wall_seconds = 0.0;

    bool ok() const;
    long total_mismatches() const;
    void merge(const VerificationReport& o);
    std::string to_text() const;
};

/// Sweeps every selected statement over the corpus. Graphs outside a
/// statement's hypotheses are counted as skipped, never as failures; so are
/// graphs above 16 vertices, where the brute-force oracle stops being
/// affordable. Verification of distinct graphs fans out over `jobs` threads.
VerificationReport verify_theorems(const std::vector<Graph>& corpus, const TheoremSelection& sel,
                                   int jobs = 1);

/// Convenience: built-in corpus of all connected planar graphs on 1..max_order
/// vertices (max_order <= 9).
VerificationReport verify_built_in(int max_order, const TheoremSelection& sel, int jobs = 1);

}  // namespace cns
