#ifndef FLOWROOTS_THEOREM_HPP
#define FLOWROOTS_THEOREM_HPP

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "flowroots/flowcalc.hpp"
#include "flowroots/graph.hpp"
#include "flowroots/matroid.hpp"
#include "flowroots/planar.hpp"
#include "flowroots/poly.hpp"

namespace flowroots {

struct CheckOptions {
    MemoCache* memo = nullptr;
    /// Evaluate the lemma-level diagnostics (circuit bounds, coefficient
    /// bounds, one product-formula spot check per piece).
    bool lemma_diagnostics = true;
};

struct PieceDiagnostics {
    int n = 0, m = 0;
    std::optional<CircuitBoundReport> circuit_bounds;
    std::optional<BoundReport> coefficient_bound;  // on chi-dagger, when applicable
    std::string coefficient_bound_mode;            // "integer", "real" or "" when inapplicable
    std::optional<bool> product_formula_holds;     // first proper 3-cutset, when present
};

struct TheoremReport {
    std::string id;
    int n = 0, m = 0, r = 0;
    long delta = 0;
    bool degenerate = false;  // bridge present: flow polynomial identically zero
    IntPoly flow;
    std::optional<RootReport> roots;

    struct Structural {
        bool bridgeless = false;
        int edge_connectivity = 0;  // 0 when disconnected
        bool planar = false;
        bool dual_of_planar_chordal = false;
        bool supersolvable = false;
    } structural;

    std::vector<PieceDiagnostics> pieces;

    bool theorem11_applicable = false;
    std::optional<bool> theorem11_consistent;
    bool theorem53_applicable = false;  // cubic and 3-connected
    std::optional<bool> theorem53_consistent;
    std::vector<std::string> skipped;  // budget overruns, never silent passes
    std::optional<bool> consistent;    // conjunction; empty when anything was skipped
};

TheoremReport check_graph(const Multigraph& g, const std::string& id, const CheckOptions& opts);

nlohmann::ordered_json report_to_json(const TheoremReport& rep);

struct VerifyOptions {
    int parallel = 1;
    MemoCache* memo = nullptr;
    bool lemma_diagnostics = true;
    bool emit_reports = true;
};

struct VerifySummary {
    long graphs = 0;
    long consistent = 0;
    long inconsistent = 0;
    long integral_rooted = 0;
    long dual_chordal = 0;
    long skipped = 0;
    long degenerate = 0;
    std::vector<std::string> integral_ids;
    std::optional<std::string> counterexample_id;
};

nlohmann::ordered_json summary_to_json(const VerifySummary& s);

/// Runs check_graph on each input, writing one JSON report per line in
/// input order (independent of parallelism) followed by a summary line.
/// Stops after the first inconsistent graph.
VerifySummary verify_corpus(const std::vector<std::pair<std::string, Multigraph>>& corpus,
                            const VerifyOptions& opts, std::ostream& out);

/// Line-based wrapper: each line is one graph in graph6/sparse6/EdgeList.
/// Parse failures carry the 1-based line number.
VerifySummary verify_corpus_lines(const std::vector<std::string>& lines,
                                  const VerifyOptions& opts, std::ostream& out);

}  // namespace flowroots

#endif
