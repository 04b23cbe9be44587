#ifndef FLOWROOTS_FLOWCALC_HPP
#define FLOWROOTS_FLOWCALC_HPP

#include <array>
#include <list>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "flowroots/graph.hpp"
#include "flowroots/poly.hpp"

namespace flowroots {

/// Thread-safe polynomial cache keyed by canonical graph keys.
/// cap 0 means unbounded; otherwise least-recently-used entries are evicted.
class MemoCache {
  public:
    explicit MemoCache(std::size_t cap = 0) : cap_(cap) {}
    std::optional<IntPoly> get(const std::string& key);
    void put(const std::string& key, const IntPoly& value);
    std::size_t size() const;

  private:
    mutable std::mutex mu_;
    std::size_t cap_;
    std::list<std::string> lru_;  // front = most recent
    std::unordered_map<std::string, std::pair<IntPoly, std::list<std::string>::iterator>> map_;
};

struct FlowOptions {
    bool use_three_cut_decomposition = true;
    MemoCache* memo = nullptr;
};

/// Flow polynomial F(G;x). Zero when a bridge exists; otherwise computed
/// by loop stripping, block factorization, series reduction, proper
/// 3-cutset decomposition and memoized deletion-contraction.
IntPoly flow_poly(const Multigraph& g);
IntPoly flow_poly(const Multigraph& g, const FlowOptions& opts);

/// Exact count of nowhere-zero Z_k flows by enumerating cotree
/// assignments of a spanning tree; independent of flow_poly. Requires g
/// connected and bridgeless. Throws BudgetExceeded when the assignment
/// count k^(m-n+1) exceeds max_assignments.
long flow_count_oracle(const Multigraph& g, long k,
                       long max_assignments = 20000000);

/// Chromatic polynomial P(G;x) by memoized deletion-contraction.
IntPoly chromatic_poly(const Multigraph& g);
IntPoly chromatic_poly(const Multigraph& g, MemoCache* memo);

struct FlowStats {
    int r = 0;       // rank of the cocycle matroid: m - n + c
    long delta = 0;  // sum over degrees i >= 3 of (i-3) v_i
    std::map<int, int> degree_histogram;
};

FlowStats flow_stats(const Multigraph& g);

struct ProductFormulaCheck {
    IntPoly f_g;
    IntPoly f_g1;
    IntPoly f_g2;
    bool holds = false;
};

/// Builds G1 and G2 by contracting the two sides of a proper minimal
/// 3-cutset, computes all three flow polynomials independently
/// (decomposition disabled, fresh caches) and checks
/// F(G) (x-1)(x-2) == F(G1) F(G2). Throws NotAProperCutset.
ProductFormulaCheck product_formula_check(const Multigraph& g, const std::array<int, 3>& cutset);

/// Trace of the reduction pipeline, for the decompose subcommand.
struct DecompositionNode {
    std::string rule;  // zero_bridge | loops | block | series | three_cut | del_con | leaf
    std::string detail;
    int n = 0;
    int m = 0;
    IntPoly value;
    std::vector<DecompositionNode> children;
};

DecompositionNode decompose_trace(const Multigraph& g);

}  // namespace flowroots

#endif
