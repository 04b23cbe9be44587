#ifndef FLOWROOTS_MATROID_HPP
#define FLOWROOTS_MATROID_HPP

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "flowroots/graph.hpp"
#include "flowroots/poly.hpp"

namespace flowroots {

using Mask = std::uint64_t;

enum class MatroidKind { Generic, Cycle, Cocycle };

/// Matroid on up to 64 elements with a rank oracle. Graph-realized as the
/// cycle or cocycle matroid of a multigraph (element = edge id), or
/// generic with a user rank function (test fixtures).
class Matroid {
  public:
    static Matroid cycle_of(const Multigraph& g);
    static Matroid cocycle_of(const Multigraph& g);
    static Matroid generic(int ground_size, std::function<int(Mask)> rank_fn);

    MatroidKind kind() const { return kind_; }
    const Multigraph& graph() const { return graph_; }
    int size() const { return static_cast<int>(ground_.size()); }
    /// External labels per mask position (edge ids; 0..k-1 for generic).
    const std::vector<int>& ground_ids() const { return ground_; }
    Mask full_mask() const;

    int rank(Mask subset) const;
    int rank() const { return rank(full_mask()); }
    Mask closure(Mask subset) const;
    bool is_flat(Mask subset) const { return closure(subset) == subset; }

    /// Rank-2 flats.
    std::vector<Mask> lines() const;
    /// Corank-1 flats. Cycle/cocycle realizations enumerate bond/cycle
    /// complements; generic matroids grow independent sets.
    std::vector<Mask> hyperplanes() const;

    Matroid restriction(Mask subset) const;
    /// Removes rank-0 elements and keeps the smallest element of each
    /// rank-1 flat; reports which original positions survive.
    Matroid simplification(std::vector<int>* kept_positions = nullptr) const;

    std::vector<int> mask_to_ids(Mask m) const;

  private:
    MatroidKind kind_ = MatroidKind::Generic;
    Multigraph graph_;
    std::vector<int> ground_;                 // mask position -> element label
    std::function<int(Mask)> rank_fn_;        // Generic only
};

struct FlatLattice {
    std::vector<Mask> flats;      // sorted by rank, then mask
    std::vector<int> rank_of;     // per flat
    std::vector<BigInt> mobius;   // mu(empty-closure, X)
    int matroid_rank = 0;
};

/// Enumerates all flats by closure growth; throws BudgetExceeded past
/// max_flats.
FlatLattice flat_lattice(const Matroid& m, std::size_t max_flats = 200000);

/// Characteristic polynomial via Mobius summation over the lattice of
/// flats; identically zero when a rank-0 element exists.
IntPoly char_poly_mobius(const Matroid& m, std::size_t max_flats = 200000);

/// The line criterion: every line L with rank(X v L) == rank(X) + 1 meets
/// X. Throws NotAFlat when X is not a flat.
bool is_modular_flat(const Matroid& m, Mask flat);

/// Test oracle: modularity via r(X)+r(Y) == r(XvY)+r(X^Y) over all flats.
bool is_modular_flat_by_rank_identity(const Matroid& m, Mask flat, const FlatLattice& lattice);

struct SupersolvableResult {
    bool supersolvable = false;
    /// X_0 subset ... subset X_r as element-id lists of the simplification.
    std::vector<std::vector<int>> chain;
    /// |X_i| - |X_{i-1}| (the forced characteristic roots).
    std::vector<int> forced_roots;
};

/// Top-down search over modular copoints, memoized on flats. The input is
/// simplified first; the chain refers to the simplification.
SupersolvableResult is_supersolvable(const Matroid& m);

enum class GlueKind { Empty, Point, Line };

struct ParallelConnectionResult {
    Multigraph graph;  // glued graph; the result matroid is its cycle matroid
    Matroid matroid;
    bool k33_risk = false;  // >= 3 K4's sharing the glue line
};

/// Parallel connection of two graphic matroids at the empty set, a point
/// (one edge id per side) or a 3-point line (a triangle of edge ids per
/// side). The glue flat must be modular in at least one operand. Throws
/// GlueNotPresent.
ParallelConnectionResult parallel_connection(const Matroid& m1, const std::vector<int>& glue1,
                                             const Matroid& m2, const std::vector<int>& glue2,
                                             GlueKind kind);

struct LineStats {
    std::map<int, long> gamma;  // line size -> count, in the simplification
    long max_line_size = 0;
    long points = 0;  // elements of the simplification
};

LineStats line_stats(const Matroid& m);

struct LemmaApplication {
    std::string lemma;  // "4.1", "4.2", "4.3a", "4.3b"
    bool applies = false;
    std::vector<std::string> unmet;  // hypotheses that failed, when not applicable
    BigInt circuits;                 // gamma_3, or sum C(i-1,2) gamma_i for 4.3
    BigInt bound;
    BigInt slack;
    bool equality = false;
    bool forced_form_verified = false;
    long c = 0;  // element-count parameter of 4.3
};

struct CircuitBoundReport {
    int rank = 0;
    long elements = 0;  // of the simplification
    long delta = 0;     // 3r - 3 - elements
    LineStats lines;
    IntPoly chi;
    bool chi2_zero = false;
    bool roots_real = false;
    bool roots_integral = false;
    bool connected = false;  // (x-1)^2 does not divide chi
    std::vector<LemmaApplication> lemmas;
};

/// Lower bounds on 3-element circuits for matroids with real or integer
/// characteristic roots, with measured (never assumed) hypotheses.
CircuitBoundReport three_circuit_bound_check(const Matroid& m);

}  // namespace flowroots

#endif
