#ifndef FLOWROOTS_PLANAR_HPP
#define FLOWROOTS_PLANAR_HPP

#include <string_view>
#include <variant>
#include <vector>

#include "flowroots/graph.hpp"

namespace flowroots {

/// One end of an edge: end 0 sits at the stored u, end 1 at the stored v.
/// A loop contributes both ends to the same vertex's rotation.
struct HalfEdge {
    int edge_id = 0;
    int end = 0;
    bool operator==(const HalfEdge&) const = default;
};

/// A directed traversal of an edge: dir 0 runs u -> v.
struct DartRef {
    int edge_id = 0;
    int dir = 0;
    bool operator==(const DartRef&) const = default;
};

/// Rotation system certifying planarity, with derived face walks.
struct Embedding {
    Multigraph graph;
    std::vector<std::vector<HalfEdge>> rotation;  // cyclic order per vertex
    std::vector<std::vector<DartRef>> faces;      // every dart in exactly one walk

    /// |V| - |E| + |F| == 2c with per-component face counts; equivalently
    /// 1 + c when the unbounded face is shared.
    bool euler_ok() const;
};

/// Derives face walks from the rotation (called by planarity_embed; exposed
/// for validating hand-built rotations in tests).
std::vector<std::vector<DartRef>> trace_faces(const Multigraph& g,
                                              const std::vector<std::vector<HalfEdge>>& rotation);

struct KuratowskiWitness {
    enum class Kind { K5, K33 };
    Kind kind = Kind::K5;
    std::vector<int> edge_ids;  // a subdivision of K5 or K33 inside g
};

using PlanarityResult = std::variant<Embedding, KuratowskiWitness>;

/// Combinatorial planar embedding or a Kuratowski witness. Parallel edges
/// and loops are reinserted next to their mates after embedding the
/// underlying simple graph.
PlanarityResult planarity_embed(const Multigraph& g);
bool is_planar(const Multigraph& g);

/// Dual multigraph: one vertex per face, one edge per primal edge joining
/// the faces on its sides; primal edge ids preserved. Requires connected.
Multigraph dual(const Embedding& e);

struct ChordalityResult {
    bool chordal = false;
    std::vector<int> elimination_order;  // perfect elimination order on success
    std::vector<int> chordless_cycle;    // induced cycle of length >= 4 otherwise
};

/// Maximum-cardinality-search chordality test on the simple support.
ChordalityResult is_chordal(const Multigraph& g);

/// true iff the simple support reduces to K3 by repeatedly removing a
/// degree-2 vertex with adjacent neighbors.
bool is_two_tree(const Multigraph& g);

struct BuildStep {
    char op = 'E';  // 'E' u v: join new vertex to edge uv; 'F' a b c: fill face
    int a = 0, b = 0, c = 0;
};

/// Line-oriented script: "E u v" or "F a b c" per line; blank lines and
/// lines starting with '#' are skipped.
std::vector<BuildStep> parse_build_script(std::string_view text);

enum class ChordalFamily { TwoTree, ChordalPlanar, Triangulation };

struct ChordalBuild {
    Multigraph graph;
    std::vector<BuildStep> steps;
};

/// Grows a planar chordal graph from K3 by edge joins and face
/// insertions. Throws InvalidScript when a step references a missing edge
/// or a vertex triple that is not a triangular face.
ChordalBuild gen_chordal_planar(const std::vector<BuildStep>& script);
/// Seeded random build with size vertices (size >= 3).
ChordalBuild gen_chordal_planar(ChordalFamily family, int size, unsigned long seed);

struct DualChordalPiece {
    Multigraph reduced;  // series-reduced block
    bool supersolvable = false;
    std::vector<std::vector<int>> modular_chain;  // edge-id sets, when supersolvable
    bool has_certificate = false;
    Multigraph certificate_h;  // planar chordal H with M(H) = simplified cocycle matroid
    std::vector<int> certificate_peo;
};

struct DualChordalReport {
    bool value = false;
    std::vector<DualChordalPiece> pieces;
};

/// Structural side of the integral-flow-roots characterization, decided
/// embedding-independently: every series-reduced block must have a
/// supersolvable (simple) cocycle matroid. When a piece is planar and its
/// dual is chordal, that dual is attached as an explicit certificate.
/// Throws HasBridge.
DualChordalReport is_dual_of_planar_chordal(const Multigraph& g);

}  // namespace flowroots

#endif
