#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "morbit/model.hpp"
#include "morbit/term.hpp"

namespace morbit {

/* pi_1 of the orbit of a piece, by structural recursion over the level tree:
 * a non-degenerate extreme and the collar contribute the trivial group, a
 * degenerate extreme contributes Z, and every critical component contributes
 *
 *   (product over invariant children) x ((product over orbit families) wr[m] Z).
 *
 * The result is canonical and lies in class P.  Throws std::invalid_argument
 * when the piece has hard validation errors. */
TermPtr compute_piece(const Piece& piece);

/* Same recursion without the normalization pass; this is the shape on which
 * the levelwise quotient q commutes with the graph-group recursion. */
TermPtr compute_piece_raw(const Piece& piece);

/* Product over all pieces, canonical. */
TermPtr compute_model(const SurfaceModel& model);

/* The induced group of automorphisms of the Kronrod-Reeb tree: every leaf
 * contributes the trivial group and a critical component contributes
 * (product over invariant) x ((product over orbits) wr Z_m).  Canonical,
 * class R, and equal to graph_image(compute_piece_raw(...)). */
TermPtr graph_group_piece(const Piece& piece);
TermPtr graph_group(const SurfaceModel& model);

/* Builds a disk piece with only non-degenerate extremes whose computed term
 * is struct_eq to t.  Atom peeling: wreath atoms by descending m first,
 * then Z atoms.  Requires is_in_p(t). */
Piece realize_disk(const TermPtr& t);

/* realize_disk plus one trivial one-extreme disk per remaining extreme of
 * the base map on the (genus, boundary) surface; the base map keeps all its
 * saddles on one level, so it needs max(0, e - chi) of them where
 * chi = 2 - 2*genus - boundary and e = 2 on a closed surface, 1 otherwise.
 * Throws std::domain_error for the sphere and the torus. */
SurfaceModel realize_surface(const TermPtr& t, int genus, int boundary, Target target);

/* k with pi_1 = Z^k when every critical component is a single asymmetric
 * saddle (saddles = 1, m = 1); nullopt otherwise.
 * k = #nodes + #degenerate extremes. */
std::optional<int> generic_rank(const SurfaceModel& model);

struct Report {
    TermPtr pi1;
    TermPtr graph_grp;
    std::uint64_t graph_order = 1;
    int solvable_bound = 0;           // bound for the pi_1 term
    std::optional<int> generic;
    std::vector<std::string> notes;
};

Report make_report(const SurfaceModel& model);

}  // namespace morbit
