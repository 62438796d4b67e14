#pragma once

#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace morbit {

/* Combinatorial model of a Morse (or more general class-F) map on a compact
 * orientable surface.  Each piece is an adapted disk or cylinder; inside a
 * piece the level structure is a rooted tree whose internal nodes are
 * critical components and whose leaves are local extremes or the far
 * boundary of a cylinder. */

enum class LeafKind {
    NondegExtreme,   // non-degenerate local extreme (Morse)
    DegenExtreme,    // degenerate local extreme (class F only)
    RegularCollar,   // the non-root boundary circle of a cylinder piece
};

struct Node;
using NodePtr = std::shared_ptr<const Node>;
using Subtree = std::variant<LeafKind, NodePtr>;

/* A critical component with `saddles` critical points and a cyclic symmetry
 * of order m.  Children split into components fixed by the symmetry
 * (`invariant`) and orbit families (`orbits`); an orbit family stores one
 * representative which implicitly repeats m times. */
struct Node {
    int saddles = 1;
    int m = 1;
    std::optional<int> chi;  // Euler characteristic of the component; default -saddles
    std::vector<Subtree> invariant;
    std::vector<Subtree> orbits;

    int chi_k() const { return chi.value_or(-saddles); }
};

enum class PieceKind { Disk, Cylinder };

struct Piece {
    PieceKind kind = PieceKind::Disk;
    Subtree root = LeafKind::NondegExtreme;
};

enum class Target { Real, Circle };

struct SurfaceModel {
    int genus = 0;
    int boundary = 1;
    Target target = Target::Real;
    std::vector<Piece> pieces;
};

struct Diagnostic {
    enum class Severity { Error, Warning };
    Severity severity = Severity::Error;
    std::string path;     // e.g. "pieces[0].root.node.orbits[1]"
    std::string message;
};

bool has_errors(const std::vector<Diagnostic>& diags);

/* All hard invariants as errors, soft checks as warnings; never throws.
 * Hard: m >= 1, saddles >= 1, m = 1 forces empty orbits, the boundary-count
 * identity 1 + |invariant| + m*|orbits| = saddles + 2 whenever chi = -saddles,
 * collar-leaf counts (disk: none, cylinder: exactly one), and the excluded
 * surfaces (sphere and torus).  Soft: m | saddles for m >= 2; the per-piece
 * Euler check runs only for all-default-chi Morse pieces. */
std::vector<Diagnostic> validate(const SurfaceModel& model);
std::vector<Diagnostic> validate_piece(const Piece& piece, const std::string& path = "piece");

/* (#extreme leaves) + sum of chi over nodes: 1 for a disk, 0 for a cylinder. */
int euler_char(const Piece& piece);

}  // namespace morbit
