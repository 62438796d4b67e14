#include "morbit/engine.hpp"

#include <algorithm>
#include <stdexcept>

namespace morbit {

namespace {

void require_valid_piece(const Piece& piece) {
    auto diags = validate_piece(piece);
    if (has_errors(diags)) {
        for (const auto& d : diags)
            if (d.severity == Diagnostic::Severity::Error)
                throw std::invalid_argument("invalid piece: " + d.path + ": " + d.message);
    }
}

void require_valid_model(const SurfaceModel& model) {
    auto diags = validate(model);
    if (has_errors(diags)) {
        for (const auto& d : diags)
            if (d.severity == Diagnostic::Severity::Error)
                throw std::invalid_argument("invalid model: " + d.path + ": " + d.message);
    }
}

TermPtr pi1_subtree(const Subtree& st) {
    if (const auto* leaf = std::get_if<LeafKind>(&st)) {
        switch (*leaf) {
            case LeafKind::NondegExtreme: return unit();
            case LeafKind::DegenExtreme: return z();
            case LeafKind::RegularCollar: return unit();
        }
    }
    const NodePtr& node = std::get<NodePtr>(st);
    std::vector<TermPtr> inv;
    inv.reserve(node->invariant.size());
    for (const auto& c : node->invariant) inv.push_back(pi1_subtree(c));
    std::vector<TermPtr> orb;
    orb.reserve(node->orbits.size());
    for (const auto& c : node->orbits) orb.push_back(pi1_subtree(c));
    return prod({prod(std::move(inv)), wr_z(prod(std::move(orb)), node->m)});
}

TermPtr gg_subtree(const Subtree& st) {
    if (std::get_if<LeafKind>(&st)) return unit();
    const NodePtr& node = std::get<NodePtr>(st);
    std::vector<TermPtr> inv;
    inv.reserve(node->invariant.size());
    for (const auto& c : node->invariant) inv.push_back(gg_subtree(c));
    std::vector<TermPtr> orb;
    orb.reserve(node->orbits.size());
    for (const auto& c : node->orbits) orb.push_back(gg_subtree(c));
    return prod({prod(std::move(inv)), wr_zm(prod(std::move(orb)), node->m)});
}

}  // namespace

TermPtr compute_piece_raw(const Piece& piece) {
    require_valid_piece(piece);
    return pi1_subtree(piece.root);
}

TermPtr compute_piece(const Piece& piece) { return normalize(compute_piece_raw(piece)); }

TermPtr compute_model(const SurfaceModel& model) {
    require_valid_model(model);
    std::vector<TermPtr> parts;
    parts.reserve(model.pieces.size());
    for (const auto& piece : model.pieces) parts.push_back(pi1_subtree(piece.root));
    return normalize(prod(std::move(parts)));
}

TermPtr graph_group_piece(const Piece& piece) {
    require_valid_piece(piece);
    return normalize(gg_subtree(piece.root));
}

TermPtr graph_group(const SurfaceModel& model) {
    require_valid_model(model);
    std::vector<TermPtr> parts;
    parts.reserve(model.pieces.size());
    for (const auto& piece : model.pieces) parts.push_back(gg_subtree(piece.root));
    return normalize(prod(std::move(parts)));
}

namespace {

Subtree realize_term(const TermPtr& canon) {
    if (canon->kind() == TermKind::Unit) return LeafKind::NondegExtreme;

    std::vector<TermPtr> atoms;
    if (canon->kind() == TermKind::Prod)
        atoms = canon->factors();
    else
        atoms.push_back(canon);

    /* peel the wreath atom with the largest m; Z atoms last */
    std::size_t pick = atoms.size();
    int best_m = 0;
    for (std::size_t i = 0; i < atoms.size(); ++i) {
        if (atoms[i]->kind() == TermKind::WrZ && atoms[i]->m() > best_m) {
            best_m = atoms[i]->m();
            pick = i;
        }
    }
    if (pick == atoms.size()) {
        pick = 0;  // no wreath atom left; peel a Z
        if (atoms[pick]->kind() != TermKind::Z)
            throw std::domain_error("realize requires a class-P term");
    }

    TermPtr picked = atoms[pick];
    atoms.erase(atoms.begin() + static_cast<std::ptrdiff_t>(pick));
    TermPtr rest = prod(std::move(atoms));

    auto node = std::make_shared<Node>();
    if (picked->kind() == TermKind::WrZ) {
        /* one invariant region for the rest, one orbit family of m copies
         * realizing the wreath base; m saddles on the shared level */
        node->saddles = picked->m();
        node->m = picked->m();
        node->invariant.push_back(realize_term(rest));
        node->orbits.push_back(realize_term(picked->base()));
    } else {
        /* a Z atom: one extra extreme at its own level */
        node->saddles = 1;
        node->m = 1;
        node->invariant.push_back(LeafKind::NondegExtreme);
        node->invariant.push_back(realize_term(rest));
    }
    return NodePtr(std::move(node));
}

}  // namespace

Piece realize_disk(const TermPtr& t) {
    if (!is_in_p(*t)) throw std::domain_error("realize requires a class-P term");
    return Piece{PieceKind::Disk, realize_term(normalize(t))};
}

SurfaceModel realize_surface(const TermPtr& t, int genus, int boundary, Target target) {
    if (genus < 0 || boundary < 0)
        throw std::domain_error("genus and boundary count must be >= 0");
    if (genus == 0 && boundary == 0)
        throw std::domain_error("surface excluded: the 2-sphere is not supported");
    if (genus == 1 && boundary == 0)
        throw std::domain_error("surface excluded: the 2-torus is not supported");

    const int chi = 2 - 2 * genus - boundary;
    const int extremes_min = boundary == 0 ? 2 : 1;
    const int saddles = std::max(0, extremes_min - chi);
    const int extremes = chi + saddles;

    SurfaceModel model;
    model.genus = genus;
    model.boundary = boundary;
    model.target = target;
    model.pieces.push_back(realize_disk(t));
    for (int i = 1; i < extremes; ++i)
        model.pieces.push_back(Piece{PieceKind::Disk, LeafKind::NondegExtreme});
    return model;
}

namespace {

struct GenericScan {
    bool generic = true;
    int nodes = 0;
    int degenerate = 0;
};

void scan_subtree(const Subtree& st, GenericScan& out) {
    if (const auto* leaf = std::get_if<LeafKind>(&st)) {
        if (*leaf == LeafKind::DegenExtreme) ++out.degenerate;
        return;
    }
    const NodePtr& node = std::get<NodePtr>(st);
    ++out.nodes;
    if (node->saddles != 1 || node->m != 1) out.generic = false;
    for (const auto& c : node->invariant) scan_subtree(c, out);
    for (const auto& c : node->orbits) scan_subtree(c, out);
}

}  // namespace

std::optional<int> generic_rank(const SurfaceModel& model) {
    require_valid_model(model);
    GenericScan scan;
    for (const auto& piece : model.pieces) scan_subtree(piece.root, scan);
    if (!scan.generic) return std::nullopt;
    return scan.nodes + scan.degenerate;
}

Report make_report(const SurfaceModel& model) {
    Report r;
    r.pi1 = compute_model(model);
    r.graph_grp = graph_group(model);
    auto order = order_r(*r.graph_grp);
    r.graph_order = order.value();  // class-R terms are finite
    r.solvable_bound = solvable_length_bound(*r.pi1);
    r.generic = generic_rank(model);
    r.notes.push_back(
        "pi_2 of the orbit vanishes; for n >= 3 pi_n of the orbit equals pi_n of the surface");
    r.notes.push_back(
        "relative to the boundary the orbit is aspherical, so pi_1 carries all its homotopy");
    r.notes.push_back("pi_1 is solvable with derived length <= " +
                      std::to_string(r.solvable_bound) +
                      "; the graph group is a finite quotient of order " +
                      std::to_string(r.graph_order));
    if (r.generic)
        r.notes.push_back("generic model: pi_1 is free abelian of rank " +
                          std::to_string(*r.generic));
    return r;
}

}  // namespace morbit
