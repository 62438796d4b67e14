#include "morbit/sampling.hpp"

#include <stdexcept>

#include "morbit/engine.hpp"
#include "morbit/kr.hpp"

namespace morbit {

namespace {

int atom_count(const Term& t) {
    switch (t.kind()) {
        case TermKind::Unit:
            return 0;
        case TermKind::Z:
        case TermKind::Cyc:
            return 1;
        case TermKind::Prod: {
            int n = 0;
            for (const auto& f : t.factors()) n += atom_count(*f);
            return n;
        }
        case TermKind::WrZ:
        case TermKind::WrZm:
            return 1 + atom_count(*t.base());
    }
    return 0;
}

TermPtr gen_p_raw(Rng& rng, int depth, int max_m) {
    const int c = depth <= 0 ? rng.range(0, 2) : rng.range(0, 9);
    if (c == 0) return unit();
    if (c <= 3) return z();
    if (c <= 6) return wr_z(gen_p_raw(rng, depth - 1, max_m), rng.range(1, max_m));
    std::vector<TermPtr> fs;
    const int k = rng.range(2, 3);
    for (int i = 0; i < k; ++i) fs.push_back(gen_p_raw(rng, depth - 1, max_m));
    return prod(std::move(fs));
}

TermPtr gen_r_raw(Rng& rng, int depth, int max_m) {
    const int c = depth <= 0 ? rng.range(0, 3) : rng.range(0, 9);
    if (c == 0) return unit();
    if (c <= 3) return cyc(rng.range(1, 6));
    if (c <= 6) return wr_zm(gen_r_raw(rng, depth - 1, max_m), rng.range(1, max_m));
    std::vector<TermPtr> fs;
    const int k = rng.range(2, 3);
    for (int i = 0; i < k; ++i) fs.push_back(gen_r_raw(rng, depth - 1, max_m));
    return prod(std::move(fs));
}

}  // namespace

TermPtr random_p_term(Rng& rng, int max_depth, int max_m, int max_atoms) {
    for (;;) {
        TermPtr t = normalize(gen_p_raw(rng, max_depth, max_m));
        if (atom_count(*t) <= max_atoms) return t;
    }
}

TermPtr random_finite_r_term(Rng& rng, std::uint64_t max_order) {
    for (;;) {
        TermPtr t = normalize(gen_r_raw(rng, 3, 4));
        try {
            auto o = order_r(*t);
            if (o && *o <= max_order) return t;
        } catch (const std::overflow_error&) {
        }
    }
}

TermPtr random_raw_term(Rng& rng, int max_depth) {
    const int c = max_depth <= 0 ? rng.range(0, 2) : rng.range(0, 8);
    switch (c) {
        case 0:
            return unit();
        case 1:
            return z();
        case 2:
            return cyc(rng.range(1, 5));
        case 3:
        case 4:
            return wr_z(random_raw_term(rng, max_depth - 1), rng.range(1, 5));
        case 5:
        case 6:
            return wr_zm(random_raw_term(rng, max_depth - 1), rng.range(1, 5));
        default: {
            std::vector<TermPtr> fs;
            const int k = rng.range(2, 3);
            for (int i = 0; i < k; ++i) fs.push_back(random_raw_term(rng, max_depth - 1));
            return prod(std::move(fs));
        }
    }
}

Element random_element(Rng& rng, const Term& t, int bound) {
    switch (t.kind()) {
        case TermKind::Unit:
            return unit_e();
        case TermKind::Z:
            return int_e(rng.range(-bound, bound));
        case TermKind::Cyc:
            return mod_e(static_cast<long long>(rng.below(static_cast<std::uint64_t>(t.m()))),
                         t.m());
        case TermKind::Prod: {
            std::vector<Element> entries;
            entries.reserve(t.factors().size());
            for (const auto& f : t.factors()) entries.push_back(random_element(rng, *f, bound));
            return tuple_e(std::move(entries));
        }
        case TermKind::WrZ:
        case TermKind::WrZm: {
            std::vector<Element> table;
            table.reserve(static_cast<std::size_t>(t.m()));
            for (int i = 0; i < t.m(); ++i)
                table.push_back(random_element(rng, *t.base(), bound));
            long long shift = t.kind() == TermKind::WrZ
                                  ? rng.range(-bound, bound)
                                  : static_cast<long long>(
                                        rng.below(static_cast<std::uint64_t>(t.m())));
            return wr_e(std::move(table), shift);
        }
    }
    throw std::logic_error("unreachable term kind");
}

namespace {

Subtree gen_generic_subtree(Rng& rng, int depth) {
    if (depth <= 0 || rng.range(0, 2) == 0)
        return rng.range(0, 9) < 7 ? LeafKind::NondegExtreme : LeafKind::DegenExtreme;
    auto node = std::make_shared<Node>();
    node->saddles = 1;
    node->m = 1;
    node->invariant.push_back(gen_generic_subtree(rng, depth - 1));
    node->invariant.push_back(gen_generic_subtree(rng, depth - 1));
    return NodePtr(std::move(node));
}

}  // namespace

SurfaceModel random_generic_model(Rng& rng) {
    SurfaceModel model;
    const int surfaces[][2] = {{0, 1}, {0, 2}, {0, 3}, {1, 1}, {2, 0}};
    const int s = rng.range(0, 4);
    model.genus = surfaces[s][0];
    model.boundary = surfaces[s][1];
    model.target = rng.range(0, 3) == 0 ? Target::Circle : Target::Real;

    const int pieces = rng.range(1, 3);
    bool used_cylinder = false;
    for (int i = 0; i < pieces; ++i) {
        Piece piece;
        if (!used_cylinder && rng.range(0, 3) == 0) {
            used_cylinder = true;
            piece.kind = PieceKind::Cylinder;
            if (rng.range(0, 1) == 0) {
                piece.root = LeafKind::RegularCollar;  // no critical points
            } else {
                auto node = std::make_shared<Node>();
                node->saddles = 1;
                node->m = 1;
                node->invariant.push_back(LeafKind::RegularCollar);
                node->invariant.push_back(gen_generic_subtree(rng, 2));
                piece.root = NodePtr(std::move(node));
            }
        } else {
            piece.kind = PieceKind::Disk;
            piece.root = gen_generic_subtree(rng, 3);
        }
        model.pieces.push_back(std::move(piece));
    }
    return model;
}

namespace {

Subtree gen_symmetric_subtree(Rng& rng, int depth) {
    if (depth <= 0 || rng.range(0, 2) == 0)
        return rng.range(0, 9) < 8 ? LeafKind::NondegExtreme : LeafKind::DegenExtreme;
    auto node = std::make_shared<Node>();
    const int m_choices[] = {1, 1, 2, 2, 3, 4};
    node->m = m_choices[rng.range(0, 5)];
    int inv, orb;
    if (node->m == 1) {
        inv = rng.range(2, 4);
        orb = 0;
    } else {
        inv = rng.range(0, 2);
        orb = rng.range(1, 2);
    }
    node->saddles = inv + node->m * orb - 1;
    for (int i = 0; i < inv; ++i)
        node->invariant.push_back(gen_symmetric_subtree(rng, depth - 1));
    for (int i = 0; i < orb; ++i)
        node->orbits.push_back(gen_symmetric_subtree(rng, depth - 1));
    return NodePtr(std::move(node));
}

}  // namespace

Piece random_piece(Rng& rng, int max_kr_vertices) {
    for (;;) {
        Piece piece{PieceKind::Disk, gen_symmetric_subtree(rng, 3)};
        KRGraph g = build_kr(piece);
        if (g.verts.size() > static_cast<std::size_t>(max_kr_vertices)) continue;
        try {
            (void)aut_count_rooted(g);
            auto o = order_r(*graph_group_piece(piece));
            if (!o) continue;
        } catch (const std::overflow_error&) {
            continue;
        }
        return piece;
    }
}

}  // namespace morbit
