#include "morbit/model.hpp"

#include <algorithm>

namespace morbit {

bool has_errors(const std::vector<Diagnostic>& diags) {
    return std::any_of(diags.begin(), diags.end(), [](const Diagnostic& d) {
        return d.severity == Diagnostic::Severity::Error;
    });
}

namespace {

struct TreeStats {
    int extremes = 0;       // nondegenerate + degenerate, orbit copies counted m times
    int degenerate = 0;
    int collars = 0;        // collar leaves, orbit copies counted m times
    int chi_total = 0;      // sum of node chi values, expanded
    bool all_default_chi = true;
    bool all_morse_leaves = true;
};

void add_scaled(TreeStats& acc, const TreeStats& part, int copies) {
    acc.extremes += copies * part.extremes;
    acc.degenerate += copies * part.degenerate;
    acc.collars += copies * part.collars;
    acc.chi_total += copies * part.chi_total;
    acc.all_default_chi = acc.all_default_chi && part.all_default_chi;
    acc.all_morse_leaves = acc.all_morse_leaves && part.all_morse_leaves;
}

TreeStats walk(const Subtree& st, const std::string& path,
               std::vector<Diagnostic>* diags) {
    TreeStats stats;
    if (const auto* leaf = std::get_if<LeafKind>(&st)) {
        switch (*leaf) {
            case LeafKind::NondegExtreme:
                stats.extremes = 1;
                break;
            case LeafKind::DegenExtreme:
                stats.extremes = 1;
                stats.degenerate = 1;
                stats.all_morse_leaves = false;
                break;
            case LeafKind::RegularCollar:
                stats.collars = 1;
                break;
        }
        return stats;
    }

    const NodePtr& node = std::get<NodePtr>(st);
    auto err = [&](std::string msg) {
        if (diags)
            diags->push_back({Diagnostic::Severity::Error, path, std::move(msg)});
    };
    auto warn = [&](std::string msg) {
        if (diags)
            diags->push_back({Diagnostic::Severity::Warning, path, std::move(msg)});
    };

    if (!node) {
        err("null node");
        return stats;
    }
    if (node->saddles < 1) err("saddles must be >= 1");
    if (node->m < 1) err("symmetry order m must be >= 1");
    if (node->m == 1 && !node->orbits.empty())
        err("m = 1 forces every component to be invariant; orbits must be empty");
    if (node->m >= 2 && node->saddles >= 1 && node->saddles % node->m != 0)
        warn("m does not divide the saddle count; the symmetry cannot act freely");

    if (node->chi.has_value()) stats.all_default_chi = false;
    stats.chi_total = node->chi_k();

    const long long boundaries = 1LL + static_cast<long long>(node->invariant.size()) +
                                 static_cast<long long>(node->m) *
                                     static_cast<long long>(node->orbits.size());
    if (node->chi_k() == -node->saddles && node->m >= 1 && node->saddles >= 1 &&
        boundaries != static_cast<long long>(node->saddles) + 2) {
        err("boundary count 1 + |invariant| + m*|orbits| = " + std::to_string(boundaries) +
            " does not equal saddles + 2 = " + std::to_string(node->saddles + 2));
    }

    for (std::size_t i = 0; i < node->invariant.size(); ++i) {
        TreeStats part = walk(node->invariant[i],
                              path + ".invariant[" + std::to_string(i) + "]", diags);
        add_scaled(stats, part, 1);
    }
    for (std::size_t i = 0; i < node->orbits.size(); ++i) {
        TreeStats part =
            walk(node->orbits[i], path + ".orbits[" + std::to_string(i) + "]", diags);
        if (part.collars > 0)
            err("orbit family at .orbits[" + std::to_string(i) +
                "] contains a collar leaf; the root boundary cannot be replicated");
        add_scaled(stats, part, node->m);
    }
    return stats;
}

}  // namespace

std::vector<Diagnostic> validate_piece(const Piece& piece, const std::string& path) {
    std::vector<Diagnostic> diags;
    TreeStats stats = walk(piece.root, path + ".root", &diags);

    const int want_collars = piece.kind == PieceKind::Cylinder ? 1 : 0;
    if (stats.collars != want_collars) {
        diags.push_back({Diagnostic::Severity::Error, path,
                         (piece.kind == PieceKind::Disk
                              ? std::string("a disk piece admits no collar leaf")
                              : std::string("a cylinder piece needs exactly one collar leaf")) +
                             "; found " + std::to_string(stats.collars)});
    }

    if (stats.all_default_chi && stats.all_morse_leaves) {
        const int want = piece.kind == PieceKind::Disk ? 1 : 0;
        if (stats.extremes + stats.chi_total != want)
            diags.push_back({Diagnostic::Severity::Error, path,
                             "Euler characteristic " +
                                 std::to_string(stats.extremes + stats.chi_total) +
                                 " does not match " + std::to_string(want) +
                                 " for this piece kind"});
    } else {
        diags.push_back({Diagnostic::Severity::Warning, path,
                         "Euler check skipped: piece has non-default chi or "
                         "non-Morse leaves"});
    }
    return diags;
}

std::vector<Diagnostic> validate(const SurfaceModel& model) {
    std::vector<Diagnostic> diags;
    if (model.genus < 0)
        diags.push_back({Diagnostic::Severity::Error, "surface", "genus must be >= 0"});
    if (model.boundary < 0)
        diags.push_back(
            {Diagnostic::Severity::Error, "surface", "boundary count must be >= 0"});
    if (model.genus == 0 && model.boundary == 0)
        diags.push_back({Diagnostic::Severity::Error, "surface",
                         "surface excluded: the 2-sphere is not supported"});
    if (model.genus == 1 && model.boundary == 0)
        diags.push_back({Diagnostic::Severity::Error, "surface",
                         "surface excluded: the 2-torus is not supported"});
    for (std::size_t i = 0; i < model.pieces.size(); ++i) {
        auto part = validate_piece(model.pieces[i], "pieces[" + std::to_string(i) + "]");
        diags.insert(diags.end(), part.begin(), part.end());
    }
    return diags;
}

int euler_char(const Piece& piece) {
    TreeStats stats = walk(piece.root, "piece.root", nullptr);
    return stats.extremes + stats.chi_total;
}

}  // namespace morbit
