#include "morbit/kr.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace morbit {

namespace {

const char* leaf_label(LeafKind k) {
    switch (k) {
        case LeafKind::NondegExtreme: return "ext";
        case LeafKind::DegenExtreme: return "dext";
        case LeafKind::RegularCollar: return "collar";
    }
    return "?";
}

void add_subtree(KRGraph& g, const Subtree& st, int parent, const std::string& prefix) {
    int id = static_cast<int>(g.verts.size());
    g.verts.push_back({parent, "", {}});
    g.verts[parent].children.push_back(id);

    if (const auto* leaf = std::get_if<LeafKind>(&st)) {
        g.verts[id].label = prefix + leaf_label(*leaf);
        return;
    }
    const NodePtr& node = std::get<NodePtr>(st);
    g.verts[id].label = prefix + "crit";
    for (const auto& child : node->invariant) add_subtree(g, child, id, "i:");
    for (const auto& family : node->orbits)
        for (int copy = 0; copy < node->m; ++copy) add_subtree(g, family, id, "o:");
}

}  // namespace

KRGraph build_kr(const Piece& piece) {
    KRGraph g;
    g.verts.push_back({-1, "root", {}});
    add_subtree(g, piece.root, 0, "");
    return g;
}

namespace {

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
    std::uint64_t r;
    if (__builtin_mul_overflow(a, b, &r))
        throw std::overflow_error("automorphism count exceeds 64 bits");
    return r;
}

/* Canonical class of the subtree at v: label plus the sorted classes of the
 * children.  Identical classes are interchangeable under a root-fixing
 * automorphism. */
int canon_class(const KRGraph& g, int v, std::map<std::pair<std::string, std::vector<int>>, int>& interned,
                std::vector<int>& cls) {
    std::vector<int> child_classes;
    child_classes.reserve(g.verts[v].children.size());
    for (int c : g.verts[v].children)
        child_classes.push_back(canon_class(g, c, interned, cls));
    std::sort(child_classes.begin(), child_classes.end());
    auto key = std::make_pair(g.verts[v].label, std::move(child_classes));
    auto [it, fresh] = interned.emplace(std::move(key), static_cast<int>(interned.size()));
    (void)fresh;
    cls[v] = it->second;
    return it->second;
}

}  // namespace

std::uint64_t aut_count_rooted(const KRGraph& g) {
    if (g.verts.empty()) return 1;
    if (g.verts.size() > 64)
        throw std::domain_error("automorphism counting is limited to 64 vertices");

    std::map<std::pair<std::string, std::vector<int>>, int> interned;
    std::vector<int> cls(g.verts.size(), -1);
    canon_class(g, 0, interned, cls);

    std::uint64_t count = 1;
    for (const auto& v : g.verts) {
        std::map<int, std::uint64_t> mult;
        for (int c : v.children) ++mult[cls[c]];
        for (const auto& [cl, n] : mult) {
            (void)cl;
            for (std::uint64_t k = 2; k <= n; ++k) count = checked_mul(count, k);
        }
    }
    return count;
}

std::string to_dot(const KRGraph& g, std::string_view name, std::string_view vertex_prefix) {
    std::string out = "digraph ";
    out += name;
    out += " {\n";
    for (std::size_t i = 0; i < g.verts.size(); ++i) {
        out += "  ";
        out += vertex_prefix;
        out += std::to_string(i);
        out += " [label=\"";
        out += g.verts[i].label;
        out += "\"];\n";
    }
    for (std::size_t i = 0; i < g.verts.size(); ++i) {
        for (int c : g.verts[i].children) {
            out += "  ";
            out += vertex_prefix;
            out += std::to_string(i);
            out += " -> ";
            out += vertex_prefix;
            out += std::to_string(c);
            out += ";\n";
        }
    }
    out += "}\n";
    return out;
}

}  // namespace morbit
