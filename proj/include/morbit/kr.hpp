#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "morbit/model.hpp"

namespace morbit {

/* Rooted tree obtained from a piece by shrinking every level-set component
 * to a point: one vertex for the root boundary, one per critical component,
 * one per extreme and collar leaf, with orbit families expanded to their m
 * copies.  Vertices are numbered in pre-order; 0 is the root. */
struct KRGraph {
    struct Vertex {
        int parent = -1;          // -1 for the root
        std::string label;
        std::vector<int> children;
    };
    std::vector<Vertex> verts;
};

/* Default labels: "root" for the root, "crit" for critical components,
 * "ext" / "dext" / "collar" for leaves, prefixed "i:" under an invariant
 * slot and "o:" under an orbit slot.  The prefixes record a distinction an
 * f-preserving diffeomorphism cannot cross, so the label-preserving
 * automorphism count stays an upper multiple of the graph group order. */
KRGraph build_kr(const Piece& piece);

/* Number of root-fixing, label-preserving tree automorphisms, via canonical
 * subtree classes: the product over vertices of the factorials of identical
 * child-class multiplicities.  Throws std::domain_error for > 64 vertices
 * and std::overflow_error if the count exceeds 64 bits. */
std::uint64_t aut_count_rooted(const KRGraph& g);

std::string to_dot(const KRGraph& g, std::string_view name = "kr",
                   std::string_view vertex_prefix = "v");

}  // namespace morbit
