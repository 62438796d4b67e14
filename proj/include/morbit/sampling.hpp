#pragma once

#include <cstdint>
#include <random>

#include "morbit/element.hpp"
#include "morbit/model.hpp"
#include "morbit/term.hpp"

namespace morbit {

/* Seeded generator with hand-rolled bounded draws, so identical seeds give
 * identical streams on every standard library. */
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t below(std::uint64_t n) { return n <= 1 ? 0 : eng_() % n; }

    int range(int lo, int hi) {  // inclusive
        return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

private:
    std::mt19937_64 eng_;
};

/* Canonical class-P term with wreath orders in [1, max_m], nesting depth at
 * most max_depth and at most max_atoms atoms (atoms: Z leaves and wreath
 * nodes). */
TermPtr random_p_term(Rng& rng, int max_depth, int max_m, int max_atoms);

/* Canonical class-R term of order in [1, max_order]. */
TermPtr random_finite_r_term(Rng& rng, std::uint64_t max_order);

/* Unnormalized term over all six constructors; exercises the parser. */
TermPtr random_raw_term(Rng& rng, int max_depth);

/* Element over t with Z coordinates and wr[m] Z shifts in [-bound, bound]. */
Element random_element(Rng& rng, const Term& t, int bound);

/* Model whose critical components all have saddles = 1 and m = 1. */
SurfaceModel random_generic_model(Rng& rng);

/* Valid disk piece with symmetric components and an expanded Kronrod-Reeb
 * tree of at most max_kr_vertices vertices, with finite 64-bit graph-group
 * order and automorphism count. */
Piece random_piece(Rng& rng, int max_kr_vertices);

}  // namespace morbit
