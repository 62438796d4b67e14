#pragma once

#include <cstdint>
#include <vector>

#include "morbit/term.hpp"

namespace morbit {

/* Concrete group elements, shaped by a Term:
 *
 *   Unit   over Unit
 *   Int    over Z            (n unbounded)
 *   Mod    over Cyc(m)       (0 <= n < m)
 *   Tuple  over Prod         (one entry per factor)
 *   Wr     over WrZ / WrZm   (table of m base elements; shift n, which is
 *                             unbounded over WrZ and reduced mod m over WrZm)
 *
 * The wreath multiplication reads the left table at the index shifted by the
 * right shift:  (alpha, a)(beta, b) = (gamma, a + b) with
 * gamma(i) = alpha(i + b) * beta(i), indices mod m. */

enum class ElemKind { Unit, Int, Mod, Tuple, Wr };

struct Element {
    ElemKind kind = ElemKind::Unit;
    long long n = 0;             // Int value / Mod residue / wreath shift
    std::vector<Element> sub;    // tuple entries or wreath table
};

bool operator==(const Element& a, const Element& b);
inline bool operator!=(const Element& a, const Element& b) { return !(a == b); }
bool operator<(const Element& a, const Element& b);  // lexicographic

Element unit_e();
Element int_e(long long n);
Element mod_e(long long k, int m);                     // reduced mod m
Element tuple_e(std::vector<Element> entries);
Element wr_e(std::vector<Element> table, long long shift);

/* Throws std::invalid_argument unless e matches t's shape (table lengths,
 * residue ranges included). */
void check_shape(const Term& t, const Element& e);

Element identity(const Term& t);
Element multiply(const Term& t, const Element& x, const Element& y);
Element inverse(const Term& t, const Element& x);

/* Moves an element over t to the corresponding element over normalize(t);
 * a group isomorphism for every rewrite step. */
Element transport(const Term& t, const Element& x);

/* Element-level quotient onto graph_image(t); a surjective homomorphism.
 * Requires is_in_p(t). */
Element full_q(const Term& t, const Element& x);

/* All elements of a finite term, distinct, in a deterministic order.
 * Throws std::domain_error when order_r(t) is infinite or exceeds bound. */
std::vector<Element> enumerate_elements(const Term& t, std::size_t bound = 5000);

/* Orders of the successive derived subgroups, starting at |G|; ends with 1
 * for solvable groups. */
std::vector<std::uint64_t> derived_series(const Term& t, std::size_t bound = 5000);

}  // namespace morbit
