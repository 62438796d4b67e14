#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace morbit {

/* Algebraic terms over the atoms {1, Z, Z_m} with direct products and the
 * two wreath constructors:
 *
 *   WrZ(A, m)   the group A wr[m] Z   (Maps(Z_m, A) x Z, shift action)
 *   WrZm(A, m)  the group A wr Z_m    (Maps(Z_m, A) x Z_m)
 *
 * Class P terms use {Unit, Z, Prod, WrZ}; class R terms use
 * {Unit, Cyc, Prod, WrZm}.  Terms are immutable and shared. */

enum class TermKind { Unit, Z, Cyc, Prod, WrZ, WrZm };

class Term;
using TermPtr = std::shared_ptr<const Term>;

class Term {
public:
    TermKind kind() const { return kind_; }

    /* Cyc, WrZ, WrZm only. */
    int m() const { return m_; }

    /* Prod only; length >= 2. */
    const std::vector<TermPtr>& factors() const { return sub_; }

    /* WrZ, WrZm only. */
    const TermPtr& base() const { return sub_.front(); }

    static TermPtr make(TermKind kind, int m, std::vector<TermPtr> sub);

private:
    Term(TermKind kind, int m, std::vector<TermPtr> sub)
        : kind_(kind), m_(m), sub_(std::move(sub)) {}

    TermKind kind_;
    int m_;
    std::vector<TermPtr> sub_;
};

TermPtr unit();
TermPtr z();
TermPtr cyc(int m);

/* Collapses the degenerate lengths: 0 factors -> unit, 1 factor -> itself. */
TermPtr prod(std::vector<TermPtr> factors);

TermPtr wr_z(TermPtr base, int m);
TermPtr wr_zm(TermPtr base, int m);

/* Raw tree equality (no normalization). */
bool identical(const Term& a, const Term& b);

bool is_in_p(const Term& t);
bool is_in_r(const Term& t);

/* Canonical form: no Unit inside Prod, Prod flat and sorted by the printed
 * serialization, no wreath over Unit, no m = 1 wreath, no Cyc(1). */
bool is_canonical(const Term& t);

TermPtr normalize(const TermPtr& t);

/* normalize(a) and normalize(b) are identical trees. */
bool struct_eq(const TermPtr& a, const TermPtr& b);

/* Group order; nullopt means infinite (some subterm brings a Z factor).
 * Throws std::overflow_error if the order exceeds 64 bits. */
std::optional<std::uint64_t> order_r(const Term& t);

/* Upper bound on the derived length: every wreath level is
 * (base power)-by-abelian, so each level adds at most one step. */
int solvable_length_bound(const Term& t);

/* Levelwise quotient of a class-P term: Z -> Unit and
 * WrZ(A, m) -> WrZm(image(A), m), normalized.  The result is in class R.
 * Throws std::domain_error on non-P input. */
TermPtr graph_image(const TermPtr& t);

/* Canonical serialization; doubles as the sort key inside Prod. */
std::string print_term(const Term& t);
inline std::string print_term(const TermPtr& t) { return print_term(*t); }

}  // namespace morbit
