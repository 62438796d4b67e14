#include "morbit/element.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>

#include "detail.hpp"

namespace morbit {

namespace {

long long mod_floor(long long a, long long m) {
    long long r = a % m;
    return r < 0 ? r + m : r;
}

[[noreturn]] void shape_fail(const std::string& what) {
    throw std::invalid_argument("element shape mismatch: " + what);
}

}  // namespace

bool operator==(const Element& a, const Element& b) {
    return a.kind == b.kind && a.n == b.n && a.sub == b.sub;
}

bool operator<(const Element& a, const Element& b) {
    if (a.kind != b.kind) return a.kind < b.kind;
    if (a.n != b.n) return a.n < b.n;
    return std::lexicographical_compare(a.sub.begin(), a.sub.end(),
                                        b.sub.begin(), b.sub.end());
}

Element unit_e() { return Element{}; }

Element int_e(long long n) { return Element{ElemKind::Int, n, {}}; }

Element mod_e(long long k, int m) {
    if (m < 1) throw std::invalid_argument("mod_e requires m >= 1");
    return Element{ElemKind::Mod, mod_floor(k, m), {}};
}

Element tuple_e(std::vector<Element> entries) {
    return Element{ElemKind::Tuple, 0, std::move(entries)};
}

Element wr_e(std::vector<Element> table, long long shift) {
    return Element{ElemKind::Wr, shift, std::move(table)};
}

void check_shape(const Term& t, const Element& e) {
    switch (t.kind()) {
        case TermKind::Unit:
            if (e.kind != ElemKind::Unit) shape_fail("expected unit entry");
            return;
        case TermKind::Z:
            if (e.kind != ElemKind::Int) shape_fail("expected integer over Z");
            return;
        case TermKind::Cyc:
            if (e.kind != ElemKind::Mod) shape_fail("expected residue over Z_m");
            if (e.n < 0 || e.n >= t.m()) shape_fail("residue out of range");
            return;
        case TermKind::Prod: {
            if (e.kind != ElemKind::Tuple) shape_fail("expected tuple over product");
            const auto& fs = t.factors();
            if (e.sub.size() != fs.size()) shape_fail("tuple arity");
            for (std::size_t i = 0; i < fs.size(); ++i) check_shape(*fs[i], e.sub[i]);
            return;
        }
        case TermKind::WrZ:
        case TermKind::WrZm: {
            if (e.kind != ElemKind::Wr) shape_fail("expected (table; shift)");
            if (e.sub.size() != static_cast<std::size_t>(t.m()))
                shape_fail("table length");
            if (t.kind() == TermKind::WrZm && (e.n < 0 || e.n >= t.m()))
                shape_fail("shift out of range");
            for (const auto& entry : e.sub) check_shape(*t.base(), entry);
            return;
        }
    }
}

Element identity(const Term& t) {
    switch (t.kind()) {
        case TermKind::Unit:
            return unit_e();
        case TermKind::Z:
            return int_e(0);
        case TermKind::Cyc:
            return mod_e(0, t.m());
        case TermKind::Prod: {
            std::vector<Element> entries;
            entries.reserve(t.factors().size());
            for (const auto& f : t.factors()) entries.push_back(identity(*f));
            return tuple_e(std::move(entries));
        }
        case TermKind::WrZ:
        case TermKind::WrZm: {
            std::vector<Element> table(static_cast<std::size_t>(t.m()),
                                       identity(*t.base()));
            return wr_e(std::move(table), 0);
        }
    }
    throw std::logic_error("unreachable term kind");
}

Element multiply(const Term& t, const Element& x, const Element& y) {
    switch (t.kind()) {
        case TermKind::Unit:
            if (x.kind != ElemKind::Unit || y.kind != ElemKind::Unit)
                shape_fail("unit");
            return unit_e();
        case TermKind::Z:
            if (x.kind != ElemKind::Int || y.kind != ElemKind::Int) shape_fail("Z");
            return int_e(x.n + y.n);
        case TermKind::Cyc:
            if (x.kind != ElemKind::Mod || y.kind != ElemKind::Mod) shape_fail("Z_m");
            return mod_e(x.n + y.n, t.m());
        case TermKind::Prod: {
            const auto& fs = t.factors();
            if (x.kind != ElemKind::Tuple || y.kind != ElemKind::Tuple ||
                x.sub.size() != fs.size() || y.sub.size() != fs.size())
                shape_fail("tuple");
            std::vector<Element> entries;
            entries.reserve(fs.size());
            for (std::size_t i = 0; i < fs.size(); ++i)
                entries.push_back(multiply(*fs[i], x.sub[i], y.sub[i]));
            return tuple_e(std::move(entries));
        }
        case TermKind::WrZ:
        case TermKind::WrZm: {
            const auto m = static_cast<std::size_t>(t.m());
            if (x.kind != ElemKind::Wr || y.kind != ElemKind::Wr ||
                x.sub.size() != m || y.sub.size() != m)
                shape_fail("wreath");
            /* gamma(i) = alpha(i + b) * beta(i), indices mod m */
            std::vector<Element> table;
            table.reserve(m);
            for (std::size_t i = 0; i < m; ++i) {
                std::size_t j = static_cast<std::size_t>(
                    mod_floor(static_cast<long long>(i) + y.n, t.m()));
                table.push_back(multiply(*t.base(), x.sub[j], y.sub[i]));
            }
            long long shift = x.n + y.n;
            if (t.kind() == TermKind::WrZm) shift = mod_floor(shift, t.m());
            return wr_e(std::move(table), shift);
        }
    }
    throw std::logic_error("unreachable term kind");
}

Element inverse(const Term& t, const Element& x) {
    switch (t.kind()) {
        case TermKind::Unit:
            if (x.kind != ElemKind::Unit) shape_fail("unit");
            return unit_e();
        case TermKind::Z:
            if (x.kind != ElemKind::Int) shape_fail("Z");
            return int_e(-x.n);
        case TermKind::Cyc:
            if (x.kind != ElemKind::Mod) shape_fail("Z_m");
            return mod_e(-x.n, t.m());
        case TermKind::Prod: {
            const auto& fs = t.factors();
            if (x.kind != ElemKind::Tuple || x.sub.size() != fs.size())
                shape_fail("tuple");
            std::vector<Element> entries;
            entries.reserve(fs.size());
            for (std::size_t i = 0; i < fs.size(); ++i)
                entries.push_back(inverse(*fs[i], x.sub[i]));
            return tuple_e(std::move(entries));
        }
        case TermKind::WrZ:
        case TermKind::WrZm: {
            const auto m = static_cast<std::size_t>(t.m());
            if (x.kind != ElemKind::Wr || x.sub.size() != m) shape_fail("wreath");
            /* (alpha, a)^-1 = (beta, -a) with beta(i) = alpha(i - a)^-1 */
            std::vector<Element> table;
            table.reserve(m);
            for (std::size_t i = 0; i < m; ++i) {
                std::size_t j = static_cast<std::size_t>(
                    mod_floor(static_cast<long long>(i) - x.n, t.m()));
                table.push_back(inverse(*t.base(), x.sub[j]));
            }
            long long shift = -x.n;
            if (t.kind() == TermKind::WrZm) shift = mod_floor(shift, t.m());
            return wr_e(std::move(table), shift);
        }
    }
    throw std::logic_error("unreachable term kind");
}

namespace {

struct Part {
    TermPtr term;  // already canonical
    Element elem;
};

/* Mirror of the Prod branch of normalize: flatten canonical Prod parts,
 * drop Unit parts, then apply the same stable sort permutation. */
Element pack_product(std::vector<Part> parts) {
    std::vector<Part> flat;
    for (auto& p : parts) {
        if (p.term->kind() == TermKind::Unit) continue;
        if (p.term->kind() == TermKind::Prod) {
            const auto& fs = p.term->factors();
            for (std::size_t j = 0; j < fs.size(); ++j)
                flat.push_back(Part{fs[j], std::move(p.elem.sub[j])});
        } else {
            flat.push_back(std::move(p));
        }
    }
    if (flat.empty()) return unit_e();
    if (flat.size() == 1) return std::move(flat.front().elem);
    std::vector<std::string> keys;
    keys.reserve(flat.size());
    for (const auto& p : flat) keys.push_back(print_term(*p.term));
    std::vector<Element> entries;
    entries.reserve(flat.size());
    for (std::size_t i : sorted_perm(keys)) entries.push_back(std::move(flat[i].elem));
    return tuple_e(std::move(entries));
}

}  // namespace

Element transport(const Term& t, const Element& x) {
    switch (t.kind()) {
        case TermKind::Unit:
        case TermKind::Z:
            return x;
        case TermKind::Cyc:
            return t.m() == 1 ? unit_e() : x;
        case TermKind::Prod: {
            const auto& fs = t.factors();
            if (x.kind != ElemKind::Tuple || x.sub.size() != fs.size())
                shape_fail("tuple");
            std::vector<Part> parts;
            parts.reserve(fs.size());
            for (std::size_t i = 0; i < fs.size(); ++i)
                parts.push_back(Part{normalize(fs[i]), transport(*fs[i], x.sub[i])});
            return pack_product(std::move(parts));
        }
        case TermKind::WrZ: {
            const auto m = static_cast<std::size_t>(t.m());
            if (x.kind != ElemKind::Wr || x.sub.size() != m) shape_fail("wreath");
            TermPtr b = normalize(t.base());
            if (b->kind() == TermKind::Unit) return int_e(x.n);
            if (t.m() == 1) {
                /* WrZ(A, 1) = A x Z:  ([a]; n) -> <a, n>, then product rules */
                std::vector<Part> parts;
                parts.push_back(Part{b, transport(*t.base(), x.sub[0])});
                parts.push_back(Part{z(), int_e(x.n)});
                return pack_product(std::move(parts));
            }
            std::vector<Element> table;
            table.reserve(m);
            for (const auto& entry : x.sub)
                table.push_back(transport(*t.base(), entry));
            return wr_e(std::move(table), x.n);
        }
        case TermKind::WrZm: {
            const auto m = static_cast<std::size_t>(t.m());
            if (x.kind != ElemKind::Wr || x.sub.size() != m) shape_fail("wreath");
            TermPtr b = normalize(t.base());
            if (b->kind() == TermKind::Unit)
                return t.m() == 1 ? unit_e() : mod_e(x.n, t.m());
            if (t.m() == 1) return transport(*t.base(), x.sub[0]);
            std::vector<Element> table;
            table.reserve(m);
            for (const auto& entry : x.sub)
                table.push_back(transport(*t.base(), entry));
            return wr_e(std::move(table), x.n);
        }
    }
    throw std::logic_error("unreachable term kind");
}

namespace {

/* Levelwise q before normalization; stays in step with graph_image_raw. */
Element raw_q(const Term& t, const Element& x) {
    switch (t.kind()) {
        case TermKind::Unit:
            return unit_e();
        case TermKind::Z:
            if (x.kind != ElemKind::Int) shape_fail("Z");
            return unit_e();
        case TermKind::Prod: {
            const auto& fs = t.factors();
            if (x.kind != ElemKind::Tuple || x.sub.size() != fs.size())
                shape_fail("tuple");
            std::vector<Element> entries;
            entries.reserve(fs.size());
            for (std::size_t i = 0; i < fs.size(); ++i)
                entries.push_back(raw_q(*fs[i], x.sub[i]));
            return tuple_e(std::move(entries));
        }
        case TermKind::WrZ: {
            const auto m = static_cast<std::size_t>(t.m());
            if (x.kind != ElemKind::Wr || x.sub.size() != m) shape_fail("wreath");
            std::vector<Element> table;
            table.reserve(m);
            for (const auto& entry : x.sub) table.push_back(raw_q(*t.base(), entry));
            return wr_e(std::move(table), mod_floor(x.n, t.m()));
        }
        default:
            throw std::domain_error("full_q requires a class-P term");
    }
}

}  // namespace

Element full_q(const Term& t, const Element& x) {
    if (!is_in_p(t)) throw std::domain_error("full_q requires a class-P term");
    TermPtr img = graph_image_raw(t);
    return transport(*img, raw_q(t, x));
}

namespace {

std::vector<Element> enum_rec(const Term& t) {
    switch (t.kind()) {
        case TermKind::Unit:
            return {unit_e()};
        case TermKind::Cyc: {
            std::vector<Element> out;
            out.reserve(static_cast<std::size_t>(t.m()));
            for (int k = 0; k < t.m(); ++k) out.push_back(mod_e(k, t.m()));
            return out;
        }
        case TermKind::Prod: {
            std::vector<Element> acc{tuple_e({})};
            for (const auto& f : t.factors()) {
                std::vector<Element> part = enum_rec(*f);
                std::vector<Element> next;
                next.reserve(acc.size() * part.size());
                for (const auto& a : acc)
                    for (const auto& p : part) {
                        Element e = a;
                        e.sub.push_back(p);
                        next.push_back(std::move(e));
                    }
                acc = std::move(next);
            }
            return acc;
        }
        case TermKind::WrZm: {
            std::vector<Element> part = enum_rec(*t.base());
            const auto m = static_cast<std::size_t>(t.m());
            std::vector<std::vector<Element>> tables{{}};
            for (std::size_t slot = 0; slot < m; ++slot) {
                std::vector<std::vector<Element>> next;
                next.reserve(tables.size() * part.size());
                for (const auto& tab : tables)
                    for (const auto& p : part) {
                        auto grown = tab;
                        grown.push_back(p);
                        next.push_back(std::move(grown));
                    }
                tables = std::move(next);
            }
            std::vector<Element> out;
            out.reserve(tables.size() * m);
            for (const auto& tab : tables)
                for (int s = 0; s < t.m(); ++s) out.push_back(wr_e(tab, s));
            return out;
        }
        default:
            throw std::domain_error("enumerate requires a finite term");
    }
}

}  // namespace

std::vector<Element> enumerate_elements(const Term& t, std::size_t bound) {
    auto o = order_r(t);
    if (!o) throw std::domain_error("enumerate requires a finite term");
    if (*o > bound)
        throw std::domain_error("order " + std::to_string(*o) +
                                " exceeds enumeration bound " + std::to_string(bound));
    return enum_rec(t);
}

namespace {

/* Right-multiplication closure from the identity; in a finite group this is
 * exactly the subgroup generated by gens. */
std::vector<Element> bfs_closure(const Term& t, const std::vector<Element>& gens) {
    std::set<Element> seen;
    std::vector<Element> out{identity(t)};
    seen.insert(out.front());
    for (std::size_t i = 0; i < out.size(); ++i) {
        for (const auto& g : gens) {
            Element v = multiply(t, out[i], g);
            if (seen.insert(v).second) out.push_back(std::move(v));
        }
    }
    return out;
}

std::vector<Element> small_generating_set(const Term& t,
                                          const std::vector<Element>& elems) {
    std::vector<Element> gens;
    std::set<Element> have{identity(t)};
    for (const auto& x : elems) {
        if (have.count(x)) continue;
        gens.push_back(x);
        auto closed = bfs_closure(t, gens);
        have = std::set<Element>(closed.begin(), closed.end());
        if (have.size() == elems.size()) break;
    }
    return gens;
}

}  // namespace

std::vector<std::uint64_t> derived_series(const Term& t, std::size_t bound) {
    std::vector<Element> elems = enumerate_elements(t, bound);
    std::vector<std::uint64_t> orders{elems.size()};
    std::vector<Element> gens = small_generating_set(t, elems);
    const Element id = identity(t);

    while (orders.back() > 1) {
        /* the derived subgroup is the normal closure of the commutators of
         * any generating set */
        std::set<Element> gen_set;
        for (const auto& a : gens)
            for (const auto& b : gens) {
                Element c = multiply(
                    t, multiply(t, inverse(t, a), inverse(t, b)), multiply(t, a, b));
                if (c != id) gen_set.insert(std::move(c));
            }
        std::vector<Element> sub_gens(gen_set.begin(), gen_set.end());
        std::vector<Element> sub =
            sub_gens.empty() ? std::vector<Element>{id} : bfs_closure(t, sub_gens);
        for (bool grew = true; grew;) {
            grew = false;
            std::set<Element> member(sub.begin(), sub.end());
            for (const auto& h : sub) {
                for (const auto& g : gens) {
                    Element c = multiply(t, multiply(t, inverse(t, g), h), g);
                    if (!member.count(c)) {
                        sub_gens.push_back(std::move(c));
                        grew = true;
                    }
                }
                if (grew) break;
            }
            if (grew) sub = bfs_closure(t, sub_gens);
        }

        std::uint64_t n = sub.size();
        bool stalled = n == orders.back();
        orders.push_back(n);
        if (stalled || n == 1) break;  // stall is impossible for solvable input
        gens = small_generating_set(t, sub);
        if (orders.size() > 64) throw std::logic_error("derived series does not settle");
    }
    return orders;
}

}  // namespace morbit
