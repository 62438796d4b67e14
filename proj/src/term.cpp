#include "morbit/term.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "detail.hpp"

namespace morbit {

TermPtr Term::make(TermKind kind, int m, std::vector<TermPtr> sub) {
    switch (kind) {
        case TermKind::Unit:
        case TermKind::Z:
            if (!sub.empty())
                throw std::invalid_argument("atom term takes no subterms");
            break;
        case TermKind::Cyc:
            if (m < 1) throw std::invalid_argument("Cyc requires m >= 1");
            if (!sub.empty())
                throw std::invalid_argument("Cyc takes no subterms");
            break;
        case TermKind::Prod:
            if (sub.size() < 2)
                throw std::invalid_argument("Prod requires >= 2 factors");
            for (const auto& f : sub)
                if (!f) throw std::invalid_argument("null factor");
            break;
        case TermKind::WrZ:
        case TermKind::WrZm:
            if (m < 1) throw std::invalid_argument("wreath requires m >= 1");
            if (sub.size() != 1 || !sub.front())
                throw std::invalid_argument("wreath takes exactly one base");
            break;
    }
    return TermPtr(new Term(kind, m, std::move(sub)));
}

TermPtr unit() {
    static const TermPtr t = Term::make(TermKind::Unit, 0, {});
    return t;
}

TermPtr z() {
    static const TermPtr t = Term::make(TermKind::Z, 0, {});
    return t;
}

TermPtr cyc(int m) { return Term::make(TermKind::Cyc, m, {}); }

TermPtr prod(std::vector<TermPtr> factors) {
    if (factors.empty()) return unit();
    if (factors.size() == 1) return factors.front();
    return Term::make(TermKind::Prod, 0, std::move(factors));
}

TermPtr wr_z(TermPtr base, int m) {
    return Term::make(TermKind::WrZ, m, {std::move(base)});
}

TermPtr wr_zm(TermPtr base, int m) {
    return Term::make(TermKind::WrZm, m, {std::move(base)});
}

bool identical(const Term& a, const Term& b) {
    if (a.kind() != b.kind()) return false;
    switch (a.kind()) {
        case TermKind::Unit:
        case TermKind::Z:
            return true;
        case TermKind::Cyc:
            return a.m() == b.m();
        case TermKind::Prod: {
            const auto& fa = a.factors();
            const auto& fb = b.factors();
            if (fa.size() != fb.size()) return false;
            for (std::size_t i = 0; i < fa.size(); ++i)
                if (!identical(*fa[i], *fb[i])) return false;
            return true;
        }
        case TermKind::WrZ:
        case TermKind::WrZm:
            return a.m() == b.m() && identical(*a.base(), *b.base());
    }
    return false;
}

bool is_in_p(const Term& t) {
    switch (t.kind()) {
        case TermKind::Unit:
        case TermKind::Z:
            return true;
        case TermKind::Cyc:
        case TermKind::WrZm:
            return false;
        case TermKind::Prod:
            return std::all_of(t.factors().begin(), t.factors().end(),
                               [](const TermPtr& f) { return is_in_p(*f); });
        case TermKind::WrZ:
            return is_in_p(*t.base());
    }
    return false;
}

bool is_in_r(const Term& t) {
    switch (t.kind()) {
        case TermKind::Unit:
        case TermKind::Cyc:
            return true;
        case TermKind::Z:
        case TermKind::WrZ:
            return false;
        case TermKind::Prod:
            return std::all_of(t.factors().begin(), t.factors().end(),
                               [](const TermPtr& f) { return is_in_r(*f); });
        case TermKind::WrZm:
            return is_in_r(*t.base());
    }
    return false;
}

bool is_canonical(const Term& t) {
    switch (t.kind()) {
        case TermKind::Unit:
        case TermKind::Z:
            return true;
        case TermKind::Cyc:
            return t.m() >= 2;
        case TermKind::Prod: {
            std::string prev;
            for (const auto& f : t.factors()) {
                if (f->kind() == TermKind::Unit || f->kind() == TermKind::Prod)
                    return false;
                if (!is_canonical(*f)) return false;
                std::string key = print_term(*f);
                if (key < prev) return false;
                prev = std::move(key);
            }
            return true;
        }
        case TermKind::WrZ:
        case TermKind::WrZm:
            if (t.m() < 2 || t.base()->kind() == TermKind::Unit) return false;
            return is_canonical(*t.base());
    }
    return false;
}

/* Stable permutation sorting `keys`; shared with element transport so the
 * factor order of a normalized Prod and of its transported tuples agree. */
std::vector<std::size_t> sorted_perm(const std::vector<std::string>& keys) {
    std::vector<std::size_t> idx(keys.size());
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    std::stable_sort(idx.begin(), idx.end(), [&keys](std::size_t a, std::size_t b) {
        return keys[a] < keys[b];
    });
    return idx;
}

TermPtr normalize(const TermPtr& t) {
    switch (t->kind()) {
        case TermKind::Unit:
        case TermKind::Z:
            return t;
        case TermKind::Cyc:
            return t->m() == 1 ? unit() : t;
        case TermKind::Prod: {
            std::vector<TermPtr> out;
            for (const auto& f : t->factors()) {
                TermPtr nf = normalize(f);
                if (nf->kind() == TermKind::Unit) continue;
                if (nf->kind() == TermKind::Prod)
                    out.insert(out.end(), nf->factors().begin(), nf->factors().end());
                else
                    out.push_back(std::move(nf));
            }
            if (out.empty()) return unit();
            if (out.size() == 1) return out.front();
            std::vector<std::string> keys;
            keys.reserve(out.size());
            for (const auto& f : out) keys.push_back(print_term(*f));
            std::vector<TermPtr> sorted;
            sorted.reserve(out.size());
            for (std::size_t i : sorted_perm(keys)) sorted.push_back(out[i]);
            return Term::make(TermKind::Prod, 0, std::move(sorted));
        }
        case TermKind::WrZ: {
            TermPtr b = normalize(t->base());
            if (b->kind() == TermKind::Unit) return z();   // 1 wr[m] Z = Z
            if (t->m() == 1) return normalize(prod({b, z()}));  // A wr[1] Z = A x Z
            return wr_z(std::move(b), t->m());
        }
        case TermKind::WrZm: {
            TermPtr b = normalize(t->base());
            if (b->kind() == TermKind::Unit)
                return t->m() == 1 ? unit() : cyc(t->m());  // 1 wr Z_m = Z_m
            if (t->m() == 1) return b;                      // A wr Z_1 = A
            return wr_zm(std::move(b), t->m());
        }
    }
    throw std::logic_error("unreachable term kind");
}

bool struct_eq(const TermPtr& a, const TermPtr& b) {
    return identical(*normalize(a), *normalize(b));
}

namespace {

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
    std::uint64_t r;
    if (__builtin_mul_overflow(a, b, &r))
        throw std::overflow_error("group order exceeds 64 bits");
    return r;
}

std::uint64_t checked_pow(std::uint64_t a, int e) {
    std::uint64_t r = 1;
    for (int i = 0; i < e; ++i) r = checked_mul(r, a);
    return r;
}

}  // namespace

std::optional<std::uint64_t> order_r(const Term& t) {
    switch (t.kind()) {
        case TermKind::Unit:
            return 1;
        case TermKind::Cyc:
            return static_cast<std::uint64_t>(t.m());
        case TermKind::Z:
        case TermKind::WrZ:
            return std::nullopt;
        case TermKind::Prod: {
            std::uint64_t acc = 1;
            for (const auto& f : t.factors()) {
                auto o = order_r(*f);
                if (!o) return std::nullopt;
                acc = checked_mul(acc, *o);
            }
            return acc;
        }
        case TermKind::WrZm: {
            auto o = order_r(*t.base());
            if (!o) return std::nullopt;
            return checked_mul(checked_pow(*o, t.m()),
                               static_cast<std::uint64_t>(t.m()));
        }
    }
    return std::nullopt;
}

int solvable_length_bound(const Term& t) {
    switch (t.kind()) {
        case TermKind::Unit:
            return 0;
        case TermKind::Z:
        case TermKind::Cyc:
            return 1;
        case TermKind::Prod: {
            int best = 0;
            for (const auto& f : t.factors())
                best = std::max(best, solvable_length_bound(*f));
            return best;
        }
        case TermKind::WrZ:
        case TermKind::WrZm:
            return solvable_length_bound(*t.base()) + 1;
    }
    return 0;
}

namespace {

/* Structural image under the levelwise quotient q, before normalization.
 * Kept in step with raw_q on elements (element.cpp). */
TermPtr raw_image(const Term& t) {
    switch (t.kind()) {
        case TermKind::Unit:
            return unit();
        case TermKind::Z:
            return unit();
        case TermKind::Prod: {
            std::vector<TermPtr> out;
            out.reserve(t.factors().size());
            for (const auto& f : t.factors()) out.push_back(raw_image(*f));
            return Term::make(TermKind::Prod, 0, std::move(out));
        }
        case TermKind::WrZ:
            return wr_zm(raw_image(*t.base()), t.m());
        default:
            throw std::domain_error("graph_image requires a class-P term");
    }
}

}  // namespace

TermPtr graph_image_raw(const Term& t) { return raw_image(t); }

TermPtr graph_image(const TermPtr& t) {
    if (!is_in_p(*t)) throw std::domain_error("graph_image requires a class-P term");
    return normalize(raw_image(*t));
}

namespace {

void print_rec(const Term& t, std::string& out) {
    switch (t.kind()) {
        case TermKind::Unit:
            out += '1';
            return;
        case TermKind::Z:
            out += 'Z';
            return;
        case TermKind::Cyc:
            out += "Z_";
            out += std::to_string(t.m());
            return;
        case TermKind::Prod: {
            bool first = true;
            for (const auto& f : t.factors()) {
                if (!first) out += " x ";
                first = false;
                if (f->kind() == TermKind::Prod) {
                    out += '(';
                    print_rec(*f, out);
                    out += ')';
                } else {
                    print_rec(*f, out);
                }
            }
            return;
        }
        case TermKind::WrZ:
        case TermKind::WrZm: {
            const Term& b = *t.base();
            if (b.kind() == TermKind::Prod) {
                out += '(';
                print_rec(b, out);
                out += ')';
            } else {
                print_rec(b, out);
            }
            if (t.kind() == TermKind::WrZ) {
                out += " wr[";
                out += std::to_string(t.m());
                out += "] Z";
            } else {
                out += " wr Z_";
                out += std::to_string(t.m());
            }
            return;
        }
    }
}

}  // namespace

std::string print_term(const Term& t) {
    std::string out;
    print_rec(t, out);
    return out;
}

}  // namespace morbit
