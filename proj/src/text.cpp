#include "morbit/text.hpp"

#include <cctype>
#include <limits>

namespace morbit {

namespace {

/* Hand-rolled scanner/parser; every error carries the byte offset of the
 * offending input so the CLI can report it. */

struct Cursor {
    std::string_view s;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool eof() {
        skip_ws();
        return pos >= s.size();
    }
    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }
    bool eat(char c) {
        skip_ws();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    void expect(char c, const char* what) {
        if (!eat(c)) throw ParseError(std::string("expected ") + what, pos);
    }
};

long long scan_uint(Cursor& cur, const char* what) {
    cur.skip_ws();
    std::size_t start = cur.pos;
    if (start >= cur.s.size() || !std::isdigit(static_cast<unsigned char>(cur.s[start])))
        throw ParseError(std::string("expected ") + what, start);
    long long v = 0;
    while (cur.pos < cur.s.size() &&
           std::isdigit(static_cast<unsigned char>(cur.s[cur.pos]))) {
        v = v * 10 + (cur.s[cur.pos] - '0');
        if (v > std::numeric_limits<int>::max())
            throw ParseError("integer out of range", start);
        ++cur.pos;
    }
    return v;
}

int scan_m(Cursor& cur) {
    std::size_t start = cur.pos;
    cur.skip_ws();
    start = cur.pos;
    long long v = scan_uint(cur, "integer");
    if (v < 1) throw ParseError("m must be >= 1", start);
    return static_cast<int>(v);
}

TermPtr parse_term_expr(Cursor& cur);

/* primary := "1" | "Z" | "Z_" INT | "(" term ")" */
TermPtr parse_primary(Cursor& cur) {
    cur.skip_ws();
    std::size_t start = cur.pos;
    if (cur.eat('(')) {
        TermPtr t = parse_term_expr(cur);
        cur.expect(')', "')'");
        return t;
    }
    if (cur.pos < cur.s.size() && cur.s[cur.pos] == 'Z') {
        ++cur.pos;
        if (cur.pos < cur.s.size() && cur.s[cur.pos] == '_') {
            ++cur.pos;
            return cyc(scan_m(cur));
        }
        return z();
    }
    if (cur.pos < cur.s.size() &&
        std::isdigit(static_cast<unsigned char>(cur.s[cur.pos]))) {
        long long v = scan_uint(cur, "integer");
        if (v != 1) throw ParseError("only the trivial group literal 1 is allowed here", start);
        return unit();
    }
    throw ParseError("expected a term", start);
}

bool at_word(Cursor& cur, std::string_view w) {
    cur.skip_ws();
    return cur.s.substr(cur.pos, w.size()) == w;
}

/* factor := primary { "wr" "[" INT "]" "Z"  |  "wr" "Z_" INT } */
TermPtr parse_factor(Cursor& cur) {
    TermPtr t = parse_primary(cur);
    while (at_word(cur, "wr")) {
        cur.pos += 2;
        cur.skip_ws();
        if (cur.eat('[')) {
            int m = scan_m(cur);
            cur.expect(']', "']'");
            cur.skip_ws();
            std::size_t zpos = cur.pos;
            if (cur.pos >= cur.s.size() || cur.s[cur.pos] != 'Z')
                throw ParseError("expected Z after wr[m]", zpos);
            ++cur.pos;
            if (cur.pos < cur.s.size() && cur.s[cur.pos] == '_')
                throw ParseError("wr[m] applies to Z, not Z_k", cur.pos);
            t = wr_z(std::move(t), m);
        } else if (cur.pos < cur.s.size() && cur.s[cur.pos] == 'Z' &&
                   cur.pos + 1 < cur.s.size() && cur.s[cur.pos + 1] == '_') {
            cur.pos += 2;
            t = wr_zm(std::move(t), scan_m(cur));
        } else {
            throw ParseError("expected [m] Z or Z_m after wr", cur.pos);
        }
    }
    return t;
}

/* term := factor { "x" factor } */
TermPtr parse_term_expr(Cursor& cur) {
    std::vector<TermPtr> factors;
    factors.push_back(parse_factor(cur));
    while (true) {
        cur.skip_ws();
        if (cur.pos < cur.s.size() && cur.s[cur.pos] == 'x') {
            ++cur.pos;
            factors.push_back(parse_factor(cur));
        } else {
            break;
        }
    }
    return prod(std::move(factors));
}

}  // namespace

TermPtr parse_term(std::string_view text) {
    Cursor cur{text};
    TermPtr t = parse_term_expr(cur);
    if (!cur.eof()) throw ParseError("trailing input after term", cur.pos);
    return t;
}

namespace {

Element parse_elem_rec(const Term& t, Cursor& cur);

long long scan_int(Cursor& cur) {
    cur.skip_ws();
    std::size_t start = cur.pos;
    bool neg = false;
    if (cur.pos < cur.s.size() && cur.s[cur.pos] == '-') {
        neg = true;
        ++cur.pos;
    }
    if (cur.pos >= cur.s.size() ||
        !std::isdigit(static_cast<unsigned char>(cur.s[cur.pos])))
        throw ParseError("expected integer", cur.pos);
    long long v = 0;
    while (cur.pos < cur.s.size() &&
           std::isdigit(static_cast<unsigned char>(cur.s[cur.pos]))) {
        v = v * 10 + (cur.s[cur.pos] - '0');
        if (v > (std::numeric_limits<long long>::max() >> 8))
            throw ParseError("integer out of range", start);
        ++cur.pos;
    }
    return neg ? -v : v;
}

Element parse_elem_rec(const Term& t, Cursor& cur) {
    cur.skip_ws();
    std::size_t start = cur.pos;
    switch (t.kind()) {
        case TermKind::Unit:
            if (!cur.eat('u')) throw ParseError("expected u (unit entry)", start);
            return unit_e();
        case TermKind::Z:
            return int_e(scan_int(cur));
        case TermKind::Cyc:
            return mod_e(scan_int(cur), t.m());
        case TermKind::Prod: {
            cur.expect('<', "'<'");
            std::vector<Element> entries;
            const auto& fs = t.factors();
            for (std::size_t i = 0; i < fs.size(); ++i) {
                if (i > 0) cur.expect(',', "','");
                entries.push_back(parse_elem_rec(*fs[i], cur));
            }
            cur.expect('>', "'>'");
            return tuple_e(std::move(entries));
        }
        case TermKind::WrZ:
        case TermKind::WrZm: {
            cur.expect('(', "'('");
            cur.expect('[', "'['");
            std::vector<Element> table;
            for (int i = 0; i < t.m(); ++i) {
                if (i > 0) cur.expect(',', "','");
                table.push_back(parse_elem_rec(*t.base(), cur));
            }
            cur.expect(']', "']'");
            cur.expect(';', "';'");
            long long shift = scan_int(cur);
            cur.expect(')', "')'");
            if (t.kind() == TermKind::WrZm) shift = ((shift % t.m()) + t.m()) % t.m();
            return wr_e(std::move(table), shift);
        }
    }
    throw ParseError("unsupported term shape", start);
}

}  // namespace

Element parse_element(const Term& t, std::string_view text) {
    Cursor cur{text};
    Element e = parse_elem_rec(t, cur);
    if (!cur.eof()) throw ParseError("trailing input after element", cur.pos);
    return e;
}

std::string print_element(const Element& e) {
    switch (e.kind) {
        case ElemKind::Unit:
            return "u";
        case ElemKind::Int:
        case ElemKind::Mod:
            return std::to_string(e.n);
        case ElemKind::Tuple: {
            std::string out = "<";
            for (std::size_t i = 0; i < e.sub.size(); ++i) {
                if (i > 0) out += ',';
                out += print_element(e.sub[i]);
            }
            out += '>';
            return out;
        }
        case ElemKind::Wr: {
            std::string out = "([";
            for (std::size_t i = 0; i < e.sub.size(); ++i) {
                if (i > 0) out += ',';
                out += print_element(e.sub[i]);
            }
            out += "];";
            out += std::to_string(e.n);
            out += ')';
            return out;
        }
    }
    return {};
}

}  // namespace morbit
