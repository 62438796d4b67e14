#include "morbit/selfcheck.hpp"

#include <chrono>
#include <cstdio>
#include <set>
#include <sstream>

#include <sys/wait.h>

#include "morbit/element.hpp"
#include "morbit/engine.hpp"
#include "morbit/kr.hpp"
#include "morbit/sampling.hpp"
#include "morbit/term.hpp"
#include "morbit/text.hpp"

namespace morbit {

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;

    void fail(const std::string& why) {
        if (pass) detail = why;
        pass = false;
    }
};

/* ---- 1. wreath law, exhaustively on two small groups ---- */

bool axioms_exhaustive(const TermPtr& t, Outcome& out) {
    const auto elems = enumerate_elements(*t);
    const Element id = identity(*t);
    for (const auto& x : elems) {
        if (multiply(*t, x, id) != x || multiply(*t, id, x) != x) {
            out.fail("identity law failed over " + print_term(t));
            return false;
        }
        const Element xi = inverse(*t, x);
        if (multiply(*t, x, xi) != id || multiply(*t, xi, x) != id) {
            out.fail("inverse law failed over " + print_term(t));
            return false;
        }
    }
    for (const auto& x : elems)
        for (const auto& y : elems)
            for (const auto& w : elems)
                if (multiply(*t, multiply(*t, x, y), w) !=
                    multiply(*t, x, multiply(*t, y, w))) {
                    out.fail("associativity failed over " + print_term(t));
                    return false;
                }
    return true;
}

Outcome check_wreath_law() {
    Outcome out;
    std::size_t triples = 0;
    for (const TermPtr& t : {wr_zm(cyc(3), 2), wr_zm(cyc(2), 3)}) {
        const auto order = order_r(*t).value();
        if (!axioms_exhaustive(t, out)) return out;
        triples += static_cast<std::size_t>(order * order * order);
    }
    out.detail = "2 groups (orders 18, 24), " + std::to_string(triples) + " triples";
    return out;
}

/* ---- 2. order formula vs enumeration ---- */

Outcome check_order_formula(std::uint64_t seed) {
    Outcome out;
    Rng rng(seed + 2);
    for (int i = 0; i < 50; ++i) {
        TermPtr t = random_finite_r_term(rng, 2000);
        const auto want = order_r(*t).value();
        const auto elems = enumerate_elements(*t, 2000);
        std::set<Element> distinct(elems.begin(), elems.end());
        if (elems.size() != want || distinct.size() != want) {
            out.fail("enumeration of " + print_term(t) + " gave " +
                      std::to_string(elems.size()) + " (" +
                      std::to_string(distinct.size()) + " distinct), expected " +
                      std::to_string(want));
            return out;
        }
    }
    out.detail = "50 terms of order <= 2000";
    return out;
}

/* ---- 3. q is a surjective homomorphism onto every small target ---- */

std::vector<Element> q_section(const Term& t) {
    switch (t.kind()) {
        case TermKind::Unit:
            return {unit_e()};
        case TermKind::Z:
            return {int_e(0)};
        case TermKind::Prod: {
            std::vector<Element> acc{tuple_e({})};
            for (const auto& f : t.factors()) {
                auto part = q_section(*f);
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
        case TermKind::WrZ: {
            auto part = q_section(*t.base());
            std::vector<std::vector<Element>> tables{{}};
            for (int slot = 0; slot < t.m(); ++slot) {
                std::vector<std::vector<Element>> next;
                for (const auto& tab : tables)
                    for (const auto& p : part) {
                        auto grown = tab;
                        grown.push_back(p);
                        next.push_back(std::move(grown));
                    }
                tables = std::move(next);
            }
            std::vector<Element> outv;
            for (const auto& tab : tables)
                for (int s = 0; s < t.m(); ++s) outv.push_back(wr_e(tab, s));
            return outv;
        }
        default:
            throw std::domain_error("q section needs a class-P term");
    }
}

Outcome check_q_quotient(std::uint64_t seed) {
    Outcome out;
    std::vector<TermPtr> cases = {
        z(),
        wr_z(unit(), 3),
        wr_z(z(), 2),
        wr_z(wr_z(z(), 2), 3),
        prod({wr_z(z(), 2), wr_z(unit(), 4)}),
        prod({z(), z()}),
    };
    Rng rng(seed + 3);
    for (int tries = 0; tries < 200 && cases.size() < 36; ++tries) {
        TermPtr t = random_p_term(rng, 3, 4, 8);
        if (order_r(*graph_image(t)).value() <= 200) cases.push_back(t);
    }

    int covered = 0;
    for (const auto& t : cases) {
        TermPtr target = graph_image(t);
        const auto target_order = order_r(*target).value();
        if (target_order > 200) continue;
        ++covered;

        const auto section = q_section(*t);
        if (section.size() != target_order) {
            out.fail("section over " + print_term(t) + " has " +
                      std::to_string(section.size()) + " elements, target order " +
                      std::to_string(target_order));
            return out;
        }
        std::set<Element> image;
        std::vector<Element> mapped;
        mapped.reserve(section.size());
        for (const auto& x : section) {
            Element qx = full_q(*t, x);
            check_shape(*target, qx);
            image.insert(qx);
            mapped.push_back(std::move(qx));
        }
        if (image.size() != target_order) {
            out.fail("q image over " + print_term(t) + " covers " +
                      std::to_string(image.size()) + " of " +
                      std::to_string(target_order));
            return out;
        }
        for (std::size_t i = 0; i < section.size(); ++i)
            for (std::size_t j = 0; j < section.size(); ++j) {
                Element lhs = full_q(*t, multiply(*t, section[i], section[j]));
                Element rhs = multiply(*target, mapped[i], mapped[j]);
                if (lhs != rhs) {
                    out.fail("q is not a homomorphism over " + print_term(t));
                    return out;
                }
            }
    }
    out.detail = std::to_string(covered) + " cases with target order <= 200";
    return out;
}

/* ---- 4. solvability: derived series within the structural bound ---- */

Outcome check_solvability(std::uint64_t seed) {
    Outcome out;
    std::vector<TermPtr> cases = {unit(), cyc(6), wr_zm(cyc(2), 3),
                                  wr_zm(wr_zm(cyc(2), 2), 2)};
    Rng rng(seed + 4);
    for (int i = 0; i < 50; ++i) cases.push_back(random_finite_r_term(rng, 2000));

    for (const auto& t : cases) {
        const auto series = derived_series(*t, 2000);
        if (series.front() != order_r(*t).value() || series.back() != 1) {
            out.fail("derived series of " + print_term(t) + " does not reach 1");
            return out;
        }
        for (std::size_t i = 1; i < series.size(); ++i)
            if (series[i] >= series[i - 1]) {
                out.fail("derived series of " + print_term(t) +
                          " is not strictly decreasing");
                return out;
            }
        const int length = static_cast<int>(series.size()) - 1;
        if (length > solvable_length_bound(*t)) {
            out.fail("derived length " + std::to_string(length) + " of " +
                      print_term(t) + " exceeds the bound " +
                      std::to_string(solvable_length_bound(*t)));
            return out;
        }
    }
    out.detail = std::to_string(cases.size()) + " terms of order <= 2000";
    return out;
}

/* ---- 5. realize / compute round trip ---- */

bool only_nondeg_leaves(const Subtree& st) {
    if (const auto* leaf = std::get_if<LeafKind>(&st))
        return *leaf == LeafKind::NondegExtreme;
    const NodePtr& node = std::get<NodePtr>(st);
    for (const auto& c : node->invariant)
        if (!only_nondeg_leaves(c)) return false;
    for (const auto& c : node->orbits)
        if (!only_nondeg_leaves(c)) return false;
    return true;
}

Outcome check_round_trip(std::uint64_t seed) {
    Outcome out;
    Rng rng(seed + 5);
    for (int i = 0; i < 200; ++i) {
        TermPtr t = random_p_term(rng, 4, 5, 12);
        Piece p = realize_disk(t);
        const auto diags = validate_piece(p);
        if (has_errors(diags)) {
            out.fail("realize(" + print_term(t) + ") fails validation");
            return out;
        }
        if (!diags.empty()) {
            out.fail("realize(" + print_term(t) + ") is not diagnostic-clean");
            return out;
        }
        if (!only_nondeg_leaves(p.root)) {
            out.fail("realize(" + print_term(t) + ") emitted a non-Morse leaf");
            return out;
        }
        if (euler_char(p) != 1) {
            out.fail("realize(" + print_term(t) + ") has Euler characteristic " +
                      std::to_string(euler_char(p)));
            return out;
        }
        if (!struct_eq(compute_piece(p), t)) {
            out.fail("round trip of " + print_term(t) + " computed " +
                      print_term(compute_piece(p)));
            return out;
        }
    }
    out.detail = "200 canonical class-P terms, depth <= 4, m <= 5, <= 12 atoms";
    return out;
}

/* ---- 6. m = 1 wreath collapses to a direct product, element level ---- */

Outcome check_m1_collapse(std::uint64_t seed) {
    Outcome out;
    Rng rng(seed + 6);
    for (const TermPtr& a : {z(), cyc(3), wr_zm(cyc(2), 2)}) {
        const TermPtr w = wr_z(a, 1);
        const TermPtr d = prod({a, z()});
        auto phi = [](const Element& x) {
            return tuple_e({x.sub[0], int_e(x.n)});
        };
        for (int i = 0; i < 1000; ++i) {
            Element x = random_element(rng, *w, 8);
            Element y = random_element(rng, *w, 8);
            if (phi(multiply(*w, x, y)) != multiply(*d, phi(x), phi(y))) {
                out.fail("collapse is not multiplicative over A = " + print_term(a));
                return out;
            }
            if (phi(inverse(*w, x)) != inverse(*d, phi(x))) {
                out.fail("collapse does not preserve inverses over A = " + print_term(a));
                return out;
            }
        }
    }
    out.detail = "3 bases x 1000 pairs";
    return out;
}

/* ---- 7. generic models give free abelian pi_1 of the counted rank ---- */

void count_generic(const Subtree& st, int& nodes, int& degens) {
    if (const auto* leaf = std::get_if<LeafKind>(&st)) {
        if (*leaf == LeafKind::DegenExtreme) ++degens;
        return;
    }
    const NodePtr& node = std::get<NodePtr>(st);
    ++nodes;
    for (const auto& c : node->invariant) count_generic(c, nodes, degens);
    for (const auto& c : node->orbits) count_generic(c, nodes, degens);
}

Outcome check_generic(std::uint64_t seed) {
    Outcome out;
    Rng rng(seed + 7);
    for (int i = 0; i < 100; ++i) {
        SurfaceModel model = random_generic_model(rng);
        int nodes = 0, degens = 0;
        for (const auto& piece : model.pieces) count_generic(piece.root, nodes, degens);
        const int k = nodes + degens;
        std::vector<TermPtr> zs(static_cast<std::size_t>(k), z());
        TermPtr expected = normalize(prod(std::move(zs)));
        TermPtr got = compute_model(model);
        if (!identical(*got, *expected)) {
            out.fail("generic model computed " + print_term(got) + ", expected Z^" +
                      std::to_string(k));
            return out;
        }
        if (generic_rank(model) != std::optional<int>(k)) {
            out.fail("generic_rank disagrees with the node/extreme count");
            return out;
        }
    }
    out.detail = "100 generic models";
    return out;
}

/* ---- 8. |graph group| divides the root-fixing automorphism count ---- */

Outcome check_lagrange(std::uint64_t seed) {
    Outcome out;
    Rng rng(seed + 8);
    for (int i = 0; i < 100; ++i) {
        Piece p = random_piece(rng, 64);
        const auto order = order_r(*graph_group_piece(p)).value();
        const auto aut = aut_count_rooted(build_kr(p));
        if (order == 0 || aut % order != 0) {
            out.fail("graph group order " + std::to_string(order) +
                      " does not divide automorphism count " + std::to_string(aut));
            return out;
        }
    }
    out.detail = "100 pieces with <= 64 KR vertices";
    return out;
}

/* ---- 9. the worked models ---- */

Piece symmetric_three_max_disk() {
    auto node = std::make_shared<Node>();
    node->saddles = 3;
    node->m = 3;
    node->invariant.push_back(LeafKind::NondegExtreme);
    node->orbits.push_back(LeafKind::NondegExtreme);
    return Piece{PieceKind::Disk, NodePtr(std::move(node))};
}

Piece two_maxima_disk() {
    auto node = std::make_shared<Node>();
    node->saddles = 1;
    node->m = 1;
    node->invariant.push_back(LeafKind::NondegExtreme);
    node->invariant.push_back(LeafKind::NondegExtreme);
    return Piece{PieceKind::Disk, NodePtr(std::move(node))};
}

Outcome check_worked_models(std::uint64_t) {
    Outcome out;
    struct Case {
        const char* name;
        Piece piece;
        const char* pi1;
        const char* gg;
    };
    const Case cases[] = {
        {"three-max rotation", symmetric_three_max_disk(), "Z", "Z_3"},
        {"two maxima", two_maxima_disk(), "Z", "1"},
        {"single nondegenerate extreme", {PieceKind::Disk, LeafKind::NondegExtreme}, "1", "1"},
        {"degenerate extreme", {PieceKind::Disk, LeafKind::DegenExtreme}, "Z", "1"},
    };
    for (const auto& c : cases) {
        const std::string pi1 = print_term(compute_piece(c.piece));
        const std::string gg = print_term(graph_group_piece(c.piece));
        if (pi1 != c.pi1 || gg != c.gg) {
            out.fail(std::string(c.name) + " computed (" + pi1 + ", " + gg +
                      "), expected (" + c.pi1 + ", " + c.gg + ")");
            return out;
        }
    }
    out.detail = "4 models";
    return out;
}

/* ---- 10. parser round trip and error offsets ---- */

int run_command(const std::string& cmd, std::string& output) {
    FILE* pipe = popen((cmd + " 2>&1").c_str(), "r");
    if (!pipe) return -1;
    char buf[512];
    output.clear();
    while (fgets(buf, sizeof buf, pipe)) output += buf;
    const int status = pclose(pipe);
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

Outcome check_parser(std::uint64_t seed, const std::string& cli_path) {
    Outcome out;
    Rng rng(seed + 10);
    for (int i = 0; i < 500; ++i) {
        TermPtr t = random_raw_term(rng, 5);
        TermPtr back = parse_term(print_term(t));
        if (!identical(*t, *back)) {
            out.fail("parse(print) changed " + print_term(t) + " into " +
                      print_term(back));
            return out;
        }
    }

    const char* malformed[] = {"",       "Z wr",  "Z wr[0] Z", "(Z",  "Z x",
                               "Z_0",    "2",     "Z wr[2] Z_3", "Z )", "1 1",
                               "wr[2] Z"};
    for (const char* bad : malformed) {
        try {
            parse_term(bad);
            out.fail(std::string("parser accepted \"") + bad + "\"");
            return out;
        } catch (const ParseError& e) {
            if (e.offset() > std::string(bad).size()) {
                out.fail(std::string("offset out of range for \"") + bad + "\"");
                return out;
            }
        }
    }

    if (!cli_path.empty()) {
        for (const char* bad : {"Z wr[0] Z", "(Z"}) {
            std::string output;
            const int code =
                run_command(cli_path + " normalize '" + bad + "'", output);
            if (code != 2 || output.find("\"offset\"") == std::string::npos) {
                out.fail(std::string("CLI on \"") + bad + "\" exited " +
                          std::to_string(code) + " without an offset diagnostic");
                return out;
            }
        }
        out.detail = "500 terms, 11 malformed inputs, CLI exit codes checked";
    } else {
        out.detail = "500 terms, 11 malformed inputs";
    }
    return out;
}

CheckResult timed(const std::string& name, Outcome (*fn)(std::uint64_t),
                  std::uint64_t seed, double budget_seconds) {
    const auto start = std::chrono::steady_clock::now();
    Outcome out = fn(seed);
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (out.pass && budget_seconds > 0 && secs >= budget_seconds) {
        out.pass = false;
        out.detail = "ran " + std::to_string(secs) + " s, budget " +
                     std::to_string(budget_seconds) + " s";
    }
    return CheckResult{name, out.pass, out.detail, secs};
}

}  // namespace

std::vector<CheckResult> run_acceptance_suite(std::uint64_t seed,
                                              const std::string& cli_path) {
    std::vector<CheckResult> results;
    results.push_back(timed(
        "wreath-law", [](std::uint64_t) { return check_wreath_law(); }, seed, 5.0));
    results.push_back(timed("order-formula", check_order_formula, seed, 0.0));
    results.push_back(timed("q-quotient", check_q_quotient, seed, 0.0));
    results.push_back(timed("solvability", check_solvability, seed, 60.0));
    results.push_back(timed("round-trip", check_round_trip, seed, 10.0));
    results.push_back(timed("m1-collapse", check_m1_collapse, seed, 0.0));
    results.push_back(timed("generic-rank", check_generic, seed, 0.0));
    results.push_back(timed("lagrange", check_lagrange, seed, 0.0));
    results.push_back(timed("worked-models", check_worked_models, seed, 0.0));
    {
        const auto start = std::chrono::steady_clock::now();
        Outcome out = check_parser(seed, cli_path);
        const double secs = std::chrono::duration<double>(
                                std::chrono::steady_clock::now() - start)
                                .count();
        results.push_back(CheckResult{"parser", out.pass, out.detail, secs});
    }
    return results;
}

}  // namespace morbit
