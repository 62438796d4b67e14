#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "morbit/element.hpp"
#include "morbit/engine.hpp"
#include "morbit/kr.hpp"
#include "morbit/model_json.hpp"
#include "morbit/sampling.hpp"
#include "morbit/selfcheck.hpp"
#include "morbit/term.hpp"
#include "morbit/text.hpp"

namespace {

using nlohmann::ordered_json;

void diag_line(const morbit::Diagnostic& d) {
    ordered_json j;
    j["severity"] = d.severity == morbit::Diagnostic::Severity::Error ? "error" : "warning";
    j["path"] = d.path;
    j["message"] = d.message;
    std::cerr << j.dump() << '\n';
}

void error_line(const std::string& message) {
    ordered_json j;
    j["severity"] = "error";
    j["message"] = message;
    std::cerr << j.dump() << '\n';
}

void parse_error_line(const std::string& message, std::size_t offset) {
    ordered_json j;
    j["severity"] = "error";
    j["message"] = message;
    j["offset"] = offset;
    std::cerr << j.dump() << '\n';
}

std::string order_string(const std::optional<std::uint64_t>& o) {
    return o ? std::to_string(*o) : std::string("infinite");
}

int cmd_compute(const std::string& path) {
    morbit::SurfaceModel model = morbit::read_model_file(path);
    ordered_json j;
    j["pi1"] = morbit::print_term(morbit::compute_model(model));
    j["graph_group"] = morbit::print_term(morbit::graph_group(model));
    std::cout << j.dump() << '\n';
    return 0;
}

int cmd_validate(const std::string& path) {
    morbit::SurfaceModel model = morbit::read_model_file(path);
    auto diags = morbit::validate(model);
    std::size_t errors = 0, warnings = 0;
    for (const auto& d : diags) {
        diag_line(d);
        (d.severity == morbit::Diagnostic::Severity::Error ? errors : warnings)++;
    }
    ordered_json j;
    j["errors"] = errors;
    j["warnings"] = warnings;
    std::cout << j.dump() << '\n';
    return errors == 0 ? 0 : 1;
}

int cmd_kr(const std::string& path, const std::string& dot_path) {
    morbit::SurfaceModel model = morbit::read_model_file(path);
    auto diags = morbit::validate(model);
    if (morbit::has_errors(diags)) {
        for (const auto& d : diags) diag_line(d);
        return 1;
    }
    ordered_json out;
    out["pieces"] = ordered_json::array();
    std::string dot;
    for (std::size_t i = 0; i < model.pieces.size(); ++i) {
        morbit::KRGraph g = morbit::build_kr(model.pieces[i]);
        ordered_json pj;
        pj["piece"] = i;
        pj["vertices"] = g.verts.size();
        try {
            pj["aut"] = morbit::aut_count_rooted(g);
        } catch (const std::exception&) {
            pj["aut"] = nullptr;  // beyond the 64-vertex counting limit
        }
        out["pieces"].push_back(std::move(pj));
        dot += morbit::to_dot(g, "piece" + std::to_string(i),
                              "p" + std::to_string(i) + "_v");
    }
    if (!dot_path.empty()) {
        std::ofstream f(dot_path);
        if (!f) throw std::runtime_error("cannot write " + dot_path);
        f << dot;
    }
    std::cout << out.dump() << '\n';
    return 0;
}

int cmd_realize(const std::string& term_text, int genus, int boundary,
                const std::string& target, const std::string& out_path) {
    morbit::TermPtr t = morbit::parse_term(term_text);
    morbit::Target tgt;
    if (target == "R")
        tgt = morbit::Target::Real;
    else if (target == "S1")
        tgt = morbit::Target::Circle;
    else
        throw std::domain_error("target must be R or S1");
    morbit::SurfaceModel model = morbit::realize_surface(t, genus, boundary, tgt);
    if (!morbit::struct_eq(morbit::compute_model(model), t))
        throw std::logic_error("realize round trip failed");  // unreachable
    morbit::write_model_file(model, out_path);
    ordered_json j;
    j["written"] = out_path;
    j["pieces"] = model.pieces.size();
    j["pi1"] = morbit::print_term(morbit::normalize(t));
    std::cout << j.dump() << '\n';
    return 0;
}

int cmd_report(const std::string& path) {
    morbit::SurfaceModel model = morbit::read_model_file(path);
    morbit::Report r = morbit::make_report(model);
    ordered_json j;
    j["pi1"] = morbit::print_term(r.pi1);
    j["graph_group"] = morbit::print_term(r.graph_grp);
    j["graph_order"] = r.graph_order;
    j["solvable_bound"] = r.solvable_bound;
    if (r.generic)
        j["generic_rank"] = *r.generic;
    else
        j["generic_rank"] = nullptr;
    j["notes"] = r.notes;
    std::cout << j.dump() << '\n';
    return 0;
}

int cmd_roundtrip(int count, int depth, std::uint64_t seed) {
    morbit::Rng rng(seed);
    int passed = 0;
    for (int i = 0; i < count; ++i) {
        morbit::TermPtr t = morbit::random_p_term(rng, depth, 5, 12);
        morbit::Piece p = morbit::realize_disk(t);
        const bool ok = !morbit::has_errors(morbit::validate_piece(p)) &&
                        morbit::struct_eq(morbit::compute_piece(p), t);
        if (ok)
            ++passed;
        else
            error_line("round trip failed for " + morbit::print_term(t));
    }
    ordered_json j;
    j["count"] = count;
    j["passed"] = passed;
    j["failed"] = count - passed;
    std::cout << j.dump() << '\n';
    return passed == count ? 0 : 1;
}

int cmd_selftest(std::uint64_t seed, const std::string& self_path) {
    auto results = morbit::run_acceptance_suite(seed, self_path);
    bool all = true;
    for (const auto& r : results) {
        ordered_json j;
        j["check"] = r.name;
        j["pass"] = r.pass;
        j["detail"] = r.detail;
        std::cout << j.dump() << '\n';
        all = all && r.pass;
    }
    return all ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"wreath-product terms and orbit invariants of Morse maps on surfaces"};
    app.require_subcommand(1);

    std::string model_path, term_text, term_text2, elem_text, elem_text2;
    std::string dot_path, out_path, target = "R";
    int genus = 0, boundary = 1;
    int count = 100, depth = 4;
    std::uint64_t seed = 1;

    auto* compute = app.add_subcommand("compute", "pi_1 and graph group of a model file");
    compute->add_option("model", model_path, "model JSON file")->required();

    auto* realize = app.add_subcommand("realize", "build a Morse model realizing a class-P term");
    realize->add_option("--term", term_text, "class-P term")->required();
    realize->add_option("--genus", genus, "surface genus")->required();
    realize->add_option("--boundary", boundary, "number of boundary circles")->required();
    realize->add_option("--target", target, "R or S1");
    realize->add_option("-o,--output", out_path, "output model file")->required();

    auto* normalize_cmd = app.add_subcommand("normalize", "canonical form of a term");
    normalize_cmd->add_option("term", term_text, "term")->required();

    auto* eq = app.add_subcommand("eq", "structural equality after normalization");
    eq->add_option("term1", term_text, "first term")->required();
    eq->add_option("term2", term_text2, "second term")->required();

    auto* order = app.add_subcommand("order", "group order of a term");
    order->add_option("term", term_text, "term")->required();

    auto* solvable = app.add_subcommand("solvable", "derived length bound of a term");
    solvable->add_option("term", term_text, "term")->required();

    auto* qcmd = app.add_subcommand("q", "levelwise quotient of a class-P term");
    qcmd->add_option("term", term_text, "class-P term")->required();

    auto* kr = app.add_subcommand("kr", "Kronrod-Reeb trees and automorphism counts");
    kr->add_option("model", model_path, "model JSON file")->required();
    kr->add_option("--dot", dot_path, "write DOT output here");

    auto* validate_cmd = app.add_subcommand("validate", "model diagnostics");
    validate_cmd->add_option("model", model_path, "model JSON file")->required();

    auto* roundtrip = app.add_subcommand("roundtrip", "randomized realize/compute round trips");
    roundtrip->add_option("--count", count, "number of terms");
    roundtrip->add_option("--depth", depth, "term depth bound");
    roundtrip->add_option("--seed", seed, "random seed");

    auto* selftest = app.add_subcommand("selftest", "run the full acceptance checks");
    selftest->add_option("--seed", seed, "random seed");

    auto* report = app.add_subcommand("report", "full report for a model file");
    report->add_option("model", model_path, "model JSON file")->required();

    auto* mul = app.add_subcommand("mul", "multiply two elements over a term");
    mul->add_option("term", term_text, "term")->required();
    mul->add_option("x", elem_text, "left element")->required();
    mul->add_option("y", elem_text2, "right element")->required();

    auto* inv = app.add_subcommand("inv", "invert an element over a term");
    inv->add_option("term", term_text, "term")->required();
    inv->add_option("x", elem_text, "element")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (compute->parsed()) return cmd_compute(model_path);
        if (realize->parsed())
            return cmd_realize(term_text, genus, boundary, target, out_path);
        if (normalize_cmd->parsed()) {
            std::cout << morbit::print_term(morbit::normalize(morbit::parse_term(term_text)))
                      << '\n';
            return 0;
        }
        if (eq->parsed()) {
            const bool same = morbit::struct_eq(morbit::parse_term(term_text),
                                                morbit::parse_term(term_text2));
            std::cout << (same ? "true" : "false") << '\n';
            return 0;
        }
        if (order->parsed()) {
            std::cout << order_string(morbit::order_r(*morbit::parse_term(term_text)))
                      << '\n';
            return 0;
        }
        if (solvable->parsed()) {
            std::cout << morbit::solvable_length_bound(*morbit::parse_term(term_text))
                      << '\n';
            return 0;
        }
        if (qcmd->parsed()) {
            std::cout << morbit::print_term(morbit::graph_image(morbit::parse_term(term_text)))
                      << '\n';
            return 0;
        }
        if (kr->parsed()) return cmd_kr(model_path, dot_path);
        if (validate_cmd->parsed()) return cmd_validate(model_path);
        if (roundtrip->parsed()) return cmd_roundtrip(count, depth, seed);
        if (selftest->parsed()) return cmd_selftest(seed, argv[0]);
        if (report->parsed()) return cmd_report(model_path);
        if (mul->parsed()) {
            morbit::TermPtr t = morbit::parse_term(term_text);
            morbit::Element x = morbit::parse_element(*t, elem_text);
            morbit::Element y = morbit::parse_element(*t, elem_text2);
            std::cout << morbit::print_element(morbit::multiply(*t, x, y)) << '\n';
            return 0;
        }
        if (inv->parsed()) {
            morbit::TermPtr t = morbit::parse_term(term_text);
            morbit::Element x = morbit::parse_element(*t, elem_text);
            std::cout << morbit::print_element(morbit::inverse(*t, x)) << '\n';
            return 0;
        }
    } catch (const morbit::ParseError& e) {
        parse_error_line(e.what(), e.offset());
        return 2;
    } catch (const nlohmann::json::parse_error& e) {
        parse_error_line(e.what(), e.byte);
        return 2;
    } catch (const morbit::SchemaError& e) {
        parse_error_line(e.what(), 0);
        return 2;
    } catch (const std::exception& e) {
        error_line(e.what());
        return 1;
    }
    return 0;
}
