#include "morbit/model_json.hpp"

#include <fstream>

namespace morbit {

using nlohmann::json;
using nlohmann::ordered_json;

namespace {

void reject_unknown_keys(const json& obj, std::initializer_list<const char*> known,
                         const std::string& path) {
    for (const auto& item : obj.items()) {
        bool ok = false;
        for (const char* k : known)
            if (item.key() == k) ok = true;
        if (!ok) throw SchemaError("unknown key \"" + item.key() + "\"", path);
    }
}

const json& require(const json& obj, const char* key, const std::string& path) {
    auto it = obj.find(key);
    if (it == obj.end()) throw SchemaError(std::string("missing key \"") + key + "\"", path);
    return *it;
}

int as_int(const json& v, const std::string& path) {
    if (!v.is_number_integer()) throw SchemaError("expected an integer", path);
    return v.get<int>();
}

Subtree subtree_from_json(const json& j, const std::string& path) {
    if (!j.is_object()) throw SchemaError("expected an object", path);
    if (j.contains("leaf")) {
        reject_unknown_keys(j, {"leaf"}, path);
        const json& v = j["leaf"];
        if (!v.is_string()) throw SchemaError("leaf kind must be a string", path + ".leaf");
        std::string s = v.get<std::string>();
        if (s == "nondeg") return LeafKind::NondegExtreme;
        if (s == "degen") return LeafKind::DegenExtreme;
        if (s == "collar") return LeafKind::RegularCollar;
        throw SchemaError("leaf kind must be nondeg, degen or collar", path + ".leaf");
    }
    if (j.contains("node")) {
        reject_unknown_keys(j, {"node"}, path);
        const json& n = j["node"];
        const std::string npath = path + ".node";
        if (!n.is_object()) throw SchemaError("expected an object", npath);
        reject_unknown_keys(n, {"saddles", "m", "chi", "invariant", "orbits"}, npath);
        auto node = std::make_shared<Node>();
        node->saddles = as_int(require(n, "saddles", npath), npath + ".saddles");
        node->m = as_int(require(n, "m", npath), npath + ".m");
        if (n.contains("chi")) node->chi = as_int(n["chi"], npath + ".chi");
        const json& inv = require(n, "invariant", npath);
        if (!inv.is_array()) throw SchemaError("expected an array", npath + ".invariant");
        for (std::size_t i = 0; i < inv.size(); ++i)
            node->invariant.push_back(
                subtree_from_json(inv[i], npath + ".invariant[" + std::to_string(i) + "]"));
        const json& orb = require(n, "orbits", npath);
        if (!orb.is_array()) throw SchemaError("expected an array", npath + ".orbits");
        for (std::size_t i = 0; i < orb.size(); ++i)
            node->orbits.push_back(
                subtree_from_json(orb[i], npath + ".orbits[" + std::to_string(i) + "]"));
        return NodePtr(std::move(node));
    }
    throw SchemaError("subtree needs a \"leaf\" or a \"node\" key", path);
}

ordered_json subtree_to_json(const Subtree& st) {
    if (const auto* leaf = std::get_if<LeafKind>(&st)) {
        const char* s = *leaf == LeafKind::NondegExtreme  ? "nondeg"
                        : *leaf == LeafKind::DegenExtreme ? "degen"
                                                          : "collar";
        return ordered_json{{"leaf", s}};
    }
    const NodePtr& node = std::get<NodePtr>(st);
    ordered_json n;
    n["saddles"] = node->saddles;
    n["m"] = node->m;
    if (node->chi) n["chi"] = *node->chi;
    n["invariant"] = ordered_json::array();
    for (const auto& c : node->invariant) n["invariant"].push_back(subtree_to_json(c));
    n["orbits"] = ordered_json::array();
    for (const auto& c : node->orbits) n["orbits"].push_back(subtree_to_json(c));
    return ordered_json{{"node", std::move(n)}};
}

}  // namespace

SurfaceModel model_from_json(const json& j) {
    if (!j.is_object()) throw SchemaError("expected an object", "$");
    reject_unknown_keys(j, {"surface", "pieces"}, "$");
    SurfaceModel model;

    const json& surf = require(j, "surface", "$");
    if (!surf.is_object()) throw SchemaError("expected an object", "surface");
    reject_unknown_keys(surf, {"genus", "boundary", "target"}, "surface");
    model.genus = as_int(require(surf, "genus", "surface"), "surface.genus");
    model.boundary = as_int(require(surf, "boundary", "surface"), "surface.boundary");
    const json& tgt = require(surf, "target", "surface");
    if (!tgt.is_string()) throw SchemaError("target must be \"R\" or \"S1\"", "surface.target");
    std::string ts = tgt.get<std::string>();
    if (ts == "R")
        model.target = Target::Real;
    else if (ts == "S1")
        model.target = Target::Circle;
    else
        throw SchemaError("target must be \"R\" or \"S1\"", "surface.target");

    const json& pieces = require(j, "pieces", "$");
    if (!pieces.is_array()) throw SchemaError("expected an array", "pieces");
    for (std::size_t i = 0; i < pieces.size(); ++i) {
        const std::string path = "pieces[" + std::to_string(i) + "]";
        const json& pj = pieces[i];
        if (!pj.is_object()) throw SchemaError("expected an object", path);
        reject_unknown_keys(pj, {"kind", "root"}, path);
        Piece piece;
        const json& kind = require(pj, "kind", path);
        if (!kind.is_string())
            throw SchemaError("kind must be \"disk\" or \"cylinder\"", path + ".kind");
        std::string ks = kind.get<std::string>();
        if (ks == "disk")
            piece.kind = PieceKind::Disk;
        else if (ks == "cylinder")
            piece.kind = PieceKind::Cylinder;
        else
            throw SchemaError("kind must be \"disk\" or \"cylinder\"", path + ".kind");
        piece.root = subtree_from_json(require(pj, "root", path), path + ".root");
        model.pieces.push_back(std::move(piece));
    }
    return model;
}

ordered_json model_to_json(const SurfaceModel& model) {
    ordered_json j;
    j["surface"] = {{"genus", model.genus},
                    {"boundary", model.boundary},
                    {"target", model.target == Target::Real ? "R" : "S1"}};
    j["pieces"] = ordered_json::array();
    for (const auto& piece : model.pieces) {
        ordered_json pj;
        pj["kind"] = piece.kind == PieceKind::Disk ? "disk" : "cylinder";
        pj["root"] = subtree_to_json(piece.root);
        j["pieces"].push_back(std::move(pj));
    }
    return j;
}

SurfaceModel read_model_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open model file: " + path);
    json j = json::parse(in);
    return model_from_json(j);
}

void write_model_file(const SurfaceModel& model, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write model file: " + path);
    out << model_to_json(model).dump(2) << '\n';
}

}  // namespace morbit
