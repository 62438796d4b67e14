#pragma once

#include <stdexcept>
#include <string>

#include <nlohmann/json.hpp>

#include "morbit/model.hpp"

namespace morbit {

/* Model file schema (UTF-8 JSON, unknown keys rejected):
 *
 *   {"surface": {"genus": int, "boundary": int, "target": "R"|"S1"},
 *    "pieces": [{"kind": "disk"|"cylinder", "root": SUBTREE}]}
 *
 *   SUBTREE = {"leaf": "nondeg"|"degen"|"collar"}
 *           | {"node": {"saddles": int, "m": int, "chi": int?,
 *                       "invariant": [SUBTREE], "orbits": [SUBTREE]}}
 */

class SchemaError : public std::runtime_error {
public:
    SchemaError(const std::string& message, std::string path)
        : std::runtime_error(message + " at " + path), path_(std::move(path)) {}
    const std::string& path() const { return path_; }

private:
    std::string path_;
};

SurfaceModel model_from_json(const nlohmann::json& j);
nlohmann::ordered_json model_to_json(const SurfaceModel& model);

/* Throws nlohmann::json::parse_error on malformed JSON and SchemaError on
 * schema violations. */
SurfaceModel read_model_file(const std::string& path);
void write_model_file(const SurfaceModel& model, const std::string& path);

}  // namespace morbit
