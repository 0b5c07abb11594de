#pragma once

#include <json.hpp>
#include <string>

#include "klr/crystal.hpp"
#include "klr/laurent.hpp"
#include "klr/module.hpp"
#include "klr/table.hpp"

namespace klr {

// Quiver file schema: {"vertices": ["1","2"], "arrows": [["1","2"], ...]}
Quiver quiver_from_json(const nlohmann::json& j);
Quiver load_quiver(const std::string& path);
nlohmann::json quiver_to_json(const Quiver& q);

// {"-2": 1, "0": 3}
nlohmann::json laurent_to_json(const LaurentPoly& p);
LaurentPoly laurent_from_json(const nlohmann::json& j);

nlohmann::json series_to_json(const TruncatedSeries& s);

nlohmann::json weight_to_json(const Weight& w);
Weight weight_from_json(const nlohmann::json& j);

nlohmann::json character_to_json(const Quiver& q, const Character& ch);

nlohmann::json rat_to_json(const Rat& r);
Rat rat_from_json(const nlohmann::json& j);

nlohmann::json module_to_json(const GradedModule& m);
GradedModule module_from_json(const nlohmann::json& j);

nlohmann::json table_to_json(const Quiver& q, const SimplesTable& t);
SimplesTable table_from_json(const Quiver& q, const nlohmann::json& j);

nlohmann::json crystal_element_to_json(const CrystalModel& m, const CrystalElement& b);
// nodes + i-labeled lowering edges of the BFS table
nlohmann::json crystal_graph_to_json(const CrystalModel& m, const CrystalTable& t);
std::string crystal_graph_to_dot(const CrystalModel& m, const CrystalTable& t);

void write_text_file(const std::string& path, const std::string& content);
std::string read_text_file(const std::string& path);

}  // namespace klr
