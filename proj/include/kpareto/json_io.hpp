#ifndef KPARETO_JSON_IO_HPP
#define KPARETO_JSON_IO_HPP

#include "kpareto/construction.hpp"
#include "kpareto/model.hpp"

#include <json.hpp>

#include <string>

namespace kpareto {

/// Instance schema: rationals as "num/den" strings, boxes as per-dimension
/// ["lo", "hi"] pairs, choices as bitstrings over group object order (first
/// character = first object), profits as a float array or null when the
/// instance has not been sampled.
nlohmann::json instance_to_json(const KnapsackInstance& instance);
KnapsackInstance instance_from_json(const nlohmann::json& j);

nlohmann::json plan_to_json(const ConstructionPlan& plan);
ConstructionPlan plan_from_json(const nlohmann::json& j);

nlohmann::json solution_to_json(const KnapsackInstance& instance, const Solution& s,
                                const ObjectiveVector& value);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

}  // namespace kpareto

#endif  // KPARETO_JSON_IO_HPP
