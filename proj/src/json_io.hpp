#pragma once

#include <json.hpp>
#include <string>

#include "arens/tensor.hpp"

// Internal helpers shared by the JSON loaders. `context` strings are of the
// form "origin: $.path" and prefix every diagnostic.
namespace arens::core::detail {

std::string read_text_file(const std::string& path);
nlohmann::json parse_json_text(const std::string& text,
                               const std::string& origin);

const nlohmann::json& require_member(const nlohmann::json& j, const char* key,
                                     const std::string& context);
void reject_unknown_keys(const nlohmann::json& j,
                         std::initializer_list<const char*> known,
                         const std::string& context);
int require_int(const nlohmann::json& j, const std::string& context);
double require_number(const nlohmann::json& j, const std::string& context);
std::string require_string(const nlohmann::json& j,
                           const std::string& context);

// One {"spaces", "map"} object.
MultiTensor tensor_from_json(const nlohmann::json& j,
                             const std::string& context);

}  // namespace arens::core::detail
