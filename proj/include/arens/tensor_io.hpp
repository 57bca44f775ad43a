#pragma once

#include <string>

#include "arens/tensor.hpp"

namespace arens::core {

// Tensor file format: {"spaces": {name: dim, ...}, "map": {"args": [names],
// "arg_dual_levels": [ints] (optional), "result": name, "result_dual_level":
// int (optional), "values": flat row-major array, axis order args then
// result}}. Errors carry the file origin and a JSON path or byte position.
MultiTensor parse_tensor_json(const std::string& text,
                              const std::string& origin = "<memory>");
MultiTensor load_tensor_file(const std::string& path);

// A trilinear map f and a linear map h off f's result space, as
// {"f": tensor, "h": tensor}.
struct ComposePair {
  MultiTensor tri;
  MultiTensor lin;
};
ComposePair parse_compose_pair_json(const std::string& text,
                                    const std::string& origin = "<memory>");
ComposePair load_compose_pair(const std::string& path);

}  // namespace arens::core
