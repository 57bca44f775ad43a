#pragma once

#include <string>

#include "arens/algebra.hpp"
#include "arens/derivation.hpp"

namespace arens::structures {

// Derivation file format: {"algebra": tensor, "module": {"X": dim, "pi1":
// tensor, "pi2": tensor}, "D": tensor, "target": "module"|"dual"|"algebra"}.
// The module block is required for module and dual targets and optional for
// algebra targets (the algebra then acts on itself). Loading validates the
// algebra and module axioms and the candidate's shape against the target.
struct DerivationFile {
  ModuleStruct module;
  TriDerivationCandidate candidate;
};

DerivationFile parse_derivation_json(const std::string& text,
                                     const std::string& origin = "<memory>");
DerivationFile load_derivation_file(const std::string& path);

}  // namespace arens::structures
