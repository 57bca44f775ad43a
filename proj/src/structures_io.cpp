#include "arens/structures_io.hpp"

#include <utility>

#include "json_io.hpp"

namespace arens::structures {

namespace jd = arens::core::detail;
using core::InputError;
using core::MultiTensor;
using nlohmann::json;

namespace {

TargetKind target_of(const std::string& name, const std::string& context) {
  if (name == "module") return TargetKind::module;
  if (name == "dual") return TargetKind::dual_module;
  if (name == "algebra") return TargetKind::algebra;
  throw InputError(context +
                   ": expected \"module\", \"dual\" or \"algebra\", got \"" +
                   name + "\"");
}

}  // namespace

DerivationFile parse_derivation_json(const std::string& text,
                                     const std::string& origin) {
  const json j = jd::parse_json_text(text, origin);
  const std::string ctx = origin + ": $";
  jd::reject_unknown_keys(j, {"algebra", "module", "D", "target"}, ctx);

  AlgebraStruct alg;
  try {
    alg = make_algebra(jd::tensor_from_json(
        jd::require_member(j, "algebra", ctx), ctx + ".algebra"));
  } catch (const core::ParseError&) {
    throw;
  } catch (const InputError& e) {
    throw InputError(ctx + ".algebra: " + e.what());
  }

  const TargetKind kind =
      target_of(jd::require_string(jd::require_member(j, "target", ctx),
                                   ctx + ".target"),
                ctx + ".target");

  ModuleStruct mod;
  if (j.contains("module")) {
    const json& jm = j["module"];
    const std::string mctx = ctx + ".module";
    jd::reject_unknown_keys(jm, {"X", "pi1", "pi2"}, mctx);
    const int xdim =
        jd::require_int(jd::require_member(jm, "X", mctx), mctx + ".X");
    MultiTensor pi1 = jd::tensor_from_json(jd::require_member(jm, "pi1", mctx),
                                           mctx + ".pi1");
    MultiTensor pi2 = jd::tensor_from_json(jd::require_member(jm, "pi2", mctx),
                                           mctx + ".pi2");
    try {
      mod = make_module(alg, std::move(pi1), std::move(pi2));
    } catch (const InputError& e) {
      throw InputError(mctx + ": " + e.what());
    }
    if (mod.x.dim != xdim)
      throw InputError(mctx + ".X: declared dim " + std::to_string(xdim) +
                       " but the actions use " + core::show(mod.x));
  } else {
    if (kind != TargetKind::algebra)
      throw InputError(ctx + ": this target requires a \"module\" block");
    mod = self_module(alg);
  }

  TriDerivationCandidate cand{
      jd::tensor_from_json(jd::require_member(j, "D", ctx), ctx + ".D"), kind};
  try {
    effective_actions(cand, mod);
  } catch (const InputError& e) {
    throw InputError(ctx + ".D: " + e.what());
  }
  return {std::move(mod), std::move(cand)};
}

DerivationFile load_derivation_file(const std::string& path) {
  return parse_derivation_json(jd::read_text_file(path), path);
}

}  // namespace arens::structures
