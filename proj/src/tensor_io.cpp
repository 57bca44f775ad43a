#include "arens/tensor_io.hpp"

#include <fstream>
#include <map>
#include <sstream>

#include "json_io.hpp"

namespace arens::core {

namespace detail {

using nlohmann::json;

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

json parse_json_text(const std::string& text, const std::string& origin) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(origin + ": invalid JSON: " + e.what(), e.byte);
  }
}

const json& require_member(const json& j, const char* key,
                           const std::string& context) {
  if (!j.is_object())
    throw InputError(context + ": expected an object");
  const auto it = j.find(key);
  if (it == j.end())
    throw InputError(context + ": missing required field \"" +
                     std::string(key) + "\"");
  return *it;
}

void reject_unknown_keys(const json& j,
                         std::initializer_list<const char*> known,
                         const std::string& context) {
  if (!j.is_object())
    throw InputError(context + ": expected an object");
  for (const auto& [key, value] : j.items()) {
    bool ok = false;
    for (const char* k : known) ok = ok || key == k;
    if (!ok)
      throw InputError(context + ": unknown field \"" + key + "\"");
  }
}

int require_int(const json& j, const std::string& context) {
  if (!j.is_number_integer())
    throw InputError(context + ": expected an integer");
  return j.get<int>();
}

double require_number(const json& j, const std::string& context) {
  if (!j.is_number())
    throw InputError(context + ": expected a number");
  return j.get<double>();
}

std::string require_string(const json& j, const std::string& context) {
  if (!j.is_string())
    throw InputError(context + ": expected a string");
  return j.get<std::string>();
}

MultiTensor tensor_from_json(const json& j, const std::string& context) {
  reject_unknown_keys(j, {"spaces", "map"}, context);
  const json& jspaces = require_member(j, "spaces", context);
  if (!jspaces.is_object())
    throw InputError(context + ".spaces: expected an object");
  std::map<std::string, int> dims;
  for (const auto& [name, jdim] : jspaces.items()) {
    const int d = require_int(jdim, context + ".spaces." + name);
    if (d < 1)
      throw InputError(context + ".spaces." + name +
                       ": dim must be positive, got " + std::to_string(d));
    dims[name] = d;
  }
  auto space_of = [&](const std::string& name, int level,
                      const std::string& where) {
    const auto it = dims.find(name);
    if (it == dims.end())
      throw InputError(where + ": space \"" + name +
                       "\" is not declared in \"spaces\"");
    if (level < 0)
      throw InputError(where + ": dual level must be non-negative, got " +
                       std::to_string(level));
    return SpaceRef{name, level, it->second};
  };

  const json& jmap = require_member(j, "map", context);
  const std::string mctx = context + ".map";
  reject_unknown_keys(
      jmap, {"args", "arg_dual_levels", "result", "result_dual_level", "values"},
      mctx);
  const json& jargs = require_member(jmap, "args", mctx);
  if (!jargs.is_array() || jargs.empty() || jargs.size() > 3)
    throw InputError(mctx + ".args: expected an array of 1 to 3 space names");
  std::vector<int> levels(jargs.size(), 0);
  if (jmap.contains("arg_dual_levels")) {
    const json& jl = jmap["arg_dual_levels"];
    if (!jl.is_array() || jl.size() != jargs.size())
      throw InputError(mctx + ".arg_dual_levels: expected an array of " +
                       std::to_string(jargs.size()) + " integers");
    for (std::size_t i = 0; i < jl.size(); ++i)
      levels[i] = require_int(jl[i], mctx + ".arg_dual_levels[" +
                                         std::to_string(i) + "]");
  }
  std::vector<SpaceRef> args;
  for (std::size_t i = 0; i < jargs.size(); ++i) {
    const std::string where = mctx + ".args[" + std::to_string(i) + "]";
    args.push_back(space_of(require_string(jargs[i], where), levels[i], where));
  }
  int rlevel = 0;
  if (jmap.contains("result_dual_level"))
    rlevel = require_int(jmap["result_dual_level"], mctx + ".result_dual_level");
  const SpaceRef result =
      space_of(require_string(require_member(jmap, "result", mctx),
                              mctx + ".result"),
               rlevel, mctx + ".result");

  MultiTensor t = make_tensor(std::move(args), result);
  const json& jvals = require_member(jmap, "values", mctx);
  if (!jvals.is_array())
    throw InputError(mctx + ".values: expected an array");
  if (jvals.size() != t.values.size())
    throw InputError(mctx + ".values: expected " +
                     std::to_string(t.values.size()) + " values for this shape, got " +
                     std::to_string(jvals.size()));
  for (std::size_t i = 0; i < jvals.size(); ++i)
    t.values[i] =
        require_number(jvals[i], mctx + ".values[" + std::to_string(i) + "]");
  return t;
}

}  // namespace detail

MultiTensor parse_tensor_json(const std::string& text,
                              const std::string& origin) {
  return detail::tensor_from_json(detail::parse_json_text(text, origin),
                                  origin + ": $");
}

MultiTensor load_tensor_file(const std::string& path) {
  return parse_tensor_json(detail::read_text_file(path), path);
}

ComposePair parse_compose_pair_json(const std::string& text,
                                    const std::string& origin) {
  const nlohmann::json j = detail::parse_json_text(text, origin);
  detail::reject_unknown_keys(j, {"f", "h"}, origin + ": $");
  ComposePair out{
      detail::tensor_from_json(detail::require_member(j, "f", origin + ": $"),
                               origin + ": $.f"),
      detail::tensor_from_json(detail::require_member(j, "h", origin + ": $"),
                               origin + ": $.h"),
  };
  if (out.tri.arity() != 3)
    throw InputError(origin + ": $.f: expected a trilinear map, got arity " +
                     std::to_string(out.tri.arity()));
  if (out.lin.arity() != 1)
    throw InputError(origin + ": $.h: expected a linear map, got arity " +
                     std::to_string(out.lin.arity()));
  if (!(out.lin.arg_spaces[0] == out.tri.result_space))
    throw InputError(origin + ": $.h: argument space " +
                     show(out.lin.arg_spaces[0]) + " does not match f's result " +
                     show(out.tri.result_space));
  return out;
}

ComposePair load_compose_pair(const std::string& path) {
  return parse_compose_pair_json(detail::read_text_file(path), path);
}

}  // namespace arens::core
