#include "arens/space.hpp"

#include <cmath>
#include <cstdlib>

namespace arens::core {

std::string show(const SpaceRef& s) {
  std::string out = s.name;
  out.append(static_cast<std::size_t>(s.dual_level), '*');
  out += "(" + std::to_string(s.dim) + ")";
  return out;
}

Vector zero_vector(const SpaceRef& s) {
  return {s, std::vector<double>(static_cast<std::size_t>(s.dim), 0.0)};
}

Vector basis_vector(const SpaceRef& s, int i) {
  if (i < 0 || i >= s.dim)
    throw InputError("basis index " + std::to_string(i) + " out of range for " +
                     show(s));
  Vector v = zero_vector(s);
  v.coords[static_cast<std::size_t>(i)] = 1.0;
  return v;
}

Vector embed(const Vector& v, int levels) {
  if (levels < 0 || levels % 2 != 0)
    throw InputError("embedding level shift must be even and non-negative, got " +
                     std::to_string(levels));
  Vector out = v;
  out.space.dual_level += levels;
  return out;
}

Vector restrict_level(const Vector& v, int levels) {
  if (levels < 0 || levels % 2 != 0)
    throw InputError("restriction level shift must be even and non-negative, got " +
                     std::to_string(levels));
  if (v.space.dual_level < levels)
    throw InputError("cannot restrict " + show(v.space) + " by " +
                     std::to_string(levels) + " levels");
  Vector out = v;
  out.space.dual_level -= levels;
  return out;
}

double pairing(const Vector& f, const Vector& v) {
  if (f.space.name != v.space.name || f.space.dim != v.space.dim)
    throw InputError("pairing of unrelated spaces " + show(f.space) + " and " +
                     show(v.space));
  if (std::abs(f.space.dual_level - v.space.dual_level) % 2 != 1)
    throw InputError("pairing needs an odd dual-level gap: " + show(f.space) +
                     " against " + show(v.space));
  double acc = 0.0;
  for (std::size_t i = 0; i < f.coords.size(); ++i) acc += f.coords[i] * v.coords[i];
  return acc;
}

}  // namespace arens::core
