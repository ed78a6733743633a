#include "polyquant/symexpr/generator.hpp"

#include <array>

namespace polyquant {
namespace {

constexpr std::array<std::string_view, kGeneratorCount> kNames = {
    "x0",  "x1", "x2", "x3", "phi", "phibar", "pi0", "pi1",   "pi2",
    "pi3", "hbar", "c", "m", "V",   "L",      "A",   "Abar",  "C",
    "k0",  "k1", "k2", "k3", "omega", "v0",   "alpha0",
};

}  // namespace

std::string_view name(Generator g) { return kNames[index_of(g)]; }

std::optional<Generator> generator_from_name(std::string_view name) {
  for (std::size_t i = 0; i < kNames.size(); ++i) {
    if (kNames[i] == name) return generator_at(i);
  }
  return std::nullopt;
}

}  // namespace polyquant
