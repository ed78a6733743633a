#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>

namespace polyquant {

// Coordinates come first so that derivative words can index them densely.
enum class Generator : std::uint8_t {
  x0, x1, x2, x3,
  phi, phibar,
  pi0, pi1, pi2, pi3,
  hbar, c, m, V, L, A, Abar, C,
  k0, k1, k2, k3,
  omega, v0, alpha0,
};

inline constexpr std::size_t kGeneratorCount = 25;
inline constexpr std::size_t kCoordinateCount = 10;

constexpr std::size_t index_of(Generator g) { return static_cast<std::size_t>(g); }
constexpr Generator generator_at(std::size_t i) { return static_cast<Generator>(i); }

constexpr bool is_coordinate(Generator g) { return index_of(g) < kCoordinateCount; }
constexpr bool is_parameter(Generator g) { return !is_coordinate(g); }

constexpr Generator x(int mu) { return generator_at(index_of(Generator::x0) + mu); }
constexpr Generator pi(int mu) { return generator_at(index_of(Generator::pi0) + mu); }
constexpr Generator k(int mu) { return generator_at(index_of(Generator::k0) + mu); }

constexpr Generator conjugate(Generator g) {
  switch (g) {
    case Generator::phi: return Generator::phibar;
    case Generator::phibar: return Generator::phi;
    case Generator::A: return Generator::Abar;
    case Generator::Abar: return Generator::A;
    default: return g;
  }
}

std::string_view name(Generator g);
std::optional<Generator> generator_from_name(std::string_view name);

}  // namespace polyquant
