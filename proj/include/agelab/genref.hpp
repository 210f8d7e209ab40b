#pragma once

#include <compare>
#include <cstdint>
#include <string>

namespace agelab {

/// Basis generator kinds of the affine ageing algebra. The enum order is the
/// canonical sort rank (e < p < q < h < z < k) used for printing elements.
enum class Kind : std::uint8_t { E = 0, P, Q, H, Z, K };

inline char kind_char(Kind k) {
  switch (k) {
    case Kind::E: return 'e';
    case Kind::P: return 'p';
    case Kind::Q: return 'q';
    case Kind::H: return 'h';
    case Kind::Z: return 'z';
    case Kind::K: return 'k';
  }
  return '?';
}

/// A single basis generator: a loop generator kind(mode), or the central k
/// (which carries no mode; stored as mode 0).
struct GenRef {
  Kind kind{Kind::E};
  std::int64_t mode{0};

  static GenRef e(std::int64_t n) { return {Kind::E, n}; }
  static GenRef p(std::int64_t n) { return {Kind::P, n}; }
  static GenRef q(std::int64_t n) { return {Kind::Q, n}; }
  static GenRef h(std::int64_t n) { return {Kind::H, n}; }
  static GenRef z(std::int64_t n) { return {Kind::Z, n}; }
  static GenRef k() { return {Kind::K, 0}; }

  bool is_k() const { return kind == Kind::K; }
  bool is_central() const { return kind == Kind::Z || kind == Kind::K; }

  auto operator<=>(const GenRef&) const = default;
};

inline std::string to_string(const GenRef& g) {
  if (g.is_k()) return "k";
  return std::string(1, kind_char(g.kind)) + "(" + std::to_string(g.mode) + ")";
}

}  // namespace agelab
