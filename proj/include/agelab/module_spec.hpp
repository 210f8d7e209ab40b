#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "agelab/genref.hpp"
#include "agelab/scalar.hpp"

namespace agelab {

/// Mode lower bounds per kind (e, p, q, h, z); nullopt = unbounded. k always
/// belongs. Describes which part of the algebra a module is defined over.
struct CarrierBounds {
  std::array<std::optional<std::int64_t>, 5> min_mode{};

  static CarrierBounds full() { return {}; }

  bool contains(const GenRef& g) const {
    if (g.is_k()) return true;
    const auto& lb = min_mode[static_cast<std::size_t>(g.kind)];
    return !lb || g.mode >= *lb;
  }
};

/// The subalgebra spanned by h_{i>=0}, e_{>=d1}, p_{>=d2}, q_{>=d3}, all z, k.
struct SubalgebraTriple {
  std::int64_t d1, d2, d3;

  SubalgebraTriple(std::int64_t a, std::int64_t b, std::int64_t c);

  bool contains(const GenRef& g) const;
  CarrierBounds bounds() const;
  bool operator==(const SubalgebraTriple&) const = default;
};

/// One complement family: generators of `kind` with mode < upper, or every
/// mode when upper is absent; always intersected with the carrier.
struct FamilySlot {
  Kind kind;
  std::optional<std::int64_t> upper;
};

struct ModuleSpec;

/// Cyclic-vector evaluation rule: a scalar functional on base generators
/// (absent means 0), or forwarding into an inner module over the subalgebra.
struct FunctionalBase {
  std::map<GenRef, Scalar> values;

  Scalar value(const GenRef& g) const {
    auto it = values.find(g);
    return it == values.end() ? Scalar(0) : it->second;
  }
};

struct NestedBase {
  SubalgebraTriple sub;
  std::shared_ptr<const ModuleSpec> inner;
};

enum class Classification { Complement, Base };

/// Which total order the module's degree arguments use.
enum class DegOrder {
  None,
  VacuumRevlex,        ///< reverse-lex on the h-block multi-index
  WhittakerTriple,     ///< reverse-lex on (h, e, p) exponent triples
  ImaginaryPrincipal,  ///< principal order on (q-block, h-block) pairs
  InducedPrincipal     ///< principal order on (p, e, q, h) quadruples
};

/// Which degree-descent schedule applies to the module.
enum class Schedule { None, Trivial, VacuumH, Imaginary, WhittakerM, Induced };

/// Anchoring direction for the imaginary q-block: Up reads positions downward
/// from just above the largest q-mode present, Down mirrors it.
enum class Anchor { Up, Down };

/// A cyclic module presentation: ordered complement families acting freely on
/// the cyclic vector, everything else evaluated through the base rule.
/// Immutable after construction.
struct ModuleSpec {
  std::string name;
  std::string vac = "v";
  CarrierBounds carrier;
  std::vector<FamilySlot> complement;
  std::variant<FunctionalBase, NestedBase> base;
  bool graded = false;
  DegOrder deg_order = DegOrder::None;
  Schedule schedule = Schedule::None;
  Anchor anchor = Anchor::Up;
  std::vector<std::string> warnings;

  bool is_nested() const { return std::holds_alternative<NestedBase>(base); }
  const FunctionalBase& functional() const { return std::get<FunctionalBase>(base); }
  const NestedBase& nested() const { return std::get<NestedBase>(base); }

  /// Index of the complement family that owns g, or -1 when g is base.
  /// Throws std::domain_error when g lies outside the carrier.
  int slot_of(const GenRef& g) const;
};

Classification classify(const ModuleSpec& spec, const GenRef& g);

/// Structural sanity checks: the carrier is closed under the bracket, the
/// base span is a subalgebra (no bracket of base generators meets the
/// complement), and for functional bases the values form a character
/// (phi([x,y]) = 0 for base pairs, k included). Checked for generator modes
/// within [-window, window] intersected with the carrier. Returns violation
/// messages; empty means clean.
std::vector<std::string> validate_spec(const ModuleSpec& spec, std::int64_t window);

}  // namespace agelab
