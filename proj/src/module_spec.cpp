#include "agelab/module_spec.hpp"

#include <stdexcept>

#include "agelab/lie.hpp"

namespace agelab {

SubalgebraTriple::SubalgebraTriple(std::int64_t a, std::int64_t b, std::int64_t c)
    : d1(a), d2(b), d3(c) {
  if (d1 + d3 < d2)
    throw std::invalid_argument("subalgebra requires d1 + d3 >= d2 (the bracket [e,q] = p)");
}

bool SubalgebraTriple::contains(const GenRef& g) const {
  switch (g.kind) {
    case Kind::H: return g.mode >= 0;
    case Kind::E: return g.mode >= d1;
    case Kind::P: return g.mode >= d2;
    case Kind::Q: return g.mode >= d3;
    case Kind::Z:
    case Kind::K: return true;
  }
  return false;
}

CarrierBounds SubalgebraTriple::bounds() const {
  CarrierBounds cb;
  cb.min_mode[static_cast<std::size_t>(Kind::E)] = d1;
  cb.min_mode[static_cast<std::size_t>(Kind::P)] = d2;
  cb.min_mode[static_cast<std::size_t>(Kind::Q)] = d3;
  cb.min_mode[static_cast<std::size_t>(Kind::H)] = 0;
  return cb;
}

int ModuleSpec::slot_of(const GenRef& g) const {
  if (!carrier.contains(g))
    throw std::domain_error("generator " + to_string(g) + " is outside the module's algebra (" +
                            name + ")");
  if (g.is_k()) return -1;
  for (std::size_t s = 0; s < complement.size(); ++s) {
    const FamilySlot& slot = complement[s];
    if (slot.kind != g.kind) continue;
    if (!slot.upper || g.mode < *slot.upper) return static_cast<int>(s);
  }
  return -1;
}

Classification classify(const ModuleSpec& spec, const GenRef& g) {
  return spec.slot_of(g) >= 0 ? Classification::Complement : Classification::Base;
}

std::vector<std::string> validate_spec(const ModuleSpec& spec, std::int64_t window) {
  std::vector<std::string> problems;
  std::vector<GenRef> base_gens;
  for (Kind k : {Kind::E, Kind::P, Kind::Q, Kind::H, Kind::Z}) {
    for (std::int64_t m = -window; m <= window; ++m) {
      const GenRef g{k, m};
      if (!spec.carrier.contains(g)) continue;
      if (classify(spec, g) == Classification::Base) base_gens.push_back(g);
    }
  }
  base_gens.push_back(GenRef::k());

  const FunctionalBase* fn = spec.is_nested() ? nullptr : &spec.functional();
  for (std::size_t a = 0; a < base_gens.size(); ++a) {
    for (std::size_t b = a + 1; b < base_gens.size(); ++b) {
      const LieElement br = bracket(base_gens[a], base_gens[b]);
      if (br.is_zero()) continue;
      Scalar phi_val(0);
      for (const auto& [g, c] : br.terms()) {
        if (!g.is_k()) {
          if (!spec.carrier.contains(g)) {
            problems.push_back("carrier not closed: [" + to_string(base_gens[a]) + "," +
                               to_string(base_gens[b]) + "] contains " + to_string(g));
            continue;
          }
          if (classify(spec, g) == Classification::Complement)
            problems.push_back("base span not a subalgebra: [" + to_string(base_gens[a]) + "," +
                               to_string(base_gens[b]) + "] meets complement generator " +
                               to_string(g));
        }
        if (fn) phi_val += c * fn->value(g);
      }
      if (fn && phi_val != 0)
        problems.push_back("functional is not a character: phi([" + to_string(base_gens[a]) +
                           "," + to_string(base_gens[b]) + "]) = " + to_string(phi_val));
    }
  }
  return problems;
}

}  // namespace agelab
