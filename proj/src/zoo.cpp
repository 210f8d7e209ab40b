#include "agelab/zoo.hpp"

#include <stdexcept>

#include "agelab/lie.hpp"

namespace agelab::zoo {

namespace {

constexpr std::int64_t kValidateWindow = 4;

void hard_validate(ModuleSpec& spec) {
  const auto problems = validate_spec(spec, kValidateWindow);
  if (!problems.empty())
    throw std::invalid_argument("module '" + spec.name + "' fails validation: " + problems[0] +
                                (problems.size() > 1
                                     ? " (+" + std::to_string(problems.size() - 1) + " more)"
                                     : ""));
}

}  // namespace

void ZSeq::normalize() {
  for (auto it = support.begin(); it != support.end();)
    it = it->second == 0 ? support.erase(it) : std::next(it);
  switch (tail) {
    case Tail::ZeroUp: {
      if (support.empty())
        throw std::invalid_argument("zero-up z-sequence needs a nonzero pivot value");
      const std::int64_t top = support.rbegin()->first;
      if (pivot && *pivot != top)
        throw std::invalid_argument("zero-up pivot must be the largest nonzero index");
      pivot = top;
      break;
    }
    case Tail::ZeroDown: {
      if (support.empty())
        throw std::invalid_argument("zero-down z-sequence needs a nonzero pivot value");
      const std::int64_t bottom = support.begin()->first;
      if (pivot && *pivot != bottom)
        throw std::invalid_argument("zero-down pivot must be the smallest nonzero index");
      pivot = bottom;
      break;
    }
    case Tail::Finite: {
      if (pivot && at(*pivot) == 0)
        throw std::invalid_argument("finite z-sequence pivot must carry a nonzero value");
      if (!pivot && !support.empty()) pivot = support.rbegin()->first;
      break;
    }
  }
}

ModuleSpec verma(const VermaParams& p) {
  ModuleSpec s;
  s.name = "verma";
  s.vac = "v";
  s.carrier = CarrierBounds::full();
  s.complement = {{Kind::H, 0}, {Kind::P, 0}, {Kind::E, 0}, {Kind::Q, 0}, {Kind::Z, 0}};
  FunctionalBase fb;
  fb.values[GenRef::h(0)] = p.h_val;
  fb.values[GenRef::k()] = p.k_val;
  s.base = std::move(fb);
  s.graded = true;
  hard_validate(s);
  return s;
}

ModuleSpec quotient_Uh(const VermaParams& p) {
  ModuleSpec s;
  s.name = "U_h";
  s.vac = "w";
  s.carrier = CarrierBounds::full();
  s.complement = {{Kind::H, 0}};
  FunctionalBase fb;
  fb.values[GenRef::h(0)] = p.h_val;
  fb.values[GenRef::k()] = p.k_val;
  s.base = std::move(fb);
  s.graded = true;
  s.deg_order = DegOrder::VacuumRevlex;
  s.schedule = Schedule::VacuumH;
  hard_validate(s);
  return s;
}

ModuleSpec imaginary_verma(const ImaginaryParams& p) {
  ZSeq z = p.z_seq;
  z.normalize();
  ModuleSpec s;
  s.name = "imaginary_verma";
  s.vac = "v";
  s.carrier = CarrierBounds::full();
  s.complement = {{Kind::Q, std::nullopt}, {Kind::H, 0}};
  FunctionalBase fb;
  fb.values[GenRef::h(0)] = p.h_val;
  fb.values[GenRef::k()] = p.k_val;
  for (const auto& [i, v] : z.support) fb.values[GenRef::z(i)] = v;
  s.base = std::move(fb);
  s.deg_order = DegOrder::ImaginaryPrincipal;
  s.schedule = Schedule::Imaginary;
  s.anchor = z.tail == ZSeq::Tail::ZeroDown ? Anchor::Down : Anchor::Up;
  hard_validate(s);
  return s;
}

ModuleSpec quotient_Uq(const ImaginaryParams& p) {
  ZSeq z = p.z_seq;
  z.normalize();
  ModuleSpec s;
  s.name = "U_q";
  s.vac = "w";
  s.carrier = CarrierBounds::full();
  s.complement = {{Kind::Q, std::nullopt}};
  FunctionalBase fb;
  fb.values[GenRef::h(0)] = p.h_val;
  fb.values[GenRef::k()] = p.k_val;
  for (const auto& [i, v] : z.support) fb.values[GenRef::z(i)] = v;
  s.base = std::move(fb);
  s.deg_order = DegOrder::ImaginaryPrincipal;
  s.schedule = Schedule::Imaginary;
  s.anchor = z.tail == ZSeq::Tail::ZeroDown ? Anchor::Down : Anchor::Up;
  if (p.k_val != 0) {
    // [h(1),h(-1)] = k sits in the base span, so the functional is not a
    // character; the presentation only closes for k = 0.
    s.warnings.push_back("U_q constructed with nonzero central charge: base functional is not a "
                         "character ([h(1),h(-1)] = k)");
  } else {
    hard_validate(s);
  }
  return s;
}

ModuleSpec one_dim() {
  ModuleSpec s;
  s.name = "one_dim";
  s.vac = "w";
  s.carrier = CarrierBounds::full();
  s.base = FunctionalBase{};
  s.graded = true;
  s.schedule = Schedule::Trivial;
  hard_validate(s);
  return s;
}

bool subalgebra_contains(const SubalgebraTriple& t, const GenRef& g) { return t.contains(g); }

ModuleSpec induced(const SubalgebraTriple& t, ModuleSpec inner) {
  if (!(inner.carrier.min_mode == t.bounds().min_mode))
    throw std::invalid_argument("induced: inner module is not defined over the subalgebra (" +
                                std::to_string(t.d1) + "," + std::to_string(t.d2) + "," +
                                std::to_string(t.d3) + ")");
  ModuleSpec s;
  s.name = "induced(" + std::to_string(t.d1) + "," + std::to_string(t.d2) + "," +
           std::to_string(t.d3) + ")<" + inner.name + ">";
  s.vac = inner.vac;
  s.carrier = CarrierBounds::full();
  s.complement = {{Kind::P, t.d2}, {Kind::E, t.d1}, {Kind::Q, t.d3}, {Kind::H, 0}};
  s.base = NestedBase{t, std::make_shared<const ModuleSpec>(std::move(inner))};
  s.deg_order = DegOrder::InducedPrincipal;
  s.schedule = Schedule::Induced;
  hard_validate(s);
  return s;
}

ModuleSpec vacuum_over(const SubalgebraTriple& t,
                       const std::vector<std::pair<Kind, std::int64_t>>& complement_uppers,
                       const std::map<GenRef, Scalar>& phi, const std::string& name) {
  ModuleSpec s;
  s.name = name;
  s.vac = "w";
  s.carrier = t.bounds();
  for (const auto& [kind, upper] : complement_uppers) s.complement.push_back({kind, upper});
  FunctionalBase fb;
  fb.values = phi;
  s.base = std::move(fb);
  hard_validate(s);
  return s;
}

ModuleSpec whittaker_M(const WhittakerPhi& phi) {
  ModuleSpec s = vacuum_over(SubalgebraTriple(-1, -1, 1),
                             {{Kind::P, 0}, {Kind::E, 0}, {Kind::H, 1}}, phi.values,
                             "whittaker_M");
  s.deg_order = DegOrder::WhittakerTriple;
  s.schedule = Schedule::WhittakerM;
  return s;
}

ModuleSpec whittaker_full(const WhittakerPhi& phi) {
  ModuleSpec s = induced(SubalgebraTriple(-1, -1, 1), whittaker_M(phi));
  s.name = "whittaker_full";
  return s;
}

namespace {

Scalar json_scalar(const nlohmann::json& j) {
  if (j.is_number_integer()) return Scalar(j.get<std::int64_t>());
  if (j.is_string()) return scalar_from_string(j.get<std::string>());
  throw std::invalid_argument("config: scalars must be strings like \"3/2\" or integers");
}

ZSeq zseq_from_json(const nlohmann::json& j) {
  ZSeq z;
  if (j.contains("support"))
    for (const auto& [key, val] : j.at("support").items())
      z.support[std::stoll(key)] = json_scalar(val);
  const std::string tail = j.value("tail", "finite");
  if (tail == "zero_up") z.tail = ZSeq::Tail::ZeroUp;
  else if (tail == "zero_down") z.tail = ZSeq::Tail::ZeroDown;
  else if (tail == "finite") z.tail = ZSeq::Tail::Finite;
  else throw std::invalid_argument("config: tail must be zero_up, zero_down or finite");
  if (j.contains("r")) z.pivot = j.at("r").get<std::int64_t>();
  return z;
}

std::map<GenRef, Scalar> phi_from_json(const nlohmann::json& j) {
  std::map<GenRef, Scalar> out;
  for (const auto& [key, val] : j.items()) out[parse_genref(key)] = json_scalar(val);
  return out;
}

}  // namespace

ModuleSpec spec_from_json(const nlohmann::json& cfg) {
  try {
    const std::string module = cfg.at("module").get<std::string>();
    if (module == "verma")
      return verma({json_scalar(cfg.at("h")), json_scalar(cfg.at("k"))});
    if (module == "quotient_Uh")
      return quotient_Uh({json_scalar(cfg.at("h")), json_scalar(cfg.at("k"))});
    if (module == "imaginary_verma")
      return imaginary_verma(
          {json_scalar(cfg.at("h")), json_scalar(cfg.at("k")), zseq_from_json(cfg.at("z"))});
    if (module == "quotient_Uq")
      return quotient_Uq(
          {json_scalar(cfg.at("h")), json_scalar(cfg.at("k")), zseq_from_json(cfg.at("z"))});
    if (module == "one_dim") return one_dim();
    if (module == "whittaker_M") {
      WhittakerPhi phi;
      phi.values = phi_from_json(cfg.at("phi"));
      return whittaker_M(phi);
    }
    if (module == "whittaker_full") {
      WhittakerPhi phi;
      phi.values = phi_from_json(cfg.at("phi"));
      return whittaker_full(phi);
    }
    if (module == "induced") {
      const auto& d = cfg.at("d");
      return induced(SubalgebraTriple(d.at(0).get<std::int64_t>(), d.at(1).get<std::int64_t>(),
                                      d.at(2).get<std::int64_t>()),
                     spec_from_json(cfg.at("inner")));
    }
    if (module == "vacuum") {
      const auto& d = cfg.at("d");
      std::vector<std::pair<Kind, std::int64_t>> uppers;
      for (const auto& slot : cfg.at("complement")) {
        const std::string kind = slot.at(0).get<std::string>();
        Kind k;
        if (kind == "e") k = Kind::E;
        else if (kind == "p") k = Kind::P;
        else if (kind == "q") k = Kind::Q;
        else if (kind == "h") k = Kind::H;
        else throw std::invalid_argument("config: complement kinds are e,p,q,h");
        uppers.emplace_back(k, slot.at(1).get<std::int64_t>());
      }
      return vacuum_over(SubalgebraTriple(d.at(0).get<std::int64_t>(),
                                          d.at(1).get<std::int64_t>(),
                                          d.at(2).get<std::int64_t>()),
                         uppers, phi_from_json(cfg.value("phi", nlohmann::json::object())),
                         cfg.value("name", "vacuum"));
    }
    throw std::invalid_argument("config: unknown module '" + module + "'");
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("config: ") + e.what());
  }
}

}  // namespace agelab::zoo
