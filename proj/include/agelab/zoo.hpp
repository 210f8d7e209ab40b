#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "agelab/module_spec.hpp"
#include "agelab/scalar.hpp"

#include "json.hpp"

namespace agelab::zoo {

struct VermaParams {
  Scalar h_val;
  Scalar k_val;
};

/// Central z-character: finite support plus the tail shape the simplicity
/// statements quantify over. `pivot` is the distinguished index r with a
/// nonzero value and zeros beyond it in the tail direction.
struct ZSeq {
  enum class Tail { ZeroUp, ZeroDown, Finite };

  std::map<std::int64_t, Scalar> support;
  Tail tail = Tail::Finite;
  std::optional<std::int64_t> pivot;

  Scalar at(std::int64_t i) const {
    auto it = support.find(i);
    return it == support.end() ? Scalar(0) : it->second;
  }
  bool all_zero() const { return support.empty(); }

  /// Drops zero entries, derives/validates the pivot. Throws on inconsistency.
  void normalize();
};

struct ImaginaryParams {
  Scalar h_val;
  Scalar k_val;
  ZSeq z_seq;
};

/// Values of a Lie character on the positive Whittaker subalgebra (h_{>=1},
/// e_{>=0}, p_{>=0}, q_{>=1}, all z, k); unlisted generators map to 0.
struct WhittakerPhi {
  std::map<GenRef, Scalar> values;

  void set(const GenRef& g, const Scalar& v) {
    if (v == 0) values.erase(g);
    else values[g] = v;
  }
  Scalar at(const GenRef& g) const {
    auto it = values.find(g);
    return it == values.end() ? Scalar(0) : it->second;
  }
};

/// Highest-weight induction: negative modes act freely, h -> h_val, k -> k_val,
/// everything else kills the cyclic vector.
ModuleSpec verma(const VermaParams& p);

/// Induction over the imaginary triangular decomposition: all q-modes and
/// negative h-modes act freely; z_i -> z-character.
ModuleSpec imaginary_verma(const ImaginaryParams& p);

/// Irreducible quotient presentation on the h-block (generator w, all of
/// e,p,q,z killing w, positive h-modes killing w).
ModuleSpec quotient_Uh(const VermaParams& p);

/// Irreducible quotient presentation on the q-block. Meaningful for k=0; a
/// nonzero k is allowed but flagged in warnings (the base functional then
/// fails to be a character on [h(1),h(-1)]).
ModuleSpec quotient_Uq(const ImaginaryParams& p);

/// The trivial one-dimensional module: everything acts as zero.
ModuleSpec one_dim();

bool subalgebra_contains(const SubalgebraTriple& t, const GenRef& g);

/// Induction from a module over the subalgebra of t; free families are
/// p_{<d2}, e_{<d1}, q_{<d3}, h_{<0} in that order. The inner spec's carrier
/// must be exactly the subalgebra of t.
ModuleSpec induced(const SubalgebraTriple& t, ModuleSpec inner);

/// Generic vacuum module over the subalgebra of t: the listed complement
/// families (kind, mode-upper-bound) act freely, the remaining base span must
/// be a subalgebra and phi a character on it (validated; throws otherwise).
ModuleSpec vacuum_over(const SubalgebraTriple& t,
                       const std::vector<std::pair<Kind, std::int64_t>>& complement_uppers,
                       const std::map<GenRef, Scalar>& phi, const std::string& name);

/// The Whittaker kernel module over the (-1,-1,1) subalgebra: free families
/// p(-1), e(-1), h(0); base = the positive Whittaker subalgebra through phi.
ModuleSpec whittaker_M(const WhittakerPhi& phi);

/// The standard Whittaker module: induction of whittaker_M along (-1,-1,1).
ModuleSpec whittaker_full(const WhittakerPhi& phi);

/// Loads a spec from its JSON description, e.g.
///   {"module":"imaginary_verma","h":"2","k":"1",
///    "z":{"support":{"-1":"3"},"tail":"zero_up","r":-1}}
/// Throws std::invalid_argument on malformed configs.
ModuleSpec spec_from_json(const nlohmann::json& cfg);

}  // namespace agelab::zoo
