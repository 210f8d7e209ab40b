#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <utility>
#include <vector>

#include "agelab/genref.hpp"
#include "agelab/lie.hpp"
#include "agelab/scalar.hpp"

namespace agelab {

/// Linear functional on loop generators (no k), finite support.
class Cochain1 {
 public:
  void set(const GenRef& g, const Scalar& v);
  Scalar get(const GenRef& g) const;
  Scalar eval(const LieElement& x) const;
  bool is_zero() const { return vals_.empty(); }
  const std::map<GenRef, Scalar>& values() const { return vals_; }

 private:
  std::map<GenRef, Scalar> vals_;
};

/// Antisymmetric 2-cochain on loop generators (kinds e,p,q,h,z; never k),
/// stored on one orientation only: keys satisfy first < second.
class Cochain2 {
 public:
  void set(const GenRef& x, const GenRef& y, const Scalar& v);
  void add(const GenRef& x, const GenRef& y, const Scalar& v);
  Scalar get(const GenRef& x, const GenRef& y) const;
  /// f(x, sum c_g g) by linearity in the second slot.
  Scalar eval(const GenRef& x, const LieElement& y) const;
  bool is_zero() const { return vals_.empty(); }
  const std::map<std::pair<GenRef, GenRef>, Scalar>& values() const { return vals_; }

  bool operator==(const Cochain2&) const = default;

 private:
  std::map<std::pair<GenRef, GenRef>, Scalar> vals_;
};

using CochainFn = std::function<Scalar(const GenRef&, const GenRef&)>;

/// (a_m, b_n) -> m (a|b) delta_{m+n,0}; the form defining the central term.
CochainFn standard_cocycle();

/// (x, y) -> g([x, y]) over the loop bracket.
CochainFn coboundary(const Cochain1& g);

/// Materializes a cochain function on all generator pairs with modes in
/// [-window, window].
Cochain2 materialize(const CochainFn& f, std::int64_t window);

/// Materializes g([.,.]) on every pair where it is nonzero, for g of finite
/// support (bracket modes add, so the result has finite support).
Cochain2 materialize_coboundary(const Cochain1& g);

struct CocycleCheck {
  bool ok = true;
  std::vector<std::array<GenRef, 3>> violations;  // capped at 16
};

/// Checks the cyclic identity f(x,[y,z]) + f(z,[x,y]) + f(y,[z,x]) = 0 on all
/// closure-safe generator triples with modes in [-window, window]: a triple
/// counts only if each nonzero pairwise bracket also stays inside the window.
CocycleCheck is_cocycle(const Cochain2& f, std::int64_t window);

struct NormalizedCocycle {
  Cochain2 fprime;
  Cochain1 g;
};

/// Builds the explicit 1-cochain g with
///   g(h_m) = 0, g(e_m) = f(h_0,e_m)/2, g(p_m) = f(h_0,p_m),
///   g(q_m) = -f(h_0,q_m), g(z_m) = -f(q_0,p_m)
/// and returns fprime = f - coboundary(g), materialized on modes within
/// [-2*window, 2*window] (union the support of f). For a cocycle f, fprime
/// vanishes on every kind-pair other than (h,h) wherever the defining
/// identities were window-interior. Throws std::invalid_argument if f fails
/// is_cocycle at this window.
NormalizedCocycle normalize_cocycle(const Cochain2& f, std::int64_t window);

struct CocycleSpaceDims {
  std::int64_t dim_Z = 0;
  std::int64_t dim_B = 0;
  std::int64_t dim_H_interior = 0;
  bool standard_independent = false;
  /// Representatives of the interior quotient (cocycles restricted to pairs
  /// with modes in [-window+1, window-1], modulo coboundaries).
  std::vector<Cochain2> interior_basis;
  /// Kind-pairs carrying a nonzero value in some quotient representative.
  std::vector<std::pair<Kind, Kind>> surviving_kind_pairs;
};

/// Solves the truncated cocycle system exactly over the rationals.
/// dim_Z: solutions of all closure-safe cyclic identities in the space of
/// antisymmetric pair values with modes in [-window, window]. dim_B: rank of
/// the coboundary map from functionals on modes [-2*window, 2*window].
/// dim_H_interior: dimension of the quotient of the two spaces' projections
/// onto interior pairs (modes in [-window+1, window-1]).
/// Window must lie in [2, 6]; throws std::invalid_argument otherwise.
CocycleSpaceDims cocycle_space_dim(std::int64_t window);

}  // namespace agelab
