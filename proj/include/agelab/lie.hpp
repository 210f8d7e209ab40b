#pragma once

#include <map>
#include <optional>
#include <string>

#include "agelab/genref.hpp"
#include "agelab/scalar.hpp"

namespace agelab {

/// Finite linear combination of basis generators, kept in canonical form:
/// no zero coefficients, terms sorted by (kind rank, mode).
class LieElement {
 public:
  LieElement() = default;
  explicit LieElement(const GenRef& g, Scalar c = 1) { add(g, c); }

  void add(const GenRef& g, const Scalar& c) {
    if (c == 0) return;
    auto [it, fresh] = terms_.try_emplace(g, c);
    if (!fresh) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }
  void add(const LieElement& other, const Scalar& c = 1) {
    for (const auto& [g, v] : other.terms_) add(g, v * c);
  }

  Scalar coeff(const GenRef& g) const {
    auto it = terms_.find(g);
    return it == terms_.end() ? Scalar(0) : it->second;
  }

  bool is_zero() const { return terms_.empty(); }
  const std::map<GenRef, Scalar>& terms() const { return terms_; }

  bool operator==(const LieElement&) const = default;

 private:
  std::map<GenRef, Scalar> terms_;
};

/// Structure constants of the affine ageing algebra:
///   [h_m,e_n] = 2 e_{m+n}   [h_m,p_n] = p_{m+n}   [h_m,q_n] = -q_{m+n}
///   [e_m,q_n] = p_{m+n}     [p_m,q_n] = z_{m+n}   [h_m,h_n] = m δ_{m+n,0} k
/// z_n and k central; [e,e] = [p,p] = [q,q] = [e,p] = 0.
LieElement bracket(const GenRef& x, const GenRef& y);

/// Same table with the central k dropped: the loop-algebra bracket (the
/// 2-cochain machinery lives on the algebra without its extension).
LieElement loop_bracket(const GenRef& x, const GenRef& y);

/// Bilinear extension of bracket.
LieElement bracket_lin(const LieElement& x, const LieElement& y);

/// Invariant symmetric form on kinds: (h|h) = 1, all else 0.
Scalar invariant_form(const GenRef& x, const GenRef& y);

/// Loop degree of a homogeneous element: n if every term has mode n (k counts
/// as mode 0), nullopt if mixed. Throws std::domain_error on the zero element.
std::optional<std::int64_t> loop_degree(const LieElement& x);

/// Renders like `2*e(0) - 1/3*h(-2) + k`.
std::string to_string(const LieElement& x);

/// Parses the same grammar; whitespace-insensitive.
/// Throws std::invalid_argument on malformed input.
LieElement parse_lie_element(const std::string& text);

/// Parses `e(3)`, `h(-2)`, `k`.
GenRef parse_genref(const std::string& text);

}  // namespace agelab
