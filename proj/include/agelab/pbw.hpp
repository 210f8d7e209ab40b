#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "agelab/lie.hpp"
#include "agelab/module_spec.hpp"
#include "agelab/multi_index.hpp"
#include "agelab/scalar.hpp"

namespace agelab {

/// Ordered monomial in complement generators applied to the cyclic vector.
/// For modules induced from an inner module, `inner` tags the inner basis
/// monomial the outer word is tensored with; it is null for functional bases.
struct PbwMonomial {
  std::map<GenRef, std::int64_t> exps;
  std::shared_ptr<const PbwMonomial> inner;

  std::int64_t total_degree() const;
  bool operator==(const PbwMonomial& o) const;
};

std::strong_ordering pbw_cmp(const PbwMonomial& a, const PbwMonomial& b);

struct PbwLess {
  bool operator()(const PbwMonomial& a, const PbwMonomial& b) const {
    return pbw_cmp(a, b) < 0;
  }
};

/// Finite linear combination of PBW monomials; canonical form (no zeros).
class ModuleElement {
 public:
  ModuleElement() = default;
  explicit ModuleElement(PbwMonomial m, Scalar c = 1) { add(std::move(m), std::move(c)); }

  void add(PbwMonomial m, const Scalar& c);
  void add(const ModuleElement& other, const Scalar& c = 1);
  void scale(const Scalar& c);

  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const std::map<PbwMonomial, Scalar, PbwLess>& terms() const { return terms_; }
  std::int64_t total_degree() const;  // sum of exponent sums over all terms

  bool operator==(const ModuleElement&) const = default;

 private:
  std::map<PbwMonomial, Scalar, PbwLess> terms_;
};

/// The cyclic vector as an element (1 | v, or 1 (x) [ 1 | w ] when nested).
ModuleElement vacuum(const ModuleSpec& spec);
PbwMonomial vacuum_monomial(const ModuleSpec& spec);

/// The word a monomial abbreviates: families in priority order, modes
/// descending within each family.
std::vector<GenRef> canonical_word(const ModuleSpec& spec, const PbwMonomial& m);

/// Action of a generator on a module element, by normal ordering against the
/// bracket table with base-case evaluation at the cyclic vector. Total: every
/// bracket shortens the word, so the rewriting terminates.
ModuleElement act(const ModuleSpec& spec, const GenRef& x, const ModuleElement& v);

/// Linear extension to algebra elements (k included).
ModuleElement act_lin(const ModuleSpec& spec, const LieElement& x, const ModuleElement& v);

/// Fold of act, rightmost letter first: act_word([x,y], v) = act(x, act(y, v)).
ModuleElement act_word(const ModuleSpec& spec, const std::vector<GenRef>& word,
                       const ModuleElement& v);

/// Grade of a monomial (minus the sum of its modes, counted with exponents).
/// Throws std::domain_error for ungraded specs.
std::int64_t grade(const ModuleSpec& spec, const PbwMonomial& m);

/// Degree tuple under a module's declared order.
struct DegTuple {
  DegOrder order = DegOrder::None;
  std::vector<MultiIndex> parts;
  std::int64_t anchor = 0;  // q-block anchoring (imaginary orders only)

  bool is_zero() const;
  bool operator==(const DegTuple&) const = default;
};

std::strong_ordering deg_cmp(const DegTuple& a, const DegTuple& b);
std::string to_string(const DegTuple& d);

/// Maximal projected tuple of the support under the spec's declared order.
/// Throws std::domain_error on the zero element ("deg(0) is not defined") and
/// for specs with no declared order. For imaginary orders the q-block anchor
/// is recovered from the element unless `anchor` pins it (descents fix the
/// anchor of their input once and reuse it for every step).
DegTuple deg_of(const ModuleSpec& spec, const ModuleElement& v,
                std::optional<std::int64_t> anchor = std::nullopt);

/// Renders like `3/2 * p(-1)^2 e(-1) q(-2) | w`; nested monomials render as
/// `p(-1) (tensor) [ e(-1) | w ]` with the UTF-8 tensor sign.
std::string to_string(const ModuleSpec& spec, const ModuleElement& v);
std::string to_string(const ModuleSpec& spec, const PbwMonomial& m);

/// Parses the same grammar ('@' is accepted for the tensor sign).
ModuleElement parse_module_element(const ModuleSpec& spec, const std::string& text);

}  // namespace agelab
