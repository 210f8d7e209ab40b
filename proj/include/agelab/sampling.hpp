#pragma once

#include <cstdint>
#include <vector>

#include "agelab/module_spec.hpp"
#include "agelab/pbw.hpp"
#include "agelab/rng.hpp"

namespace agelab {

/// Random loop generator (kinds e,p,q,h,z) with mode in [-window, window],
/// clipped to the spec's carrier.
GenRef random_genref(const ModuleSpec& spec, std::int64_t window, SplitMix64& rng);

/// Random PBW monomial: up to max_degree complement letters with modes within
/// `window` of each family's threshold; nested specs split the degree between
/// the outer word and the inner monomial.
PbwMonomial random_monomial(const ModuleSpec& spec, std::int64_t max_degree, std::int64_t window,
                            SplitMix64& rng);

/// Random element with 1..max_terms monomials and small rational coefficients.
ModuleElement random_element(const ModuleSpec& spec, std::int64_t max_terms,
                             std::int64_t max_degree, std::int64_t window, SplitMix64& rng);

/// All monomials of total degree <= max_degree with modes within `window` of
/// each family threshold (intersected with the carrier). Deterministic order.
std::vector<PbwMonomial> enumerate_monomials(const ModuleSpec& spec, std::int64_t max_degree,
                                             std::int64_t window);

/// All monomials of the given grade (graded specs only) with modes in
/// [-window, -1].
std::vector<PbwMonomial> enumerate_grade_component(const ModuleSpec& spec, std::int64_t grade,
                                                   std::int64_t window);

}  // namespace agelab
