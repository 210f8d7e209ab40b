#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "agelab/module_spec.hpp"
#include "agelab/pbw.hpp"

namespace agelab::lab {

/// Affine descent operator v -> act(gen, v) - shift * v.
struct DescentOp {
  GenRef gen;
  Scalar shift = 0;
};

ModuleElement apply_op(const ModuleSpec& spec, const DescentOp& op, const ModuleElement& v);

struct DescentStep {
  DescentOp op;
  DegTuple before;
  DegTuple after;
};

enum class CertStatus { Verified, Obstruction, BudgetExhausted };

/// A replayable transcript: applying the steps to `input` through act yields
/// `terminal`, with strictly decreasing degree tuples along the way.
struct Certificate {
  ModuleElement input;
  std::vector<DescentStep> steps;
  ModuleElement terminal;
  CertStatus status = CertStatus::Obstruction;
  std::string note;
  std::int64_t budget = 0;
  std::optional<std::int64_t> anchor;  // fixed q-anchor, when one applies
};

/// Replays the certificate; true iff every step's degrees match, descent is
/// strict, and the terminal element is reproduced exactly.
bool replay(const ModuleSpec& spec, const Certificate& cert);

/// Exact basis of the grade component's singular vectors: elements killed by
/// every positive-mode generator with mode <= window. Requires a graded spec
/// and grade >= 1.
std::vector<ModuleElement> find_singular(const ModuleSpec& spec, std::int64_t grade,
                                         std::int64_t window);

/// Basis of vectors whose positive-part images fall inside the (truncated)
/// submodule generated by `gens`, excluding vectors already in that span.
/// The submodule is spanned by words of length <= word_len over generators
/// with modes in [-window, window] applied to the given elements.
std::vector<ModuleElement> find_primitive_mod(const ModuleSpec& spec, std::int64_t grade,
                                              std::int64_t window,
                                              const std::vector<ModuleElement>& gens,
                                              std::int64_t word_len = 4);

/// One checkable degree-drop claim, named by the operator it applies.
enum class DegreeStepCase {
  VacuumH,     ///< h-block modules: h_r lowers the least position
  ImaginaryP,  ///< q-block removal through the z-pivot
  ImaginaryH,  ///< h-block removal through the central charge
  InducedP,
  InducedE,
  InducedQ,
  InducedH
};

struct DegreeStepReport {
  bool ok = false;
  DescentOp op;
  DegTuple predicted;
  DegTuple actual;
  std::string note;
};

/// Applies the case's prescribed operator to v and compares the resulting
/// degree with the predicted tuple. Throws std::invalid_argument when v does
/// not match the case's shape hypothesis.
DegreeStepReport verify_degree_step(const ModuleSpec& spec, DegreeStepCase step_case,
                                    const ModuleElement& v);

/// Walks v down to a nonzero multiple of the cyclic vector (or, for induced
/// modules, into 1 (x) V) along the module's descent schedule. budget = 0
/// picks the default 10 x (total exponent sum of v). Budget exhaustion is
/// reported, not thrown; an inapplicable schedule or a failed step yields an
/// Obstruction certificate.
Certificate descend_to_vacuum(const ModuleSpec& spec, const ModuleElement& v,
                              std::int64_t budget = 0);

struct ConditionsReport {
  std::int64_t l = 0;
  std::int64_t depth = 0;
  std::int64_t window = 0;
  std::int64_t basis_size = 0;
  bool injective = false;   ///< (a), verified on the depth-truncated basis
  bool annihilated = true;  ///< (b), exact on the same basis
  std::vector<GenRef> failures;
  std::vector<std::string> notes;
  bool ok() const { return injective && annihilated; }
};

/// Checks the induction hypotheses for Ind over the subalgebra of t at level l:
/// (a) p_l injective on the inner module (up to the depth-truncated basis),
/// (b) p_{l+i}, z_{l+d2-d1+i-1}, e_{l-d3+i}, q_{l-d1+i}, h_{l-d2+i} all act as
/// zero for i = 1..depth+window. A (b)-generator outside the subalgebra counts
/// as a failure (it acts freely on the induced module). Requires l > d2.
ConditionsReport check_induction_conditions(const SubalgebraTriple& t, const ModuleSpec& inner,
                                            std::int64_t l, std::int64_t depth,
                                            std::int64_t window = 4);

/// Least admissible l in (d2, d2 + span] for which both conditions hold.
std::optional<std::int64_t> discover_l(const SubalgebraTriple& t, const ModuleSpec& inner,
                                       std::int64_t depth, std::int64_t window = 4,
                                       std::int64_t span = 8);

/// Basis of the truncated joint kernel
///   { v : p_{x1+i} v = e_{x2+i} v = h_{x3+i} v = q_{x4+i} v = 0, i = 1..window }
/// over monomials of total degree <= depth with modes within `window` of each
/// family threshold.
std::vector<ModuleElement> compute_N_subspace(const ModuleSpec& spec, std::int64_t x1,
                                              std::int64_t x2, std::int64_t x3, std::int64_t x4,
                                              std::int64_t window, std::int64_t depth);

/// Checks the monomial-level quotient map (keep exactly the monomials all of
/// whose factors are free in the quotient) against the two actions:
/// project(act_parent(x, u)) == act_quotient(x, project(u)) on random samples.
/// Each declared submodule generator must project to zero (sanity).
bool verify_quotient_iso(const ModuleSpec& quotient, const ModuleSpec& parent,
                         const std::vector<ModuleElement>& submodule_gens, std::int64_t samples,
                         std::uint64_t seed);

/// The quotient projection used by verify_quotient_iso.
ModuleElement project_to_quotient(const ModuleSpec& quotient, const ModuleElement& parent_elem);

}  // namespace agelab::lab
