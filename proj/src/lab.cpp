#include "agelab/lab.hpp"

#include <algorithm>
#include <stdexcept>

#include "agelab/lie.hpp"
#include "agelab/linalg.hpp"
#include "agelab/rng.hpp"
#include "agelab/sampling.hpp"

namespace agelab::lab {

namespace {

/// Assigns stable column indices to monomials as they appear.
class MonoIndexer {
 public:
  std::size_t index_of(const PbwMonomial& m) {
    auto [it, fresh] = idx_.try_emplace(m, monos_.size());
    if (fresh) monos_.push_back(m);
    return it->second;
  }
  std::map<std::size_t, Scalar> sparse_row(const ModuleElement& v) {
    std::map<std::size_t, Scalar> row;
    for (const auto& [m, c] : v.terms()) row[index_of(m)] = c;
    return row;
  }
  const std::vector<PbwMonomial>& monomials() const { return monos_; }

 private:
  std::map<PbwMonomial, std::size_t, PbwLess> idx_;
  std::vector<PbwMonomial> monos_;
};

std::vector<GenRef> positive_gens(std::int64_t window) {
  std::vector<GenRef> out;
  for (Kind k : {Kind::E, Kind::P, Kind::Q, Kind::H, Kind::Z})
    for (std::int64_t m = 1; m <= window; ++m) out.push_back({k, m});
  return out;
}

/// Kernel of the map (c_1..c_n) -> sum c_j act(x, b_j) over all x in ops,
/// optionally reducing images modulo a row space first.
std::vector<ModuleElement> annihilator_basis(const ModuleSpec& spec,
                                             const std::vector<PbwMonomial>& basis,
                                             const std::vector<GenRef>& ops,
                                             const SparseEliminator* modulo) {
  MonoIndexer indexer;
  // images[j] per op, as sparse rows over the shared index space
  RatMat constraints(basis.size());
  for (const GenRef& x : ops) {
    std::vector<std::map<std::size_t, Scalar>> images;
    images.reserve(basis.size());
    std::size_t max_index = 0;
    for (const auto& b : basis) {
      auto row = indexer.sparse_row(act(spec, x, ModuleElement(b)));
      if (modulo) modulo->reduce_sparse(row);
      if (!row.empty()) max_index = std::max(max_index, row.rbegin()->first);
      images.push_back(std::move(row));
    }
    // one constraint row per arising monomial index
    std::vector<bool> touched(max_index + 1, false);
    for (const auto& row : images)
      for (const auto& [i, c] : row) touched[i] = true;
    for (std::size_t i = 0; i <= max_index; ++i) {
      if (!touched[i]) continue;
      RatVec crow(basis.size(), Scalar(0));
      for (std::size_t j = 0; j < basis.size(); ++j) {
        auto it = images[j].find(i);
        if (it != images[j].end()) crow[j] = it->second;
      }
      constraints.add_row(std::move(crow));
    }
  }
  std::vector<ModuleElement> out;
  for (const auto& kv : kernel_basis(std::move(constraints))) {
    ModuleElement u;
    for (std::size_t j = 0; j < basis.size(); ++j) u.add(basis[j], kv[j]);
    out.push_back(std::move(u));
  }
  return out;
}

}  // namespace

ModuleElement apply_op(const ModuleSpec& spec, const DescentOp& op, const ModuleElement& v) {
  ModuleElement out = act(spec, op.gen, v);
  if (op.shift != 0) out.add(v, -op.shift);
  return out;
}

std::vector<ModuleElement> find_singular(const ModuleSpec& spec, std::int64_t grade,
                                         std::int64_t window) {
  if (!spec.graded) throw std::domain_error("find_singular: module is not graded");
  if (grade < 1) throw std::invalid_argument("find_singular: grade must be >= 1");
  const auto basis = enumerate_grade_component(spec, grade, window);
  if (basis.empty()) return {};
  return annihilator_basis(spec, basis, positive_gens(window), nullptr);
}

std::vector<ModuleElement> find_primitive_mod(const ModuleSpec& spec, std::int64_t grade,
                                              std::int64_t window,
                                              const std::vector<ModuleElement>& gens,
                                              std::int64_t word_len) {
  if (!spec.graded) throw std::domain_error("find_primitive_mod: module is not graded");
  if (grade < 1) throw std::invalid_argument("find_primitive_mod: grade must be >= 1");

  // truncated submodule span: words of length <= word_len over window modes
  MonoIndexer indexer;
  SparseEliminator span;
  std::vector<GenRef> letters;
  for (Kind k : {Kind::E, Kind::P, Kind::Q, Kind::H, Kind::Z})
    for (std::int64_t m = -window; m <= window; ++m) letters.push_back({k, m});

  std::vector<std::pair<ModuleElement, std::int64_t>> frontier;
  for (const auto& g : gens) {
    if (g.is_zero()) continue;
    if (span.add_row(indexer.sparse_row(g))) frontier.emplace_back(g, 0);
  }
  for (std::size_t qi = 0; qi < frontier.size(); ++qi) {
    const auto [elem, len] = frontier[qi];
    if (len >= word_len) continue;
    for (const GenRef& x : letters) {
      ModuleElement img = act(spec, x, elem);
      if (img.is_zero()) continue;
      if (span.add_row(indexer.sparse_row(img))) frontier.emplace_back(std::move(img), len + 1);
    }
  }

  const auto basis = enumerate_grade_component(spec, grade, window);
  if (basis.empty()) return {};
  auto solutions = annihilator_basis(spec, basis, positive_gens(window), &span);

  // drop representatives already inside the span, keep the rest independent
  // of it (and of each other)
  std::vector<ModuleElement> out;
  SparseEliminator quotient = span;
  for (auto& u : solutions)
    if (quotient.add_row(indexer.sparse_row(u))) out.push_back(std::move(u));
  return out;
}

namespace {

DegTuple vacuum_deg(const ModuleElement& v) {
  if (v.is_zero()) throw std::domain_error("deg(0) is not defined");
  DegTuple best;
  best.order = DegOrder::VacuumRevlex;
  bool first = true;
  for (const auto& [m, c] : v.terms()) {
    MultiIndex mi;
    for (const auto& [g, e] : m.exps) {
      if (g.kind != Kind::H || g.mode >= 0)
        throw std::invalid_argument("element is not supported on the negative h-block");
      mi.bump(-g.mode, e);
    }
    DegTuple cur{DegOrder::VacuumRevlex, {mi}, 0};
    if (first || deg_cmp(cur, best) > 0) best = std::move(cur);
    first = false;
  }
  return best;
}

std::optional<std::int64_t> z_pivot(const ModuleSpec& spec) {
  std::optional<std::int64_t> pivot;
  for (const auto& [g, val] : spec.functional().values) {
    if (g.kind != Kind::Z || val == 0) continue;
    if (!pivot) pivot = g.mode;
    else if (spec.anchor == Anchor::Up ? g.mode > *pivot : g.mode < *pivot) pivot = g.mode;
  }
  return pivot;
}

DegTuple drop_unit(const DegTuple& deg, std::size_t part, std::int64_t pos) {
  DegTuple out = deg;
  out.parts[part] = sub(out.parts[part], MultiIndex::unit(pos));
  return out;
}

}  // namespace

DegreeStepReport verify_degree_step(const ModuleSpec& spec, DegreeStepCase step_case,
                                    const ModuleElement& v) {
  if (v.is_zero()) throw std::invalid_argument("degree step: zero element has no degree");
  DegreeStepReport rep;

  const auto finish = [&](const DegTuple& predicted, std::optional<std::int64_t> anchor) {
    rep.predicted = predicted;
    const ModuleElement next = apply_op(spec, rep.op, v);
    if (next.is_zero()) {
      rep.ok = false;
      rep.note = "operator annihilated the element";
      return rep;
    }
    rep.actual = step_case == DegreeStepCase::VacuumH ? vacuum_deg(next)
                                                      : deg_of(spec, next, anchor);
    rep.ok = rep.actual == rep.predicted;
    return rep;
  };

  switch (step_case) {
    case DegreeStepCase::VacuumH: {
      const DegTuple deg = vacuum_deg(v);
      if (deg.is_zero()) throw std::invalid_argument("h-step needs a nonempty h-block");
      const std::int64_t r = deg.parts[0].entries().begin()->first;
      rep.op = {GenRef::h(r), 0};
      return finish(drop_unit(deg, 0, r), std::nullopt);
    }
    case DegreeStepCase::ImaginaryP:
    case DegreeStepCase::ImaginaryH: {
      if (spec.deg_order != DegOrder::ImaginaryPrincipal)
        throw std::invalid_argument("imaginary steps need the principal pair order");
      const DegTuple deg = deg_of(spec, v);
      const std::int64_t d = deg.anchor;
      if (step_case == DegreeStepCase::ImaginaryP) {
        if (deg.parts[0].is_zero())
          throw std::invalid_argument("p-step needs a nonempty q-block");
        const auto r = z_pivot(spec);
        if (!r) throw std::invalid_argument("p-step needs a nonzero z-pivot");
        const std::int64_t a = deg.parts[0].entries().begin()->first;
        rep.op = {GenRef::p(spec.anchor == Anchor::Up ? a - d + *r : *r - d - a), 0};
        return finish(drop_unit(deg, 0, a), d);
      }
      if (!deg.parts[0].is_zero() || deg.parts[1].is_zero())
        throw std::invalid_argument("h-step needs an empty q-block and a nonempty h-block");
      const std::int64_t b = deg.parts[1].entries().begin()->first;
      rep.op = {GenRef::h(b), 0};
      return finish(drop_unit(deg, 1, b), d);
    }
    case DegreeStepCase::InducedP:
    case DegreeStepCase::InducedE:
    case DegreeStepCase::InducedQ:
    case DegreeStepCase::InducedH: {
      if (spec.deg_order != DegOrder::InducedPrincipal)
        throw std::invalid_argument("induced steps need the principal quadruple order");
      const SubalgebraTriple& t = spec.nested().sub;
      const auto l = discover_l(t, *spec.nested().inner, 3, 3);
      if (!l) throw std::invalid_argument("no admissible level l for this induced module");
      const DegTuple deg = deg_of(spec, v);
      const MultiIndex &i = deg.parts[0], &j = deg.parts[1], &m = deg.parts[2],
                       &n = deg.parts[3];
      switch (step_case) {
        case DegreeStepCase::InducedP: {
          if (n.is_zero()) throw std::invalid_argument("p-step needs a nonempty h-block");
          const std::int64_t r = n.entries().begin()->first;
          rep.op = {GenRef::p(*l + r), 0};
          return finish(drop_unit(deg, 3, r), std::nullopt);
        }
        case DegreeStepCase::InducedE: {
          if (!n.is_zero() || m.is_zero())
            throw std::invalid_argument("e-step needs an empty h-block and a nonempty q-block");
          const std::int64_t a = m.entries().begin()->first;
          rep.op = {GenRef::e(a + *l - t.d3), 0};
          return finish(drop_unit(deg, 2, a), std::nullopt);
        }
        case DegreeStepCase::InducedQ: {
          if (!n.is_zero() || !m.is_zero() || j.is_zero())
            throw std::invalid_argument("q-step needs empty h/q-blocks and a nonempty e-block");
          const std::int64_t b = j.entries().begin()->first;
          rep.op = {GenRef::q(b - t.d1 + *l), 0};
          return finish(drop_unit(deg, 1, b), std::nullopt);
        }
        default: {
          if (!n.is_zero() || !m.is_zero() || !j.is_zero() || i.is_zero())
            throw std::invalid_argument("h-step needs only the p-block nonempty");
          const std::int64_t c = i.entries().begin()->first;
          rep.op = {GenRef::h(c - t.d2 + *l), 0};
          return finish(drop_unit(deg, 0, c), std::nullopt);
        }
      }
    }
  }
  throw std::logic_error("unreachable degree step case");
}

bool replay(const ModuleSpec& spec, const Certificate& cert) {
  ModuleElement cur = cert.input;
  const auto deg = [&](const ModuleElement& e) { return deg_of(spec, e, cert.anchor); };
  for (const auto& step : cert.steps) {
    if (cur.is_zero()) return false;
    if (!(deg(cur) == step.before)) return false;
    cur = apply_op(spec, step.op, cur);
    if (cur.is_zero()) return false;
    if (!(deg(cur) == step.after)) return false;
    if (deg_cmp(step.after, step.before) >= 0) return false;
  }
  return cur == cert.terminal;
}

Certificate descend_to_vacuum(const ModuleSpec& spec, const ModuleElement& v,
                              std::int64_t budget) {
  if (v.is_zero()) throw std::invalid_argument("descend_to_vacuum: zero element");
  Certificate cert;
  cert.input = v;
  cert.budget = budget > 0 ? budget : std::max<std::int64_t>(10, 10 * v.total_degree());

  const auto fail = [&](ModuleElement cur, const std::string& why) {
    cert.terminal = std::move(cur);
    cert.status = CertStatus::Obstruction;
    cert.note = why;
    return cert;
  };

  if (spec.schedule == Schedule::Trivial) {
    cert.terminal = v;
    cert.status = CertStatus::Verified;
    return cert;
  }
  if (spec.schedule == Schedule::None)
    throw std::domain_error("module '" + spec.name + "' has no proven descent schedule");

  // schedule-specific data
  std::optional<std::int64_t> l;
  if (spec.schedule == Schedule::Induced) {
    l = discover_l(spec.nested().sub, *spec.nested().inner, 3, 3);
    if (!l) return fail(v, "no admissible level l: induction conditions not met");
  }
  std::optional<std::int64_t> pivot;
  Scalar central(0);
  if (spec.schedule == Schedule::Imaginary) {
    pivot = z_pivot(spec);
    central = spec.functional().value(GenRef::k());
    cert.anchor = deg_of(spec, v).anchor;
  }

  ModuleElement cur = v;
  while (true) {
    if (static_cast<std::int64_t>(cert.steps.size()) >= cert.budget) {
      cert.terminal = cur;
      cert.status = CertStatus::BudgetExhausted;
      cert.note = "step budget exhausted before reaching the cyclic vector";
      return cert;
    }
    const DegTuple deg = deg_of(spec, cur, cert.anchor);
    if (deg.is_zero()) {
      cert.terminal = cur;
      cert.status = CertStatus::Verified;
      return cert;
    }

    DescentOp op;
    DegTuple predicted = deg;
    switch (spec.schedule) {
      case Schedule::VacuumH: {
        const std::int64_t r = deg.parts[0].entries().begin()->first;
        op = {GenRef::h(r), 0};
        predicted = drop_unit(deg, 0, r);
        break;
      }
      case Schedule::Imaginary: {
        if (!deg.parts[0].is_zero()) {
          if (!pivot) return fail(cur, "z-character has no pivot: q-block step unavailable");
          const std::int64_t a = deg.parts[0].entries().begin()->first;
          const std::int64_t d = deg.anchor;
          op = {GenRef::p(spec.anchor == Anchor::Up ? a - d + *pivot : *pivot - d - a), 0};
          predicted = drop_unit(deg, 0, a);
        } else {
          if (central == 0) return fail(cur, "central charge is zero: h-block step unavailable");
          const std::int64_t b = deg.parts[1].entries().begin()->first;
          op = {GenRef::h(b), 0};
          predicted = drop_unit(deg, 1, b);
        }
        break;
      }
      case Schedule::WhittakerM: {
        const Scalar phi_p = spec.functional().value(GenRef::p(0));
        if (phi_p == 0) return fail(cur, "phi(p(0)) = 0: no descent through the h-exponent");
        const MultiIndex& t = deg.parts[0];
        if (t.at(1) > 0) {
          op = {GenRef::p(0), phi_p};
          predicted = drop_unit(deg, 0, 1);
        } else if (t.at(2) > 0) {
          op = {GenRef::q(1), spec.functional().value(GenRef::q(1))};
          predicted = drop_unit(deg, 0, 2);
        } else {
          op = {GenRef::h(1), spec.functional().value(GenRef::h(1))};
          predicted = drop_unit(deg, 0, 3);
        }
        break;
      }
      case Schedule::Induced: {
        const SubalgebraTriple& t = spec.nested().sub;
        const MultiIndex &i = deg.parts[0], &j = deg.parts[1], &m = deg.parts[2],
                         &n = deg.parts[3];
        if (!n.is_zero()) {
          const std::int64_t r = n.entries().begin()->first;
          op = {GenRef::p(*l + r), 0};
          predicted = drop_unit(deg, 3, r);
        } else if (!m.is_zero()) {
          const std::int64_t a = m.entries().begin()->first;
          op = {GenRef::e(a + *l - t.d3), 0};
          predicted = drop_unit(deg, 2, a);
        } else if (!j.is_zero()) {
          const std::int64_t b = j.entries().begin()->first;
          op = {GenRef::q(b - t.d1 + *l), 0};
          predicted = drop_unit(deg, 1, b);
        } else {
          const std::int64_t c = i.entries().begin()->first;
          op = {GenRef::h(c - t.d2 + *l), 0};
          predicted = drop_unit(deg, 0, c);
        }
        break;
      }
      default:
        throw std::logic_error("unreachable schedule");
    }

    ModuleElement next = apply_op(spec, op, cur);
    if (next.is_zero()) return fail(cur, "descent step annihilated the element");
    const DegTuple after = deg_of(spec, next, cert.anchor);
    if (!(after == predicted))
      return fail(cur, "degree after " + to_string(op.gen) + " does not match the predicted drop");
    if (deg_cmp(after, deg) >= 0) return fail(cur, "descent step failed to lower the degree");
    cert.steps.push_back({op, deg, after});
    cur = std::move(next);
  }
}

ConditionsReport check_induction_conditions(const SubalgebraTriple& t, const ModuleSpec& inner,
                                            std::int64_t l, std::int64_t depth,
                                            std::int64_t window) {
  if (l <= t.d2) throw std::invalid_argument("check_induction_conditions: need l > d2");
  if (!(inner.carrier.min_mode == t.bounds().min_mode))
    throw std::invalid_argument("inner module is not defined over the subalgebra");

  ConditionsReport rep;
  rep.l = l;
  rep.depth = depth;
  rep.window = window;
  const auto basis = enumerate_monomials(inner, depth, window);
  rep.basis_size = static_cast<std::int64_t>(basis.size());

  // (a) injectivity of p_l on the truncated basis span
  {
    MonoIndexer indexer;
    RatMat mat(basis.size());
    std::vector<std::map<std::size_t, Scalar>> images;
    std::size_t max_index = 0;
    for (const auto& b : basis) {
      auto row = indexer.sparse_row(act(inner, GenRef::p(l), ModuleElement(b)));
      if (!row.empty()) max_index = std::max(max_index, row.rbegin()->first);
      images.push_back(std::move(row));
    }
    for (std::size_t i = 0; i <= max_index; ++i) {
      RatVec crow(basis.size(), Scalar(0));
      bool any = false;
      for (std::size_t j = 0; j < basis.size(); ++j) {
        auto it = images[j].find(i);
        if (it != images[j].end()) {
          crow[j] = it->second;
          any = true;
        }
      }
      if (any) mat.add_row(std::move(crow));
    }
    rep.injective = rank(std::move(mat)) == basis.size();
  }

  // (b) the five annihilation families
  for (std::int64_t i = 1; i <= depth + window; ++i) {
    const GenRef gens[] = {GenRef::p(l + i), GenRef::z(l + t.d2 - t.d1 + i - 1),
                           GenRef::e(l - t.d3 + i), GenRef::q(l - t.d1 + i),
                           GenRef::h(l - t.d2 + i)};
    for (const GenRef& g : gens) {
      if (!t.contains(g)) {
        rep.annihilated = false;
        rep.failures.push_back(g);
        rep.notes.push_back(to_string(g) +
                            " lies outside the subalgebra and acts freely on the induced module");
        continue;
      }
      for (const auto& b : basis) {
        if (!act(inner, g, ModuleElement(b)).is_zero()) {
          rep.annihilated = false;
          rep.failures.push_back(g);
          rep.notes.push_back(to_string(g) + " does not annihilate the inner module");
          break;
        }
      }
    }
  }
  // dedupe failures, keep order
  std::vector<GenRef> unique;
  for (const auto& g : rep.failures)
    if (std::find(unique.begin(), unique.end(), g) == unique.end()) unique.push_back(g);
  rep.failures = std::move(unique);
  return rep;
}

std::optional<std::int64_t> discover_l(const SubalgebraTriple& t, const ModuleSpec& inner,
                                       std::int64_t depth, std::int64_t window,
                                       std::int64_t span) {
  for (std::int64_t l = t.d2 + 1; l <= t.d2 + span; ++l)
    if (check_induction_conditions(t, inner, l, depth, window).ok()) return l;
  return std::nullopt;
}

std::vector<ModuleElement> compute_N_subspace(const ModuleSpec& spec, std::int64_t x1,
                                              std::int64_t x2, std::int64_t x3, std::int64_t x4,
                                              std::int64_t window, std::int64_t depth) {
  const auto basis = enumerate_monomials(spec, depth, window);
  std::vector<GenRef> ops;
  for (std::int64_t i = 1; i <= window; ++i) {
    ops.push_back(GenRef::p(x1 + i));
    ops.push_back(GenRef::e(x2 + i));
    ops.push_back(GenRef::h(x3 + i));
    ops.push_back(GenRef::q(x4 + i));
  }
  return annihilator_basis(spec, basis, ops, nullptr);
}

ModuleElement project_to_quotient(const ModuleSpec& quotient, const ModuleElement& parent_elem) {
  ModuleElement out;
  for (const auto& [m, c] : parent_elem.terms()) {
    bool keep = true;
    for (const auto& [g, e] : m.exps) {
      if (!quotient.carrier.contains(g) || classify(quotient, g) != Classification::Complement) {
        keep = false;
        break;
      }
    }
    if (keep) {
      PbwMonomial copy;
      copy.exps = m.exps;
      out.add(std::move(copy), c);
    }
  }
  return out;
}

bool verify_quotient_iso(const ModuleSpec& quotient, const ModuleSpec& parent,
                         const std::vector<ModuleElement>& submodule_gens, std::int64_t samples,
                         std::uint64_t seed) {
  for (const auto& g : submodule_gens)
    if (!project_to_quotient(quotient, g).is_zero()) return false;

  SplitMix64 rng(seed);
  for (std::int64_t s = 0; s < samples; ++s) {
    const ModuleElement u(random_monomial(parent, 4, 3, rng));
    const GenRef x = random_genref(parent, 3, rng);
    const ModuleElement lhs = project_to_quotient(quotient, act(parent, x, u));
    const ModuleElement rhs = act(quotient, x, project_to_quotient(quotient, u));
    if (!(lhs == rhs)) return false;
  }
  return true;
}

}  // namespace agelab::lab
