#include "agelab/sampling.hpp"

#include <algorithm>
#include <stdexcept>

namespace agelab {

namespace {

// Free generators of one family slot with modes within `window` of the
// threshold, newest (largest mode) first.
std::vector<GenRef> slot_gens(const ModuleSpec& spec, const FamilySlot& slot,
                              std::int64_t window) {
  const std::int64_t hi = slot.upper ? *slot.upper - 1 : window;
  const auto& lb = spec.carrier.min_mode[static_cast<std::size_t>(slot.kind)];
  std::int64_t lo = (slot.upper ? *slot.upper : 0) - window;
  if (!slot.upper) lo = -window;
  if (lb) lo = std::max(lo, *lb);
  std::vector<GenRef> gens;
  for (std::int64_t m = hi; m >= lo; --m) gens.push_back({slot.kind, m});
  return gens;
}

std::vector<GenRef> all_slot_gens(const ModuleSpec& spec, std::int64_t window) {
  std::vector<GenRef> gens;
  for (const auto& slot : spec.complement) {
    const auto part = slot_gens(spec, slot, window);
    gens.insert(gens.end(), part.begin(), part.end());
  }
  return gens;
}

}  // namespace

GenRef random_genref(const ModuleSpec& spec, std::int64_t window, SplitMix64& rng) {
  for (int tries = 0; tries < 64; ++tries) {
    const Kind kind = static_cast<Kind>(rng.range(0, 4));
    const std::int64_t mode = rng.range(-window, window);
    const GenRef g{kind, mode};
    if (spec.carrier.contains(g)) return g;
  }
  throw std::runtime_error("random_genref: carrier rejected every draw");
}

PbwMonomial random_monomial(const ModuleSpec& spec, std::int64_t max_degree, std::int64_t window,
                            SplitMix64& rng) {
  PbwMonomial m;
  std::int64_t degree = rng.range(0, max_degree);
  std::int64_t inner_degree = 0;
  if (spec.is_nested()) {
    inner_degree = rng.range(0, degree);
    degree -= inner_degree;
  }
  const auto gens = all_slot_gens(spec, window);
  if (!gens.empty())
    for (std::int64_t i = 0; i < degree; ++i)
      ++m.exps[gens[static_cast<std::size_t>(rng.range(0, static_cast<std::int64_t>(gens.size()) - 1))]];
  if (spec.is_nested())
    m.inner = std::make_shared<const PbwMonomial>(
        random_monomial(*spec.nested().inner, inner_degree, window, rng));
  return m;
}

ModuleElement random_element(const ModuleSpec& spec, std::int64_t max_terms,
                             std::int64_t max_degree, std::int64_t window, SplitMix64& rng) {
  ModuleElement out;
  const std::int64_t terms = rng.range(1, max_terms);
  for (std::int64_t t = 0; t < terms; ++t)
    out.add(random_monomial(spec, max_degree, window, rng), rng.small_scalar());
  return out;
}

namespace {

void extend(const std::vector<GenRef>& gens, std::size_t from, std::int64_t budget,
            PbwMonomial& cur, std::vector<PbwMonomial>& out) {
  out.push_back(cur);
  for (std::size_t i = from; i < gens.size(); ++i) {
    if (budget <= 0) break;
    ++cur.exps[gens[i]];
    extend(gens, i, budget - 1, cur, out);
    if (--cur.exps[gens[i]] == 0) cur.exps.erase(gens[i]);
  }
}

}  // namespace

std::vector<PbwMonomial> enumerate_monomials(const ModuleSpec& spec, std::int64_t max_degree,
                                             std::int64_t window) {
  const auto gens = all_slot_gens(spec, window);
  std::vector<PbwMonomial> outer;
  PbwMonomial cur;
  extend(gens, 0, max_degree, cur, outer);
  if (!spec.is_nested()) return outer;

  std::vector<PbwMonomial> out;
  for (const auto& o : outer) {
    const std::int64_t used = o.total_degree();
    const auto inners =
        enumerate_monomials(*spec.nested().inner, max_degree - used, window);
    for (const auto& nu : inners) {
      PbwMonomial m = o;
      m.inner = std::make_shared<const PbwMonomial>(nu);
      out.push_back(std::move(m));
    }
  }
  return out;
}

std::vector<PbwMonomial> enumerate_grade_component(const ModuleSpec& spec, std::int64_t grade,
                                                   std::int64_t window) {
  if (!spec.graded) throw std::domain_error("grade component of an ungraded module");
  std::vector<GenRef> gens;
  for (const auto& slot : spec.complement)
    for (std::int64_t m = -1; m >= -window; --m)
      if ((!slot.upper || m < *slot.upper) && spec.carrier.contains({slot.kind, m}))
        gens.push_back({slot.kind, m});

  std::vector<PbwMonomial> out;
  PbwMonomial cur;
  const auto rec = [&](auto&& self, std::size_t from, std::int64_t remaining) -> void {
    if (remaining == 0) {
      out.push_back(cur);
      return;
    }
    for (std::size_t i = from; i < gens.size(); ++i) {
      const std::int64_t w = -gens[i].mode;
      if (w > remaining) continue;
      ++cur.exps[gens[i]];
      self(self, i, remaining - w);
      if (--cur.exps[gens[i]] == 0) cur.exps.erase(gens[i]);
    }
  };
  rec(rec, 0, grade);
  std::sort(out.begin(), out.end(), PbwLess{});
  return out;
}

}  // namespace agelab
