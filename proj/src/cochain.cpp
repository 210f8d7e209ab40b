#include "agelab/cochain.hpp"

#include <stdexcept>

#include "agelab/linalg.hpp"

namespace agelab {

namespace {

void require_loop_gen(const GenRef& g) {
  if (g.is_k()) throw std::invalid_argument("cochains live on the loop algebra: no k");
}

std::vector<GenRef> window_gens(std::int64_t window) {
  std::vector<GenRef> gens;
  for (Kind k : {Kind::E, Kind::P, Kind::Q, Kind::H, Kind::Z})
    for (std::int64_t m = -window; m <= window; ++m) gens.push_back({k, m});
  return gens;
}

}  // namespace

void Cochain1::set(const GenRef& g, const Scalar& v) {
  require_loop_gen(g);
  if (v == 0) vals_.erase(g);
  else vals_[g] = v;
}

Scalar Cochain1::get(const GenRef& g) const {
  auto it = vals_.find(g);
  return it == vals_.end() ? Scalar(0) : it->second;
}

Scalar Cochain1::eval(const LieElement& x) const {
  Scalar out(0);
  for (const auto& [g, c] : x.terms())
    if (!g.is_k()) out += c * get(g);
  return out;
}

void Cochain2::set(const GenRef& x, const GenRef& y, const Scalar& v) {
  require_loop_gen(x);
  require_loop_gen(y);
  if (x == y) {
    if (v != 0) throw std::invalid_argument("Cochain2: f(x,x) must be 0");
    return;
  }
  const bool flip = y < x;
  const auto key = flip ? std::make_pair(y, x) : std::make_pair(x, y);
  const Scalar stored = flip ? Scalar(-v) : v;
  if (stored == 0) vals_.erase(key);
  else vals_[key] = stored;
}

void Cochain2::add(const GenRef& x, const GenRef& y, const Scalar& v) {
  set(x, y, get(x, y) + v);
}

Scalar Cochain2::get(const GenRef& x, const GenRef& y) const {
  if (x == y) return 0;
  const bool flip = y < x;
  const auto key = flip ? std::make_pair(y, x) : std::make_pair(x, y);
  auto it = vals_.find(key);
  if (it == vals_.end()) return 0;
  return flip ? Scalar(-it->second) : it->second;
}

Scalar Cochain2::eval(const GenRef& x, const LieElement& y) const {
  Scalar out(0);
  for (const auto& [g, c] : y.terms())
    if (!g.is_k()) out += c * get(x, g);
  return out;
}

CochainFn standard_cocycle() {
  return [](const GenRef& x, const GenRef& y) -> Scalar {
    if (x.is_k() || y.is_k()) return 0;
    if (x.mode + y.mode != 0) return 0;
    return Scalar(x.mode) * invariant_form(x, y);
  };
}

CochainFn coboundary(const Cochain1& g) {
  return [g](const GenRef& x, const GenRef& y) -> Scalar { return g.eval(loop_bracket(x, y)); };
}

Cochain2 materialize(const CochainFn& f, std::int64_t window) {
  Cochain2 out;
  const auto gens = window_gens(window);
  for (std::size_t a = 0; a < gens.size(); ++a)
    for (std::size_t b = a + 1; b < gens.size(); ++b) out.set(gens[a], gens[b], f(gens[a], gens[b]));
  return out;
}

Cochain2 materialize_coboundary(const Cochain1& g) {
  // Support bound: brackets add modes, so |mode| of each argument is capped by
  // the largest |mode| in g's support plus that bound again.
  std::int64_t bound = 0;
  for (const auto& [gen, v] : g.values())
    if (std::abs(gen.mode) > bound) bound = std::abs(gen.mode);
  Cochain2 out;
  const auto gens = window_gens(2 * bound + 1);
  const auto fn = coboundary(g);
  for (std::size_t a = 0; a < gens.size(); ++a)
    for (std::size_t b = a + 1; b < gens.size(); ++b) {
      const Scalar v = fn(gens[a], gens[b]);
      if (v != 0) out.set(gens[a], gens[b], v);
    }
  return out;
}

namespace {

bool closure_safe(const GenRef& x, const GenRef& y, std::int64_t window) {
  if (loop_bracket(x, y).is_zero()) return true;
  const std::int64_t m = x.mode + y.mode;
  return -window <= m && m <= window;
}

Scalar cyclic_value(const Cochain2& f, const GenRef& x, const GenRef& y, const GenRef& z) {
  return f.eval(x, loop_bracket(y, z)) + f.eval(z, loop_bracket(x, y)) +
         f.eval(y, loop_bracket(z, x));
}

}  // namespace

CocycleCheck is_cocycle(const Cochain2& f, std::int64_t window) {
  if (window < 1) throw std::invalid_argument("is_cocycle: window must be >= 1");
  CocycleCheck out;
  const auto gens = window_gens(window);
  for (std::size_t a = 0; a < gens.size(); ++a)
    for (std::size_t b = a; b < gens.size(); ++b) {
      if (!closure_safe(gens[a], gens[b], window)) continue;
      for (std::size_t c = b; c < gens.size(); ++c) {
        if (!closure_safe(gens[a], gens[c], window) || !closure_safe(gens[b], gens[c], window))
          continue;
        if (cyclic_value(f, gens[a], gens[b], gens[c]) != 0) {
          out.ok = false;
          if (out.violations.size() < 16) out.violations.push_back({gens[a], gens[b], gens[c]});
        }
      }
    }
  return out;
}

NormalizedCocycle normalize_cocycle(const Cochain2& f, std::int64_t window) {
  if (!is_cocycle(f, window).ok)
    throw std::invalid_argument("normalize_cocycle: input fails the cocycle identity");

  std::int64_t bound = 2 * window;
  for (const auto& [key, v] : f.values()) {
    bound = std::max({bound, std::abs(key.first.mode), std::abs(key.second.mode)});
  }

  NormalizedCocycle out;
  const GenRef h0 = GenRef::h(0);
  const GenRef q0 = GenRef::q(0);
  for (std::int64_t m = -bound; m <= bound; ++m) {
    out.g.set(GenRef::e(m), f.get(h0, GenRef::e(m)) / 2);
    out.g.set(GenRef::p(m), f.get(h0, GenRef::p(m)));
    out.g.set(GenRef::q(m), -f.get(h0, GenRef::q(m)));
    out.g.set(GenRef::z(m), -f.get(q0, GenRef::p(m)));
  }

  const auto cob = coboundary(out.g);
  const auto gens = window_gens(bound);
  for (std::size_t a = 0; a < gens.size(); ++a)
    for (std::size_t b = a + 1; b < gens.size(); ++b) {
      const Scalar v = f.get(gens[a], gens[b]) - cob(gens[a], gens[b]);
      if (v != 0) out.fprime.set(gens[a], gens[b], v);
    }
  return out;
}

CocycleSpaceDims cocycle_space_dim(std::int64_t window) {
  if (window < 2 || window > 6)
    throw std::invalid_argument("cocycle_space_dim: window must be in [2, 6]");

  const auto gens = window_gens(window);
  const std::size_t n = gens.size();
  std::map<GenRef, std::size_t> gen_idx;
  for (std::size_t i = 0; i < n; ++i) gen_idx[gens[i]] = i;

  // Pair variables, one per unordered pair (a < b).
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> var_of;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b) {
      var_of[{a, b}] = pairs.size();
      pairs.emplace_back(a, b);
    }
  const std::size_t nvars = pairs.size();

  const auto interior = [&](std::size_t var) {
    const auto& [a, b] = pairs[var];
    return std::abs(gens[a].mode) <= window - 1 && std::abs(gens[b].mode) <= window - 1;
  };

  // sparse row accumulation: f(x, y) with x != y adds +-coeff at var(x,y)
  const auto accumulate = [&](std::map<std::size_t, Scalar>& row, const GenRef& x,
                              const LieElement& y, const Scalar& outer) {
    for (const auto& [g, c] : y.terms()) {
      if (g.is_k() || g == x) continue;
      const std::size_t ix = gen_idx.at(x), ig = gen_idx.at(g);
      const bool flip = ig < ix;
      const std::size_t var = var_of.at(flip ? std::make_pair(ig, ix) : std::make_pair(ix, ig));
      auto [it, fresh] = row.try_emplace(var, Scalar(0));
      it->second += flip ? Scalar(-outer * c) : Scalar(outer * c);
      if (it->second == 0) row.erase(it);
    }
  };

  SparseEliminator full_system;    // all pair variables
  SparseEliminator boundary_only;  // rows with interior variables dropped
  std::size_t n_interior = 0;
  for (std::size_t v = 0; v < nvars; ++v)
    if (interior(v)) ++n_interior;

  std::vector<std::map<std::size_t, Scalar>> pivot_free_rows;  // kept for kernel extraction
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a; b < n; ++b) {
      if (!closure_safe(gens[a], gens[b], window)) continue;
      for (std::size_t c = b; c < n; ++c) {
        if (!closure_safe(gens[a], gens[c], window) || !closure_safe(gens[b], gens[c], window))
          continue;
        std::map<std::size_t, Scalar> row;
        accumulate(row, gens[a], loop_bracket(gens[b], gens[c]), 1);
        accumulate(row, gens[c], loop_bracket(gens[a], gens[b]), 1);
        accumulate(row, gens[b], loop_bracket(gens[c], gens[a]), 1);
        if (row.empty()) continue;
        std::map<std::size_t, Scalar> bnd_row;
        for (const auto& [var, val] : row)
          if (!interior(var)) bnd_row.emplace(var, val);
        full_system.add_row(row);
        if (!bnd_row.empty()) boundary_only.add_row(std::move(bnd_row));
      }
    }

  CocycleSpaceDims out;
  out.dim_Z = static_cast<std::int64_t>(nvars - full_system.rank());
  const std::int64_t nullity_bnd =
      static_cast<std::int64_t>((nvars - n_interior) - boundary_only.rank());
  const std::int64_t proj_Z_int = out.dim_Z - nullity_bnd;

  // Coboundary image: functionals on generators with modes within 2*window
  // cover every bracket of window pairs.
  const auto g_basis = window_gens(2 * window);
  std::vector<RatVec> cob_vectors;
  for (const auto& gb : g_basis) {
    RatVec col(nvars, Scalar(0));
    bool nonzero = false;
    for (std::size_t v = 0; v < nvars; ++v) {
      const LieElement lb = loop_bracket(gens[pairs[v].first], gens[pairs[v].second]);
      const Scalar val = lb.coeff(gb);
      if (val != 0) {
        col[v] = val;
        nonzero = true;
      }
    }
    if (nonzero) cob_vectors.push_back(std::move(col));
  }
  {
    RatMat bm(nvars);
    for (const auto& v : cob_vectors) bm.add_row(v);
    out.dim_B = static_cast<std::int64_t>(rank(std::move(bm)));
  }

  // interior projection of the coboundary space
  std::vector<std::size_t> interior_vars;
  for (std::size_t v = 0; v < nvars; ++v)
    if (interior(v)) interior_vars.push_back(v);
  SparseEliminator proj_B;
  std::vector<std::map<std::size_t, Scalar>> projected_cob;
  for (const auto& col : cob_vectors) {
    std::map<std::size_t, Scalar> row;
    for (std::size_t idx = 0; idx < interior_vars.size(); ++idx)
      if (col[interior_vars[idx]] != 0) row.emplace(idx, col[interior_vars[idx]]);
    if (!row.empty()) proj_B.add_row(row);
  }
  const std::int64_t proj_B_int = static_cast<std::int64_t>(proj_B.rank());
  out.dim_H_interior = proj_Z_int - proj_B_int;

  // standard cocycle vs. coboundaries, on the full window pair space
  {
    const auto std_fn = standard_cocycle();
    RatVec std_vec(nvars, Scalar(0));
    for (std::size_t v = 0; v < nvars; ++v)
      std_vec[v] = std_fn(gens[pairs[v].first], gens[pairs[v].second]);
    RatMat bm(nvars);
    for (const auto& vcol : cob_vectors) bm.add_row(vcol);
    const std::size_t base = rank(bm);
    bm.add_row(std_vec);
    out.standard_independent = rank(std::move(bm)) == base + 1;
  }

  // Quotient representatives: kernel vectors of the full system, projected to
  // interior pairs, kept when independent modulo the projected coboundaries.
  {
    const auto& pivots = full_system.pivot_rows();
    std::vector<bool> is_pivot(nvars, false);
    for (const auto& [lead, row] : pivots) is_pivot[lead] = true;
    SparseEliminator quotient = proj_B;
    for (std::size_t free = 0; free < nvars; ++free) {
      if (is_pivot[free]) continue;
      // back-substitute: x[free] = 1, pivots solved in descending lead order
      std::map<std::size_t, Scalar> x;
      x[free] = 1;
      for (auto it = pivots.rbegin(); it != pivots.rend(); ++it) {
        Scalar acc(0);
        for (const auto& [c, val] : it->second) {
          if (c == it->first) continue;
          auto jt = x.find(c);
          if (jt != x.end()) acc += val * jt->second;
        }
        if (acc != 0) x[it->first] = -acc;
      }
      std::map<std::size_t, Scalar> proj;
      for (std::size_t idx = 0; idx < interior_vars.size(); ++idx) {
        auto jt = x.find(interior_vars[idx]);
        if (jt != x.end()) proj.emplace(idx, jt->second);
      }
      if (proj.empty()) continue;
      if (!quotient.add_row(proj)) continue;
      Cochain2 rep;
      for (const auto& [idx, val] : proj) {
        const auto& [a, b] = pairs[interior_vars[idx]];
        rep.set(gens[a], gens[b], val);
      }
      out.interior_basis.push_back(std::move(rep));
      if (static_cast<std::int64_t>(out.interior_basis.size()) >= out.dim_H_interior) break;
    }
  }

  std::map<std::pair<Kind, Kind>, bool> seen;
  for (const auto& rep : out.interior_basis)
    for (const auto& [key, v] : rep.values()) {
      auto kk = std::minmax(key.first.kind, key.second.kind);
      seen[{kk.first, kk.second}] = true;
    }
  for (const auto& [kk, _] : seen) out.surviving_kind_pairs.push_back(kk);
  return out;
}

}  // namespace agelab
