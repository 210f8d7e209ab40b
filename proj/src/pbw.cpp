#include "agelab/pbw.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace agelab {

std::int64_t PbwMonomial::total_degree() const {
  std::int64_t d = 0;
  for (const auto& [g, e] : exps) d += e;
  if (inner) d += inner->total_degree();
  return d;
}

bool PbwMonomial::operator==(const PbwMonomial& o) const { return pbw_cmp(*this, o) == 0; }

std::strong_ordering pbw_cmp(const PbwMonomial& a, const PbwMonomial& b) {
  if (auto c = std::compare_strong_order_fallback(a.exps, b.exps); c != 0) return c;
  if (!a.inner && !b.inner) return std::strong_ordering::equal;
  if (!a.inner) return std::strong_ordering::less;
  if (!b.inner) return std::strong_ordering::greater;
  return pbw_cmp(*a.inner, *b.inner);
}

void ModuleElement::add(PbwMonomial m, const Scalar& c) {
  if (c == 0) return;
  auto [it, fresh] = terms_.try_emplace(std::move(m), c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void ModuleElement::add(const ModuleElement& other, const Scalar& c) {
  for (const auto& [m, v] : other.terms_) add(m, v * c);
}

void ModuleElement::scale(const Scalar& c) {
  if (c == 0) {
    terms_.clear();
    return;
  }
  for (auto& [m, v] : terms_) v *= c;
}

std::int64_t ModuleElement::total_degree() const {
  std::int64_t d = 0;
  for (const auto& [m, v] : terms_) d += m.total_degree();
  return d;
}

PbwMonomial vacuum_monomial(const ModuleSpec& spec) {
  PbwMonomial m;
  if (spec.is_nested())
    m.inner = std::make_shared<const PbwMonomial>(vacuum_monomial(*spec.nested().inner));
  return m;
}

ModuleElement vacuum(const ModuleSpec& spec) { return ModuleElement(vacuum_monomial(spec)); }

std::vector<GenRef> canonical_word(const ModuleSpec& spec, const PbwMonomial& m) {
  // bucket by owning family, then modes descending (families commute inside)
  std::vector<std::vector<GenRef>> buckets(spec.complement.size());
  for (const auto& [g, e] : m.exps) {
    const int slot = spec.slot_of(g);
    if (slot < 0)
      throw std::domain_error("monomial contains non-complement generator " + to_string(g));
    for (std::int64_t i = 0; i < e; ++i) buckets[static_cast<std::size_t>(slot)].push_back(g);
  }
  std::vector<GenRef> word;
  for (auto& bucket : buckets) {
    std::sort(bucket.begin(), bucket.end(),
              [](const GenRef& a, const GenRef& b) { return a.mode > b.mode; });
    word.insert(word.end(), bucket.begin(), bucket.end());
  }
  return word;
}

namespace {

struct Task {
  Scalar c;
  std::vector<GenRef> word;
  std::shared_ptr<const PbwMonomial> inner;
};

// canonical position of a complement letter: family slot, then mode descending
std::pair<int, std::int64_t> ord_key(const ModuleSpec& spec, const GenRef& g, int slot) {
  return {slot, -g.mode};
}

PbwMonomial monomial_from_word(const std::vector<GenRef>& word,
                               std::shared_ptr<const PbwMonomial> inner) {
  PbwMonomial m;
  for (const GenRef& g : word) ++m.exps[g];
  m.inner = std::move(inner);
  return m;
}

}  // namespace

ModuleElement act(const ModuleSpec& spec, const GenRef& x, const ModuleElement& v) {
  ModuleElement out;
  std::vector<Task> stack;
  for (const auto& [mono, coeff] : v.terms()) {
    std::vector<GenRef> word{x};
    const auto tail = canonical_word(spec, mono);
    word.insert(word.end(), tail.begin(), tail.end());
    stack.push_back({coeff, std::move(word), mono.inner});
  }

  const auto spawn_swap_and_bracket = [&](const Task& t, std::size_t i) {
    // x g -> g x + [x, g]
    Task swapped{t.c, t.word, t.inner};
    std::swap(swapped.word[i], swapped.word[i + 1]);
    stack.push_back(std::move(swapped));
    const LieElement br = bracket(t.word[i], t.word[i + 1]);
    for (const auto& [y, cy] : br.terms()) {
      Task reduced{t.c * cy, {}, t.inner};
      reduced.word.reserve(t.word.size() - 1);
      reduced.word.insert(reduced.word.end(), t.word.begin(), t.word.begin() + i);
      reduced.word.push_back(y);
      reduced.word.insert(reduced.word.end(), t.word.begin() + i + 2, t.word.end());
      stack.push_back(std::move(reduced));
    }
  };

  while (!stack.empty()) {
    Task t = std::move(stack.back());
    stack.pop_back();
    if (t.c == 0) continue;

    // rightmost base letter moves toward the cyclic vector first
    int base_idx = -1;
    std::vector<int> slots(t.word.size());
    for (int i = static_cast<int>(t.word.size()) - 1; i >= 0; --i) {
      slots[i] = spec.slot_of(t.word[i]);
      if (slots[i] < 0 && base_idx < 0) base_idx = i;
    }

    if (base_idx >= 0) {
      if (base_idx == static_cast<int>(t.word.size()) - 1) {
        const GenRef b = t.word.back();
        t.word.pop_back();
        if (!spec.is_nested()) {
          const Scalar val = spec.functional().value(b);
          if (val != 0) stack.push_back({t.c * val, std::move(t.word), t.inner});
        } else {
          const ModuleSpec& inner_spec = *spec.nested().inner;
          const ModuleElement hit = act(inner_spec, b, ModuleElement(*t.inner));
          for (const auto& [nu, cc] : hit.terms())
            stack.push_back({t.c * cc, t.word, std::make_shared<const PbwMonomial>(nu)});
        }
      } else {
        spawn_swap_and_bracket(t, static_cast<std::size_t>(base_idx));
      }
      continue;
    }

    // all letters are complement: bubble toward canonical order
    std::size_t bad = t.word.size();
    for (std::size_t i = 0; i + 1 < t.word.size(); ++i) {
      if (ord_key(spec, t.word[i], slots[i]) > ord_key(spec, t.word[i + 1], slots[i + 1])) {
        bad = i;
        break;
      }
    }
    if (bad == t.word.size()) {
      out.add(monomial_from_word(t.word, t.inner), t.c);
    } else {
      spawn_swap_and_bracket(t, bad);
    }
  }
  return out;
}

ModuleElement act_lin(const ModuleSpec& spec, const LieElement& x, const ModuleElement& v) {
  ModuleElement out;
  for (const auto& [g, c] : x.terms()) {
    ModuleElement part = act(spec, g, v);
    part.scale(c);
    out.add(part);
  }
  return out;
}

ModuleElement act_word(const ModuleSpec& spec, const std::vector<GenRef>& word,
                       const ModuleElement& v) {
  ModuleElement cur = v;
  for (auto it = word.rbegin(); it != word.rend(); ++it) cur = act(spec, *it, cur);
  return cur;
}

std::int64_t grade(const ModuleSpec& spec, const PbwMonomial& m) {
  if (!spec.graded) throw std::domain_error("module '" + spec.name + "' is not graded");
  std::int64_t s = 0;
  for (const auto& [g, e] : m.exps) s += -g.mode * e;
  return s;
}

bool DegTuple::is_zero() const {
  for (const auto& p : parts)
    if (!p.is_zero()) return false;
  return true;
}

std::strong_ordering deg_cmp(const DegTuple& a, const DegTuple& b) {
  if (a.order != b.order || a.parts.size() != b.parts.size())
    throw std::invalid_argument("deg_cmp: incomparable degree tuples");
  switch (a.order) {
    case DegOrder::VacuumRevlex:
    case DegOrder::WhittakerTriple:
      return revlex_cmp(a.parts[0], b.parts[0]);
    case DegOrder::ImaginaryPrincipal:
      return principal2_cmp({a.parts[0], a.parts[1]}, {b.parts[0], b.parts[1]});
    case DegOrder::InducedPrincipal:
      return principal4_cmp({a.parts[0], a.parts[1], a.parts[2], a.parts[3]},
                            {b.parts[0], b.parts[1], b.parts[2], b.parts[3]});
    case DegOrder::None: break;
  }
  throw std::invalid_argument("deg_cmp: no order declared");
}

std::string to_string(const DegTuple& d) {
  std::string out = "[";
  for (std::size_t i = 0; i < d.parts.size(); ++i) {
    if (i) out += ", ";
    out += to_string(d.parts[i]);
  }
  return out + "]";
}

namespace {

MultiIndex project_block(const PbwMonomial& m, Kind kind, std::int64_t threshold, bool up) {
  // position s <-> mode threshold - s (up) or threshold + s (down)
  MultiIndex out;
  for (const auto& [g, e] : m.exps) {
    if (g.kind != kind) continue;
    const std::int64_t pos = up ? threshold - g.mode : g.mode - threshold;
    if (pos < 1) throw std::domain_error("degree projection: mode beyond anchor");
    out.bump(pos, e);
  }
  return out;
}

}  // namespace

DegTuple deg_of(const ModuleSpec& spec, const ModuleElement& v,
                std::optional<std::int64_t> anchor) {
  if (v.is_zero()) throw std::domain_error("deg(0) is not defined");
  DegTuple best;
  best.order = spec.deg_order;

  std::int64_t d = 0;
  if (spec.deg_order == DegOrder::ImaginaryPrincipal) {
    if (anchor) {
      d = *anchor;
    } else {
      // recover the anchor from the q-modes present
      bool any = false;
      std::int64_t extreme = 0;
      for (const auto& [m, c] : v.terms())
        for (const auto& [g, e] : m.exps)
          if (g.kind == Kind::Q) {
            if (!any || (spec.anchor == Anchor::Up ? g.mode > extreme : g.mode < extreme))
              extreme = g.mode;
            any = true;
          }
      d = any ? (spec.anchor == Anchor::Up ? extreme + 1 : extreme - 1)
              : (spec.anchor == Anchor::Up ? 1 : -1);
    }
  }
  best.anchor = d;

  bool first = true;
  for (const auto& [m, c] : v.terms()) {
    DegTuple cur;
    cur.order = spec.deg_order;
    cur.anchor = d;
    switch (spec.deg_order) {
      case DegOrder::VacuumRevlex: {
        for (const auto& [g, e] : m.exps)
          if (g.kind != Kind::H)
            throw std::domain_error("degree projection: element is not supported on the h-block");
        cur.parts = {project_block(m, Kind::H, 0, true)};
        break;
      }
      case DegOrder::WhittakerTriple: {
        MultiIndex t;
        for (const auto& [g, e] : m.exps) {
          if (g == GenRef::h(0)) t.bump(1, e);
          else if (g == GenRef::e(-1)) t.bump(2, e);
          else if (g == GenRef::p(-1)) t.bump(3, e);
          else throw std::domain_error("degree projection: unexpected generator " + to_string(g));
        }
        cur.parts = {t};
        break;
      }
      case DegOrder::ImaginaryPrincipal: {
        cur.parts = {project_block(m, Kind::Q, d, spec.anchor == Anchor::Up),
                     project_block(m, Kind::H, 0, true)};
        break;
      }
      case DegOrder::InducedPrincipal: {
        const SubalgebraTriple& t = spec.nested().sub;
        cur.parts = {project_block(m, Kind::P, t.d2, true), project_block(m, Kind::E, t.d1, true),
                     project_block(m, Kind::Q, t.d3, true), project_block(m, Kind::H, 0, true)};
        break;
      }
      case DegOrder::None:
        throw std::domain_error("module '" + spec.name + "' declares no degree order");
    }
    if (first || deg_cmp(cur, best) > 0) best = std::move(cur);
    first = false;
  }
  return best;
}

std::string to_string(const ModuleSpec& spec, const PbwMonomial& m) {
  std::string out;
  const auto word = canonical_word(spec, m);
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (i > 0 && word[i] == word[i - 1]) continue;  // folded into ^exp below
    if (!out.empty()) out += " ";
    out += to_string(word[i]);
    const auto e = m.exps.at(word[i]);
    if (e > 1) out += "^" + std::to_string(e);
  }
  if (!spec.is_nested()) {
    if (out.empty()) return spec.vac;
    return out + " | " + spec.vac;
  }
  if (out.empty()) out = "1";
  return out + " ⊗ [ " + to_string(*spec.nested().inner, *m.inner) + " ]";
}

std::string to_string(const ModuleSpec& spec, const ModuleElement& v) {
  if (v.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : v.terms()) {
    const bool neg = c < 0;
    const Scalar mag = neg ? Scalar(-c) : c;
    if (first) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    if (mag != 1) out += to_string(mag) + " * ";
    out += to_string(spec, m);
    first = false;
  }
  return out;
}

namespace {

struct ECursor {
  const std::string& s;
  std::size_t i = 0;
  void skip_ws() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }
  bool eof() {
    skip_ws();
    return i >= s.size();
  }
  bool accept(char c) {
    skip_ws();
    if (i < s.size() && s[i] == c) {
      ++i;
      return true;
    }
    return false;
  }
  bool accept_tensor() {
    skip_ws();
    if (i < s.size() && s[i] == '@') {
      ++i;
      return true;
    }
    if (i + 2 < s.size() && s.compare(i, 3, "⊗") == 0) {
      i += 3;
      return true;
    }
    return false;
  }
  [[noreturn]] void fail(const std::string& why) {
    throw std::invalid_argument("parse error at " + std::to_string(i) + ": " + why);
  }
};

Scalar parse_coeff(ECursor& c) {
  c.skip_ws();
  std::size_t start = c.i;
  while (c.i < c.s.size() &&
         (std::isdigit(static_cast<unsigned char>(c.s[c.i])) || c.s[c.i] == '/'))
    ++c.i;
  if (c.i == start) c.fail("expected coefficient");
  return scalar_from_string(c.s.substr(start, c.i - start));
}

// one monomial (factors then tail), value 1 coefficient
ModuleElement parse_monomial(const ModuleSpec& spec, ECursor& c);

ModuleElement parse_sum(const ModuleSpec& spec, ECursor& c, bool bracketed) {
  ModuleElement out;
  bool first = true;
  while (true) {
    c.skip_ws();
    if (c.i >= c.s.size() || (bracketed && c.s[c.i] == ']')) break;
    Scalar sign = 1;
    if (c.s[c.i] == '+' || c.s[c.i] == '-') {
      if (c.s[c.i] == '-') sign = -1;
      ++c.i;
    } else if (!first) {
      c.fail("expected '+' or '-' between terms");
    }
    c.skip_ws();
    Scalar coeff = 1;
    if (c.i < c.s.size() && std::isdigit(static_cast<unsigned char>(c.s[c.i]))) {
      // could be a bare '1' factor of a nested monomial; parse number, then
      // a '*' or a generator continues the term
      coeff = parse_coeff(c);
      c.accept('*');
    }
    ModuleElement mono = parse_monomial(spec, c);
    mono.scale(sign * coeff);
    out.add(mono);
    first = false;
  }
  if (first) c.fail("expected a term");
  return out;
}

ModuleElement parse_monomial(const ModuleSpec& spec, ECursor& c) {
  PbwMonomial m;
  while (true) {
    c.skip_ws();
    if (c.i >= c.s.size()) break;
    const char ch = c.s[c.i];
    if (ch == '|' || ch == '@' || ch == ']' || ch == '+' || ch == '-' ||
        c.s.compare(c.i, 3, "⊗") == 0)
      break;
    if (ch == '1') {  // unit factor in nested rendering
      ++c.i;
      continue;
    }
    if (std::string(&ch, 1).find_first_of("epqhzk") == std::string::npos) break;
    // distinguish the cyclic-vector symbol from a generator: generators are
    // followed by '('
    std::size_t save = c.i;
    ++c.i;
    c.skip_ws();
    if (c.i >= c.s.size() || c.s[c.i] != '(') {
      c.i = save;
      break;
    }
    c.i = save;
    GenRef g = parse_genref(c.s.substr(c.i));
    // advance past the generator text: find the matching ')'
    c.i = c.s.find(')', c.i) + 1;
    std::int64_t exp = 1;
    c.skip_ws();
    if (c.i < c.s.size() && c.s[c.i] == '^') {
      ++c.i;
      c.skip_ws();
      std::size_t st = c.i;
      while (c.i < c.s.size() && std::isdigit(static_cast<unsigned char>(c.s[c.i]))) ++c.i;
      if (st == c.i) c.fail("expected exponent");
      exp = std::stoll(c.s.substr(st, c.i - st));
    }
    if (spec.slot_of(g) < 0) c.fail("generator " + to_string(g) + " is not free in this module");
    m.exps[g] += exp;
  }

  if (spec.is_nested()) {
    if (!c.accept_tensor()) c.fail("expected tensor sign");
    if (!c.accept('[')) c.fail("expected '['");
    ModuleElement inner = parse_sum(*spec.nested().inner, c, true);
    if (!c.accept(']')) c.fail("expected ']'");
    ModuleElement out;
    for (const auto& [nu, cc] : inner.terms()) {
      PbwMonomial full = m;
      full.inner = std::make_shared<const PbwMonomial>(nu);
      out.add(std::move(full), cc);
    }
    return out;
  }

  // functional tail: "| vac" or the bare vac symbol
  c.skip_ws();
  if (c.i < c.s.size() && c.s[c.i] == '|') {
    ++c.i;
    c.skip_ws();
    std::size_t st = c.i;
    while (c.i < c.s.size() && std::isalpha(static_cast<unsigned char>(c.s[c.i]))) ++c.i;
    if (st == c.i) c.fail("expected cyclic vector symbol after '|'");
  } else if (m.exps.empty()) {
    // bare symbol, e.g. "w"
    std::size_t st = c.i;
    while (c.i < c.s.size() && std::isalpha(static_cast<unsigned char>(c.s[c.i]))) ++c.i;
    if (st == c.i) c.fail("expected cyclic vector symbol");
  }
  return ModuleElement(std::move(m));
}

}  // namespace

ModuleElement parse_module_element(const ModuleSpec& spec, const std::string& text) {
  ECursor c{text};
  if (c.eof()) throw std::invalid_argument("parse error: empty element");
  if (c.s[c.i] == '0' && c.i + 1 >= c.s.size()) return {};
  ModuleElement out = parse_sum(spec, c, false);
  if (!c.eof()) c.fail("trailing input");
  return out;
}

}  // namespace agelab
