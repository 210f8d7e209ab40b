#include "agelab/lie.hpp"

#include <cctype>
#include <stdexcept>

namespace agelab {

namespace {

// Bracket with x.kind <= y.kind in the order e < p < q < h < z < k.
LieElement bracket_ordered(const GenRef& x, const GenRef& y) {
  LieElement out;
  const std::int64_t n = x.mode + y.mode;
  switch (x.kind) {
    case Kind::E:
      if (y.kind == Kind::Q) out.add(GenRef::p(n), 1);  // [e,q] = p
      break;
    case Kind::P:
      if (y.kind == Kind::Q) out.add(GenRef::z(n), 1);  // [p,q] = z
      break;
    case Kind::Q:
      if (y.kind == Kind::H) out.add(GenRef::q(n), 1);  // [q,h] = q
      break;
    case Kind::H:
      if (y.kind == Kind::H && n == 0 && x.mode != 0)
        out.add(GenRef::k(), Scalar(x.mode));  // [h_m,h_{-m}] = m k
      break;
    default:
      break;
  }
  return out;
}

}  // namespace

LieElement bracket(const GenRef& x, const GenRef& y) {
  if (x.is_central() || y.is_central()) return {};
  // [h,e] = 2e, [h,p] = p are stated with h first; fold the remaining table
  // into the kind-ordered core and restore the sign.
  if (x.kind == Kind::H && y.kind == Kind::E) return LieElement(GenRef::e(x.mode + y.mode), 2);
  if (x.kind == Kind::E && y.kind == Kind::H) return LieElement(GenRef::e(x.mode + y.mode), -2);
  if (x.kind == Kind::H && y.kind == Kind::P) return LieElement(GenRef::p(x.mode + y.mode), 1);
  if (x.kind == Kind::P && y.kind == Kind::H) return LieElement(GenRef::p(x.mode + y.mode), -1);
  if (x.kind <= y.kind) return bracket_ordered(x, y);
  LieElement out;
  out.add(bracket_ordered(y, x), -1);
  return out;
}

LieElement loop_bracket(const GenRef& x, const GenRef& y) {
  LieElement b = bracket(x, y);
  LieElement out;
  for (const auto& [g, c] : b.terms())
    if (!g.is_k()) out.add(g, c);
  return out;
}

LieElement bracket_lin(const LieElement& x, const LieElement& y) {
  LieElement out;
  for (const auto& [gx, cx] : x.terms())
    for (const auto& [gy, cy] : y.terms()) out.add(bracket(gx, gy), cx * cy);
  return out;
}

Scalar invariant_form(const GenRef& x, const GenRef& y) {
  return (x.kind == Kind::H && y.kind == Kind::H) ? Scalar(1) : Scalar(0);
}

std::optional<std::int64_t> loop_degree(const LieElement& x) {
  if (x.is_zero()) throw std::domain_error("loop_degree: degree of 0 is not defined");
  std::optional<std::int64_t> deg;
  for (const auto& [g, c] : x.terms()) {
    const std::int64_t m = g.is_k() ? 0 : g.mode;
    if (!deg) deg = m;
    else if (*deg != m) return std::nullopt;
  }
  return deg;
}

std::string to_string(const LieElement& x) {
  if (x.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [g, c] : x.terms()) {
    const bool neg = c < 0;
    const Scalar mag = neg ? Scalar(-c) : c;
    if (first) {
      if (neg) out += "-";
      first = false;
    } else {
      out += neg ? " - " : " + ";
    }
    if (mag != 1) out += to_string(mag) + "*";
    out += to_string(g);
  }
  return out;
}

namespace {

struct Cursor {
  const std::string& s;
  size_t i = 0;
  void skip_ws() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }
  bool eof() {
    skip_ws();
    return i >= s.size();
  }
  char peek() {
    skip_ws();
    return s[i];
  }
  [[noreturn]] void fail(const std::string& why) {
    throw std::invalid_argument("parse error at " + std::to_string(i) + ": " + why);
  }
};

std::int64_t parse_int(Cursor& c) {
  c.skip_ws();
  size_t start = c.i;
  if (c.i < c.s.size() && (c.s[c.i] == '-' || c.s[c.i] == '+')) ++c.i;
  while (c.i < c.s.size() && std::isdigit(static_cast<unsigned char>(c.s[c.i]))) ++c.i;
  if (c.i == start) c.fail("expected integer");
  return std::stoll(c.s.substr(start, c.i - start));
}

GenRef parse_genref(Cursor& c) {
  c.skip_ws();
  if (c.i >= c.s.size()) c.fail("expected generator");
  const char ch = c.s[c.i];
  Kind kind;
  switch (ch) {
    case 'e': kind = Kind::E; break;
    case 'p': kind = Kind::P; break;
    case 'q': kind = Kind::Q; break;
    case 'h': kind = Kind::H; break;
    case 'z': kind = Kind::Z; break;
    case 'k': ++c.i; return GenRef::k();
    default: c.fail(std::string("unknown generator '") + ch + "'");
  }
  ++c.i;
  c.skip_ws();
  if (c.i >= c.s.size() || c.s[c.i] != '(') c.fail("expected '(' after generator kind");
  ++c.i;
  std::int64_t mode = parse_int(c);
  c.skip_ws();
  if (c.i >= c.s.size() || c.s[c.i] != ')') c.fail("expected ')'");
  ++c.i;
  return {kind, mode};
}

}  // namespace

GenRef parse_genref(const std::string& text) {
  Cursor c{text};
  GenRef g = parse_genref(c);
  if (!c.eof()) c.fail("trailing input after generator");
  return g;
}

LieElement parse_lie_element(const std::string& text) {
  Cursor c{text};
  LieElement out;
  if (c.eof()) throw std::invalid_argument("parse error: empty element");
  // Special case the literal zero.
  if (c.peek() == '0') {
    ++c.i;
    if (c.eof()) return out;
    c.fail("unexpected input after 0");
  }
  bool first = true;
  while (!c.eof()) {
    Scalar sign = 1;
    c.skip_ws();
    if (c.s[c.i] == '+' || c.s[c.i] == '-') {
      if (c.s[c.i] == '-') sign = -1;
      ++c.i;
    } else if (!first) {
      c.fail("expected '+' or '-' between terms");
    }
    c.skip_ws();
    Scalar coeff = 1;
    if (c.i < c.s.size() && std::isdigit(static_cast<unsigned char>(c.s[c.i]))) {
      size_t start = c.i;
      while (c.i < c.s.size() &&
             (std::isdigit(static_cast<unsigned char>(c.s[c.i])) || c.s[c.i] == '/'))
        ++c.i;
      coeff = scalar_from_string(c.s.substr(start, c.i - start));
      c.skip_ws();
      if (c.i < c.s.size() && c.s[c.i] == '*') ++c.i;
    }
    out.add(parse_genref(c), sign * coeff);
    first = false;
  }
  return out;
}

}  // namespace agelab
