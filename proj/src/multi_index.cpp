#include "agelab/multi_index.hpp"

#include <stdexcept>

namespace agelab {

void MultiIndex::bump(std::int64_t pos, std::int64_t delta) {
  if (pos < 1) throw std::domain_error("MultiIndex: positions start at 1");
  if (delta == 0) return;
  auto [it, fresh] = entries_.try_emplace(pos, delta);
  if (!fresh) {
    it->second += delta;
    if (it->second == 0) entries_.erase(it);
    else if (it->second < 0) throw std::domain_error("MultiIndex: negative entry");
  } else if (delta < 0) {
    entries_.erase(it);
    throw std::domain_error("MultiIndex: negative entry");
  }
}

std::int64_t weight(const MultiIndex& i) {
  std::int64_t w = 0;
  for (const auto& [pos, exp] : i.entries()) w += pos * exp;
  return w;
}

std::int64_t size(const MultiIndex& i) {
  std::int64_t d = 0;
  for (const auto& [pos, exp] : i.entries()) d += exp;
  return d;
}

MultiIndex add(const MultiIndex& a, const MultiIndex& b) {
  MultiIndex out = a;
  for (const auto& [pos, exp] : b.entries()) out.bump(pos, exp);
  return out;
}

MultiIndex sub(const MultiIndex& a, const MultiIndex& b) {
  MultiIndex out = a;
  for (const auto& [pos, exp] : b.entries()) out.bump(pos, -exp);
  return out;
}

std::strong_ordering revlex_cmp(const MultiIndex& a, const MultiIndex& b) {
  auto ia = a.entries().begin(), ib = b.entries().begin();
  const auto ea = a.entries().end(), eb = b.entries().end();
  // Entries are sorted by position; walk both supports in lockstep and decide
  // at the first position where the exponents differ.
  while (ia != ea || ib != eb) {
    if (ib == eb) return std::strong_ordering::greater;  // a has an extra nonzero entry
    if (ia == ea) return std::strong_ordering::less;
    if (ia->first != ib->first)
      return ia->first < ib->first ? std::strong_ordering::greater : std::strong_ordering::less;
    if (ia->second != ib->second) return ia->second <=> ib->second;
    ++ia;
    ++ib;
  }
  return std::strong_ordering::equal;
}

std::strong_ordering principal2_cmp(const std::pair<MultiIndex, MultiIndex>& a,
                                    const std::pair<MultiIndex, MultiIndex>& b) {
  if (auto c = weight(a.first) <=> weight(b.first); c != 0) return c;
  if (a.first != b.first) return revlex_cmp(a.first, b.first);
  return revlex_cmp(a.second, b.second);
}

std::strong_ordering principal4_cmp(const Tuple4& a, const Tuple4& b) {
  if (auto c = (weight(a.m) + weight(a.n)) <=> (weight(b.m) + weight(b.n)); c != 0) return c;
  if (a.n != b.n) return revlex_cmp(a.n, b.n);
  if (a.m != b.m) return revlex_cmp(a.m, b.m);
  if (auto c = (weight(a.i) + weight(a.j)) <=> (weight(b.i) + weight(b.j)); c != 0) return c;
  if (a.j != b.j) return revlex_cmp(a.j, b.j);
  return revlex_cmp(a.i, b.i);
}

std::string to_string(const MultiIndex& i) {
  if (i.is_zero()) return "0";
  std::string out = "(";
  bool first = true;
  for (auto it = i.entries().rbegin(); it != i.entries().rend(); ++it) {
    if (!first) out += ", ";
    out += std::to_string(it->first) + ":" + std::to_string(it->second);
    first = false;
  }
  return out + ")";
}

}  // namespace agelab
