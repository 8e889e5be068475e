#include "stategrid/intelligence.hpp"

#include "stategrid/error.hpp"

#include <optional>
#include <stdexcept>

namespace stategrid {

std::string_view to_string(SubsetMode m) noexcept {
  return m == SubsetMode::Declared ? "declared" : "free";
}

namespace {

const ValueSet* observation(const Model& m, const std::string& family, std::uint32_t at) {
  auto it = m.families.find(family);
  if (it == m.families.end()) return nullptr;
  auto slot = it->second.find(at);
  return slot == it->second.end() ? nullptr : &slot->second;
}

std::optional<std::size_t> cardinality(const Model& m, const std::string& family,
                                       std::uint32_t at) {
  if (const auto* s = observation(m, family, at)) return s->size();
  return std::nullopt;
}

// |F(i+1)| > |F(i)| when grow, |F(i+1)| < |F(i)| otherwise
TriValue trend(const Model& m, const std::string& family, std::uint32_t i, bool grow) {
  auto now = cardinality(m, family, i);
  auto next = cardinality(m, family, i + 1);
  if (!now || !next) return TriValue::Undefinable;
  return lift(grow ? *next > *now : *next < *now);
}

void require_subset(const Model& m, const std::string& part, const std::string& whole,
                    std::uint32_t at) {
  const auto* p = observation(m, part, at);
  const auto* w = observation(m, whole, at);
  if (!p || !w) return;
  for (const auto& x : *p)
    if (!w->contains(x))
      throw SubsetViolation(part + "@" + std::to_string(at) + " is not a subset of " + whole +
                            "@" + std::to_string(at));
}

TriValue nonempty(const Model& m, const std::string& family, std::uint32_t at) {
  auto n = cardinality(m, family, at);
  if (!n) return TriValue::Undefinable;
  return lift(*n >= 1);
}

} // namespace

TriValue c_in(const std::string& in, const std::string& out, std::uint32_t i, const Model& m) {
  return and3(trend(m, in, i, true), trend(m, out, i, true));
}

TriValue c_out(const std::string& in, const std::string& out, std::uint32_t i, const Model& m) {
  return and3(trend(m, in, i, false), trend(m, out, i, true));
}

TriValue c_proc(const std::string& in, const std::string& t, const std::string& v,
                std::uint32_t i, const Model& m, SubsetMode mode) {
  if (mode == SubsetMode::Free) {
    // T = I now and empty next shrinks whenever I(i) is non-empty; V empty
    // now and non-empty next grows whenever I(i+1) is non-empty. With both
    // I(i) and I(i+1) empty every subset is empty and nothing changes.
    return or3(nonempty(m, in, i), nonempty(m, in, i + 1));
  }
  for (std::uint32_t at : {i, i + 1}) {
    require_subset(m, t, in, at);
    require_subset(m, v, in, at);
  }
  return or3(trend(m, t, i, false), trend(m, v, i, true));
}

TriValue int_literal(const IntelligenceFamilies& f, std::uint32_t i, const Model& m,
                     SubsetMode mode) {
  return and3(and3(c_in(f.input, f.output, i, m), c_out(f.input, f.output, i, m)),
              c_proc(f.input, f.transformed, f.varied, i, m, mode));
}

TriValue int_windowed(const IntelligenceFamilies& f, IndexWindow window, const Model& m,
                      SubsetMode mode) {
  if (window.last < window.first) throw std::invalid_argument("empty index window");
  TriValue in = TriValue::False, out = TriValue::False, proc = TriValue::False;
  for (std::uint32_t i = window.first; i <= window.last; ++i) {
    in = or3(in, c_in(f.input, f.output, i, m));
    out = or3(out, c_out(f.input, f.output, i, m));
    proc = or3(proc, c_proc(f.input, f.transformed, f.varied, i, m, mode));
    if (i == window.last) break; // guards against overflow at the top index
  }
  return and3(and3(in, out), proc);
}

} // namespace stategrid
