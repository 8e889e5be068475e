#pragma once

#include <array>
#include <cstdint>
#include <string_view>

namespace stategrid {

/// Three-valued truth. Undefinable is the depth-0 "not definable" state;
/// True and False are the depth-1 Boolean values of a definable object.
enum class TriValue : std::uint8_t { False, True, Undefinable };

inline constexpr std::array<TriValue, 3> all_trivalues{TriValue::False, TriValue::True,
                                                       TriValue::Undefinable};

constexpr TriValue lift(bool b) noexcept { return b ? TriValue::True : TriValue::False; }

/// Depth-0 projection.
constexpr bool definable(TriValue v) noexcept { return v != TriValue::Undefinable; }

constexpr bool is_true(TriValue v) noexcept { return v == TriValue::True; }
constexpr bool is_false(TriValue v) noexcept { return v == TriValue::False; }

// strong Kleene connectives
constexpr TriValue and3(TriValue a, TriValue b) noexcept {
  if (a == TriValue::False || b == TriValue::False) return TriValue::False;
  if (a == TriValue::True && b == TriValue::True) return TriValue::True;
  return TriValue::Undefinable;
}

constexpr TriValue or3(TriValue a, TriValue b) noexcept {
  if (a == TriValue::True || b == TriValue::True) return TriValue::True;
  if (a == TriValue::False && b == TriValue::False) return TriValue::False;
  return TriValue::Undefinable;
}

constexpr TriValue not3(TriValue a) noexcept {
  switch (a) {
  case TriValue::True: return TriValue::False;
  case TriValue::False: return TriValue::True;
  default: return TriValue::Undefinable;
  }
}

constexpr TriValue implies3(TriValue a, TriValue b) noexcept { return or3(not3(a), b); }

/// Information order: Undefinable is below both defined values.
constexpr bool info_leq(TriValue a, TriValue b) noexcept {
  return a == TriValue::Undefinable || a == b;
}

std::string_view to_string(TriValue v) noexcept;

/// Accepts "true", "false" and "undef".
TriValue trivalue_from_string(std::string_view text);

} // namespace stategrid
