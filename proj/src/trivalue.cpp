#include "stategrid/trivalue.hpp"

#include <stdexcept>
#include <string>

namespace stategrid {

std::string_view to_string(TriValue v) noexcept {
  switch (v) {
  case TriValue::True: return "true";
  case TriValue::False: return "false";
  default: return "undef";
  }
}

TriValue trivalue_from_string(std::string_view text) {
  if (text == "true") return TriValue::True;
  if (text == "false") return TriValue::False;
  if (text == "undef") return TriValue::Undefinable;
  throw std::invalid_argument("not a truth value: " + std::string(text));
}

} // namespace stategrid
