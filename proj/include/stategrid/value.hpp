#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace stategrid {

/// Exact, arbitrary-precision rational.
using Rational = boost::multiprecision::cpp_rational;

/// "p/q" in lowest terms, or a bare integer.
std::string format_rational(const Rational& r);
/// Optional sign, digits, optional "/digits". Throws std::invalid_argument.
Rational parse_rational(std::string_view text);

/// A domain element of a finite model: a number, an atom, a tuple, or a
/// finite set. Sets are kept sorted and duplicate-free.
class Value {
public:
  enum class Kind : std::uint8_t { Number, Atom, Tuple, Set };

  static Value number(Rational r);
  static Value atom(std::string name);
  static Value tuple(std::vector<Value> items);
  static Value set(std::vector<Value> items);
  static Value set(const std::set<Value>& items);

  Kind kind() const noexcept { return kind_; }
  bool is_number() const noexcept { return kind_ == Kind::Number; }
  bool is_set() const noexcept { return kind_ == Kind::Set; }

  const Rational& as_number() const;
  const std::string& as_atom() const;
  /// Tuple components or set elements.
  const std::vector<Value>& items() const;

  bool contains(const Value& element) const;
  bool subset_of(const Value& other) const;

  std::string to_string() const;

  friend bool operator==(const Value& a, const Value& b);
  friend std::strong_ordering operator<=>(const Value& a, const Value& b);

private:
  Kind kind_ = Kind::Number;
  Rational number_;
  std::string atom_;
  std::vector<Value> items_;
};

using ValueSet = std::set<Value>;

std::string format_value_set(const ValueSet& s);

} // namespace stategrid
