#include "stategrid/value.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace stategrid {

std::string format_rational(const Rational& r) {
  const auto num = boost::multiprecision::numerator(r);
  const auto den = boost::multiprecision::denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

Rational parse_rational(std::string_view text) {
  std::size_t pos = 0;
  bool negative = false;
  if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
    negative = text[pos] == '-';
    ++pos;
  }
  auto digits = [&](std::string_view what) {
    const std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == start) throw std::invalid_argument("expected " + std::string(what) + " in '" +
                                                  std::string(text) + "'");
    return boost::multiprecision::cpp_int(std::string(text.substr(start, pos - start)));
  };
  boost::multiprecision::cpp_int num = digits("digits");
  boost::multiprecision::cpp_int den = 1;
  if (pos < text.size() && text[pos] == '/') {
    ++pos;
    den = digits("denominator");
    if (den == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  }
  if (pos != text.size()) throw std::invalid_argument("trailing characters in '" +
                                                      std::string(text) + "'");
  Rational r(num, den);
  return negative ? Rational(-r) : r;
}

Value Value::number(Rational r) {
  Value v;
  v.kind_ = Kind::Number;
  v.number_ = std::move(r);
  return v;
}

Value Value::atom(std::string name) {
  Value v;
  v.kind_ = Kind::Atom;
  v.atom_ = std::move(name);
  return v;
}

Value Value::tuple(std::vector<Value> items) {
  Value v;
  v.kind_ = Kind::Tuple;
  v.items_ = std::move(items);
  return v;
}

Value Value::set(std::vector<Value> items) {
  std::sort(items.begin(), items.end());
  items.erase(std::unique(items.begin(), items.end()), items.end());
  Value v;
  v.kind_ = Kind::Set;
  v.items_ = std::move(items);
  return v;
}

Value Value::set(const std::set<Value>& items) {
  Value v;
  v.kind_ = Kind::Set;
  v.items_.assign(items.begin(), items.end());
  return v;
}

const Rational& Value::as_number() const {
  if (kind_ != Kind::Number) throw std::logic_error("value is not a number: " + to_string());
  return number_;
}

const std::string& Value::as_atom() const {
  if (kind_ != Kind::Atom) throw std::logic_error("value is not an atom: " + to_string());
  return atom_;
}

const std::vector<Value>& Value::items() const {
  if (kind_ != Kind::Tuple && kind_ != Kind::Set)
    throw std::logic_error("value has no components: " + to_string());
  return items_;
}

bool Value::contains(const Value& element) const {
  if (kind_ != Kind::Set) throw std::logic_error("membership in a non-set: " + to_string());
  return std::binary_search(items_.begin(), items_.end(), element);
}

bool Value::subset_of(const Value& other) const {
  if (kind_ != Kind::Set || other.kind_ != Kind::Set)
    throw std::logic_error("subset test on non-sets");
  return std::includes(other.items_.begin(), other.items_.end(), items_.begin(), items_.end());
}

std::string Value::to_string() const {
  switch (kind_) {
  case Kind::Number: return format_rational(number_);
  case Kind::Atom: return atom_;
  case Kind::Tuple:
  case Kind::Set: {
    std::string out(1, kind_ == Kind::Tuple ? '(' : '{');
    for (std::size_t i = 0; i < items_.size(); ++i) {
      if (i) out += ',';
      out += items_[i].to_string();
    }
    out += kind_ == Kind::Tuple ? ')' : '}';
    return out;
  }
  }
  return {};
}

bool operator==(const Value& a, const Value& b) { return (a <=> b) == 0; }

std::strong_ordering operator<=>(const Value& a, const Value& b) {
  if (a.kind_ != b.kind_) return a.kind_ <=> b.kind_;
  switch (a.kind_) {
  case Value::Kind::Number:
    if (a.number_ < b.number_) return std::strong_ordering::less;
    if (b.number_ < a.number_) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  case Value::Kind::Atom: return a.atom_ <=> b.atom_;
  default:
    return std::lexicographical_compare_three_way(a.items_.begin(), a.items_.end(),
                                                  b.items_.begin(), b.items_.end());
  }
}

std::string format_value_set(const ValueSet& s) { return Value::set(s).to_string(); }

} // namespace stategrid
