#include "stategrid/model.hpp"

namespace stategrid {

namespace {
template <class... Maps> std::set<std::string> keys_of(const Maps&... maps) {
  std::set<std::string> out;
  (..., [&](const auto& m) {
    for (const auto& [k, v] : m) out.insert(k);
  }(maps));
  return out;
}
} // namespace

bool Model::interprets(const std::string& name) const {
  return carriers.contains(name) || mappings.contains(name) || families.contains(name);
}

std::set<std::string> Model::interpreted() const { return keys_of(carriers, mappings, families); }

void Model::forget(const std::string& name) {
  carriers.erase(name);
  mappings.erase(name);
  families.erase(name);
}

ValueSet unary_relation(std::initializer_list<std::pair<Rational, Rational>> pairs) {
  ValueSet out;
  for (const auto& [x, y] : pairs) out.insert(Value::tuple({Value::number(x), Value::number(y)}));
  return out;
}

ValueSet rational_set(std::initializer_list<Rational> values) {
  ValueSet out;
  for (const auto& v : values) out.insert(Value::number(v));
  return out;
}

ValueSet atom_set(std::initializer_list<const char*> atoms) {
  ValueSet out;
  for (const char* a : atoms) out.insert(Value::atom(a));
  return out;
}

bool Snapshot::interprets(const std::string& name) const {
  return carriers.contains(name) || mappings.contains(name) || families.contains(name);
}

std::set<std::string> Snapshot::interpreted() const {
  return keys_of(carriers, mappings, families);
}

} // namespace stategrid
