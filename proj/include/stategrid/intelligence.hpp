#pragma once

#include "stategrid/model.hpp"
#include "stategrid/trivalue.hpp"

#include <cstdint>
#include <string>

namespace stategrid {

/// How the processing structure's "T, V subsets of I" is read: as named
/// observable families (checked to be subsets), or as any subsets at all.
enum class SubsetMode { Declared, Free };

std::string_view to_string(SubsetMode m) noexcept;

/// Names of the observed families.
struct IntelligenceFamilies {
  std::string input = "I";
  std::string output = "O";
  std::string transformed = "T";
  std::string varied = "V";
};

/// Inclusive index range.
struct IndexWindow {
  std::uint32_t first = 0;
  std::uint32_t last = 0;
};

/// Input structure: |I(i+1)| > |I(i)| and |O(i+1)| > |O(i)|.
TriValue c_in(const std::string& in, const std::string& out, std::uint32_t i, const Model& m);
/// Output structure: |I(i+1)| < |I(i)| and |O(i+1)| > |O(i)|.
TriValue c_out(const std::string& in, const std::string& out, std::uint32_t i, const Model& m);
/// Processing structure: some T, V within I with |T(i+1)| < |T(i)| or
/// |V(i+1)| > |V(i)|. Declared mode throws SubsetViolation when T or V
/// escape I at i or i+1.
TriValue c_proc(const std::string& in, const std::string& t, const std::string& v,
                std::uint32_t i, const Model& m, SubsetMode mode);

/// In, Out and Proc all at the same index. Jointly unsatisfiable on
/// defined inputs: In needs I to grow, Out needs it to shrink.
TriValue int_literal(const IntelligenceFamilies& f, std::uint32_t i, const Model& m,
                     SubsetMode mode);
/// Each structure exhibited at some index of the window, independently.
/// Throws std::invalid_argument on an empty window.
TriValue int_windowed(const IntelligenceFamilies& f, IndexWindow window, const Model& m,
                      SubsetMode mode);

} // namespace stategrid
