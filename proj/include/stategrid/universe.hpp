#pragma once

#include "stategrid/eval.hpp"
#include "stategrid/grid.hpp"
#include "stategrid/model.hpp"
#include "stategrid/stratify.hpp"
#include "stategrid/vocabulary.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace stategrid {

struct Prediction {
  enum class Status : std::uint8_t { Pending, Confirmed, Refuted };
  CellId cell = 0;
  bool claim = true;
  std::uint32_t at = 0;
  Status status = Status::Pending;

  friend auto operator<=>(const Prediction&, const Prediction&) = default;
};

std::string_view to_string(Prediction::Status s) noexcept;
Prediction::Status prediction_status_from_string(std::string_view text);

struct LogEntry {
  std::uint64_t seq = 0;
  std::string operation;
  std::string digest;

  friend bool operator==(const LogEntry&, const LogEntry&) = default;
};

/// 16 hex digits of the 64-bit FNV-1a hash.
std::string digest_of(std::string_view text);

/// A definition universe: vocabulary, depth registry, grid of states, one
/// model snapshot per materialized time 0..t_max, predictions, and an
/// append-only operation log. Every operation returns a new value.
struct Universe {
  std::string id;
  Vocabulary vocab;
  DepthRegistry registry;
  Grid grid;
  std::vector<Snapshot> snapshots{Snapshot{}};
  std::vector<Prediction> predictions;
  std::vector<LogEntry> log;

  std::uint32_t t_max() const { return static_cast<std::uint32_t>(snapshots.size() - 1); }

  /// Evaluation view at time t: carriers and mappings of snapshot t;
  /// families interpreted at t, with every earlier observation indexed by
  /// its own time. Throws TimeNotMaterialized.
  Model model_at(std::uint32_t t) const;
  /// Evaluates at time t with the index i bound to t.
  TriValue eval_at(const Expr& e, std::uint32_t t) const;

  Universe logged(std::string operation, std::string_view arguments) const;

  Universe declare(const std::string& name, SymbolKind kind) const;
  Universe with_depth(const std::string& name, std::uint32_t depth) const;
  /// Adds a new cell (DuplicateCell on a taken id).
  Universe with_cell(StateCell cell) const;
  /// Overwrites an existing cell or adds it.
  Universe with_edited_cell(StateCell cell) const;
  Universe without_cell(CellId id) const;
  Universe with_carrier(std::uint32_t t, const std::string& name, ValueSet values) const;
  Universe with_mapping(std::uint32_t t, const std::string& name, ValueSet graph) const;
  Universe with_family(std::uint32_t t, const std::string& name, ValueSet members) const;
  /// Drops every interpretation of name at time t.
  Universe without_interpretation(std::uint32_t t, const std::string& name) const;

  friend bool operator==(const Universe&, const Universe&) = default;
};

Universe new_universe(std::string id);

/// Structural invariant violations; empty when the universe is valid.
std::vector<std::string> universe_violations(const Universe& u);

/// Tag carried by cells that could not be carried across a translation.
inline constexpr std::string_view untranslated_tag = "untranslated";
/// Tag carried by cells demoted by an integration conflict.
inline constexpr std::string_view conflict_tag = "conflict";

} // namespace stategrid
