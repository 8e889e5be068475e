#pragma once

#include "stategrid/universe.hpp"

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace stategrid {

/// Partial, kind-preserving renaming from one universe's vocabulary into
/// another's.
struct TranslationMap {
  std::string source;
  std::string target;
  std::map<std::string, std::string> entries;
};

/// Rewrites every cell whose names are all mapped; any other cell is kept
/// as is, demoted to Undefinable and tagged "untranslated". Coordinates and
/// ids are preserved. Throws KindMismatch when the map pairs names of
/// different kinds or names missing from either vocabulary.
Universe translate(const Universe& u, const TranslationMap& tm, const Vocabulary& target_vocab);

/// Ids of cells tagged "untranslated".
std::vector<CellId> untranslated_cells(const Universe& u);

struct MergeConflict {
  CellId cell = 0;
  std::optional<StateCell> left;  // nullopt: deleted on that side
  std::optional<StateCell> right;
};

struct MergeOutcome {
  Universe merged;
  std::vector<MergeConflict> conflicts; // ordered by cell id
};

/// Three-way merge of two universes derived from base. Per cell id:
/// unchanged keeps base, a one-sided change wins, identical changes agree,
/// diverging changes conflict and the cell is kept with definability
/// Undefinable (truth results also lose their value) and tagged
/// "conflict". Model interpretations merge the same way; a conflicting
/// interpretation is dropped. Throws UnrelatedUniverses unless base's log
/// is a prefix of both logs.
MergeOutcome integrate(const Universe& base, const Universe& a, const Universe& b);

/// Names and cell ids carried over by a tick.
struct TickMask {
  std::set<std::string> names;
  std::set<CellId> cells;

  /// Comma-separated; numeric items are cell ids, the rest names.
  static TickMask parse(std::string_view text);
  static TickMask everything(const Universe& u);
};

/// Materializes time t_max + 1. Only masked names keep their
/// interpretation; masked cells are copied, under fresh ids, to the new
/// time. Earlier snapshots are untouched. Throws std::invalid_argument if
/// the mask names something the universe does not have.
Universe advance_time(const Universe& u, const TickMask& mask);

/// Throws NotAFuturePrediction unless at > t_max, InvalidCell unless the
/// cell is a predicate state.
Universe record_prediction(const Universe& u, CellId cell, bool claim, std::uint32_t at);

/// Resolves pending predictions whose time has come. A claim matching the
/// evaluation is confirmed, the opposite defined value refutes it, and an
/// Undefinable evaluation leaves it pending.
Universe verify_predictions(const Universe& u);

enum class OperationClass { Macrocosm, Microcosm };
std::string_view to_string(OperationClass c) noexcept;

/// An inter-universal operation and the vocabulary names it touches.
struct OperationDescriptor {
  std::string operation;
  std::set<std::string> footprint;
  std::set<std::string> vocabulary;
};

/// Macrocosm iff the footprint covers the whole vocabulary.
OperationClass classify_operation(const OperationDescriptor& op);

OperationDescriptor describe_translation(const Universe& u, const TranslationMap& tm);
/// Footprint: names used by every cell that differs from base on either side.
OperationDescriptor describe_merge(const Universe& base, const Universe& a, const Universe& b);

struct CodomainReport {
  bool verifiable = true;
  std::vector<std::pair<CellId, std::set<std::string>>> offending;
};

/// Every predicate cell must mention only names interpreted at t_max.
CodomainReport codomain_check(const Universe& u);

/// Names a cell depends on: the symbols of its expression, or the declared
/// name of a ground set or mapping declaration when that name is a
/// vocabulary symbol.
std::set<std::string> cell_symbols(const StateCell& cell, const Vocabulary& vocab);

} // namespace stategrid
