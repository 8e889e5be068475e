#include "stategrid/cli.hpp"

#include "stategrid/demos.hpp"
#include "stategrid/document.hpp"
#include "stategrid/error.hpp"
#include "stategrid/eval.hpp"
#include "stategrid/parser.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

namespace stategrid::cli {

namespace {

// Bad input files and malformed expressions map to the usage exit code.
struct UsageFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageFailure("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Universe load_universe(const std::string& path) {
  const auto text = read_file(path);
  return parse_universe(text);
}

std::vector<std::string> split_lines(std::string_view text) {
  std::vector<std::string> lines;
  std::istringstream in{std::string(text)};
  for (std::string line; std::getline(in, line);) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    lines.push_back(line);
  }
  return lines;
}

std::vector<std::string> words(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> out;
  for (std::string w; in >> w;) out.push_back(w);
  return out;
}

// Writes the document to path, or to out when no path is given.
void emit(const Universe& u, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << format_universe(u);
    return;
  }
  save(u, path);
}

ExprPtr parse_for(const Universe& u, const std::string& text) {
  try {
    return parse(text, u.vocab);
  } catch (const SyntaxError&) {
    throw;
  } catch (const Error& e) {
    throw UsageFailure(e.what());
  }
}

} // namespace

DepthRegistry parse_registry(std::string_view text) {
  DepthRegistry reg;
  std::size_t number = 0;
  for (const auto& line : split_lines(text)) {
    ++number;
    const auto w = words(line);
    if (w.empty() || w[0].starts_with('#')) continue;
    if (w.size() != 2 || w[1].find_first_not_of("0123456789") != std::string::npos)
      throw FormatError(number, "expected '<name> <depth>'");
    reg.set(w[0], static_cast<std::uint32_t>(std::stoul(w[1])));
  }
  return reg;
}

MapFile parse_map_file(std::string_view text) {
  MapFile file;
  const auto lines = split_lines(text);
  if (lines.empty() || lines[0] != "stategrid-map v1") throw FormatError(1, "missing header 'stategrid-map v1'");
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto w = words(lines[i]);
    const std::size_t number = i + 1;
    if (w.empty() || w[0].starts_with('#')) continue;
    if (w[0] == "source" && w.size() == 2) {
      file.map.source = w[1];
    } else if (w[0] == "target" && w.size() == 2) {
      file.map.target = w[1];
    } else if (w[0] == "symbol" && w.size() == 3 && w[2].starts_with("kind=")) {
      try {
        file.target_vocab.declare(w[1], symbol_kind_from_string(w[2].substr(5)));
      } catch (const std::exception& e) {
        throw FormatError(number, e.what());
      }
    } else if (w[0] == "map" && w.size() == 4 && w[2] == "->") {
      if (!file.map.entries.emplace(w[1], w[3]).second)
        throw FormatError(number, "duplicate mapping for " + w[1]);
    } else {
      throw FormatError(number, "unrecognized line");
    }
  }
  return file;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Stratified state grids, three-valued evaluation and universe operations",
               "stategrid"};
  app.require_subcommand(1);

  std::string universe_path, text, output, registry_path, map_path, mode = "transparent",
                                                                    label, mask;
  std::optional<std::uint32_t> time;
  std::string base_path, a_path, b_path, claim;
  CellId cell = 0;
  std::uint32_t at = 0;
  std::string id, demo_name;
  std::vector<std::string> classify_args;

  auto* parse_cmd = app.add_subcommand("parse", "Parse an expression and print its canonical form");
  parse_cmd->add_option("universe", universe_path, "Universe file supplying the vocabulary")->required();
  parse_cmd->add_option("expr", text, "Expression text")->required();

  auto* place_cmd = app.add_subcommand("place", "Place an expression on the grid");
  place_cmd->add_option("universe", universe_path)->required();
  place_cmd->add_option("expr", text)->required();
  place_cmd->add_option("--mode", mode)->check(CLI::IsMember({"transparent", "elevating"}));
  place_cmd->add_option("--registry", registry_path, "Extra depth entries, '<name> <depth>' lines");
  place_cmd->add_option("--time", time);
  place_cmd->add_option("--label", label, "Label of the predicate cell");
  place_cmd->add_option("-o,--output", output, "Write the universe with the placed cells");

  auto* eval_cmd = app.add_subcommand("eval", "Evaluate a formula at a time (default t_max)");
  eval_cmd->add_option("universe", universe_path)->required();
  eval_cmd->add_option("expr", text)->required();
  eval_cmd->add_option("--time", time);

  auto* report_cmd = app.add_subcommand("report", "Print the occupied coordinates");
  report_cmd->add_option("universe", universe_path)->required();

  auto* new_cmd = app.add_subcommand("new", "Create an empty universe");
  new_cmd->add_option("id", id)->required();
  new_cmd->add_option("-o,--output", output);

  auto* translate_cmd = app.add_subcommand("translate", "Translate a universe through a map file");
  translate_cmd->add_option("universe", universe_path)->required();
  translate_cmd->add_option("--map", map_path)->required();
  translate_cmd->add_option("-o,--output", output);

  auto* merge_cmd = app.add_subcommand("merge", "Three-way merge; exit 1 when conflicts remain");
  merge_cmd->add_option("base", base_path)->required();
  merge_cmd->add_option("a", a_path)->required();
  merge_cmd->add_option("b", b_path)->required();
  merge_cmd->add_option("-o,--output", output);

  auto* tick_cmd = app.add_subcommand("tick", "Materialize the next time slice");
  tick_cmd->add_option("universe", universe_path)->required();
  tick_cmd->add_option("--mask", mask, "Comma-separated names and cell ids to carry over")
      ->required();
  tick_cmd->add_option("-o,--output", output);

  auto* predict_cmd = app.add_subcommand("predict", "Record a prediction about a future time");
  predict_cmd->add_option("universe", universe_path)->required();
  predict_cmd->add_option("--cell", cell)->required();
  predict_cmd->add_option("--claim", claim)->required()->check(CLI::IsMember({"true", "false"}));
  predict_cmd->add_option("--at", at)->required();
  predict_cmd->add_option("-o,--output", output);

  auto* verify_cmd = app.add_subcommand("verify", "Resolve predictions whose time has come");
  verify_cmd->add_option("universe", universe_path)->required();
  verify_cmd->add_option("-o,--output", output);

  auto* classify_cmd = app.add_subcommand(
      "classify", "Classify a translation (UNIVERSE --map FILE) or merge (BASE A B)");
  classify_cmd->add_option("universes", classify_args)->required();
  classify_cmd->add_option("--map", map_path);

  auto* codomain_cmd = app.add_subcommand("check-codomain", "List predicate cells naming uninterpreted symbols");
  codomain_cmd->add_option("universe", universe_path)->required();

  auto* demo_cmd = app.add_subcommand("demo", "Run a bundled demonstration");
  demo_cmd->add_option("name", demo_name)->required()->check(CLI::IsMember({"cont", "intelligence"}));

  std::vector<const char*> argv{"stategrid"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? ok : usage_error;
  }

  try {
    if (*parse_cmd) {
      const auto u = load_universe(universe_path);
      out << print(*parse_for(u, text)) << '\n';
    } else if (*place_cmd) {
      auto u = load_universe(universe_path);
      DepthRegistry reg = u.registry;
      if (!registry_path.empty()) {
        const DepthRegistry extra = parse_registry(read_file(registry_path));
        for (const auto& [name, depth] : extra.entries()) reg.set(name, depth);
      }
      const auto e = parse_for(u, text);
      const auto p = place(*e, u.vocab, reg, composition_mode_from_string(mode),
                           time.value_or(u.t_max()), label);
      if (output.empty()) {
        out << report(placement_grid(p));
      } else {
        const Grid placed = placement_grid(p, u.grid.next_id());
        for (const auto& [id, cell] : placed.cells()) u = u.with_cell(cell);
        save(u, output);
      }
    } else if (*eval_cmd) {
      const auto u = load_universe(universe_path);
      const auto e = parse_for(u, text);
      out << to_string(u.eval_at(*e, time.value_or(u.t_max()))) << '\n';
    } else if (*report_cmd) {
      out << report(load_universe(universe_path).grid);
    } else if (*new_cmd) {
      emit(new_universe(id), output, out);
    } else if (*translate_cmd) {
      const auto u = load_universe(universe_path);
      const auto file = parse_map_file(read_file(map_path));
      const auto t = translate(u, file.map, file.target_vocab);
      err << untranslated_cells(t).size() << " untranslated cell(s)\n";
      emit(t, output, out);
    } else if (*merge_cmd) {
      const auto outcome =
          integrate(load_universe(base_path), load_universe(a_path), load_universe(b_path));
      for (const auto& c : outcome.conflicts) err << "conflict: cell " << c.cell << '\n';
      emit(outcome.merged, output, out);
      if (!outcome.conflicts.empty()) return domain_error;
    } else if (*tick_cmd) {
      emit(advance_time(load_universe(universe_path), TickMask::parse(mask)), output, out);
    } else if (*predict_cmd) {
      emit(record_prediction(load_universe(universe_path), cell, claim == "true", at), output, out);
    } else if (*verify_cmd) {
      const auto u = verify_predictions(load_universe(universe_path));
      for (const auto& p : u.predictions)
        err << "cell " << p.cell << " at " << p.at << ": " << to_string(p.status) << '\n';
      emit(u, output, out);
    } else if (*classify_cmd) {
      OperationDescriptor op;
      if (!map_path.empty()) {
        if (classify_args.size() != 1) throw CLI::ValidationError("--map", "expects one universe");
        op = describe_translation(load_universe(classify_args[0]),
                                  parse_map_file(read_file(map_path)).map);
      } else {
        if (classify_args.size() != 3) throw CLI::ValidationError("universes", "expects BASE A B");
        op = describe_merge(load_universe(classify_args[0]), load_universe(classify_args[1]),
                            load_universe(classify_args[2]));
      }
      out << op.operation << ' ' << to_string(classify_operation(op)) << '\n';
    } else if (*codomain_cmd) {
      const auto r = codomain_check(load_universe(universe_path));
      for (const auto& [id, names] : r.offending) {
        out << "cell " << id << ':';
        for (const auto& n : names) out << ' ' << n;
        out << '\n';
      }
      out << (r.verifiable ? "verifiable" : "not verifiable") << '\n';
      if (!r.verifiable) return domain_error;
    } else if (*demo_cmd) {
      out << (demo_name == "cont" ? demos::demo_cont() : demos::demo_intelligence());
    }
  } catch (const CLI::Error& e) {
    err << "usage: " << e.what() << '\n';
    return usage_error;
  } catch (const UsageFailure& e) {
    err << "error: " << e.what() << '\n';
    return usage_error;
  } catch (const FormatError& e) {
    err << "error: " << e.what() << '\n';
    return usage_error;
  } catch (const VersionMismatch& e) {
    err << "error: " << e.what() << '\n';
    return usage_error;
  } catch (const SyntaxError& e) {
    err << "error: " << e.what() << '\n';
    return usage_error;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return domain_error;
  }
  return ok;
}

} // namespace stategrid::cli
