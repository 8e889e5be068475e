#include "stategrid/document.hpp"

#include "stategrid/error.hpp"
#include "stategrid/parser.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

namespace stategrid {

namespace {

std::string quote(std::string_view s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') {
      out += '\\';
      out += c;
    } else if (c == '\n') {
      out += "\\n";
    } else {
      out += c;
    }
  }
  return out + '"';
}

std::string join(const std::set<std::string>& items) {
  std::string out;
  for (const auto& s : items) {
    if (!out.empty()) out += ',';
    out += s;
  }
  return out;
}

bool is_identifier(std::string_view s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  return std::all_of(s.begin(), s.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  });
}

// Cursor over one line; every failure becomes a FormatError for that line.
class LineReader {
public:
  LineReader(std::string_view line, std::size_t number) : s_(line), line_(number) {}

  [[noreturn]] void fail(const std::string& reason) const { throw FormatError(line_, reason); }

  bool done() const { return pos_ >= s_.size(); }

  void literal(std::string_view text) {
    if (s_.substr(pos_, text.size()) != text) fail("expected '" + std::string(text) + "'");
    pos_ += text.size();
  }

  bool try_literal(std::string_view text) {
    if (s_.substr(pos_, text.size()) != text) return false;
    pos_ += text.size();
    return true;
  }

  // up to the next space or end of line
  std::string_view word() {
    const std::size_t start = pos_;
    while (pos_ < s_.size() && s_[pos_] != ' ') ++pos_;
    if (pos_ == start) fail("missing field");
    return s_.substr(start, pos_ - start);
  }

  std::string_view rest() {
    auto r = s_.substr(pos_);
    pos_ = s_.size();
    return r;
  }

  std::uint64_t natural() {
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (pos_ == start) fail("expected a natural number");
    try {
      return std::stoull(std::string(s_.substr(start, pos_ - start)));
    } catch (const std::exception&) {
      fail("number out of range");
    }
  }

  std::uint32_t natural32() {
    const auto n = natural();
    if (n > 0xffffffffULL) fail("number out of range");
    return static_cast<std::uint32_t>(n);
  }

  std::string quoted() {
    literal("\"");
    std::string out;
    while (pos_ < s_.size() && s_[pos_] != '"') {
      char c = s_[pos_++];
      if (c == '\\') {
        if (pos_ >= s_.size()) fail("unterminated escape");
        const char e = s_[pos_++];
        if (e == 'n') out += '\n';
        else if (e == '"' || e == '\\') out += e;
        else fail("unknown escape");
      } else {
        out += c;
      }
    }
    literal("\"");
    return out;
  }

  std::string identifier() {
    auto w = word();
    if (!is_identifier(w)) fail("expected an identifier, got '" + std::string(w) + "'");
    return std::string(w);
  }

  void end() const {
    if (!done()) fail("unexpected trailing text");
  }

private:
  std::string_view s_;
  std::size_t pos_ = 0;
  std::size_t line_;
};

class ValueReader {
public:
  explicit ValueReader(std::string_view s) : s_(s) {}

  Value value() {
    skip();
    if (pos_ >= s_.size()) throw std::invalid_argument("missing value");
    const char c = s_[pos_];
    if (c == '(' || c == '{') {
      ++pos_;
      const char close = c == '(' ? ')' : '}';
      std::vector<Value> items;
      skip();
      if (pos_ < s_.size() && s_[pos_] == close) {
        ++pos_;
      } else {
        while (true) {
          items.push_back(value());
          skip();
          if (pos_ < s_.size() && s_[pos_] == ',') {
            ++pos_;
            continue;
          }
          if (pos_ < s_.size() && s_[pos_] == close) {
            ++pos_;
            break;
          }
          throw std::invalid_argument("expected ',' or '" + std::string(1, close) + "'");
        }
      }
      return c == '(' ? Value::tuple(std::move(items)) : Value::set(std::move(items));
    }
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::string_view(",(){} ").find(s_[pos_]) == std::string_view::npos)
      ++pos_;
    const auto token = s_.substr(start, pos_ - start);
    if (is_identifier(token)) return Value::atom(std::string(token));
    return Value::number(parse_rational(token));
  }

  void finish() {
    skip();
    if (pos_ != s_.size()) throw std::invalid_argument("trailing text after value");
  }

private:
  void skip() {
    while (pos_ < s_.size() && s_[pos_] == ' ') ++pos_;
  }
  std::string_view s_;
  std::size_t pos_ = 0;
};

const char* kind_word(const CellContent& c) {
  switch (c.index()) {
  case 0: return "ground";
  case 1: return "mapdecl";
  case 2: return "pred";
  default: return "truth";
  }
}

void model_lines(std::ostringstream& out, const char* what, std::uint32_t t,
                 const std::map<std::string, ValueSet>& entries) {
  for (const auto& [name, values] : entries)
    out << what << " t=" << t << ' ' << name << " = " << format_value_set(values) << '\n';
}

} // namespace

Value parse_value(std::string_view text) {
  ValueReader r(text);
  Value v = r.value();
  r.finish();
  return v;
}

std::string format_cell(const StateCell& cell) {
  std::ostringstream out;
  out << "cell " << cell.id << " coord=(" << cell.coord.depth << ',' << cell.coord.hierarchy
      << ',' << cell.coord.time << ") label=" << quote(cell.label)
      << " kind=" << kind_word(cell.content);
  if (const auto* g = std::get_if<content::GroundSet>(&cell.content)) {
    out << " expr=" << quote(g->name);
  } else if (const auto* m = std::get_if<content::MappingDecl>(&cell.content)) {
    out << " expr=" << quote(m->name) << " arity=" << m->arity;
  } else if (const auto* p = std::get_if<content::PredicateState>(&cell.content)) {
    out << " expr=" << quote(print(*p->expr));
  } else {
    out << " value=" << to_string(std::get<content::TruthResult>(cell.content).value);
  }
  out << " def=" << to_string(cell.definability) << " tags=" << join(cell.tags);
  return out.str();
}

std::string format_universe(const Universe& u) {
  std::ostringstream out;
  out << document_header << '\n';
  out << "universe " << u.id << '\n';
  out << "snapshots " << u.snapshots.size() << '\n';
  for (const auto& [name, kind] : u.vocab.entries())
    out << "symbol " << name << " kind=" << to_string(kind) << '\n';
  for (const auto& [name, depth] : u.registry.entries())
    out << "depth " << name << ' ' << depth << '\n';
  for (std::uint32_t t = 0; t < u.snapshots.size(); ++t) {
    model_lines(out, "carrier", t, u.snapshots[t].carriers);
    model_lines(out, "map", t, u.snapshots[t].mappings);
    model_lines(out, "family", t, u.snapshots[t].families);
  }
  for (const auto& [id, cell] : u.grid.cells()) out << format_cell(cell) << '\n';
  auto predictions = u.predictions;
  std::sort(predictions.begin(), predictions.end());
  for (const auto& p : predictions)
    out << "prediction " << p.cell << " claim=" << (p.claim ? "true" : "false") << " at=" << p.at
        << " status=" << to_string(p.status) << '\n';
  for (const auto& e : u.log) out << "log " << e.seq << ' ' << e.operation << ' ' << e.digest << '\n';
  out << "end\n";
  return out.str();
}

namespace {

StateCell read_cell(LineReader& r, const Vocabulary& vocab) {
  StateCell cell;
  cell.id = r.natural();
  r.literal(" coord=(");
  cell.coord.depth = r.natural32();
  r.literal(",");
  cell.coord.hierarchy = r.natural32();
  r.literal(",");
  cell.coord.time = r.natural32();
  r.literal(") label=");
  cell.label = r.quoted();
  r.literal(" kind=");
  const auto kind = r.word();
  std::optional<std::string> expr;
  if (r.try_literal(" expr=")) expr = r.quoted();
  std::optional<std::uint32_t> arity;
  if (r.try_literal(" arity=")) arity = r.natural32();
  std::optional<TriValue> value;
  if (r.try_literal(" value=")) {
    try {
      value = trivalue_from_string(r.word());
    } catch (const std::invalid_argument& e) {
      r.fail(e.what());
    }
  }
  r.literal(" def=");
  const auto def = r.word();
  if (def == "true") cell.definability = TriValue::True;
  else if (def == "undef") cell.definability = TriValue::Undefinable;
  else r.fail("def must be true or undef");
  r.literal(" tags=");
  const auto tags = r.rest();
  std::size_t start = 0;
  while (start < tags.size()) {
    auto end = tags.find(',', start);
    if (end == std::string_view::npos) end = tags.size();
    if (end > start) cell.tags.insert(std::string(tags.substr(start, end - start)));
    start = end + 1;
  }

  auto need_expr = [&]() -> const std::string& {
    if (!expr) r.fail("kind " + std::string(kind) + " needs expr=");
    return *expr;
  };
  if (kind == "ground") {
    cell.content = content::GroundSet{need_expr()};
  } else if (kind == "mapdecl") {
    if (!arity) r.fail("mapdecl needs arity=");
    cell.content = content::MappingDecl{need_expr(), *arity};
  } else if (kind == "pred") {
    try {
      const bool foreign = cell.tags.contains(std::string(untranslated_tag));
      cell.content = content::PredicateState{foreign ? parse_lenient(need_expr(), vocab)
                                                     : parse(need_expr(), vocab)};
    } catch (const Error& e) {
      r.fail(std::string("bad expression: ") + e.what());
    }
  } else if (kind == "truth") {
    if (!value) r.fail("truth cell needs value=");
    cell.content = content::TruthResult{*value};
  } else {
    r.fail("unknown cell kind '" + std::string(kind) + "'");
  }
  return cell;
}

} // namespace

Universe parse_universe(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start < text.size()) {
    auto end = text.find('\n', start);
    if (end == std::string_view::npos) {
      lines.push_back(text.substr(start));
      break;
    }
    lines.push_back(text.substr(start, end - start));
    start = end + 1;
  }
  if (lines.empty()) throw FormatError(1, "empty document");
  if (lines[0] != document_header) {
    if (lines[0].starts_with("stategrid-universe "))
      throw VersionMismatch("unsupported document version '" + std::string(lines[0].substr(19)) +
                            "'");
    throw FormatError(1, "missing header '" + std::string(document_header) + "'");
  }

  Universe u;
  u.snapshots.clear();
  bool have_id = false, ended = false;
  std::optional<std::size_t> slices;
  auto snapshot = [&](LineReader& r, std::uint32_t t) -> Snapshot& {
    if (!slices) r.fail("model line before 'snapshots'");
    if (t >= *slices) r.fail("time " + std::to_string(t) + " beyond the declared snapshots");
    return u.snapshots[t];
  };

  for (std::size_t i = 1; i < lines.size(); ++i) {
    const std::size_t number = i + 1;
    LineReader r(lines[i], number);
    if (ended) r.fail("content after 'end'");
    const auto head = r.word();
    try {
      if (head == "universe") {
        r.literal(" ");
        u.id = std::string(r.word());
        have_id = true;
      } else if (head == "snapshots") {
        r.literal(" ");
        slices = r.natural();
        if (*slices == 0 || *slices > 1'000'000) r.fail("snapshot count out of range");
        u.snapshots.assign(*slices, Snapshot{});
      } else if (head == "symbol") {
        r.literal(" ");
        const auto name = r.identifier();
        r.literal(" kind=");
        u.vocab.declare(name, symbol_kind_from_string(r.word()));
      } else if (head == "depth") {
        r.literal(" ");
        const std::string name(r.word());
        r.literal(" ");
        u.registry.set(name, r.natural32());
      } else if (head == "carrier" || head == "map" || head == "family") {
        r.literal(" t=");
        const auto t = r.natural32();
        r.literal(" ");
        const auto name = r.identifier();
        r.literal(" = ");
        const Value v = parse_value(r.rest());
        if (!v.is_set()) r.fail("expected a braced set");
        ValueSet values(v.items().begin(), v.items().end());
        Snapshot& s = snapshot(r, t);
        auto& target = head == "carrier" ? s.carriers : head == "map" ? s.mappings : s.families;
        if (!target.emplace(name, std::move(values)).second) r.fail("duplicate entry for " + name);
      } else if (head == "cell") {
        r.literal(" ");
        u.grid = u.grid.put(read_cell(r, u.vocab));
      } else if (head == "prediction") {
        r.literal(" ");
        Prediction p;
        p.cell = r.natural();
        r.literal(" claim=");
        const auto claim = r.word();
        if (claim != "true" && claim != "false") r.fail("claim must be true or false");
        p.claim = claim == "true";
        r.literal(" at=");
        p.at = r.natural32();
        r.literal(" status=");
        p.status = prediction_status_from_string(r.word());
        u.predictions.push_back(p);
      } else if (head == "log") {
        r.literal(" ");
        LogEntry e;
        e.seq = r.natural();
        r.literal(" ");
        e.operation = std::string(r.word());
        r.literal(" ");
        e.digest = std::string(r.word());
        if (e.seq != u.log.size() + 1) r.fail("log sequence out of order");
        u.log.push_back(std::move(e));
      } else if (head == "end") {
        ended = true;
      } else {
        r.fail("unknown declaration '" + std::string(head) + "'");
      }
      r.end();
    } catch (const FormatError&) {
      throw;
    } catch (const std::exception& e) {
      throw FormatError(number, e.what());
    }
  }
  const std::size_t last = lines.size();
  if (!ended) throw FormatError(last + 1, "document truncated: missing 'end'");
  if (!have_id) throw FormatError(last, "missing 'universe' line");
  if (!slices) throw FormatError(last, "missing 'snapshots' line");
  std::sort(u.predictions.begin(), u.predictions.end());
  if (auto problems = universe_violations(u); !problems.empty())
    throw FormatError(last, problems.front());
  return u;
}

void save(const Universe& u, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error("cannot write " + path.string());
  out << format_universe(u);
  if (!out) throw Error("failed writing " + path.string());
}

Universe load(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_universe(buf.str());
}

} // namespace stategrid
