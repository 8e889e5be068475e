#include "stategrid/parser.hpp"

#include "stategrid/error.hpp"

#include <cctype>
#include <optional>
#include <set>
#include <vector>

namespace stategrid {

namespace {

struct Token {
  enum class Kind { Ident, Number, Punct, End };
  Kind kind;
  std::string text;
  std::size_t pos;
};

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }
bool digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

std::vector<Token> lex(std::string_view src) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < src.size()) {
    const char c = src[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    const std::size_t start = i;
    if (ident_start(c)) {
      while (i < src.size() && ident_char(src[i])) ++i;
      out.push_back({Token::Kind::Ident, std::string(src.substr(start, i - start)), start});
    } else if (digit(c)) {
      while (i < src.size() && digit(src[i])) ++i;
      if (i + 1 < src.size() && src[i] == '/' && digit(src[i + 1])) {
        ++i;
        while (i < src.size() && digit(src[i])) ++i;
      }
      out.push_back({Token::Kind::Number, std::string(src.substr(start, i - start)), start});
    } else {
      static const char* two[] = {"->", "<=", ">="};
      bool matched = false;
      for (const char* t : two) {
        if (src.substr(i, 2) == t) {
          out.push_back({Token::Kind::Punct, t, start});
          i += 2;
          matched = true;
          break;
        }
      }
      if (matched) continue;
      if (std::string_view("<>=+-(),.@{}").find(c) == std::string_view::npos)
        throw SyntaxError(start, "token");
      out.push_back({Token::Kind::Punct, std::string(1, c), start});
      ++i;
    }
  }
  out.push_back({Token::Kind::End, "", src.size()});
  return out;
}

const std::set<std::string, std::less<>> keywords{"forall", "exists", "in",  "not",   "and",
                                                  "or",     "card",   "abs", "subset"};

enum class Sort { Term, Formula };

Sort sort_of(const Expr& e) { return e.is_formula() ? Sort::Formula : Sort::Term; }

class Parser {
public:
  Parser(std::string_view text, const Vocabulary& vocab, bool infer = false)
      : toks_(lex(text)), vocab_(vocab), infer_(infer) {}

  ExprPtr parse_all() {
    auto e = expr();
    if (peek().kind != Token::Kind::End) throw SyntaxError(peek().pos, "end of input");
    return e;
  }

private:
  std::vector<Token> toks_;
  std::size_t at_ = 0;
  Vocabulary vocab_;
  bool infer_ = false;
  std::vector<std::string> bound_;

  std::optional<SymbolKind> lookup(const std::string& name, SymbolKind implied) {
    if (auto k = vocab_.find(name)) return k;
    if (!infer_) return std::nullopt;
    vocab_.declare(name, implied);
    return implied;
  }

  const Token& peek(std::size_t ahead = 0) const {
    return toks_[std::min(at_ + ahead, toks_.size() - 1)];
  }
  bool is_punct(std::string_view p, std::size_t ahead = 0) const {
    return peek(ahead).kind == Token::Kind::Punct && peek(ahead).text == p;
  }
  bool is_keyword(std::string_view k, std::size_t ahead = 0) const {
    return peek(ahead).kind == Token::Kind::Ident && peek(ahead).text == k;
  }
  bool is_ident(std::size_t ahead = 0) const {
    return peek(ahead).kind == Token::Kind::Ident && !keywords.contains(peek(ahead).text);
  }
  Token take() { return toks_[at_ < toks_.size() - 1 ? at_++ : at_]; }
  void expect_punct(std::string_view p) {
    if (!is_punct(p)) throw SyntaxError(peek().pos, "'" + std::string(p) + "'");
    take();
  }
  void expect_keyword(std::string_view k) {
    if (!is_keyword(k)) throw SyntaxError(peek().pos, "'" + std::string(k) + "'");
    take();
  }
  std::string expect_ident() {
    if (!is_ident()) throw SyntaxError(peek().pos, "identifier");
    return take().text;
  }
  bool is_bound(const std::string& n) const {
    for (const auto& b : bound_)
      if (b == n) return true;
    return false;
  }

  ExprPtr want(ExprPtr e, Sort s, std::size_t pos) {
    if (sort_of(*e) != s) throw SyntaxError(pos, s == Sort::Formula ? "formula" : "term");
    return e;
  }

  ExprPtr sub_expr(Sort s) {
    const std::size_t pos = peek().pos;
    return want(expr(), s, pos);
  }

  ExprPtr expr() {
    if (is_keyword("forall") || is_keyword("exists")) return quant();
    return imp();
  }

  ExprPtr quant() {
    const bool universal = take().text == "forall";
    std::string var = expect_ident();
    expect_keyword("in");
    const std::size_t carrier_pos = peek().pos;
    std::string carrier = expect_ident();
    auto kind = lookup(carrier, SymbolKind::carrier());
    if (!kind) throw UnknownSymbol(carrier);
    if (kind->tag != SymbolKind::Tag::CarrierSet)
      throw IllFormed("quantifier at position " + std::to_string(carrier_pos) +
                      " ranges over '" + carrier + "', which is not a carrier set");
    expect_punct(".");
    bound_.push_back(var);
    auto body = sub_expr(Sort::Formula);
    bound_.pop_back();
    return universal ? build::forall(var, carrier, body) : build::exists(var, carrier, body);
  }

  ExprPtr imp() {
    const std::size_t pos = peek().pos;
    auto lhs = disj();
    if (!is_punct("->")) return lhs;
    want(lhs, Sort::Formula, pos);
    take();
    const std::size_t rpos = peek().pos;
    auto rhs = want(imp(), Sort::Formula, rpos);
    return build::implies(lhs, rhs);
  }

  ExprPtr disj() {
    const std::size_t pos = peek().pos;
    auto lhs = conj();
    while (is_keyword("or")) {
      want(lhs, Sort::Formula, pos);
      take();
      const std::size_t rpos = peek().pos;
      lhs = build::disj(lhs, want(conj(), Sort::Formula, rpos));
    }
    return lhs;
  }

  ExprPtr conj() {
    const std::size_t pos = peek().pos;
    auto lhs = neg();
    while (is_keyword("and")) {
      want(lhs, Sort::Formula, pos);
      take();
      const std::size_t rpos = peek().pos;
      lhs = build::conj(lhs, want(neg(), Sort::Formula, rpos));
    }
    return lhs;
  }

  ExprPtr neg() {
    if (is_keyword("not")) {
      take();
      const std::size_t pos = peek().pos;
      return build::negate(want(neg(), Sort::Formula, pos));
    }
    return cmp();
  }

  ExprPtr cmp() {
    const std::size_t pos = peek().pos;
    auto lhs = sum();
    static const std::pair<const char*, CmpOp> ops[] = {
        {"<", CmpOp::Lt}, {">", CmpOp::Gt}, {"=", CmpOp::Eq}, {"<=", CmpOp::Le}, {">=", CmpOp::Ge}};
    for (const auto& [text, op] : ops) {
      if (is_punct(text)) {
        want(lhs, Sort::Term, pos);
        take();
        const std::size_t rpos = peek().pos;
        return build::cmp(op, lhs, want(sum(), Sort::Term, rpos));
      }
    }
    if (is_keyword("in")) {
      want(lhs, Sort::Term, pos);
      take();
      const std::size_t rpos = peek().pos;
      auto s = want(sum(), Sort::Term, rpos);
      check_set_valued(*s, rpos, /*allow_mapping=*/true);
      return build::member(lhs, s);
    }
    if (is_keyword("subset")) {
      want(lhs, Sort::Term, pos);
      check_set_valued(*lhs, pos, true);
      take();
      const std::size_t rpos = peek().pos;
      auto s = want(sum(), Sort::Term, rpos);
      check_set_valued(*s, rpos, true);
      return build::subset(lhs, s);
    }
    return lhs;
  }

  ExprPtr sum() {
    const std::size_t pos = peek().pos;
    auto lhs = term();
    while (is_punct("+") || is_punct("-")) {
      want(lhs, Sort::Term, pos);
      std::string op = take().text;
      const std::size_t rpos = peek().pos;
      lhs = build::app(op, {lhs, want(term(), Sort::Term, rpos)});
    }
    return lhs;
  }

  ExprPtr term() {
    const Token& t = peek();
    if ((is_punct("-") || is_punct("+")) && peek(1).kind == Token::Kind::Number) {
      const bool negative = take().text == "-";
      Rational r = parse_rational(take().text);
      return build::lit(negative ? Rational(-r) : r);
    }
    if (t.kind == Token::Kind::Number) return build::lit(parse_rational(take().text));
    if (is_keyword("card")) {
      take();
      expect_punct("(");
      const std::size_t pos = peek().pos;
      auto of = sub_expr(Sort::Term);
      check_set_valued(*of, pos, false);
      expect_punct(")");
      return build::card(of);
    }
    if (is_keyword("abs")) {
      take();
      expect_punct("(");
      const std::size_t pos = peek().pos;
      auto inner = sub_expr(Sort::Term);
      const auto* diff = inner->as<node::App>();
      if (!diff || diff->fn != "-") throw SyntaxError(pos, "difference 'a - b'");
      expect_punct(")");
      return build::abs_diff(diff->args[0], diff->args[1]);
    }
    if (is_punct("(")) {
      take();
      auto first = expr();
      if (!is_punct(",")) {
        expect_punct(")");
        return first;
      }
      std::vector<ExprPtr> items{want(first, Sort::Term, t.pos + 1)};
      while (is_punct(",")) {
        take();
        items.push_back(sub_expr(Sort::Term));
      }
      expect_punct(")");
      return build::tuple(std::move(items));
    }
    if (is_punct("{")) {
      take();
      std::vector<ExprPtr> items;
      if (!is_punct("}")) {
        items.push_back(sub_expr(Sort::Term));
        while (is_punct(",")) {
          take();
          items.push_back(sub_expr(Sort::Term));
        }
      }
      expect_punct("}");
      return build::set(std::move(items));
    }
    if (is_ident()) {
      Token name = take();
      if (is_punct("(")) return application(name);
      if (is_punct("@")) return timed(name);
      return name_atom(name);
    }
    throw SyntaxError(t.pos, "expression");
  }

  ExprPtr application(const Token& name) {
    take(); // (
    std::vector<ExprPtr> args{sub_expr(Sort::Term)};
    while (is_punct(",")) {
      take();
      args.push_back(sub_expr(Sort::Term));
    }
    expect_punct(")");
    if (is_bound(name.text))
      throw IllFormed("bound variable '" + name.text + "' applied as a mapping");
    auto kind = lookup(name.text, SymbolKind::mapping(static_cast<std::uint32_t>(args.size())));
    if (!kind) throw UnknownSymbol(name.text);
    if (kind->tag != SymbolKind::Tag::Mapping)
      throw IllFormed("'" + name.text + "' is applied but is not a mapping");
    if (args.size() != kind->arity) throw ArityMismatch(name.text, args.size(), kind->arity);
    return build::app(name.text, std::move(args));
  }

  ExprPtr timed(const Token& name) {
    take(); // @
    auto kind = lookup(name.text, SymbolKind::family());
    if (!kind) throw UnknownSymbol(name.text);
    if (kind->tag != SymbolKind::Tag::TimedFamily)
      throw IllFormed("'" + name.text + "' is indexed by time but is not a timed family");
    TimeIndex index;
    if (is_punct("(")) {
      take();
      index = time_index(true);
      expect_punct(")");
    } else {
      index = time_index(false);
    }
    return build::at_time(name.text, index);
  }

  TimeIndex time_index(bool allow_successor) {
    if (is_keyword("i")) {
      take();
      if (allow_successor && is_punct("+")) {
        take();
        if (peek().kind != Token::Kind::Number || peek().text != "1")
          throw SyntaxError(peek().pos, "'1' (only i and i+1 are valid indices)");
        take();
        return TimeIndex::next();
      }
      return TimeIndex::current();
    }
    if (peek().kind == Token::Kind::Number && peek().text.find('/') == std::string::npos) {
      const Token n = take();
      try {
        return TimeIndex::at(static_cast<std::uint32_t>(std::stoul(n.text)));
      } catch (const std::out_of_range&) {
        throw SyntaxError(n.pos, "time index in range");
      }
    }
    throw SyntaxError(peek().pos, "time index (i, i+1 or a natural number)");
  }

  ExprPtr name_atom(const Token& t) {
    if (keywords.contains(t.text)) throw SyntaxError(t.pos, "identifier");
    if (is_bound(t.text)) return build::atom(t.text);
    auto kind = lookup(t.text, SymbolKind::carrier());
    if (!kind) throw UnknownSymbol(t.text);
    if (kind->tag == SymbolKind::Tag::Predicate)
      throw IllFormed("predicate '" + t.text + "' used as a term");
    return build::atom(t.text);
  }

  void check_set_valued(const Expr& e, std::size_t pos, bool allow_mapping) const {
    if (e.is<node::SetLit>() || e.is<node::AtTime>()) return;
    if (const auto* a = e.as<node::Atom>()) {
      if (is_bound(a->name) && allow_mapping) return;
      if (auto kind = vocab_.find(a->name); kind && !is_bound(a->name)) {
        if (kind->tag == SymbolKind::Tag::CarrierSet || kind->tag == SymbolKind::Tag::TimedFamily)
          return;
        if (allow_mapping && kind->tag == SymbolKind::Tag::Mapping) return;
      }
    }
    throw IllFormed("expression at position " + std::to_string(pos) + " is not set-valued");
  }
};

// precedence levels: 0 expr/quant, 1 imp, 2 or, 3 and, 4 not, 5 cmp, 6 sum, 7 term
void emit(const Expr& e, int ctx, std::string& out);

void wrap(const Expr& e, int own, int ctx, std::string& out, auto&& body) {
  if (own < ctx) out += '(';
  body();
  if (own < ctx) out += ')';
  (void)e;
}

void emit_list(const std::vector<ExprPtr>& xs, std::string& out) {
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ", ";
    emit(*xs[i], 0, out);
  }
}

void emit_index(const TimeIndex& idx, std::string& out) {
  switch (idx.kind) {
  case TimeIndex::Kind::Current: out += 'i'; break;
  case TimeIndex::Kind::Next: out += "(i+1)"; break;
  case TimeIndex::Kind::Literal: out += std::to_string(idx.literal); break;
  }
}

void emit(const Expr& e, int ctx, std::string& out) {
  using namespace node;
  if (const auto* n = e.as<Atom>()) {
    out += n->name;
  } else if (const auto* n = e.as<RationalLit>()) {
    out += format_rational(n->value);
  } else if (const auto* n = e.as<SetLit>()) {
    out += '{';
    emit_list(n->elements, out);
    out += '}';
  } else if (const auto* n = e.as<TupleLit>()) {
    out += '(';
    emit_list(n->elements, out);
    out += ')';
  } else if (const auto* n = e.as<App>()) {
    if (is_builtin_operator(n->fn) && n->args.size() == 2) {
      wrap(e, 6, ctx, out, [&] {
        emit(*n->args[0], 6, out);
        out += ' ' + n->fn + ' ';
        emit(*n->args[1], 7, out);
      });
    } else {
      out += n->fn + '(';
      emit_list(n->args, out);
      out += ')';
    }
  } else if (const auto* n = e.as<Card>()) {
    out += "card(";
    emit(*n->of, 0, out);
    out += ')';
  } else if (const auto* n = e.as<AbsDiff>()) {
    out += "abs(";
    emit(*n->a, 6, out);
    out += " - ";
    emit(*n->b, 7, out);
    out += ')';
  } else if (const auto* n = e.as<AtTime>()) {
    out += n->family + '@';
    emit_index(n->index, out);
  } else if (const auto* n = e.as<Cmp>()) {
    wrap(e, 5, ctx, out, [&] {
      emit(*n->lhs, 6, out);
      out += ' ';
      out += to_string(n->op);
      out += ' ';
      emit(*n->rhs, 6, out);
    });
  } else if (const auto* n = e.as<Member>()) {
    wrap(e, 5, ctx, out, [&] {
      emit(*n->x, 6, out);
      out += " in ";
      emit(*n->s, 6, out);
    });
  } else if (const auto* n = e.as<SubsetOf>()) {
    wrap(e, 5, ctx, out, [&] {
      emit(*n->a, 7, out);
      out += " subset ";
      emit(*n->b, 7, out);
    });
  } else if (const auto* n = e.as<Not>()) {
    wrap(e, 4, ctx, out, [&] {
      out += "not ";
      emit(*n->e, 4, out);
    });
  } else if (const auto* n = e.as<And>()) {
    wrap(e, 3, ctx, out, [&] {
      emit(*n->a, 3, out);
      out += " and ";
      emit(*n->b, 4, out);
    });
  } else if (const auto* n = e.as<Or>()) {
    wrap(e, 2, ctx, out, [&] {
      emit(*n->a, 2, out);
      out += " or ";
      emit(*n->b, 3, out);
    });
  } else if (const auto* n = e.as<Implies>()) {
    wrap(e, 1, ctx, out, [&] {
      emit(*n->a, 2, out);
      out += " -> ";
      emit(*n->b, 1, out);
    });
  } else if (const auto* n = e.as<Forall>()) {
    wrap(e, 0, ctx, out, [&] {
      out += "forall " + n->var + " in " + n->carrier + " . ";
      emit(*n->body, 0, out);
    });
  } else if (const auto* n = e.as<Exists>()) {
    wrap(e, 0, ctx, out, [&] {
      out += "exists " + n->var + " in " + n->carrier + " . ";
      emit(*n->body, 0, out);
    });
  }
}

} // namespace

ExprPtr parse(std::string_view text, const Vocabulary& vocab) {
  return Parser(text, vocab).parse_all();
}

ExprPtr parse_lenient(std::string_view text, const Vocabulary& vocab) {
  return Parser(text, vocab, true).parse_all();
}

std::string print(const Expr& e) {
  std::string out;
  emit(e, 0, out);
  return out;
}

} // namespace stategrid
