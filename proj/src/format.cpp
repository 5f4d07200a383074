#include "predeq/format.hpp"

#include <cctype>
#include <charconv>
#include <set>
#include <sstream>
#include <unordered_map>

namespace predeq {

bool is_identifier(std::string_view text) {
  if (text.empty()) return false;
  if (!std::isalpha(static_cast<unsigned char>(text[0])) && text[0] != '_') return false;
  for (char c : text.substr(1))
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_' && c != '-') return false;
  return true;
}

bool is_integer_literal(std::string_view text) {
  if (text.starts_with('-')) text.remove_prefix(1);
  if (text.empty()) return false;
  for (char c : text)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

namespace {

enum class Tok { identifier, integer, lparen, rparen, comma, equals, newline, eof };

struct Token {
  Tok kind;
  std::string text;
  SourceLocation where;
};

std::string describe(const Token& t) {
  switch (t.kind) {
    case Tok::newline: return "end of line";
    case Tok::eof: return "end of input";
    default: return "'" + t.text + "'";
  }
}

std::vector<Token> lex(std::string_view text) {
  std::vector<Token> out;
  std::size_t line = 1;
  std::size_t col = 1;
  std::size_t i = 0;
  auto here = [&] { return SourceLocation{line, col}; };
  auto advance = [&](std::size_t n) {
    i += n;
    col += n;
  };
  while (i < text.size()) {
    const char c = text[i];
    if (c == '\n') {
      out.push_back({Tok::newline, "\n", here()});
      ++i;
      ++line;
      col = 1;
      continue;
    }
    if (c == ' ' || c == '\t' || c == '\r') {
      advance(1);
      continue;
    }
    if (c == '#') {
      while (i < text.size() && text[i] != '\n') advance(1);
      continue;
    }
    const auto start = here();
    if (c == '(' || c == ')' || c == ',' || c == '=') {
      Tok k = c == '(' ? Tok::lparen : c == ')' ? Tok::rparen : c == ',' ? Tok::comma : Tok::equals;
      out.push_back({k, std::string(1, c), start});
      advance(1);
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i + 1;
      while (j < text.size() && (std::isalnum(static_cast<unsigned char>(text[j])) ||
                                 text[j] == '_' || text[j] == '-'))
        ++j;
      out.push_back({Tok::identifier, std::string(text.substr(i, j - i)), start});
      advance(j - i);
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) ||
        (c == '-' && i + 1 < text.size() && std::isdigit(static_cast<unsigned char>(text[i + 1])))) {
      std::size_t j = i + 1;
      while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
      out.push_back({Tok::integer, std::string(text.substr(i, j - i)), start});
      advance(j - i);
      continue;
    }
    throw ParseError(start, std::string("unexpected character '") + c + "'");
  }
  out.push_back({Tok::eof, "", here()});
  return out;
}

class Parser {
 public:
  explicit Parser(std::string_view text) : tokens_(lex(text)) {}

  const Token& peek() const { return tokens_[pos_]; }
  const Token& next() { return tokens_[pos_ == tokens_.size() - 1 ? pos_ : pos_++]; }

  void skip_newlines() {
    while (peek().kind == Tok::newline) ++pos_;
  }

  [[noreturn]] void fail(const Token& t, const std::string& what) const {
    throw ParseError(t.where, what + ", found " + describe(t));
  }

  const Token& expect(Tok kind, const std::string& what) {
    if (peek().kind != kind) fail(peek(), "expected " + what);
    return next();
  }

  void expect_keyword(std::string_view keyword) {
    if (peek().kind != Tok::identifier || peek().text != keyword)
      fail(peek(), "expected '" + std::string(keyword) + "'");
    next();
  }

  bool at_keyword(std::string_view keyword) const {
    return peek().kind == Tok::identifier && peek().text == keyword;
  }

  Located name(const std::string& what) {
    const auto& t = expect(Tok::identifier, what);
    return {t.text, t.where};
  }

  Located element_name() {
    if (peek().kind != Tok::identifier && peek().kind != Tok::integer)
      fail(peek(), "expected an element name");
    const auto& t = next();
    return {t.text, t.where};
  }

 private:
  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

bool reserved(std::string_view word) {
  return word == "structure" || word == "elements" || word == "predicate" || word == "end" ||
         word == "system" || word == "vars";
}

}  // namespace

StructureDoc parse_structure_doc(std::string_view text) {
  Parser p(text);
  StructureDoc doc;
  p.skip_newlines();
  p.expect_keyword("structure");
  doc.name = p.name("a structure name");
  p.skip_newlines();
  p.expect_keyword("elements");
  while (true) {
    p.skip_newlines();
    const auto& t = p.peek();
    if (t.kind == Tok::identifier && reserved(t.text)) break;
    if (t.kind != Tok::identifier && t.kind != Tok::integer)
      p.fail(t, "expected an element name, 'predicate' or 'end'");
    doc.elements.push_back(p.element_name());
  }
  while (p.at_keyword("predicate")) {
    p.next();
    StructureDoc::Predicate pred;
    pred.name = p.name("a predicate name");
    const auto& arity = p.expect(Tok::integer, "an arity");
    std::size_t value = 0;
    auto [ptr, ec] = std::from_chars(arity.text.data(), arity.text.data() + arity.text.size(), value);
    if (ec != std::errc() || ptr != arity.text.data() + arity.text.size() || value == 0)
      throw ParseError(arity.where, "arity must be a positive integer, found '" + arity.text + "'");
    pred.arity = value;
    p.skip_newlines();
    while (p.peek().kind == Tok::lparen) {
      pred.tuple_starts.push_back(p.next().where);
      std::vector<Located> items;
      items.push_back(p.element_name());
      while (p.peek().kind == Tok::comma) {
        p.next();
        items.push_back(p.element_name());
      }
      p.expect(Tok::rparen, "',' or ')'");
      pred.tuples.push_back(std::move(items));
      p.skip_newlines();
    }
    doc.predicates.push_back(std::move(pred));
  }
  p.expect_keyword("end");
  p.skip_newlines();
  if (p.peek().kind != Tok::eof) p.fail(p.peek(), "expected end of input after 'end'");
  return doc;
}

Structure build_structure(const StructureDoc& doc) {
  std::vector<std::string> elements;
  std::unordered_map<std::string, Element> index;
  for (const auto& e : doc.elements) {
    if (!index.emplace(e.text, static_cast<Element>(elements.size())).second)
      throw ParseError(e.where, "duplicate element '" + e.text + "'");
    elements.push_back(e.text);
  }
  if (elements.empty()) throw ParseError(doc.name.where, "structure '" + doc.name.text + "' has no elements");
  std::vector<PredicateSymbol> symbols;
  std::vector<std::vector<Tuple>> relations;
  std::set<std::string> seen;
  for (const auto& pred : doc.predicates) {
    if (!seen.insert(pred.name.text).second)
      throw ParseError(pred.name.where, "duplicate predicate '" + pred.name.text + "'");
    std::vector<Tuple> tuples;
    for (std::size_t i = 0; i < pred.tuples.size(); ++i) {
      const auto& items = pred.tuples[i];
      if (items.size() != pred.arity)
        throw ParseError(pred.tuple_starts[i],
                         "tuple of length " + std::to_string(items.size()) + " for predicate '" +
                             pred.name.text + "' of arity " + std::to_string(pred.arity));
      Tuple t;
      for (const auto& item : items) {
        auto it = index.find(item.text);
        if (it == index.end()) throw ParseError(item.where, "unknown element '" + item.text + "'");
        t.push_back(it->second);
      }
      tuples.push_back(std::move(t));
    }
    symbols.push_back({pred.name.text, pred.arity});
    relations.push_back(std::move(tuples));
  }
  return Structure(doc.name.text, std::move(elements), std::move(symbols), std::move(relations));
}

Structure parse_structure(std::string_view text) { return build_structure(parse_structure_doc(text)); }

std::string print_structure(const Structure& structure) {
  std::ostringstream out;
  out << "structure " << structure.name() << "\n  elements";
  for (const auto& e : structure.elements()) out << ' ' << e;
  out << '\n';
  for (std::size_t i = 0; i < structure.symbols().size(); ++i) {
    const auto& sym = structure.symbols()[i];
    out << "  predicate " << sym.name << ' ' << sym.arity << '\n';
    for (const auto& t : structure.relation(i).tuples()) {
      out << "    (";
      for (std::size_t k = 0; k < t.size(); ++k)
        out << (k ? ", " : "") << structure.element_name(t[k]);
      out << ")\n";
    }
  }
  out << "end\n";
  return out.str();
}

std::vector<EquationSystem> parse_systems(std::string_view text, const Structure& structure) {
  Parser p(text);
  std::vector<EquationSystem> out;
  p.skip_newlines();
  while (p.peek().kind != Tok::eof) {
    p.expect_keyword("system");
    const auto name = p.name("a system name");
    p.skip_newlines();
    std::vector<std::string> vars;
    if (p.at_keyword("vars")) {
      p.next();
      std::set<std::string> seen;
      while (p.peek().kind == Tok::identifier) {
        const auto& t = p.next();
        if (reserved(t.text)) p.fail(t, "expected a variable name");
        if (!seen.insert(t.text).second)
          throw ParseError(t.where, "duplicate variable '" + t.text + "'");
        vars.push_back(t.text);
      }
      if (p.peek().kind != Tok::newline && p.peek().kind != Tok::eof)
        p.fail(p.peek(), "expected a variable name or end of line");
    }
    const std::set<std::string, std::less<>> declared(vars.begin(), vars.end());

    auto term = [&]() -> Term {
      const auto& t = p.peek();
      if (t.kind != Tok::identifier && t.kind != Tok::integer) p.fail(t, "expected a term");
      p.next();
      if (t.kind == Tok::identifier && declared.contains(t.text)) return var(t.text);
      if (!structure.find_element(t.text)) {
        if (t.kind == Tok::identifier)
          throw ParseError(t.where, "undeclared variable or unknown element '" + t.text + "'");
        throw ParseError(t.where, "unknown element '" + t.text + "'");
      }
      return constant(t.text);
    };

    std::vector<Equation> equations;
    while (true) {
      p.skip_newlines();
      if (p.at_keyword("end")) break;
      const auto& first = p.peek();
      if (first.kind == Tok::eof) p.fail(first, "expected an equation or 'end'");
      if (first.kind == Tok::identifier && !declared.contains(first.text) &&
          p.peek().kind == Tok::identifier) {
        // Atom when the identifier is followed by '('.
        Token head = p.next();
        if (p.peek().kind == Tok::lparen) {
          p.next();
          auto sym = structure.find_symbol(head.text);
          if (!sym) throw ParseError(head.where, "unknown predicate '" + head.text + "'");
          Atom atom{head.text, {}};
          atom.args.push_back(term());
          while (p.peek().kind == Tok::comma) {
            p.next();
            atom.args.push_back(term());
          }
          p.expect(Tok::rparen, "',' or ')'");
          const auto arity = structure.symbols()[*sym].arity;
          if (atom.args.size() != arity)
            throw ParseError(head.where, "'" + head.text + "' expects " + std::to_string(arity) +
                                             " arguments, got " +
                                             std::to_string(atom.args.size()));
          equations.emplace_back(std::move(atom));
        } else {
          if (!structure.find_element(head.text))
            throw ParseError(head.where,
                             "undeclared variable or unknown element '" + head.text + "'");
          p.expect(Tok::equals, "'='");
          equations.emplace_back(Equality{constant(head.text), term()});
        }
      } else {
        Term lhs = term();
        p.expect(Tok::equals, "'='");
        equations.emplace_back(Equality{lhs, term()});
      }
      if (p.peek().kind != Tok::newline && p.peek().kind != Tok::eof)
        p.fail(p.peek(), "expected end of line after equation");
    }
    p.expect_keyword("end");
    out.emplace_back(name.text, std::move(vars), std::move(equations));
    p.skip_newlines();
  }
  return out;
}

EquationSystem parse_system(std::string_view text, const Structure& structure) {
  auto systems = parse_systems(text, structure);
  if (systems.size() != 1)
    throw ParseError({1, 1}, "expected exactly one system, found " + std::to_string(systems.size()));
  return std::move(systems.front());
}

std::string print_term(const Term& term) {
  if (const auto* v = std::get_if<Variable>(&term)) return v->name;
  return std::get<Constant>(term).element;
}

std::string print_equation(const Equation& equation) {
  if (const auto* atom = std::get_if<Atom>(&equation)) {
    std::string out = atom->predicate + "(";
    for (std::size_t i = 0; i < atom->args.size(); ++i)
      out += (i ? ", " : "") + print_term(atom->args[i]);
    return out + ")";
  }
  const auto& eq = std::get<Equality>(equation);
  return print_term(eq.lhs) + " = " + print_term(eq.rhs);
}

std::string print_system(const EquationSystem& system) {
  std::ostringstream out;
  out << "system " << system.name() << "\n  vars";
  for (const auto& v : system.variables()) out << ' ' << v;
  out << '\n';
  for (const auto& eq : system.equations()) out << "  " << print_equation(eq) << '\n';
  out << "end\n";
  return out.str();
}

}  // namespace predeq
