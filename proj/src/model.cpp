#include "uarep/model.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

#include "uarep/error.hpp"

namespace uarep {

namespace {

struct Token {
  enum class Kind { word, punct, end };
  Kind kind = Kind::end;
  std::string text;
  std::size_t line = 1;
  std::size_t column = 1;
};

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) { advance(); }

  const Token& peek() const { return current_; }

  Token take() {
    Token t = current_;
    advance();
    return t;
  }

  [[noreturn]] void fail(const Token& at, const std::string& message) const {
    std::ostringstream out;
    out << at.line << ':' << at.column << ": " << message;
    throw_parse(ErrorKind::SyntaxError, out.str());
  }

 private:
  static bool word_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  }

  void advance() {
    while (pos_ < text_.size()) {
      const char c = text_[pos_];
      if (c == '#') {
        while (pos_ < text_.size() && text_[pos_] != '\n') ++pos_;
      } else if (c == '\n') {
        ++pos_;
        ++line_;
        column_ = 1;
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        ++pos_;
        ++column_;
      } else {
        break;
      }
    }
    current_ = Token{Token::Kind::end, "", line_, column_};
    if (pos_ >= text_.size()) return;

    const char c = text_[pos_];
    if (word_char(c)) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && word_char(text_[pos_])) {
        ++pos_;
        ++column_;
      }
      current_.kind = Token::Kind::word;
      current_.text = std::string(text_.substr(start, pos_ - start));
      return;
    }
    static constexpr std::string_view punct = "{}(),;:=/$";
    if (punct.find(c) != std::string_view::npos) {
      current_.kind = Token::Kind::punct;
      current_.text = std::string(1, c);
      ++pos_;
      ++column_;
      return;
    }
    std::ostringstream out;
    out << line_ << ':' << column_ << ": unexpected character '" << c << "'";
    throw_parse(ErrorKind::SyntaxError, out.str());
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t column_ = 1;
  Token current_;
};

class ModelParser {
 public:
  explicit ModelParser(std::string_view text) : lex_(text) {}

  ModelFile parse() {
    ModelFile model;
    if (lex_.peek().kind == Token::Kind::end) {
      lex_.fail(lex_.peek(), "expected 'algebra', 'representation', or 'geometry'");
    }
    while (lex_.peek().kind != Token::Kind::end) {
      Token head = expect_word("expected 'algebra', 'representation', or 'geometry'");
      if (head.text == "algebra") {
        parse_algebra(model);
      } else if (head.text == "representation") {
        parse_representation(model);
      } else if (head.text == "geometry") {
        parse_geometry(model);
      } else {
        lex_.fail(head, "expected 'algebra', 'representation', or 'geometry', got '" +
                            head.text + "'");
      }
    }
    return model;
  }

 private:
  Token expect_word(const std::string& what) {
    Token t = lex_.take();
    if (t.kind != Token::Kind::word) lex_.fail(t, what);
    return t;
  }

  Token expect_punct(char c) {
    Token t = lex_.take();
    if (t.kind != Token::Kind::punct || t.text[0] != c) {
      lex_.fail(t, std::string("expected '") + c + "'");
    }
    return t;
  }

  void expect_keyword(const std::string& word) {
    Token t = lex_.take();
    if (t.kind != Token::Kind::word || t.text != word) {
      lex_.fail(t, "expected '" + word + "'");
    }
  }

  bool peek_punct(char c) const {
    return lex_.peek().kind == Token::Kind::punct && lex_.peek().text[0] == c;
  }

  bool peek_word(std::string_view w) const {
    return lex_.peek().kind == Token::Kind::word && lex_.peek().text == w;
  }

  std::size_t expect_nat(const std::string& what) {
    Token t = expect_word(what);
    for (char c : t.text) {
      if (!std::isdigit(static_cast<unsigned char>(c))) lex_.fail(t, what);
    }
    return static_cast<std::size_t>(std::stoull(t.text));
  }

  std::vector<std::string> label_list() {
    std::vector<std::string> labels;
    labels.push_back(expect_word("expected an element label").text);
    while (peek_punct(',')) {
      lex_.take();
      labels.push_back(expect_word("expected an element label").text);
    }
    return labels;
  }

  std::size_t resolve(const std::vector<std::string>& carrier, const Token& tok) {
    for (std::size_t i = 0; i < carrier.size(); ++i) {
      if (carrier[i] == tok.text) return i;
    }
    std::ostringstream out;
    out << tok.line << ':' << tok.column << ": unknown element label '" << tok.text
        << "'";
    throw_parse(ErrorKind::UnknownElement, out.str());
  }

  void decode_tuple(std::size_t index, std::size_t base, std::vector<std::size_t>& out) {
    for (std::size_t i = out.size(); i-- > 0;) {
      out[i] = base == 0 ? 0 : index % base;
      index = base == 0 ? 0 : index / base;
    }
  }

  void parse_algebra(ModelFile& model) {
    Token name = expect_word("expected an algebra name");
    if (model.find_algebra(name.text)) {
      lex_.fail(name, "duplicate algebra name '" + name.text + "'");
    }
    expect_punct('{');
    expect_keyword("elements");
    expect_punct(':');
    std::vector<std::string> carrier = label_list();
    expect_punct(';');
    for (std::size_t i = 0; i < carrier.size(); ++i) {
      for (std::size_t j = i + 1; j < carrier.size(); ++j) {
        if (carrier[i] == carrier[j]) {
          std::ostringstream out;
          out << name.line << ':' << name.column << ": duplicate element label '"
              << carrier[i] << "' in algebra '" << name.text << "'";
          throw_parse(ErrorKind::DuplicateLabel, out.str());
        }
      }
    }

    Signature sig;
    std::vector<std::vector<std::size_t>> tables;
    while (peek_word("op")) {
      lex_.take();
      Token op_name = expect_word("expected an operation symbol");
      if (sig.find(op_name.text)) {
        lex_.fail(op_name, "duplicate operation symbol '" + op_name.text + "'");
      }
      expect_punct('/');
      const std::size_t arity = expect_nat("expected an arity");
      if (arity > kMaxArity) {
        std::ostringstream out;
        out << op_name.line << ':' << op_name.column << ": operation '" << op_name.text
            << "' has arity above " << kMaxArity;
        throw_parse(ErrorKind::LimitExceeded, out.str());
      }
      expect_punct('{');
      const std::size_t cells = table_cells(carrier.size(), arity);
      std::vector<std::size_t> table(cells, static_cast<std::size_t>(-1));
      while (!peek_punct('}')) {
        Token row_start = expect_punct('(');
        std::vector<std::size_t> args;
        if (!peek_punct(')')) {
          args.push_back(resolve(carrier, expect_word("expected an element label")));
          while (peek_punct(',')) {
            lex_.take();
            args.push_back(resolve(carrier, expect_word("expected an element label")));
          }
        }
        expect_punct(')');
        if (args.size() != arity) {
          std::ostringstream out;
          out << row_start.line << ':' << row_start.column << ": '" << op_name.text
              << "' has arity " << arity << " but the row lists " << args.size()
              << " arguments";
          throw_parse(ErrorKind::ArityMismatch, out.str());
        }
        expect_punct('=');
        const std::size_t value =
            resolve(carrier, expect_word("expected an element label"));
        expect_punct(';');
        const std::size_t slot = tuple_index(carrier.size(), args);
        if (table[slot] != static_cast<std::size_t>(-1)) {
          lex_.fail(row_start, "duplicate table row for '" + op_name.text + "'");
        }
        table[slot] = value;
      }
      Token closing = expect_punct('}');
      for (std::size_t i = 0; i < table.size(); ++i) {
        if (table[i] == static_cast<std::size_t>(-1)) {
          std::vector<std::size_t> tuple(arity);
          decode_tuple(i, carrier.size(), tuple);
          std::ostringstream out;
          out << closing.line << ':' << closing.column << ": table for '"
              << op_name.text << "' is not total: missing row (";
          for (std::size_t k = 0; k < tuple.size(); ++k) {
            if (k) out << ", ";
            out << carrier[tuple[k]];
          }
          out << ")";
          throw_parse(ErrorKind::SyntaxError, out.str());
        }
      }
      sig.ops.push_back(Operation{op_name.text, arity});
      tables.push_back(std::move(table));
    }
    expect_punct('}');
    model.algebras.push_back(FiniteAlgebra::make(name.text, std::move(sig),
                                                 std::move(carrier), std::move(tables)));
  }

  void parse_representation(ModelFile& model) {
    Token name = expect_word("expected a representation name");
    if (model.find_representation(name.text)) {
      lex_.fail(name, "duplicate representation name '" + name.text + "'");
    }
    expect_punct('{');
    expect_keyword("omega1");
    expect_punct(':');
    Token a_name = expect_word("expected an algebra name");
    expect_punct(';');
    expect_keyword("omega2");
    expect_punct(':');
    Token m_name = expect_word("expected an algebra name");
    expect_punct(';');

    const FiniteAlgebra* alg_a = model.find_algebra(a_name.text);
    if (!alg_a) lex_.fail(a_name, "unknown algebra '" + a_name.text + "'");
    const FiniteAlgebra* alg_m = model.find_algebra(m_name.text);
    if (!alg_m) lex_.fail(m_name, "unknown algebra '" + m_name.text + "'");

    ActionMode mode = ActionMode::raw;
    std::optional<MonoidSpec> monoid;
    if (peek_word("mode")) {
      lex_.take();
      expect_punct(':');
      Token mode_tok = expect_word("expected 'raw' or 'monoid'");
      if (mode_tok.text == "raw") {
        // structural checks off
      } else if (mode_tok.text == "monoid") {
        mode = ActionMode::monoid;
        expect_punct('(');
        MonoidSpec spec;
        spec.mul_symbol = expect_word("expected an operation symbol").text;
        if (peek_punct(',')) {
          lex_.take();
          spec.unit_label = expect_word("expected an element label").text;
        }
        expect_punct(')');
        monoid = std::move(spec);
      } else {
        lex_.fail(mode_tok, "expected 'raw' or 'monoid'");
      }
      expect_punct(';');
    }

    expect_keyword("action");
    Token block = expect_punct('{');
    std::vector<std::size_t> action(alg_a->size() * alg_m->size(),
                                    static_cast<std::size_t>(-1));
    while (!peek_punct('}')) {
      Token row_start = expect_punct('(');
      const std::size_t a = resolve(alg_a->carrier(),
                                    expect_word("expected an element label"));
      expect_punct(',');
      const std::size_t m = resolve(alg_m->carrier(),
                                    expect_word("expected an element label"));
      expect_punct(')');
      expect_punct('=');
      const std::size_t value = resolve(alg_m->carrier(),
                                        expect_word("expected an element label"));
      expect_punct(';');
      if (action[a * alg_m->size() + m] != static_cast<std::size_t>(-1)) {
        lex_.fail(row_start, "duplicate action row");
      }
      action[a * alg_m->size() + m] = value;
    }
    Token closing = expect_punct('}');
    for (std::size_t a = 0; a < alg_a->size(); ++a) {
      for (std::size_t m = 0; m < alg_m->size(); ++m) {
        if (action[a * alg_m->size() + m] == static_cast<std::size_t>(-1)) {
          std::ostringstream out;
          out << closing.line << ':' << closing.column
              << ": action is not total: missing row (" << alg_a->label(a) << ", "
              << alg_m->label(m) << ")";
          throw_parse(ErrorKind::SyntaxError, out.str());
        }
      }
    }
    expect_punct('}');
    model.representations.push_back(Representation::make(
        name.text, *alg_a, *alg_m, std::move(action), mode, std::move(monoid)));
  }

  void parse_geometry(ModelFile& model) {
    Token name = expect_word("expected a geometry name");
    if (model.find_geometry(name.text)) {
      lex_.fail(name, "duplicate geometry name '" + name.text + "'");
    }
    GeometryDecl decl;
    decl.name = name.text;
    expect_punct('{');
    expect_keyword("repF");
    expect_punct(':');
    Token f_name = expect_word("expected a representation name");
    expect_punct(';');
    expect_keyword("repG");
    expect_punct(':');
    Token g_name = expect_word("expected a representation name");
    expect_punct(';');

    const Representation* rep_f = model.find_representation(f_name.text);
    if (!rep_f) lex_.fail(f_name, "unknown representation '" + f_name.text + "'");
    const Representation* rep_g = model.find_representation(g_name.text);
    if (!rep_g) lex_.fail(g_name, "unknown representation '" + g_name.text + "'");
    decl.rep_f = f_name.text;
    decl.rep_g = g_name.text;

    expect_keyword("basisF");
    expect_punct(':');
    decl.basis_f.push_back(
        resolve(rep_f->alg_m().carrier(), expect_word("expected an element label")));
    while (peek_punct(',')) {
      lex_.take();
      decl.basis_f.push_back(
          resolve(rep_f->alg_m().carrier(), expect_word("expected an element label")));
    }
    expect_punct(';');
    expect_keyword("basisG");
    expect_punct(':');
    decl.basis_g.push_back(
        resolve(rep_g->alg_m().carrier(), expect_word("expected an element label")));
    while (peek_punct(',')) {
      lex_.take();
      decl.basis_g.push_back(
          resolve(rep_g->alg_m().carrier(), expect_word("expected an element label")));
    }
    expect_punct(';');

    expect_keyword("h");
    expect_punct('{');
    std::map<std::size_t, std::size_t> rows;
    while (!peek_punct('}')) {
      Token key_tok = lex_.peek();
      const std::size_t key = expect_nat("expected an automorphism index");
      expect_punct('=');
      const std::size_t value = expect_nat("expected an automorphism index");
      expect_punct(';');
      if (!rows.emplace(key, value).second) {
        lex_.fail(key_tok, "duplicate h row");
      }
    }
    Token closing = expect_punct('}');
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (!rows.count(i)) {
        std::ostringstream out;
        out << closing.line << ':' << closing.column << ": h table skips index " << i;
        throw_parse(ErrorKind::SyntaxError, out.str());
      }
      decl.h.push_back(rows[i]);
    }
    expect_punct('}');
    model.geometries.push_back(std::move(decl));
  }

  Lexer lex_;
};

}  // namespace

const FiniteAlgebra* ModelFile::find_algebra(std::string_view name) const {
  for (const auto& a : algebras) {
    if (a.name() == name) return &a;
  }
  return nullptr;
}

const Representation* ModelFile::find_representation(std::string_view name) const {
  for (const auto& r : representations) {
    if (r.name() == name) return &r;
  }
  return nullptr;
}

const GeometryDecl* ModelFile::find_geometry(std::string_view name) const {
  for (const auto& g : geometries) {
    if (g.name == name) return &g;
  }
  return nullptr;
}

ModelFile parse_model(std::string_view text) { return ModelParser(text).parse(); }

std::string print_model(const ModelFile& model) {
  std::ostringstream out;
  for (const FiniteAlgebra& alg : model.algebras) {
    out << "algebra " << alg.name() << " {\n  elements: ";
    for (std::size_t i = 0; i < alg.size(); ++i) {
      if (i) out << ", ";
      out << alg.label(i);
    }
    out << ";\n";
    const auto& ops = alg.signature().ops;
    for (std::size_t op = 0; op < ops.size(); ++op) {
      out << "  op " << ops[op].symbol << '/' << ops[op].arity << " {\n";
      std::vector<std::size_t> args(ops[op].arity, 0);
      if (alg.size() > 0 || ops[op].arity == 0) {
        do {
          out << "    (";
          for (std::size_t i = 0; i < args.size(); ++i) {
            if (i) out << ", ";
            out << alg.label(args[i]);
          }
          out << ") = " << alg.label(alg.apply(op, args)) << ";\n";
        } while (next_tuple(args, alg.size()));
      }
      out << "  }\n";
    }
    out << "}\n";
  }
  for (const Representation& rep : model.representations) {
    out << "representation " << rep.name() << " {\n";
    out << "  omega1: " << rep.alg_a().name() << ";\n";
    out << "  omega2: " << rep.alg_m().name() << ";\n";
    if (rep.mode() == ActionMode::monoid) {
      out << "  mode: monoid(" << rep.monoid()->mul_symbol;
      if (rep.monoid()->unit_label) out << ", " << *rep.monoid()->unit_label;
      out << ");\n";
    }
    out << "  action {\n";
    for (std::size_t a = 0; a < rep.a_size(); ++a) {
      for (std::size_t m = 0; m < rep.m_size(); ++m) {
        out << "    (" << rep.alg_a().label(a) << ", " << rep.alg_m().label(m)
            << ") = " << rep.alg_m().label(rep.act(a, m)) << ";\n";
      }
    }
    out << "  }\n}\n";
  }
  for (const GeometryDecl& geom : model.geometries) {
    const Representation* rep_f = model.find_representation(geom.rep_f);
    const Representation* rep_g = model.find_representation(geom.rep_g);
    out << "geometry " << geom.name << " {\n";
    out << "  repF: " << geom.rep_f << ";\n";
    out << "  repG: " << geom.rep_g << ";\n";
    out << "  basisF: ";
    for (std::size_t i = 0; i < geom.basis_f.size(); ++i) {
      if (i) out << ", ";
      out << rep_f->alg_m().label(geom.basis_f[i]);
    }
    out << ";\n  basisG: ";
    for (std::size_t i = 0; i < geom.basis_g.size(); ++i) {
      if (i) out << ", ";
      out << rep_g->alg_m().label(geom.basis_g[i]);
    }
    out << ";\n  h {\n";
    for (std::size_t i = 0; i < geom.h.size(); ++i) {
      out << "    " << i << " = " << geom.h[i] << ";\n";
    }
    out << "  }\n}\n";
  }
  return out.str();
}

namespace {

class TermParser {
 public:
  TermParser(std::string_view text, const FiniteAlgebra& alg_m,
             const FiniteAlgebra& alg_a, bool slotted, std::size_t slot_count)
      : lex_(text), alg_m_(alg_m), alg_a_(alg_a), slotted_(slotted),
        slot_count_(slot_count) {}

  Term parse() {
    Term t = term();
    if (lex_.peek().kind != Token::Kind::end) {
      lex_.fail(lex_.peek(), "trailing input after term");
    }
    return t;
  }

 private:
  Term term() {
    Token tok = lex_.take();
    if (tok.kind == Token::Kind::punct && tok.text == "$") {
      Token num = lex_.take();
      if (num.kind != Token::Kind::word) lex_.fail(num, "expected a slot number");
      for (char c : num.text) {
        if (!std::isdigit(static_cast<unsigned char>(c))) {
          lex_.fail(num, "expected a slot number");
        }
      }
      if (!slotted_) {
        lex_.fail(tok, "slot leaves are not allowed in a concrete term");
      }
      const std::size_t index = static_cast<std::size_t>(std::stoull(num.text));
      if (index >= slot_count_) {
        throw_parse(ErrorKind::SlotOutOfRange,
                    "slot $" + num.text + " outside the generating set of size " +
                        std::to_string(slot_count_));
      }
      return Term::slot(index);
    }
    if (tok.kind != Token::Kind::word) lex_.fail(tok, "expected a term");

    const bool call = lex_.peek().kind == Token::Kind::punct && lex_.peek().text == "(";
    if (tok.text == "act" && call) {
      lex_.take();  // (
      Token a_tok = lex_.take();
      if (a_tok.kind != Token::Kind::word) {
        lex_.fail(a_tok, "expected an element label");
      }
      auto a = alg_a_.element(a_tok.text);
      if (!a) {
        throw_parse(ErrorKind::UnknownElement,
                    "unknown element label '" + a_tok.text + "' in " + alg_a_.name());
      }
      expect_punct(',');
      Term child = term();
      expect_punct(')');
      return Term::act(*a, std::move(child));
    }
    if (call) {
      auto op = alg_m_.signature().find(tok.text);
      if (!op) {
        throw_parse(ErrorKind::UnknownSymbol,
                    "unknown operation '" + tok.text + "' in " + alg_m_.name());
      }
      lex_.take();  // (
      std::vector<Term> children;
      if (!(lex_.peek().kind == Token::Kind::punct && lex_.peek().text == ")")) {
        children.push_back(term());
        while (lex_.peek().kind == Token::Kind::punct && lex_.peek().text == ",") {
          lex_.take();
          children.push_back(term());
        }
      }
      expect_punct(')');
      const std::size_t arity = alg_m_.signature().ops[*op].arity;
      if (children.size() != arity) {
        throw_parse(ErrorKind::ArityMismatch,
                    "'" + tok.text + "' expects " + std::to_string(arity) +
                        " arguments, got " + std::to_string(children.size()));
      }
      return Term::apply(tok.text, std::move(children));
    }
    if (slotted_) {
      lex_.fail(tok, "expected a $-slot or an operation in a slotted term");
    }
    auto e = alg_m_.element(tok.text);
    if (!e) {
      throw_parse(ErrorKind::UnknownElement,
                  "unknown element label '" + tok.text + "' in " + alg_m_.name());
    }
    return Term::element(*e);
  }

  void expect_punct(char c) {
    Token t = lex_.take();
    if (t.kind != Token::Kind::punct || t.text[0] != c) {
      lex_.fail(t, std::string("expected '") + c + "'");
    }
  }

  Lexer lex_;
  const FiniteAlgebra& alg_m_;
  const FiniteAlgebra& alg_a_;
  bool slotted_;
  std::size_t slot_count_;
};

}  // namespace

Term parse_concrete_term(std::string_view text, const FiniteAlgebra& alg_m,
                         const FiniteAlgebra& alg_a) {
  return TermParser(text, alg_m, alg_a, /*slotted=*/false, 0).parse();
}

Term parse_slotted_term(std::string_view text, const FiniteAlgebra& alg_m,
                        const FiniteAlgebra& alg_a, std::size_t slot_count) {
  return TermParser(text, alg_m, alg_a, /*slotted=*/true, slot_count).parse();
}

}  // namespace uarep
