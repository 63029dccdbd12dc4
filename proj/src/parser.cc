#include "dlbridge/parser.h"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <optional>
#include <sstream>

namespace dlbridge {

void check_utf8(std::string_view text) {
  int line = 1, col = 1;
  std::size_t i = 0;
  while (i < text.size()) {
    unsigned char c = static_cast<unsigned char>(text[i]);
    std::size_t len = 0;
    std::uint32_t cp = 0;
    if (c < 0x80) len = 1, cp = c;
    else if ((c & 0xE0) == 0xC0) len = 2, cp = c & 0x1F;
    else if ((c & 0xF0) == 0xE0) len = 3, cp = c & 0x0F;
    else if ((c & 0xF8) == 0xF0) len = 4, cp = c & 0x07;
    else throw ParseError("invalid UTF-8 byte", line, col);
    if (i + len > text.size()) throw ParseError("truncated UTF-8 sequence", line, col);
    for (std::size_t k = 1; k < len; ++k) {
      unsigned char d = static_cast<unsigned char>(text[i + k]);
      if ((d & 0xC0) != 0x80) throw ParseError("invalid UTF-8 continuation byte", line, col);
      cp = (cp << 6) | (d & 0x3F);
    }
    static const std::uint32_t kMin[] = {0, 0, 0x80, 0x800, 0x10000};
    if (cp < kMin[len] || cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF))
      throw ParseError("invalid UTF-8 sequence", line, col);
    i += len;
    if (c == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
}

namespace {

struct Token {
  enum class Kind { kIdent, kNumber, kString, kPunct, kEnd };
  Kind kind = Kind::kEnd;
  std::string text;
  int line = 1, col = 1;
};

class Lexer {
 public:
  explicit Lexer(std::string_view src) {
    check_utf8(src);
    tokenize(src);
  }
  const Token& peek(std::size_t k = 0) const { return toks_[std::min(pos_ + k, toks_.size() - 1)]; }
  Token next() {
    Token t = peek();
    if (pos_ < toks_.size() - 1) ++pos_;
    return t;
  }

 private:
  void tokenize(std::string_view s) {
    static const char* kPuncts[] = {":-", "+=", "-=", "?=", "[=", "==", "!=", "->", ">=", "<=", "^", "(", ")",
                                    "[",  "]",  "{",  "}",  ",",  ".",  ";",  ":",  "/",  "!",  "-", "&", "|", "#"};
    int line = 1, col = 1;
    std::size_t i = 0;
    auto advance = [&](std::size_t n) {
      for (std::size_t k = 0; k < n; ++k, ++i) {
        if (s[i] == '\n') {
          ++line;
          col = 1;
        } else if ((static_cast<unsigned char>(s[i]) & 0xC0) != 0x80) {
          ++col;
        }
      }
    };
    while (i < s.size()) {
      char c = s[i];
      if (c == '%') {
        while (i < s.size() && s[i] != '\n') advance(1);
        continue;
      }
      if (std::isspace(static_cast<unsigned char>(c))) {
        advance(1);
        continue;
      }
      Token t;
      t.line = line;
      t.col = col;
      if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
        std::size_t j = i;
        while (j < s.size() && (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_' || s[j] == '\''))
          ++j;
        t.kind = Token::Kind::kIdent;
        t.text = std::string(s.substr(i, j - i));
        advance(j - i);
      } else if (std::isdigit(static_cast<unsigned char>(c))) {
        std::size_t j = i;
        while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
        t.kind = Token::Kind::kNumber;
        t.text = std::string(s.substr(i, j - i));
        advance(j - i);
      } else if (c == '"') {
        std::size_t j = i + 1;
        while (j < s.size() && s[j] != '"' && s[j] != '\n') ++j;
        if (j >= s.size() || s[j] != '"') throw ParseError("unterminated string", line, col);
        t.kind = Token::Kind::kString;
        t.text = std::string(s.substr(i + 1, j - i - 1));
        advance(j + 1 - i);
      } else {
        bool matched = false;
        for (const char* p : kPuncts) {
          std::string_view pv(p);
          if (s.substr(i, pv.size()) == pv) {
            t.kind = Token::Kind::kPunct;
            t.text = std::string(pv);
            advance(pv.size());
            matched = true;
            break;
          }
        }
        if (!matched) throw ParseError(std::string("unexpected character '") + c + "'", line, col);
      }
      toks_.push_back(std::move(t));
    }
    Token end;
    end.line = line;
    end.col = col;
    toks_.push_back(end);
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

bool is_variable(const std::string& s) { return !s.empty() && std::isupper(static_cast<unsigned char>(s[0])); }

class ParserBase {
 protected:
  explicit ParserBase(std::string_view src) : lex_(src) {}

  [[noreturn]] void fail(const std::string& msg, const Token& t) const { throw ParseError(msg, t.line, t.col); }
  [[noreturn]] void fail(const std::string& msg) const { fail(msg, lex_.peek()); }

  bool at(const char* punct, std::size_t k = 0) const {
    const Token& t = lex_.peek(k);
    return t.kind == Token::Kind::kPunct && t.text == punct;
  }
  bool at_word(const char* w, std::size_t k = 0) const {
    const Token& t = lex_.peek(k);
    return t.kind == Token::Kind::kIdent && t.text == w;
  }
  bool at_ident(std::size_t k = 0) const { return lex_.peek(k).kind == Token::Kind::kIdent; }
  bool at_end() const { return lex_.peek().kind == Token::Kind::kEnd; }
  bool accept(const char* punct) {
    if (!at(punct)) return false;
    lex_.next();
    return true;
  }
  void expect(const char* punct) {
    if (!accept(punct)) fail(std::string("expected '") + punct + "'");
  }
  std::string ident(const char* what = "identifier") {
    if (!at_ident()) fail(std::string("expected ") + what);
    return lex_.next().text;
  }
  unsigned number() {
    if (lex_.peek().kind != Token::Kind::kNumber) fail("expected number");
    return static_cast<unsigned>(std::stoul(lex_.next().text));
  }
  std::vector<std::string> ident_list(const char* what) {
    std::vector<std::string> out{ident(what)};
    while (accept(",")) out.push_back(ident(what));
    return out;
  }
  std::vector<std::string> paren_args() {
    std::vector<std::string> out;
    expect("(");
    if (!at(")")) out = ident_list("term");
    expect(")");
    return out;
  }

  Lexer lex_;
};

// Names used as concepts and roles while parsing; resolved against
// declarations afterwards.
struct NameUse {
  std::map<std::string, Token> concepts, roles;
};

class ConceptParser : public ParserBase {
 protected:
  using ParserBase::ParserBase;

  RoleRef role_ref() {
    Token t = lex_.peek();
    RoleRef r{ident("role name"), false};
    if (accept("^")) {
      expect("-");
      r.inverse = true;
    }
    uses_.roles.emplace(r.name, t);
    return r;
  }

  Concept concept_expr() {
    Concept c = conjunction();
    while (accept("|")) c = Concept::disjunction(std::move(c), conjunction());
    return c;
  }

  Concept conjunction() {
    Concept c = unary();
    while (accept("&")) c = Concept::conjunction(std::move(c), unary());
    return c;
  }

  Concept unary() {
    if (accept("!")) return Concept::negation(unary());
    if (accept("(")) {
      Concept c = concept_expr();
      expect(")");
      return c;
    }
    if (accept("{")) {
      auto inds = ident_list("individual");
      expect("}");
      for (const auto& i : inds) individuals_.insert(i);
      return Concept::one_of(std::move(inds));
    }
    if (accept(">=")) {
      unsigned n = number();
      return Concept::at_least(n, role_ref());
    }
    if (accept("<=")) {
      unsigned n = number();
      return Concept::at_most(n, role_ref());
    }
    if (at_word("TOP")) {
      lex_.next();
      return Concept::top();
    }
    if (at_word("BOT")) {
      lex_.next();
      return Concept::bottom();
    }
    if (at_word("exists") || at_word("forall")) {
      bool ex = lex_.next().text == "exists";
      RoleRef r = role_ref();
      expect(".");
      Concept body = unary();
      return ex ? Concept::exists(std::move(r), std::move(body)) : Concept::forall(std::move(r), std::move(body));
    }
    Token t = lex_.peek();
    std::string name = ident("concept");
    uses_.concepts.emplace(name, t);
    return Concept::atomic(std::move(name));
  }

  // Moves a name recorded as a concept use into the role uses.
  void reclassify_as_role(const std::string& name) {
    auto it = uses_.concepts.find(name);
    if (it != uses_.concepts.end()) {
      uses_.roles.emplace(name, it->second);
      uses_.concepts.erase(it);
    }
  }

  void resolve_names(Signature& sig, bool declare) {
    for (const auto& [name, tok] : uses_.roles) {
      if (sig.concepts.count(name)) fail("'" + name + "' is a concept, used as a role", tok);
      if (!sig.roles.count(name) && !declare) fail("undeclared role '" + name + "'", tok);
      sig.roles.insert(name);
    }
    for (const auto& [name, tok] : uses_.concepts) {
      if (sig.roles.count(name)) fail("'" + name + "' is a role, used as a concept", tok);
      sig.concepts.insert(name);
    }
    sig.individuals.insert(individuals_.begin(), individuals_.end());
  }

  NameUse uses_;
  std::set<std::string> individuals_;
};

class OntologyParser : public ConceptParser {
 public:
  explicit OntologyParser(std::string_view src) : ConceptParser(src) {}

  Ontology parse() {
    Ontology o;
    while (!at_end()) statement(o);
    resolve_names(o.signature, true);
    return o;
  }

 private:
  void statement(Ontology& o) {
    if (at_word("concept") || at_word("role") || at_word("individual")) {
      std::string kw = lex_.next().text;
      for (auto& n : ident_list("name")) {
        auto& sig = o.signature;
        if (kw == "concept") sig.concepts.insert(n);
        else if (kw == "role") sig.roles.insert(n);
        else sig.individuals.insert(n);
      }
      expect(".");
      return;
    }
    if (!at_word("axiom")) fail("expected 'concept', 'role', 'individual' or 'axiom'");
    lex_.next();
    o.axioms.push_back(axiom(o.signature));
    expect(".");
  }

  Axiom axiom(const Signature& sig) {
    Axiom a;
    if (at_word("trans") && at("(", 1)) {
      lex_.next();
      expect("(");
      a.kind = Axiom::Kind::kTransitivity;
      a.role = role_ref();
      expect(")");
      return a;
    }
    if (at_ident() && (at("==", 1) || at("!=", 1))) {
      std::string x = ident();
      bool eq = lex_.next().text == "==";
      std::string y = ident("individual");
      individuals_.insert(x);
      individuals_.insert(y);
      a.kind = eq ? Axiom::Kind::kEquality : Axiom::Kind::kInequality;
      a.individuals = {x, y};
      return a;
    }
    bool negated = accept("-");
    bool role_head = at_ident() && (at("^", 1) || sig.roles.count(lex_.peek().text));
    if (role_head) {
      RoleRef r = role_ref();
      if (!negated && accept("[=")) {
        a.kind = Axiom::Kind::kRoleInclusion;
        a.role = r;
        a.role2 = role_ref();
        return a;
      }
      auto args = paren_args();
      if (args.size() != 2) fail("role assertion needs two individuals");
      a.kind = Axiom::Kind::kRoleAssertion;
      a.role = r;
      a.individuals = args;
      a.negated = negated;
      individuals_.insert(args.begin(), args.end());
      return a;
    }
    Token start = lex_.peek();
    Concept c = concept_expr();
    if (!negated && accept("[=")) {
      a.kind = Axiom::Kind::kConceptInclusion;
      a.lhs = std::move(c);
      a.rhs = concept_expr();
      return a;
    }
    if (!at("(")) fail("expected '(' or '[='");
    auto args = paren_args();
    individuals_.insert(args.begin(), args.end());
    if (args.size() == 2) {
      if (c.kind != Concept::Kind::kAtomic) fail("role assertion needs a role name", start);
      reclassify_as_role(c.name);
      a.kind = Axiom::Kind::kRoleAssertion;
      a.role = RoleRef{c.name, false};
    } else if (args.size() == 1) {
      a.kind = Axiom::Kind::kConceptAssertion;
      a.lhs = std::move(c);
    } else {
      fail("assertion needs one or two individuals", start);
    }
    a.individuals = args;
    a.negated = negated;
    return a;
  }
};

class ProgramParser : public ConceptParser {
 public:
  ProgramParser(std::string_view src, const Ontology& onto) : ConceptParser(src), onto_(onto) {}

  DLProgram parse() {
    DLProgram p;
    p.ontology = onto_;
    if (at("#")) {
      lex_.next();
      if (!at_word("ontology")) fail("expected 'ontology'");
      lex_.next();
      if (lex_.peek().kind != Token::Kind::kString) fail("expected quoted path");
      p.ontology_path = lex_.next().text;
      accept(".");
    }
    std::vector<Rule> rules;
    while (!at_end()) rules.push_back(rule());
    resolve(p, rules);
    return p;
  }

 private:
  Atom atom() {
    Token t = lex_.peek();
    if (at_word("not") || at_word("DL")) fail("expected atom");
    Atom a(ident("predicate"));
    if (at("(")) a.args = paren_args();
    atom_tokens_.emplace(a.predicate, t);
    return a;
  }

  Rule rule() {
    Rule r;
    r.head = atom();
    if (accept(":-")) {
      do {
        r.body.push_back(literal());
      } while (accept(","));
    }
    expect(".");
    return r;
  }

  Literal literal() {
    bool neg = false;
    if (at_word("not") && (at_ident(1))) {
      lex_.next();
      neg = true;
    }
    if (at_word("DL") && at("[", 1)) {
      Literal l;
      l.negated = neg;
      l.is_dl = true;
      l.dl = dl_atom();
      return l;
    }
    Literal l;
    l.negated = neg;
    l.atom = atom();
    return l;
  }

  DLAtom dl_atom() {
    lex_.next();
    expect("[");
    DLAtom d;
    if (!at(";")) {
      do {
        bool sneg = accept("-");
        Token st = lex_.peek();
        std::string sym = ident("concept or role");
        InputPair::Op op;
        if (accept("+=")) op = InputPair::Op::kPlus;
        else if (accept("-=")) op = InputPair::Op::kMinus;
        else if (accept("?=")) op = InputPair::Op::kConstraint;
        else fail("expected '+=', '-=' or '?='");
        Token pt = lex_.peek();
        std::string pred = ident("predicate");
        input_symbols_.emplace(sym, st);
        atom_tokens_.emplace(pred, pt);
        d.inputs.push_back(InputPair::make(sym, op, pred, sneg));
      } while (accept(","));
    }
    expect(";");
    Token qt = lex_.peek();
    d.query.negated = accept("-");
    if (at_ident() && at("==", 1)) {
      std::string x = ident();
      lex_.next();
      std::string y = ident("term");
      d.query.kind = DLQuery::Kind::kEquality;
      d.args = {x, y};
      expect("]");
      if (at("(")) {
        if (!paren_args().empty()) fail("equality query takes its terms inline");
      }
      return d;
    }
    if (at_ident() && (at("^", 1) || (onto_.signature.roles.count(lex_.peek().text) && !at("[=", 1)))) {
      d.query.kind = DLQuery::Kind::kRole;
      d.query.role = role_ref();
    } else {
      d.query.lhs = concept_expr();
      if (accept("[=")) {
        d.query.kind = DLQuery::Kind::kSubsumption;
        d.query.rhs = concept_expr();
      }
    }
    expect("]");
    if (at("(")) d.args = paren_args();
    switch (d.query.kind) {
      case DLQuery::Kind::kSubsumption:
        if (!d.args.empty()) fail("subsumption query takes no terms", qt);
        break;
      case DLQuery::Kind::kRole:
        if (d.args.size() != 2) fail("role query needs two terms", qt);
        break;
      default:
        if (d.args.size() == 2 && d.query.lhs.kind == Concept::Kind::kAtomic) {
          reclassify_as_role(d.query.lhs.name);
          d.query.kind = DLQuery::Kind::kRole;
          d.query.role = RoleRef{d.query.lhs.name, false};
          d.query.lhs = Concept{};
        } else if (d.args.size() != 1) {
          fail("concept query needs one term", qt);
        }
    }
    return d;
  }

  static bool ground_atom(const Atom& a) {
    return std::none_of(a.args.begin(), a.args.end(), is_variable);
  }

  static void collect_vars(const Rule& r, std::vector<std::string>& vars) {
    auto add = [&](const std::vector<std::string>& args) {
      for (const auto& x : args)
        if (is_variable(x) && std::find(vars.begin(), vars.end(), x) == vars.end()) vars.push_back(x);
    };
    add(r.head.args);
    for (const auto& l : r.body) add(l.is_dl ? l.dl.args : l.atom.args);
  }

  static std::vector<std::string> subst(std::vector<std::string> args, const std::map<std::string, std::string>& m) {
    for (auto& x : args)
      if (auto it = m.find(x); it != m.end()) x = it->second;
    return args;
  }

  void resolve(DLProgram& p, std::vector<Rule>& rules) {
    std::set<std::string> consts;
    for (const auto& r : rules) {
      auto add = [&](const std::vector<std::string>& args) {
        for (const auto& x : args)
          if (!is_variable(x)) consts.insert(x);
      };
      add(r.head.args);
      for (const auto& l : r.body) add(l.is_dl ? l.dl.args : l.atom.args);
    }
    std::vector<std::string> cs(consts.begin(), consts.end());
    for (auto& r : rules) {
      std::vector<std::string> vars;
      collect_vars(r, vars);
      if (vars.empty()) {
        p.rules.push_back(std::move(r));
        continue;
      }
      for (const auto& t : tuples_over(cs, vars.size())) {
        std::map<std::string, std::string> m;
        for (std::size_t i = 0; i < vars.size(); ++i) m[vars[i]] = t[i];
        Rule g;
        g.head = Atom(r.head.predicate, subst(r.head.args, m));
        for (const auto& l : r.body) {
          Literal gl = l;
          if (l.is_dl) gl.dl.args = subst(l.dl.args, m);
          else gl.atom.args = subst(l.atom.args, m);
          g.body.push_back(std::move(gl));
        }
        p.rules.push_back(std::move(g));
      }
    }

    // Arity of rule predicates.
    std::map<std::string, std::size_t> arity;
    auto note = [&](const Atom& a) {
      auto [it, fresh] = arity.emplace(a.predicate, a.arity());
      if (!fresh && it->second != a.arity()) fail("predicate '" + a.predicate + "' used with different arities",
                                                    atom_tokens_.at(a.predicate));
    };
    for (const auto& r : p.rules) {
      note(r.head);
      for (const auto& l : r.body)
        if (!l.is_dl) note(l.atom);
    }

    Signature& sig = p.ontology.signature;
    for (const auto& [sym, tok] : input_symbols_) {
      if (sig.concepts.count(sym) || sig.roles.count(sym)) continue;
      if (uses_.roles.count(sym)) continue;
      if (uses_.concepts.count(sym)) continue;
      bool role = false;
      for (const auto& r : p.rules)
        for (const auto& l : r.body)
          if (l.is_dl)
            for (const auto& in : l.dl.inputs)
              if (in.symbol == sym) {
                auto it = arity.find(in.predicate);
                if (it != arity.end() && it->second == 2) role = true;
              }
      if (role) uses_.roles.emplace(sym, tok);
      else uses_.concepts.emplace(sym, tok);
    }
    resolve_names(sig, true);

    for (const auto& r : p.rules)
      for (const auto& l : r.body) {
        if (!l.is_dl) continue;
        for (const auto& in : l.dl.inputs) {
          std::size_t want = sig.roles.count(in.symbol) ? 2 : 1;
          auto [it, fresh] = arity.emplace(in.predicate, want);
          if (it->second != want)
            fail("input predicate '" + in.predicate + "' has arity " + std::to_string(it->second) + " but '" +
                     in.symbol + "' needs " + std::to_string(want),
                 atom_tokens_.at(in.predicate));
        }
      }
    for (const auto& [pred, k] : arity)
      if (sig.concepts.count(pred) || sig.roles.count(pred))
        fail("'" + pred + "' is both a rule predicate and an ontology name", atom_tokens_.at(pred));
    auto pc = program_constants(p);
    sig.individuals.insert(pc.begin(), pc.end());
  }

  const Ontology& onto_;
  std::map<std::string, Token> atom_tokens_;
  std::map<std::string, Token> input_symbols_;
};

class FormulaParser : public ParserBase {
 public:
  explicit FormulaParser(std::string_view src) : ParserBase(src) {}

  DefaultTheory theory() {
    DefaultTheory t;
    while (!at_end()) {
      if (accept("#")) {
        if (!at_word("equality")) fail("expected 'equality'");
        lex_.next();
        std::string mode = ident("equality mode");
        if (mode == "identity") t.equality = EqualityMode::kIdentity;
        else if (mode == "plain") t.equality = EqualityMode::kPlain;
        else fail("unknown equality mode '" + mode + "'");
        expect(".");
        continue;
      }
      if (at_word("default") && at(":", 1)) {
        lex_.next();
        lex_.next();
        Default d;
        d.premise = at(":") ? Formula::top() : formula();
        expect(":");
        if (!at("/")) {
          d.justifications.push_back(formula());
          while (accept(",")) d.justifications.push_back(formula());
        }
        expect("/");
        d.conclusion = formula();
        expect(".");
        t.defaults.push_back(std::move(d));
        continue;
      }
      t.facts.push_back(formula());
      expect(".");
    }
    return t;
  }

  Formula single() {
    Formula f = formula();
    if (!at_end()) fail("trailing input after formula");
    return f;
  }

 private:
  Formula formula() {
    Formula a = disjunction();
    if (accept("->")) return Formula::implication(a, formula());
    return a;
  }
  Formula disjunction() {
    Formula a = conjunction();
    while (accept("|")) a = Formula::disjunction(a, conjunction());
    return a;
  }
  Formula conjunction() {
    Formula a = unary();
    while (accept("&")) a = Formula::conjunction(a, unary());
    return a;
  }
  Formula unary() {
    if (accept("-")) return Formula::negation(unary());
    if (accept("(")) {
      Formula f = formula();
      expect(")");
      return f;
    }
    if (at_word("true")) {
      lex_.next();
      return Formula::top();
    }
    if (at_word("false")) {
      lex_.next();
      return Formula::bottom();
    }
    std::string name = ident("atom");
    if (accept("==")) return Formula::atom(equality_atom(name, ident("term")));
    Atom a(name);
    if (at("(")) a.args = paren_args();
    return Formula::atom(std::move(a));
  }
};

}  // namespace

Ontology parse_ontology(std::string_view text) { return OntologyParser(text).parse(); }

DLProgram parse_program(std::string_view text, const Ontology& ontology) {
  return ProgramParser(text, ontology).parse();
}

DefaultTheory parse_default_theory(std::string_view text) { return FormulaParser(text).theory(); }

Formula parse_formula(std::string_view text) { return FormulaParser(text).single(); }

std::string ontology_reference(std::string_view text) {
  Lexer lex(text);
  if (lex.peek().kind == Token::Kind::kPunct && lex.peek().text == "#" && lex.peek(1).text == "ontology" &&
      lex.peek(2).kind == Token::Kind::kString)
    return lex.peek(2).text;
  return {};
}

std::string read_file(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + p.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Ontology load_ontology(const std::filesystem::path& p) { return parse_ontology(read_file(p)); }

DLProgram load_program(const std::filesystem::path& p) {
  std::string text = read_file(p);
  std::string ref = ontology_reference(text);
  Ontology o;
  if (!ref.empty()) {
    std::filesystem::path op = ref;
    if (op.is_relative()) op = p.parent_path() / op;
    o = load_ontology(op);
  }
  return parse_program(text, o);
}

DefaultTheory load_default_theory(const std::filesystem::path& p) { return parse_default_theory(read_file(p)); }

}  // namespace dlbridge
