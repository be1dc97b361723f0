#include "sabre/tptp.hpp"

#include <cctype>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

namespace sabre {

namespace {

enum class Tok {
  eof, lparen, rparen, lbracket, rbracket, comma, dot, colon, star, gt,
  op_and, op_or, op_not, op_implies, op_iff, bang, question, eq, neq,
  lower_word, upper_word, dollar_word, integer, quoted,
};

struct Token {
  Tok kind = Tok::eof;
  std::string text;
  int line = 1;
  int col = 1;
};

class Lexer {
public:
  Lexer(const std::string& text) : text_(text) { advance(); }

  const Token& peek() const { return tok_; }

  Token take() {
    Token t = tok_;
    advance();
    return t;
  }

  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(tok_.line, tok_.col, msg);
  }

private:
  void advance() {
    skip_trivia();
    tok_.line = line_;
    tok_.col = col_;
    if (pos_ >= text_.size()) {
      tok_.kind = Tok::eof;
      tok_.text.clear();
      return;
    }
    char c = text_[pos_];
    if (std::islower(static_cast<unsigned char>(c))) {
      tok_ = word(Tok::lower_word);
      return;
    }
    if (std::isupper(static_cast<unsigned char>(c))) {
      tok_ = word(Tok::upper_word);
      return;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) ||
        (c == '-' && pos_ + 1 < text_.size() &&
         std::isdigit(static_cast<unsigned char>(text_[pos_ + 1])))) {
      tok_.kind = Tok::integer;
      tok_.text.clear();
      if (c == '-') tok_.text.push_back(get());
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
        tok_.text.push_back(get());
      return;
    }
    if (c == '$') {
      int l = line_, co = col_;
      get();
      Token t = word(Tok::dollar_word);
      t.text = "$" + t.text;
      t.line = l;
      t.col = co;
      tok_ = t;
      return;
    }
    if (c == '\'') {
      get();
      tok_.kind = Tok::quoted;
      tok_.text.clear();
      for (;;) {
        if (pos_ >= text_.size()) throw ParseError(line_, col_, "unterminated quoted name");
        char q = get();
        if (q == '\\') {
          if (pos_ >= text_.size()) throw ParseError(line_, col_, "unterminated escape");
          tok_.text.push_back(get());
        } else if (q == '\'') {
          break;
        } else {
          tok_.text.push_back(q);
        }
      }
      return;
    }
    switch (c) {
      case '(': get(); tok_.kind = Tok::lparen; return;
      case ')': get(); tok_.kind = Tok::rparen; return;
      case '[': get(); tok_.kind = Tok::lbracket; return;
      case ']': get(); tok_.kind = Tok::rbracket; return;
      case ',': get(); tok_.kind = Tok::comma; return;
      case '.': get(); tok_.kind = Tok::dot; return;
      case ':': get(); tok_.kind = Tok::colon; return;
      case '*': get(); tok_.kind = Tok::star; return;
      case '>': get(); tok_.kind = Tok::gt; return;
      case '&': get(); tok_.kind = Tok::op_and; return;
      case '|': get(); tok_.kind = Tok::op_or; return;
      case '!':
        get();
        if (pos_ < text_.size() && text_[pos_] == '=') {
          get();
          tok_.kind = Tok::neq;
        } else {
          tok_.kind = Tok::bang;
        }
        return;
      case '?': get(); tok_.kind = Tok::question; return;
      case '~': get(); tok_.kind = Tok::op_not; return;
      case '=':
        get();
        if (pos_ < text_.size() && text_[pos_] == '>') {
          get();
          tok_.kind = Tok::op_implies;
        } else {
          tok_.kind = Tok::eq;
        }
        return;
      case '<':
        get();
        if (pos_ + 1 < text_.size() && text_[pos_] == '=' && text_[pos_ + 1] == '>') {
          get();
          get();
          tok_.kind = Tok::op_iff;
          return;
        }
        throw ParseError(line_, col_, "unsupported connective starting with '<'");
      default:
        throw ParseError(line_, col_, std::string("unexpected character '") + c + "'");
    }
  }

  Token word(Tok kind) {
    Token t;
    t.kind = kind;
    t.line = line_;
    t.col = col_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
      t.text.push_back(get());
    return t;
  }

  void skip_trivia() {
    for (;;) {
      if (pos_ >= text_.size()) return;
      char c = text_[pos_];
      if (c == '%') {
        while (pos_ < text_.size() && text_[pos_] != '\n') get();
      } else if (c == '/' && pos_ + 1 < text_.size() && text_[pos_ + 1] == '*') {
        get();
        get();
        while (pos_ + 1 < text_.size() && !(text_[pos_] == '*' && text_[pos_ + 1] == '/')) get();
        if (pos_ + 1 >= text_.size()) throw ParseError(line_, col_, "unterminated comment");
        get();
        get();
      } else if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
        get();
      } else {
        return;
      }
    }
  }

  char get() {
    char c = text_[pos_++];
    if (c == '\n') {
      line_++;
      col_ = 1;
    } else {
      col_++;
    }
    return c;
  }

  const std::string& text_;
  size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
  Token tok_;
};

// Raw syntax tree for a term-or-atom; symbol kinds are decided after we know
// whether the tree sits in formula or term position.
struct Raw {
  Token head;
  bool is_var = false;
  std::vector<Raw> args;
};

class Parser {
public:
  Parser(const std::string& text, const std::string& include_root, int depth)
      : lex_(text), include_root_(include_root), depth_(depth) {}

  void parse_into(Problem& p) {
    while (lex_.peek().kind != Tok::eof) parse_item(p);
  }

private:
  Lexer lex_;
  std::string include_root_;
  int depth_;
  // binder scopes for the formula currently being parsed
  std::vector<std::pair<std::string, int32_t>> scope_;
  int32_t next_var_ = 0;
  bool tff_mode_ = false;  // sorted binders allowed

  Token expect(Tok kind, const char* what) {
    if (lex_.peek().kind != kind) lex_.fail(std::string("expected ") + what);
    return lex_.take();
  }

  void parse_item(Problem& p) {
    Token head = expect(Tok::lower_word, "fof/tff/cnf/include directive");
    if (head.text == "include") {
      expect(Tok::lparen, "'('");
      Token file = lex_.take();
      if (file.kind != Tok::quoted && file.kind != Tok::lower_word)
        throw ParseError(file.line, file.col, "expected include file name");
      expect(Tok::rparen, "')'");
      expect(Tok::dot, "'.'");
      if (depth_ > 16) throw ParseError(head.line, head.col, "include nesting too deep");
      std::filesystem::path path = std::filesystem::path(include_root_) / file.text;
      std::ifstream in(path);
      if (!in)
        throw ParseError(file.line, file.col, "cannot open include file '" + path.string() + "'");
      std::stringstream ss;
      ss << in.rdbuf();
      std::string text = ss.str();
      Parser sub(text, include_root_, depth_ + 1);
      sub.parse_into(p);
      return;
    }
    if (head.text != "fof" && head.text != "tff" && head.text != "cnf")
      throw ParseError(head.line, head.col, "expected fof, tff, cnf or include, got '" + head.text + "'");
    bool is_tff = head.text == "tff";
    bool is_cnf = head.text == "cnf";
    if (is_tff) p.dialect = Dialect::tff;
    tff_mode_ = is_tff;

    expect(Tok::lparen, "'('");
    Token name_tok = lex_.take();
    if (name_tok.kind != Tok::lower_word && name_tok.kind != Tok::quoted &&
        name_tok.kind != Tok::integer)
      throw ParseError(name_tok.line, name_tok.col, "expected formula name");
    expect(Tok::comma, "','");
    Token role_tok = expect(Tok::lower_word, "role");
    expect(Tok::comma, "','");

    for (const auto& f : p.formulas)
      if (f.name == name_tok.text)
        throw ParseError(name_tok.line, name_tok.col,
                         "duplicate formula name '" + name_tok.text + "'");

    if (role_tok.text == "type") {
      if (!is_tff)
        throw ParseError(role_tok.line, role_tok.col, "type declarations require tff");
      AnnotatedFormula af;
      af.name = name_tok.text;
      af.role = Role::type_decl;
      parse_type_decl(p, af);
      finish_annotated(p, std::move(af), role_tok);
      return;
    }

    Role role;
    if (role_tok.text == "axiom") role = Role::axiom;
    else if (role_tok.text == "hypothesis") role = Role::hypothesis;
    else if (role_tok.text == "conjecture") role = Role::conjecture;
    else if (role_tok.text == "negated_conjecture") role = Role::negated_conjecture;
    else
      throw ParseError(role_tok.line, role_tok.col, "unsupported role '" + role_tok.text + "'");

    if (role == Role::conjecture) {
      for (const auto& f : p.formulas)
        if (f.role == Role::conjecture)
          throw ParseError(role_tok.line, role_tok.col, "more than one conjecture");
    }

    scope_.clear();
    next_var_ = 0;
    var_sorts_.clear();
    binder_vars_.clear();
    AnnotatedFormula af;
    af.name = name_tok.text;
    af.role = role;
    if (is_cnf) {
      af.formula = parse_cnf_formula(p);
    } else {
      af.formula = parse_formula(p);
      std::map<int32_t, SortId> free;
      std::set<int32_t> bound;
      af.formula.collect_free_vars(free, bound);
      if (!free.empty())
        throw ParseError(name_tok.line, name_tok.col,
                         "formula '" + af.name + "' has unbound variables");
    }
    finish_annotated(p, std::move(af), role_tok);
  }

  void finish_annotated(Problem& p, AnnotatedFormula af, const Token& at) {
    // optional source/useful-info annotations are skipped
    if (lex_.peek().kind == Tok::comma) skip_annotations();
    expect(Tok::rparen, "')'");
    expect(Tok::dot, "'.'");
    (void)at;
    p.formulas.push_back(std::move(af));
  }

  void skip_annotations() {
    int parens = 0;
    for (;;) {
      Tok k = lex_.peek().kind;
      if (k == Tok::eof) lex_.fail("unterminated annotation");
      if (parens == 0 && k == Tok::rparen) return;
      if (k == Tok::lparen || k == Tok::lbracket) parens++;
      if (k == Tok::rparen || k == Tok::rbracket) parens--;
      lex_.take();
    }
  }

  // ---- type declarations ----

  SortId parse_sort(Problem& p) {
    Token t = lex_.take();
    if (t.kind == Tok::dollar_word) {
      if (t.text == "$i") return p.sig.individual();
      if (t.text == "$o") return p.sig.boolean();
      throw ParseError(t.line, t.col, "unsupported builtin sort '" + t.text + "'");
    }
    if (t.kind != Tok::lower_word && t.kind != Tok::quoted)
      throw ParseError(t.line, t.col, "expected sort name");
    SortId s = p.sig.find_sort(t.text);
    if (s < 0)
      throw ParseError(t.line, t.col, "undeclared sort '" + t.text + "'");
    return s;
  }

  void parse_type_decl(Problem& p, AnnotatedFormula& af) {
    bool wrapped = false;
    if (lex_.peek().kind == Tok::lparen) {
      wrapped = true;
      lex_.take();
    }
    Token name = lex_.take();
    if (name.kind != Tok::lower_word && name.kind != Tok::quoted)
      throw ParseError(name.line, name.col, "expected declared symbol name");
    expect(Tok::colon, "':'");

    if (lex_.peek().kind == Tok::dollar_word && lex_.peek().text == "$tType") {
      lex_.take();
      SortId s = p.sig.add_sort(name.text);
      af.decl_sort = s;
      if (wrapped) expect(Tok::rparen, "')'");
      return;
    }

    std::vector<SortId> arg_sorts;
    SortId result;
    if (lex_.peek().kind == Tok::lparen) {
      lex_.take();
      arg_sorts.push_back(parse_sort(p));
      while (lex_.peek().kind == Tok::star) {
        lex_.take();
        arg_sorts.push_back(parse_sort(p));
      }
      expect(Tok::rparen, "')'");
      expect(Tok::gt, "'>'");
      result = parse_sort(p);
    } else {
      SortId first = parse_sort(p);
      if (lex_.peek().kind == Tok::gt) {
        lex_.take();
        arg_sorts.push_back(first);
        result = parse_sort(p);
      } else {
        result = first;
      }
    }
    for (SortId s : arg_sorts)
      if (s == p.sig.boolean())
        throw ParseError(name.line, name.col, "boolean argument sorts are not supported");

    Symbol sym;
    sym.name = name.text;
    sym.kind = result == p.sig.boolean() ? SymbolKind::predicate : SymbolKind::function;
    sym.arity = int(arg_sorts.size());
    sym.result = result;
    sym.args = std::move(arg_sorts);
    try {
      af.decl_symbol = p.sig.add_symbol(sym);
    } catch (const Error& e) {
      throw ParseError(name.line, name.col, e.what());
    }
    if (wrapped) expect(Tok::rparen, "')'");
  }

  // ---- formulas ----

  Formula parse_formula(Problem& p) {
    Formula left = parse_unitary(p);
    Tok k = lex_.peek().kind;
    if (k == Tok::op_and || k == Tok::op_or) {
      Connective conn = k == Tok::op_and ? Connective::conjunction : Connective::disjunction;
      while (lex_.peek().kind == k) {
        lex_.take();
        Formula right = parse_unitary(p);
        left = Formula::binary(conn, std::move(left), std::move(right));
      }
      return left;
    }
    if (k == Tok::op_implies || k == Tok::op_iff) {
      lex_.take();
      Formula right = parse_unitary(p);
      return Formula::binary(k == Tok::op_implies ? Connective::implication
                                                  : Connective::equivalence,
                             std::move(left), std::move(right));
    }
    return left;
  }

  Formula parse_unitary(Problem& p) {
    const Token& t = lex_.peek();
    switch (t.kind) {
      case Tok::bang:
      case Tok::question: {
        Connective q = t.kind == Tok::bang ? Connective::forall : Connective::exists;
        lex_.take();
        expect(Tok::lbracket, "'['");
        std::vector<std::pair<int32_t, SortId>> binders;
        for (;;) {
          Token v = expect(Tok::upper_word, "variable");
          SortId sort = p.sig.individual();
          if (lex_.peek().kind == Tok::colon) {
            if (!tff_mode_)
              throw ParseError(v.line, v.col, "sorted variables require tff");
            lex_.take();
            sort = parse_sort(p);
          }
          int32_t id = next_var_++;
          scope_.emplace_back(v.text, id);
          var_sorts_[id] = sort;
          binder_vars_.insert(id);
          binders.emplace_back(id, sort);
          if (lex_.peek().kind == Tok::comma) {
            lex_.take();
            continue;
          }
          break;
        }
        expect(Tok::rbracket, "']'");
        expect(Tok::colon, "':'");
        Formula body = parse_unitary(p);
        for (auto it = binders.rbegin(); it != binders.rend(); ++it)
          body = Formula::quantified(q, it->first, it->second, std::move(body));
        scope_.resize(scope_.size() - binders.size());
        return body;
      }
      case Tok::op_not: {
        lex_.take();
        return Formula::unary(Connective::negation, parse_unitary(p));
      }
      case Tok::lparen: {
        lex_.take();
        Formula f = parse_formula(p);
        expect(Tok::rparen, "')'");
        return f;
      }
      case Tok::dollar_word: {
        if (t.text == "$true" || t.text == "$false") {
          Token tok = lex_.take();
          if (lex_.peek().kind == Tok::eq || lex_.peek().kind == Tok::neq)
            throw ParseError(tok.line, tok.col, "boolean constants cannot be equality operands");
          return Formula::constant(tok.text == "$true");
        }
        lex_.fail("unsupported builtin '" + t.text + "'");
      }
      default:
        return parse_atomic(p);
    }
  }

  Formula parse_atomic(Problem& p) {
    Raw raw = parse_raw(p);
    if (lex_.peek().kind == Tok::eq || lex_.peek().kind == Tok::neq) {
      bool negated = lex_.take().kind == Tok::neq;
      Raw rhs_raw = parse_raw(p);
      Term lhs = to_term(p, raw);
      Term rhs = to_term(p, rhs_raw);
      if (lhs.sort() != rhs.sort())
        throw ParseError(raw.head.line, raw.head.col, "equality operands have different sorts");
      Formula eq = Formula::equality(std::move(lhs), std::move(rhs));
      return negated ? Formula::unary(Connective::negation, std::move(eq)) : eq;
    }
    return to_atom(p, raw);
  }

  // cnf: disjunction of literals, free variables implicitly universal
  Formula parse_cnf_formula(Problem& p) {
    bool wrapped = false;
    if (lex_.peek().kind == Tok::lparen) {
      wrapped = true;
      lex_.take();
    }
    Formula f = parse_cnf_literal(p);
    while (lex_.peek().kind == Tok::op_or) {
      lex_.take();
      f = Formula::binary(Connective::disjunction, std::move(f), parse_cnf_literal(p));
    }
    if (wrapped) expect(Tok::rparen, "')'");
    // sort adoption may have happened after a variable's first occurrence
    retag_vars(f);
    // universally close over free variables in id order (= first occurrence)
    std::map<int32_t, SortId> free;
    std::set<int32_t> bound;
    f.collect_free_vars(free, bound);
    for (auto it = free.rbegin(); it != free.rend(); ++it)
      f = Formula::quantified(Connective::forall, it->first, it->second, std::move(f));
    return f;
  }

  void retag_vars(Formula& f) {
    for (Term& t : f.terms) retag_vars(t);
    for (Formula& k : f.kids) retag_vars(k);
  }

  void retag_vars(Term& t) {
    if (t.is_var()) {
      auto it = var_sorts_.find(t.var());
      if (it != var_sorts_.end() && it->second != t.sort())
        t = Term::variable(t.var(), it->second);
      return;
    }
    for (Term& a : t.args()) retag_vars(a);
  }

  Formula parse_cnf_literal(Problem& p) {
    if (lex_.peek().kind == Tok::op_not) {
      lex_.take();
      return Formula::unary(Connective::negation, parse_cnf_literal(p));
    }
    if (lex_.peek().kind == Tok::dollar_word) {
      Token tok = lex_.take();
      if (tok.text == "$true" || tok.text == "$false") return Formula::constant(tok.text == "$true");
      throw ParseError(tok.line, tok.col, "unsupported builtin '" + tok.text + "'");
    }
    return parse_atomic(p);
  }

  Raw parse_raw(Problem& p) {
    Raw r;
    Token t = lex_.take();
    if (t.kind == Tok::upper_word) {
      r.head = t;
      r.is_var = true;
      return r;
    }
    if (t.kind != Tok::lower_word && t.kind != Tok::quoted)
      throw ParseError(t.line, t.col, "expected term");
    r.head = t;
    if (lex_.peek().kind == Tok::lparen) {
      lex_.take();
      r.args.push_back(parse_raw(p));
      while (lex_.peek().kind == Tok::comma) {
        lex_.take();
        r.args.push_back(parse_raw(p));
      }
      expect(Tok::rparen, "')'");
    }
    return r;
  }

  int32_t lookup_var(const Token& t) {
    for (auto it = scope_.rbegin(); it != scope_.rend(); ++it)
      if (it->first == t.text) return it->second;
    return -1;
  }

  Term to_term(Problem& p, const Raw& r) {
    if (r.is_var) {
      int32_t id = lookup_var(r.head);
      if (id < 0) {
        // free variable: only reachable from cnf literals, bind lazily
        id = next_var_++;
        scope_.emplace_back(r.head.text, id);
      }
      return Term::variable(id, var_sorts_.count(id) ? var_sorts_[id] : p.sig.individual());
    }
    SymbolId sym = resolve(p, r, SymbolKind::function);
    const Symbol& s = p.sig.symbol(sym);
    if (s.kind != SymbolKind::function)
      throw ParseError(r.head.line, r.head.col,
                       "predicate '" + s.name + "' used in term position");
    std::vector<Term> args = convert_args(p, r, s);
    return Term::app(sym, s.result, std::move(args));
  }

  Formula to_atom(Problem& p, const Raw& r) {
    if (r.is_var)
      throw ParseError(r.head.line, r.head.col, "variable used as formula");
    SymbolId sym = resolve(p, r, SymbolKind::predicate);
    const Symbol& s = p.sig.symbol(sym);
    if (s.kind != SymbolKind::predicate)
      throw ParseError(r.head.line, r.head.col,
                       "function '" + s.name + "' used in formula position");
    std::vector<Term> args = convert_args(p, r, s);
    return Formula::make_atom(sym, std::move(args));
  }

  std::vector<Term> convert_args(Problem& p, const Raw& r, const Symbol& s) {
    if (int(r.args.size()) != s.arity)
      throw ParseError(r.head.line, r.head.col,
                       "symbol '" + s.name + "' expects " + std::to_string(s.arity) +
                       " arguments, got " + std::to_string(r.args.size()));
    std::vector<Term> args;
    args.reserve(r.args.size());
    for (size_t i = 0; i < r.args.size(); i++) {
      Term a = to_term(p, r.args[i]);
      if (a.is_var() && !binder_vars_.count(a.var()) &&
          var_sorts_.find(a.var()) == var_sorts_.end()) {
        // cnf free variable: adopt the expected argument sort
        var_sorts_[a.var()] = s.args[i];
        a = Term::variable(a.var(), s.args[i]);
      }
      if (a.sort() != s.args[i])
        throw ParseError(r.head.line, r.head.col,
                         "argument " + std::to_string(i + 1) + " of '" + s.name +
                         "' has sort mismatch");
      args.push_back(std::move(a));
    }
    return args;
  }

  SymbolId resolve(Problem& p, const Raw& r, SymbolKind assumed) {
    SymbolId sym = p.sig.find_symbol(r.head.text);
    if (sym >= 0) return sym;
    // FOF-style inference: default sorts, kind from syntactic position
    Symbol s;
    s.name = r.head.text;
    s.kind = assumed;
    s.arity = int(r.args.size());
    s.result = assumed == SymbolKind::predicate ? p.sig.boolean() : p.sig.individual();
    s.args.assign(r.args.size(), p.sig.individual());
    try {
      return p.sig.add_symbol(s);
    } catch (const Error& e) {
      throw ParseError(r.head.line, r.head.col, e.what());
    }
  }

  // variable sorts for the formula in progress; binder declarations win
  std::map<int32_t, SortId> var_sorts_;
  std::set<int32_t> binder_vars_;
};

bool needs_quotes(const std::string& name) {
  if (name.empty()) return true;
  if (!std::islower(static_cast<unsigned char>(name[0]))) {
    // integers are valid names
    bool all_digits = !name.empty();
    size_t start = name[0] == '-' ? 1 : 0;
    if (start == name.size()) return true;
    for (size_t i = start; i < name.size(); i++)
      if (!std::isdigit(static_cast<unsigned char>(name[i]))) all_digits = false;
    return !all_digits;
  }
  for (char c : name)
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return true;
  return false;
}

std::string print_name(const std::string& name) {
  if (!needs_quotes(name)) return name;
  std::string out = "'";
  for (char c : name) {
    if (c == '\'' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  out.push_back('\'');
  return out;
}

class Printer {
public:
  Printer(const Problem& p) : p_(p) {}

  std::string problem() {
    std::ostringstream out;
    const char* directive = p_.dialect == Dialect::tff ? "tff" : "fof";
    for (const auto& af : p_.formulas) {
      out << directive << '(' << print_name(af.name) << ", ";
      if (af.role == Role::type_decl) {
        out << "type, ";
        if (af.decl_sort >= 0) {
          out << print_name(p_.sig.sort(af.decl_sort).name) << ": $tType";
        } else {
          const Symbol& s = p_.sig.symbol(af.decl_symbol);
          out << print_name(s.name) << ": " << type_of(s);
        }
      } else {
        out << role_name(af.role) << ", " << formula(af.formula);
      }
      out << ").\n";
    }
    return out.str();
  }

  std::string type_of(const Symbol& s) {
    std::ostringstream out;
    if (s.arity == 0) {
      out << sort_name(s.result);
      return out.str();
    }
    if (s.arity == 1) {
      out << sort_name(s.args[0]) << " > " << sort_name(s.result);
      return out.str();
    }
    out << '(';
    for (size_t i = 0; i < s.args.size(); i++) {
      if (i) out << " * ";
      out << sort_name(s.args[i]);
    }
    out << ") > " << sort_name(s.result);
    return out.str();
  }

  std::string sort_name(SortId s) {
    const Sort& sort = p_.sig.sort(s);
    return sort.builtin ? sort.name : print_name(sort.name);
  }

  std::string formula(const Formula& f) {
    switch (f.kind) {
      case Connective::truth: return "$true";
      case Connective::falsity: return "$false";
      case Connective::atom: {
        std::ostringstream out;
        out << print_name(p_.sig.symbol(f.pred).name);
        if (!f.terms.empty()) {
          out << '(';
          for (size_t i = 0; i < f.terms.size(); i++) {
            if (i) out << ',';
            out << term(f.terms[i]);
          }
          out << ')';
        }
        return out.str();
      }
      case Connective::equality:
        return term(f.terms[0]) + " = " + term(f.terms[1]);
      case Connective::negation:
        if (f.kids[0].kind == Connective::equality)
          return term(f.kids[0].terms[0]) + " != " + term(f.kids[0].terms[1]);
        return "~" + wrap(f.kids[0]);
      case Connective::conjunction:
      case Connective::disjunction: {
        // flatten chains of the same connective
        const char* op = f.kind == Connective::conjunction ? " & " : " | ";
        std::vector<const Formula*> parts;
        flatten(f, f.kind, parts);
        std::ostringstream out;
        out << '(';
        for (size_t i = 0; i < parts.size(); i++) {
          if (i) out << op;
          out << wrap(*parts[i]);
        }
        out << ')';
        return out.str();
      }
      case Connective::implication:
        return "(" + wrap(f.kids[0]) + " => " + wrap(f.kids[1]) + ")";
      case Connective::equivalence:
        return "(" + wrap(f.kids[0]) + " <=> " + wrap(f.kids[1]) + ")";
      case Connective::forall:
      case Connective::exists: {
        std::ostringstream out;
        out << (f.kind == Connective::forall ? '!' : '?') << '[';
        const Formula* cur = &f;
        bool first = true;
        while (cur->kind == f.kind) {
          if (!first) out << ',';
          first = false;
          out << 'X' << cur->var;
          if (p_.dialect == Dialect::tff && cur->var_sort != 0)
            out << ": " << sort_name(cur->var_sort);
          cur = &cur->kids[0];
        }
        out << "]: " << wrap(*cur);
        return out.str();
      }
    }
    return "$false";
  }

  std::string term(const Term& t) {
    if (t.is_var()) return "X" + std::to_string(t.var());
    std::ostringstream out;
    out << print_name(p_.sig.symbol(t.sym()).name);
    if (!t.args().empty()) {
      out << '(';
      for (size_t i = 0; i < t.args().size(); i++) {
        if (i) out << ',';
        out << term(t.args()[i]);
      }
      out << ')';
    }
    return out.str();
  }

private:
  void flatten(const Formula& f, Connective k, std::vector<const Formula*>& out) {
    if (f.kind == k) {
      flatten(f.kids[0], k, out);
      flatten(f.kids[1], k, out);
    } else {
      out.push_back(&f);
    }
  }

  std::string wrap(const Formula& f) {
    switch (f.kind) {
      case Connective::atom:
      case Connective::equality:
      case Connective::truth:
      case Connective::falsity:
      case Connective::negation:
      case Connective::conjunction:
      case Connective::disjunction:
      case Connective::implication:
      case Connective::equivalence:
        return formula(f);  // binaries already print their own parens
      case Connective::forall:
      case Connective::exists:
        return "(" + formula(f) + ")";
    }
    return formula(f);
  }

  const Problem& p_;
};

}  // namespace

Problem parse_problem(const std::string& text, std::optional<Dialect> dialect_hint,
                      const std::string& include_root) {
  Problem p;
  Parser parser(text, include_root, 0);
  parser.parse_into(p);
  if (dialect_hint) p.dialect = *dialect_hint;
  return p;
}

Problem parse_file(const std::string& path, std::optional<Dialect> dialect_hint,
                   const std::string& include_root) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  std::string root = include_root;
  if (root.empty()) {
    auto parent = std::filesystem::path(path).parent_path();
    root = parent.empty() ? "." : parent.string();
  }
  Problem p = parse_problem(ss.str(), dialect_hint, root);
  p.name = std::filesystem::path(path).stem().string();
  return p;
}

std::string render_problem(const Problem& p) { return Printer(p).problem(); }

std::string render_formula(const Problem& p, const Formula& f) {
  return Printer(p).formula(f);
}

std::string render_term(const Problem& p, const Term& t) { return Printer(p).term(t); }

std::map<SymbolId, SymbolInfo> symbol_table(const Problem& p) {
  std::map<SymbolId, SymbolInfo> table;
  for (const auto& af : p.formulas) {
    if (af.role == Role::type_decl) continue;
    std::set<SymbolId> syms;
    af.formula.collect_symbols(syms);
    for (SymbolId s : syms) {
      auto& info = table[s];
      const Symbol& sym = p.sig.symbol(s);
      info.arity = sym.arity;
      info.kind = sym.kind;
      info.formula_count++;
    }
  }
  return table;
}

}  // namespace sabre
