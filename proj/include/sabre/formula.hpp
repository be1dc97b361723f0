#ifndef SABRE_FORMULA_HPP
#define SABRE_FORMULA_HPP

#include <memory>
#include <set>
#include <string>
#include <vector>

#include "sabre/term.hpp"

namespace sabre {

enum class Connective {
  atom,         // pred + terms
  equality,     // terms[0] = terms[1]
  truth,        // $true
  falsity,      // $false
  negation,     // kids[0]
  conjunction,  // kids[0] & kids[1]
  disjunction,
  implication,
  equivalence,
  forall,       // var/var_sort, kids[0]
  exists,
};

// Formula tree with value semantics. Quantified variables are integer ids,
// scoped per annotated formula; the parser assigns them in binder order.
struct Formula {
  Connective kind = Connective::truth;
  SymbolId pred = -1;           // atom
  std::vector<Term> terms;      // atom args / equality sides
  std::vector<Formula> kids;    // connective children
  int32_t var = -1;             // quantified variable
  SortId var_sort = 0;

  static Formula make_atom(SymbolId p, std::vector<Term> args) {
    Formula f;
    f.kind = Connective::atom;
    f.pred = p;
    f.terms = std::move(args);
    return f;
  }
  static Formula equality(Term lhs, Term rhs) {
    Formula f;
    f.kind = Connective::equality;
    f.terms = {std::move(lhs), std::move(rhs)};
    return f;
  }
  static Formula constant(bool value) {
    Formula f;
    f.kind = value ? Connective::truth : Connective::falsity;
    return f;
  }
  static Formula unary(Connective k, Formula a) {
    Formula f;
    f.kind = k;
    f.kids.push_back(std::move(a));
    return f;
  }
  static Formula binary(Connective k, Formula a, Formula b) {
    Formula f;
    f.kind = k;
    f.kids.push_back(std::move(a));
    f.kids.push_back(std::move(b));
    return f;
  }
  static Formula quantified(Connective k, int32_t var, SortId sort, Formula body) {
    Formula f;
    f.kind = k;
    f.var = var;
    f.var_sort = sort;
    f.kids.push_back(std::move(body));
    return f;
  }

  bool operator==(const Formula& o) const {
    return kind == o.kind && pred == o.pred && terms == o.terms &&
           var == o.var && var_sort == o.var_sort && kids == o.kids;
  }
  bool operator!=(const Formula& o) const { return !(*this == o); }

  void collect_free_vars(std::map<int32_t, SortId>& out, std::set<int32_t>& bound) const;
  void collect_symbols(std::set<SymbolId>& out) const;
};

enum class Role { axiom, hypothesis, conjecture, negated_conjecture, type_decl };

const char* role_name(Role r);

struct AnnotatedFormula {
  std::string name;
  Role role = Role::axiom;
  Formula formula;
  // set for role == type_decl: exactly one of these is >= 0
  SymbolId decl_symbol = -1;
  SortId decl_sort = -1;

  bool operator==(const AnnotatedFormula& o) const {
    return name == o.name && role == o.role && formula == o.formula &&
           decl_symbol == o.decl_symbol && decl_sort == o.decl_sort;
  }
};

enum class Dialect { fof, tff };

struct Problem {
  Signature sig;
  std::vector<AnnotatedFormula> formulas;
  Dialect dialect = Dialect::fof;
  std::string name;  // usually the file stem

  bool operator==(const Problem& o) const {
    return sig == o.sig && formulas == o.formulas && dialect == o.dialect;
  }

  const AnnotatedFormula* conjecture() const {
    for (const auto& f : formulas)
      if (f.role == Role::conjecture) return &f;
    return nullptr;
  }
};

}  // namespace sabre

#endif
