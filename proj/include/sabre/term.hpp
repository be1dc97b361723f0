#ifndef SABRE_TERM_HPP
#define SABRE_TERM_HPP

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace sabre {

using SortId = int32_t;
using SymbolId = int32_t;

enum class SymbolKind { function, predicate };

struct Sort {
  std::string name;
  bool builtin = false;  // $i and $o
};

struct Symbol {
  std::string name;
  SymbolKind kind = SymbolKind::function;
  int arity = 0;
  SortId result = 0;             // result sort; $o for predicates
  std::vector<SortId> args;      // argument sorts, size == arity
  bool skolem = false;
  bool definition = false;
};

class Error : public std::runtime_error {
public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Interned sorts and symbols of one problem. Symbol ids are dense and
// assigned in first-declaration order, which makes rendering deterministic.
class Signature {
public:
  Signature();

  SortId individual() const { return individual_; }  // $i
  SortId boolean() const { return boolean_; }        // $o

  SortId add_sort(const std::string& name);
  SortId find_sort(const std::string& name) const;  // -1 if absent
  const Sort& sort(SortId s) const { return sorts_[size_t(s)]; }
  size_t sort_count() const { return sorts_.size(); }

  SymbolId add_symbol(const Symbol& sym);  // throws on conflicting redeclaration
  SymbolId find_symbol(const std::string& name) const;  // -1 if absent
  const Symbol& symbol(SymbolId s) const { return symbols_[size_t(s)]; }
  size_t symbol_count() const { return symbols_.size(); }

  // Fresh name with the given prefix, disjoint from every interned symbol.
  std::string fresh_name(const std::string& prefix, int& counter) const;

  bool operator==(const Signature& other) const;

private:
  std::vector<Sort> sorts_;
  std::vector<Symbol> symbols_;
  std::unordered_map<std::string, SortId> sort_index_;
  std::unordered_map<std::string, SymbolId> symbol_index_;
  SortId individual_ = 0;
  SortId boolean_ = 1;
};

// First-order term: a variable (id + sort) or an application. Plain value
// semantics; sharing is by copy, which is fine at the problem sizes this
// project targets.
class Term {
public:
  Term() = default;

  static Term variable(int32_t var, SortId sort) {
    Term t;
    t.var_ = var;
    t.sort_ = sort;
    return t;
  }

  static Term app(SymbolId sym, SortId result, std::vector<Term> args = {}) {
    Term t;
    t.sym_ = sym;
    t.sort_ = result;
    t.args_ = std::move(args);
    return t;
  }

  bool is_var() const { return var_ >= 0; }
  int32_t var() const { return var_; }
  SymbolId sym() const { return sym_; }
  SortId sort() const { return sort_; }
  const std::vector<Term>& args() const { return args_; }
  std::vector<Term>& args() { return args_; }

  bool operator==(const Term& o) const {
    return var_ == o.var_ && sym_ == o.sym_ && args_ == o.args_;
  }
  bool operator!=(const Term& o) const { return !(*this == o); }

  size_t size() const {  // node count
    size_t n = 1;
    for (const Term& a : args_) n += a.size();
    return n;
  }

  size_t depth() const {
    size_t d = 0;
    for (const Term& a : args_) d = std::max(d, a.depth());
    return d + 1;
  }

  void collect_vars(std::map<int32_t, SortId>& vars) const {
    if (is_var()) {
      vars.emplace(var_, sort_);
      return;
    }
    for (const Term& a : args_) a.collect_vars(vars);
  }

  bool contains_var(int32_t v) const {
    if (is_var()) return var_ == v;
    for (const Term& a : args_)
      if (a.contains_var(v)) return true;
    return false;
  }

private:
  int32_t var_ = -1;
  SymbolId sym_ = -1;
  SortId sort_ = 0;
  std::vector<Term> args_;
};

}  // namespace sabre

#endif
