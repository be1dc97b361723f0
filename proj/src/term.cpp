#include "sabre/term.hpp"

namespace sabre {

Signature::Signature() {
  individual_ = add_sort("$i");
  boolean_ = add_sort("$o");
  sorts_[size_t(individual_)].builtin = true;
  sorts_[size_t(boolean_)].builtin = true;
}

SortId Signature::add_sort(const std::string& name) {
  auto it = sort_index_.find(name);
  if (it != sort_index_.end()) return it->second;
  SortId id = SortId(sorts_.size());
  sorts_.push_back(Sort{name, false});
  sort_index_.emplace(name, id);
  return id;
}

SortId Signature::find_sort(const std::string& name) const {
  auto it = sort_index_.find(name);
  return it == sort_index_.end() ? -1 : it->second;
}

SymbolId Signature::add_symbol(const Symbol& sym) {
  auto it = symbol_index_.find(sym.name);
  if (it != symbol_index_.end()) {
    const Symbol& old = symbols_[size_t(it->second)];
    if (old.kind != sym.kind)
      throw Error("symbol '" + sym.name + "' used as both function and predicate");
    if (old.arity != sym.arity)
      throw Error("symbol '" + sym.name + "' used with arities " +
                  std::to_string(old.arity) + " and " + std::to_string(sym.arity));
    if (old.result != sym.result || old.args != sym.args)
      throw Error("symbol '" + sym.name + "' redeclared with different sorts");
    return it->second;
  }
  SymbolId id = SymbolId(symbols_.size());
  symbols_.push_back(sym);
  symbol_index_.emplace(sym.name, id);
  return id;
}

SymbolId Signature::find_symbol(const std::string& name) const {
  auto it = symbol_index_.find(name);
  return it == symbol_index_.end() ? -1 : it->second;
}

std::string Signature::fresh_name(const std::string& prefix, int& counter) const {
  for (;;) {
    std::string candidate = prefix + std::to_string(counter++);
    if (symbol_index_.find(candidate) == symbol_index_.end()) return candidate;
  }
}

bool Signature::operator==(const Signature& other) const {
  if (sorts_.size() != other.sorts_.size() || symbols_.size() != other.symbols_.size())
    return false;
  for (size_t i = 0; i < sorts_.size(); i++)
    if (sorts_[i].name != other.sorts_[i].name) return false;
  for (size_t i = 0; i < symbols_.size(); i++) {
    const Symbol &a = symbols_[i], &b = other.symbols_[i];
    if (a.name != b.name || a.kind != b.kind || a.arity != b.arity ||
        a.result != b.result || a.args != b.args)
      return false;
  }
  return true;
}

}  // namespace sabre
