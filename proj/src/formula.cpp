#include "sabre/formula.hpp"

namespace sabre {

void Formula::collect_free_vars(std::map<int32_t, SortId>& out,
                                std::set<int32_t>& bound) const {
  switch (kind) {
    case Connective::atom:
    case Connective::equality: {
      std::map<int32_t, SortId> vars;
      for (const Term& t : terms) t.collect_vars(vars);
      for (auto& [v, s] : vars)
        if (!bound.count(v)) out.emplace(v, s);
      break;
    }
    case Connective::truth:
    case Connective::falsity:
      break;
    case Connective::forall:
    case Connective::exists: {
      bool fresh = bound.insert(var).second;
      kids[0].collect_free_vars(out, bound);
      if (fresh) bound.erase(var);
      break;
    }
    default:
      for (const Formula& k : kids) k.collect_free_vars(out, bound);
  }
}

void Formula::collect_symbols(std::set<SymbolId>& out) const {
  if (kind == Connective::atom) out.insert(pred);
  for (const Term& t : terms) {
    // walk term applications
    std::vector<const Term*> stack{&t};
    while (!stack.empty()) {
      const Term* cur = stack.back();
      stack.pop_back();
      if (!cur->is_var()) {
        out.insert(cur->sym());
        for (const Term& a : cur->args()) stack.push_back(&a);
      }
    }
  }
  for (const Formula& k : kids) k.collect_symbols(out);
}

const char* role_name(Role r) {
  switch (r) {
    case Role::axiom: return "axiom";
    case Role::hypothesis: return "hypothesis";
    case Role::conjecture: return "conjecture";
    case Role::negated_conjecture: return "negated_conjecture";
    case Role::type_decl: return "type";
  }
  return "axiom";
}

}  // namespace sabre
