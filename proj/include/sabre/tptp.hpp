#ifndef SABRE_TPTP_HPP
#define SABRE_TPTP_HPP

#include <iosfwd>
#include <map>
#include <optional>
#include <string>

#include "sabre/formula.hpp"

namespace sabre {

class ParseError : public Error {
public:
  ParseError(int line, int col, const std::string& msg)
      : Error(std::to_string(line) + ":" + std::to_string(col) + ": " + msg),
        line(line), col(col) {}
  int line;
  int col;
};

// Parse a TPTP FOF/TF0 problem. `include` directives are resolved against
// `include_root` (defaults to the directory of the including file for
// parse_file, or "." for raw text). The dialect hint forces the printed
// dialect; otherwise any tff/cnf-with-types input flips the problem to TFF.
Problem parse_problem(const std::string& text,
                      std::optional<Dialect> dialect_hint = std::nullopt,
                      const std::string& include_root = ".");
Problem parse_file(const std::string& path,
                   std::optional<Dialect> dialect_hint = std::nullopt,
                   const std::string& include_root = "");

// Deterministic TPTP rendering; parse_problem(render_problem(p)) == p.
std::string render_problem(const Problem& p);
std::string render_formula(const Problem& p, const Formula& f);
std::string render_term(const Problem& p, const Term& t);

struct SymbolInfo {
  int arity = 0;
  SymbolKind kind = SymbolKind::function;
  int formula_count = 0;  // CountFormulas: formulas containing the symbol
};

// Per-symbol formula counts (CountFormulas semantics). Only symbols that
// occur in at least one non-type formula appear in the map.
std::map<SymbolId, SymbolInfo> symbol_table(const Problem& p);

}  // namespace sabre

#endif
