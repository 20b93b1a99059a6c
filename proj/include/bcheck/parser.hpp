#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "bcheck/ast.hpp"
#include "bcheck/token.hpp"

namespace bcheck {

// Known definition names and their category, used to disambiguate macro call
// sites while parsing. The category is discovered from the definition body.
enum class DefinitionCategory { Unknown, Expression, Predicate, Substitution };

struct DefinitionTable {
    struct Entry {
        DefinitionCategory category = DefinitionCategory::Unknown;
        std::size_t arity = 0;
    };
    std::map<std::string, Entry> entries;

    bool contains(const std::string& name) const { return entries.count(name) != 0; }
};

// Each parser consumes the full token sequence; trailing tokens are an error.
// A leading '#PREDICATE' marker line is accepted by parse_predicate.
ParseUnit parse_predicate(const std::vector<Token>& tokens,
                          const DefinitionTable* defs = nullptr);
ParseUnit parse_expression(const std::vector<Token>& tokens,
                           const DefinitionTable* defs = nullptr);
ParseUnit parse_substitution(const std::vector<Token>& tokens,
                             const DefinitionTable* defs = nullptr);
MachineAst parse_machine(const std::vector<Token>& tokens);

// Text-level conveniences (tokenize + parse).
ParseUnit parse_predicate_text(std::string_view source);
ParseUnit parse_expression_text(std::string_view source);
ParseUnit parse_substitution_text(std::string_view source);
MachineAst parse_machine_text(std::string_view source);

} // namespace bcheck
