#pragma once

#include <cstdint>
#include <string>

#include "cogscope/ast.hpp"

namespace cogscope {

/// Relative frequencies of the statement forms the generator emits.
struct StatementWeights {
    double declare = 3.0;
    double assign = 4.0;
    double compound = 1.5;
    double increment = 1.0;
    double read = 1.0;
    double print = 1.5;
    double call = 1.0;
    double if_else = 1.2;
    double switch_case = 0.5;
    double for_loop = 1.0;
    double while_loop = 1.0;
    double do_while = 0.5;
    double parallel = 0.3;
    double interrupt = 0.3;
    double block = 0.4;
};

struct GeneratorConfig {
    std::uint64_t seed = 0;
    int max_statements = 6;  // statements at the top level of main; 0 gives an empty main
    int max_depth = 3;       // nesting of control statements
    int variable_pool = 4;   // local names v0..v{n-1}
    int max_globals = 2;     // scalar globals g0.., always initialized
    int max_functions = 2;   // helpers f0.., each ending in a return
    bool arrays = true;      // global `int mem[8];` and subscripted accesses
    StatementWeights weights;
};

/// Random program that parses and resolves. Identical configs give identical
/// units. Declarations at the top level of main are single initialized
/// declarators, so concatenation never has to drop a line.
[[nodiscard]] SourceUnit generate_unit(const GeneratorConfig& config);

/// generate_unit rendered to canonical text.
[[nodiscard]] std::string generate(const GeneratorConfig& config);

}  // namespace cogscope
