#ifndef PERMCT_SERIALIZATION_HPP
#define PERMCT_SERIALIZATION_HPP

#include <string>
#include <string_view>
#include <variant>

#include "json.hpp"

#include "permct/reductions.hpp"

/**
 * @file serialization.hpp
 * @brief JSON forms of instances, reduced instances and witnesses, and
 * DIMACS CNF import.
 *
 * Source instances:
 *
 *   {"type":"x3hs","n":3,"blocks":[[1,2,3]]}
 *   {"type":"cnf3","n":3,"clauses":[[{"var":1,"neg":false}, ...]]}
 *
 * Reduced instances carry "type" "reduced-x3hs" or "reduced-cnf3", the
 * source instance, a "coset" flag, the layout with every constant as a
 * decimal string, and the permutations in 1-based pointwise form. Witnesses
 * are {"x1":"1","x2":"231"}; on input either exponent may also be factored.
 *
 * Loaders validate fully and throw ParseError (syntax, with line and
 * column) or InvalidInput (schema or semantic violation).
 */

namespace permct
{

using Json = nlohmann::ordered_json;

/// Parses JSON text, mapping syntax errors to ParseError with line/column.
Json parse_json(std::string_view text);

Json to_json(X3hsInstance const &inst);
Json to_json(Cnf3Instance const &inst);
Json to_json(ReducedCycleTypeInstance const &inst);
Json to_json(ReducedFpfInstance const &inst);
Json to_json(WitnessExponents const &w);

using SourceInstance = std::variant<X3hsInstance, Cnf3Instance>;
using ReducedInstance = std::variant<ReducedCycleTypeInstance, ReducedFpfInstance>;

SourceInstance source_instance_from_json(Json const &j);
ReducedInstance reduced_instance_from_json(Json const &j);
WitnessExponents witness_from_json(Json const &j);

/// DIMACS "p cnf" input; every clause must have exactly three literals.
Cnf3Instance parse_dimacs(std::string_view text);

} // namespace permct

#endif // PERMCT_SERIALIZATION_HPP
