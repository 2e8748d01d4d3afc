#ifndef PERMCT_TEXT_FORMAT_HPP
#define PERMCT_TEXT_FORMAT_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "permct/permutation.hpp"
#include "permct/prime_arith.hpp"

/**
 * @file text_format.hpp
 * @brief Text forms of permutations, cycle types and exponents.
 *
 * Permutation grammar (whitespace is free between tokens):
 *
 *   perm   := [ "deg" "=" INT ] ( "[" INT { sep INT } "]" | { cycle } )
 *   cycle  := "(" [ INT { sep INT } ] ")"
 *   sep    := "," | whitespace
 *
 * The bracketed form is pointwise. Without a degree header the degree is the
 * length of the pointwise form, or the largest point mentioned in cycle
 * notation. "()" denotes the identity.
 */

namespace permct
{

/// A parsed but not yet degree-resolved permutation.
struct PermutationText
{
  std::optional<std::size_t> declared_degree;
  std::optional<std::vector<Point>> images; // pointwise form
  std::vector<std::vector<Point>> cycles;   // cycle form
  std::size_t max_point = 0;

  /// Degree the text implies on its own, if any.
  std::optional<std::size_t> implied_degree() const;

  /// Builds the permutation on `degree` points. Throws InvalidInput if the
  /// text declares a different degree or mentions a point beyond it.
  Permutation resolve(std::size_t degree) const;
};

PermutationText parse_permutation_text(std::string_view text);

/// Parses and resolves with `degree` if given, otherwise the implied degree.
Permutation parse_permutation(std::string_view text,
                              std::optional<std::size_t> degree = std::nullopt);

/// Canonical cycle notation, e.g. "(1 2)(3 4 5)". Fixed points are omitted
/// unless explicit_fixpoints; a "deg=n " prefix is emitted whenever n is not
/// the largest point printed. The identity with hidden fixpoints is "()".
std::string format_permutation(Permutation const &pi,
                               bool explicit_fixpoints = false);

/// "2^3·5^2·7"; exponent 1 is omitted and the empty product is "1".
std::string format_factored(PrimeExponentVector const &u);

/// Decimal ("231") or factored ("2^3·5", "2^3*5") nonnegative integer.
BigInt parse_exponent(std::string_view text);

} // namespace permct

#endif // PERMCT_TEXT_FORMAT_HPP
