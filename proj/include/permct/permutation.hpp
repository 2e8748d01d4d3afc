#ifndef PERMCT_PERMUTATION_HPP
#define PERMCT_PERMUTATION_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "permct/prime_arith.hpp"

/**
 * @file permutation.hpp
 * @brief Permutations of [n] = {1, ..., n}.
 *
 * Permutations act on the right: for points a the image of a under the
 * product pi * tau is (a pi) tau, i.e. compose(pi, tau) applies pi first.
 * All interfaces speak 1-based points; storage is 0-based.
 */

namespace permct
{

using Point = std::uint32_t;

inline constexpr std::size_t kMaxDegree = std::size_t{1} << 24;

class Permutation
{
public:
  static Permutation identity(std::size_t n);

  /// Pointwise representation: images[a - 1] is the image of a.
  static Permutation from_images(std::vector<Point> const &images);

  /// Unlisted points are fixed.
  static Permutation from_cycles(std::vector<std::vector<Point>> const &cycles,
                                 std::size_t n);

  /// Same as from_images but with 0-based points.
  static Permutation from_zero_based(std::vector<Point> images);

  std::size_t degree() const { return images_.size(); }

  /// Image of the 1-based point a.
  Point image(Point a) const { return images_[a - 1] + 1; }

  /// 1-based pointwise representation.
  std::vector<Point> images() const;

  std::span<const Point> zero_based() const { return images_; }

  bool is_identity() const;

  friend bool operator==(Permutation const &, Permutation const &) = default;

private:
  explicit Permutation(std::vector<Point> images)
  : images_(std::move(images))
  {}

  std::vector<Point> images_;
};

/// Disjoint cycles covering [n]; each cycle starts with its minimal point
/// and cycles are sorted by their first point. Fixpoints are 1-cycles.
struct CycleDecomposition
{
  std::size_t degree;
  std::vector<std::vector<Point>> cycles;

  friend bool operator==(CycleDecomposition const &,
                         CycleDecomposition const &) = default;
};

/// Multiset of cycle lengths, fixpoints included.
class CycleType
{
public:
  using Entry = std::pair<std::uint64_t, std::uint64_t>; // length, multiplicity

  CycleType() = default;

  static CycleType from_lengths(std::vector<std::uint64_t> lengths);

  std::span<const Entry> entries() const { return entries_; }
  std::uint64_t multiplicity(std::uint64_t length) const;

  /// Sum of length * multiplicity.
  std::uint64_t degree() const;

  /// "1^2 2^1", ascending lengths.
  std::string to_string() const;

  friend bool operator==(CycleType const &, CycleType const &) = default;

private:
  std::vector<Entry> entries_;
};

Permutation compose(Permutation const &pi, Permutation const &tau);
Permutation inverse(Permutation const &pi);
bool commute(Permutation const &pi, Permutation const &tau);

// Powers are taken cycle by cycle: a point on a cycle of length l advances
// by (x mod l) positions.
Permutation power(Permutation const &pi, std::uint64_t x);
Permutation power(Permutation const &pi, BigInt const &x);
Permutation power(Permutation const &pi, PrimeExponentVector const &x);

CycleDecomposition to_cycles(Permutation const &pi);
Permutation from_cycles(CycleDecomposition const &decomposition);

CycleType cycle_type(Permutation const &pi);

/// Distinct cycle lengths, ascending.
std::vector<std::uint64_t> cycle_lengths(Permutation const &pi);

/// pe(ord(pi)); every cycle length must factor over the basis.
PrimeExponentVector order_pe(Permutation const &pi, PrimeBasis const &basis);
BigInt order(Permutation const &pi);

bool is_fixpoint_free(Permutation const &pi);

/// Some sigma with pi == sigma^-1 rho sigma, or nothing if the cycle types
/// differ.
std::optional<Permutation> conjugator(Permutation const &pi,
                                      Permutation const &rho);

/// Block-diagonal embedding; part k moves the points offset_k + 1, ...,
/// offset_k + degree_k, where the offsets are prefix sums of the degrees.
Permutation direct_sum(std::span<const Permutation> parts);

/// The permutation induced on points offset + 1, ..., offset + degree, which
/// must form an invariant block.
Permutation restrict_block(Permutation const &pi, std::size_t offset,
                           std::size_t degree);

} // namespace permct

#endif // PERMCT_PERMUTATION_HPP
