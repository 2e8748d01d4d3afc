#include "permct/permutation.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <unordered_map>

#include "permct/errors.hpp"

namespace permct
{

namespace
{

void check_degree(std::size_t n)
{
  if (n < 1)
    throw InvalidInput("permutation degree must be at least 1");
  if (n > kMaxDegree)
    throw DegreeCapExceeded("permutation degree " + std::to_string(n) +
                            " exceeds the cap of " + std::to_string(kMaxDegree));
}

void check_same_degree(Permutation const &pi, Permutation const &tau)
{
  if (pi.degree() != tau.degree())
    throw InvalidInput("degree mismatch: " + std::to_string(pi.degree()) +
                       " vs " + std::to_string(tau.degree()));
}

// Calls f(first, length) for every cycle, where first is the cycle's minimal
// (0-based) point.
template<typename F>
void for_each_cycle(std::span<const Point> images, F &&f)
{
  std::vector<bool> seen(images.size(), false);
  for (Point a = 0; a < images.size(); ++a) {
    if (seen[a])
      continue;
    std::uint64_t len = 0;
    Point b = a;
    do {
      seen[b] = true;
      b = images[b];
      ++len;
    } while (b != a);
    f(a, len);
  }
}

// Rotates every cycle of pi by shift(length) positions.
template<typename Shift>
Permutation power_by(Permutation const &pi, Shift &&shift)
{
  auto images = pi.zero_based();
  std::vector<Point> result(images.size());
  std::vector<bool> seen(images.size(), false);
  std::unordered_map<std::uint64_t, std::uint64_t> shift_cache;
  std::vector<Point> cycle;

  for (Point a = 0; a < images.size(); ++a) {
    if (seen[a])
      continue;
    cycle.clear();
    Point b = a;
    do {
      seen[b] = true;
      cycle.push_back(b);
      b = images[b];
    } while (b != a);

    std::uint64_t len = cycle.size();
    auto it = shift_cache.find(len);
    if (it == shift_cache.end())
      it = shift_cache.emplace(len, shift(len)).first;
    std::uint64_t s = it->second;

    for (std::uint64_t k = 0; k < len; ++k)
      result[cycle[k]] = cycle[(k + s) % len];
  }
  return Permutation::from_zero_based(std::move(result));
}

} // namespace

Permutation Permutation::identity(std::size_t n)
{
  check_degree(n);
  std::vector<Point> images(n);
  std::iota(images.begin(), images.end(), Point{0});
  return Permutation(std::move(images));
}

Permutation Permutation::from_images(std::vector<Point> const &images)
{
  std::vector<Point> zero_based(images.size());
  for (std::size_t a = 0; a < images.size(); ++a) {
    if (images[a] < 1 || images[a] > images.size())
      throw InvalidInput("image " + std::to_string(images[a]) + " of point " +
                         std::to_string(a + 1) + " is outside [1, " +
                         std::to_string(images.size()) + "]");
    zero_based[a] = images[a] - 1;
  }
  return from_zero_based(std::move(zero_based));
}

Permutation Permutation::from_zero_based(std::vector<Point> images)
{
  check_degree(images.size());
  std::vector<bool> hit(images.size(), false);
  for (Point b : images) {
    if (b >= images.size())
      throw InvalidInput("image outside the permutation domain");
    if (hit[b])
      throw InvalidInput("images are not a bijection: " +
                         std::to_string(b + 1) + " appears twice");
    hit[b] = true;
  }
  return Permutation(std::move(images));
}

Permutation Permutation::from_cycles(std::vector<std::vector<Point>> const &cycles,
                                     std::size_t n)
{
  check_degree(n);
  std::vector<Point> images(n);
  std::iota(images.begin(), images.end(), Point{0});
  std::vector<bool> used(n, false);

  for (auto const &cycle : cycles) {
    for (std::size_t k = 0; k < cycle.size(); ++k) {
      Point a = cycle[k];
      if (a < 1 || a > n)
        throw InvalidInput("point " + std::to_string(a) + " is outside [1, " +
                           std::to_string(n) + "]");
      if (used[a - 1])
        throw InvalidInput("point " + std::to_string(a) +
                           " appears more than once in the cycles");
      used[a - 1] = true;
      images[a - 1] = cycle[(k + 1) % cycle.size()] - 1;
    }
  }
  return Permutation(std::move(images));
}

std::vector<Point> Permutation::images() const
{
  std::vector<Point> result(images_.size());
  for (std::size_t a = 0; a < images_.size(); ++a)
    result[a] = images_[a] + 1;
  return result;
}

bool Permutation::is_identity() const
{
  for (Point a = 0; a < images_.size(); ++a) {
    if (images_[a] != a)
      return false;
  }
  return true;
}

CycleType CycleType::from_lengths(std::vector<std::uint64_t> lengths)
{
  std::map<std::uint64_t, std::uint64_t> counts;
  for (auto len : lengths) {
    if (len == 0)
      throw InvalidInput("cycle lengths must be positive");
    ++counts[len];
  }
  CycleType ct;
  ct.entries_.assign(counts.begin(), counts.end());
  return ct;
}

std::uint64_t CycleType::multiplicity(std::uint64_t length) const
{
  auto it = std::lower_bound(entries_.begin(), entries_.end(),
                             Entry{length, 0});
  return it != entries_.end() && it->first == length ? it->second : 0;
}

std::uint64_t CycleType::degree() const
{
  std::uint64_t n = 0;
  for (auto const &[len, mult] : entries_)
    n += len * mult;
  return n;
}

std::string CycleType::to_string() const
{
  std::string s;
  for (auto const &[len, mult] : entries_) {
    if (!s.empty())
      s += ' ';
    s += std::to_string(len) + '^' + std::to_string(mult);
  }
  return s;
}

Permutation compose(Permutation const &pi, Permutation const &tau)
{
  check_same_degree(pi, tau);
  auto p = pi.zero_based();
  auto t = tau.zero_based();
  std::vector<Point> result(p.size());
  for (std::size_t a = 0; a < p.size(); ++a)
    result[a] = t[p[a]];
  return Permutation::from_zero_based(std::move(result));
}

Permutation inverse(Permutation const &pi)
{
  auto p = pi.zero_based();
  std::vector<Point> result(p.size());
  for (Point a = 0; a < p.size(); ++a)
    result[p[a]] = a;
  return Permutation::from_zero_based(std::move(result));
}

bool commute(Permutation const &pi, Permutation const &tau)
{
  check_same_degree(pi, tau);
  auto p = pi.zero_based();
  auto t = tau.zero_based();
  for (std::size_t a = 0; a < p.size(); ++a) {
    if (t[p[a]] != p[t[a]])
      return false;
  }
  return true;
}

Permutation power(Permutation const &pi, std::uint64_t x)
{
  return power_by(pi, [x](std::uint64_t len) { return x % len; });
}

Permutation power(Permutation const &pi, BigInt const &x)
{
  if (x < 0)
    throw InvalidInput("exponent must be nonnegative");
  return power_by(pi, [&x](std::uint64_t len) { return mod_of(x, len); });
}

Permutation power(Permutation const &pi, PrimeExponentVector const &x)
{
  return power_by(pi, [&x](std::uint64_t len) { return mod_of_pe(x, len); });
}

CycleDecomposition to_cycles(Permutation const &pi)
{
  CycleDecomposition d{pi.degree(), {}};
  auto images = pi.zero_based();
  for_each_cycle(images, [&](Point first, std::uint64_t len) {
    std::vector<Point> cycle;
    cycle.reserve(len);
    Point b = first;
    do {
      cycle.push_back(b + 1);
      b = images[b];
    } while (b != first);
    d.cycles.push_back(std::move(cycle));
  });
  return d;
}

Permutation from_cycles(CycleDecomposition const &decomposition)
{
  return Permutation::from_cycles(decomposition.cycles, decomposition.degree);
}

CycleType cycle_type(Permutation const &pi)
{
  std::vector<std::uint64_t> lengths;
  for_each_cycle(pi.zero_based(),
                 [&](Point, std::uint64_t len) { lengths.push_back(len); });
  return CycleType::from_lengths(std::move(lengths));
}

std::vector<std::uint64_t> cycle_lengths(Permutation const &pi)
{
  auto ct = cycle_type(pi);
  std::vector<std::uint64_t> lengths;
  for (auto const &[len, mult] : ct.entries())
    lengths.push_back(len);
  return lengths;
}

PrimeExponentVector order_pe(Permutation const &pi, PrimeBasis const &basis)
{
  auto result = PrimeExponentVector::one(basis);
  for (auto len : cycle_lengths(pi)) {
    try {
      result = pe_lcm(result, pe(len, basis));
    } catch (InvalidInput const &) {
      throw InvalidInput("prime basis too small for cycle length " +
                         std::to_string(len));
    }
  }
  return result;
}

BigInt order(Permutation const &pi)
{
  BigInt result = 1;
  for (auto len : cycle_lengths(pi))
    result = boost::multiprecision::lcm(result, BigInt(len));
  return result;
}

bool is_fixpoint_free(Permutation const &pi)
{
  auto images = pi.zero_based();
  for (Point a = 0; a < images.size(); ++a) {
    if (images[a] == a)
      return false;
  }
  return true;
}

std::optional<Permutation> conjugator(Permutation const &pi,
                                      Permutation const &rho)
{
  check_same_degree(pi, rho);

  auto by_length = [](Permutation const &p) {
    auto cycles = to_cycles(p).cycles;
    std::stable_sort(cycles.begin(), cycles.end(),
                     [](auto const &a, auto const &b) {
                       return a.size() < b.size();
                     });
    return cycles;
  };
  auto pi_cycles = by_length(pi);
  auto rho_cycles = by_length(rho);

  if (pi_cycles.size() != rho_cycles.size())
    return std::nullopt;

  // sigma maps the k-th point of a rho cycle to the k-th point of a pi cycle
  // of the same length; then sigma^-1 rho sigma = pi.
  std::vector<Point> sigma(pi.degree());
  for (std::size_t c = 0; c < pi_cycles.size(); ++c) {
    if (pi_cycles[c].size() != rho_cycles[c].size())
      return std::nullopt;
    for (std::size_t k = 0; k < pi_cycles[c].size(); ++k)
      sigma[rho_cycles[c][k] - 1] = pi_cycles[c][k] - 1;
  }
  return Permutation::from_zero_based(std::move(sigma));
}

Permutation direct_sum(std::span<const Permutation> parts)
{
  std::size_t n = 0;
  for (auto const &part : parts)
    n += part.degree();
  check_degree(n);

  std::vector<Point> images;
  images.reserve(n);
  Point offset = 0;
  for (auto const &part : parts) {
    for (Point b : part.zero_based())
      images.push_back(b + offset);
    offset += static_cast<Point>(part.degree());
  }
  return Permutation::from_zero_based(std::move(images));
}

Permutation restrict_block(Permutation const &pi, std::size_t offset,
                           std::size_t degree)
{
  if (offset + degree > pi.degree())
    throw InvalidInput("block exceeds the permutation degree");
  auto images = pi.zero_based();
  std::vector<Point> result(degree);
  for (std::size_t a = 0; a < degree; ++a) {
    Point b = images[offset + a];
    if (b < offset || b >= offset + degree)
      throw InvalidInput("block is not invariant under the permutation");
    result[a] = static_cast<Point>(b - offset);
  }
  return Permutation::from_zero_based(std::move(result));
}

} // namespace permct
