#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "lterm/errors.hpp"
#include "lterm/size_model.hpp"
#include "lterm/term.hpp"

namespace lterm {

using BigInt = mpz_class;

struct CountLimits {
  std::uint64_t max_n = 5000;           // exact-table size cap
  std::uint64_t max_enumeration_n = 24; // exhaustive enumeration cap
};

/// Exact counts for every term family, memoized per family.
///
/// All families are computed by coefficient recurrences that are
/// well-founded in the size because successor/abstraction weights are >= 1
/// and zero+application >= 1. Per-level tables alias the unrestricted table
/// once the level exceeds the stabilization level for a size.
///
/// Not thread-safe per instance (tables grow lazily); completed instances
/// may be shared read-only... queries mutate caches, so share one counter
/// per thread instead.
class ExactCounter {
public:
  explicit ExactCounter(SizeSpec spec, CountLimits limits = {});
  ~ExactCounter();
  ExactCounter(ExactCounter&&) noexcept;
  ExactCounter& operator=(ExactCounter&&) noexcept;

  const SizeSpec& spec() const noexcept;
  const CountLimits& limits() const noexcept;

  // Terms with no constraint on free indices.
  BigInt unrestricted(std::uint64_t n);

  // m-open terms: closed after prefixing m abstractions.
  BigInt m_open(std::uint64_t m, std::uint64_t n);

  // m-open terms whose successor strings are all shorter than h (h >= 1).
  BigInt bounded_successors(std::uint64_t m, std::uint64_t h, std::uint64_t n);

  // m-open terms with exactly q abstractions.
  BigInt q_abstractions(std::uint64_t m, std::uint64_t q, std::uint64_t n);

  // m-open terms with at most q abstractions.
  BigInt at_most_q(std::uint64_t m, std::uint64_t q, std::uint64_t n);

  // m-open terms containing no beta-redex.
  BigInt normal_form(std::uint64_t m, std::uint64_t n);

  // Relaxed family: above level N the leaf constraint is dropped. Level N
  // equals the unrestricted family; requires m <= N.
  BigInt superclass(std::uint64_t N, std::uint64_t m, std::uint64_t n);

  // unrestricted(n) - m_open(m, n)
  BigInt not_m_open(std::uint64_t m, std::uint64_t n);

private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

/// The same recurrences over doubles, with every size-n entry scaled by
/// point^n. Supports large-n asymptotic checks that would overflow or be
/// too slow in exact arithmetic.
class ScaledCounter {
public:
  ScaledCounter(SizeSpec spec, double point, std::uint64_t max_n = 20000);
  ~ScaledCounter();
  ScaledCounter(ScaledCounter&&) noexcept;
  ScaledCounter& operator=(ScaledCounter&&) noexcept;

  const SizeSpec& spec() const noexcept;
  double point() const noexcept;

  double unrestricted(std::uint64_t n);
  double m_open(std::uint64_t m, std::uint64_t n);
  double normal_form(std::uint64_t m, std::uint64_t n);
  double q_abstractions(std::uint64_t m, std::uint64_t q, std::uint64_t n);

private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

struct EnumFilter {
  bool normal_only = false;
  std::optional<std::uint64_t> exact_abstractions;

  static EnumFilter all() { return {}; }
  static EnumFilter normal_form() { return {true, std::nullopt}; }
  static EnumFilter abstractions(std::uint64_t q) { return {false, q}; }
};

/// Yields every m-open term of size exactly n matching the filter, each
/// once, in a deterministic order: the leaf first, then abstraction-headed
/// terms, then applications by ascending left-subterm size.
void enumerate_terms(const SizeSpec& spec, std::uint64_t m, std::uint64_t n,
                     const EnumFilter& filter,
                     const std::function<void(const Term&)>& sink,
                     std::uint64_t cap = CountLimits{}.max_enumeration_n);

std::vector<Term> enumerate_terms(const SizeSpec& spec, std::uint64_t m,
                                  std::uint64_t n, const EnumFilter& filter = {},
                                  std::uint64_t cap = CountLimits{}.max_enumeration_n);

// ---------------------------------------------------------------------------
// On-disk count cache. Format:
//   spec=a,b,c,d family=<name> params=<...> version=1
//   <m> <n> <decimal value>
// Read-back is bit-exact and validated against the expected header.

struct CountCacheEntry {
  std::uint64_t m;
  std::uint64_t n;
  BigInt value;
};

void write_count_cache(std::ostream& out, const SizeSpec& spec,
                       std::string_view family, std::string_view params,
                       std::span<const CountCacheEntry> entries);

std::vector<CountCacheEntry> read_count_cache(std::istream& in, const SizeSpec& spec,
                                              std::string_view family,
                                              std::string_view params);

} // namespace lterm
