#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "lterm/errors.hpp"

namespace lterm {

enum class SizePreset { Natural, LessNatural, Binary };

/// Additive per-constructor size weights (zero, successor, abstraction,
/// application). Validated on construction:
///   - all weights nonnegative and machine-word bounded,
///   - zero + application >= 1,
///   - successor >= 1 and abstraction >= 1,
///   - gcd(successor, abstraction, zero + application) = 1.
/// Immutable value type; freely shareable between threads.
class SizeSpec {
public:
  static SizeSpec validated(std::int64_t zero, std::int64_t succ,
                            std::int64_t abs, std::int64_t app);
  static SizeSpec preset(SizePreset p);
  static SizeSpec preset(std::string_view name);
  static std::optional<SizePreset> preset_by_name(std::string_view name);

  std::uint32_t zero_weight() const noexcept { return zero_; }
  std::uint32_t succ_weight() const noexcept { return succ_; }
  std::uint32_t abs_weight() const noexcept { return abs_; }
  std::uint32_t app_weight() const noexcept { return app_; }

  // Smallest m such that zero + succ*m > n. At and above this level the
  // per-level index bound is vacuous for terms of size n, so level counts
  // coincide with the unrestricted ones.
  std::uint64_t stabilization_level(std::uint64_t n) const noexcept;

  std::string to_string() const; // "zero,succ,abs,app" in decimal

  bool operator==(const SizeSpec&) const noexcept = default;

private:
  SizeSpec(std::uint32_t zero, std::uint32_t succ, std::uint32_t abs, std::uint32_t app)
      : zero_(zero), succ_(succ), abs_(abs), app_(app) {}

  std::uint32_t zero_;
  std::uint32_t succ_;
  std::uint32_t abs_;
  std::uint32_t app_;
};

// Parses "a,b,c,d" (decimal, comma-separated) and validates.
SizeSpec parse_size_spec(std::string_view text);

} // namespace lterm
