#include "lterm/size_model.hpp"

#include <numeric>

namespace lterm {

namespace {
constexpr std::int64_t kMaxWeight = 1 << 20; // keeps all size arithmetic in 64 bits
}

SizeSpec SizeSpec::validated(std::int64_t zero, std::int64_t succ,
                             std::int64_t abs, std::int64_t app) {
  const std::int64_t raw[4] = {zero, succ, abs, app};
  for (std::int64_t w : raw) {
    if (w < 0)
      throw ValidationError(ValidationError::Kind::NegativeWeight,
                            "size weights must be nonnegative");
    if (w > kMaxWeight)
      throw ValidationError(ValidationError::Kind::BadArgument,
                            "size weight exceeds supported bound " + std::to_string(kMaxWeight));
  }
  if (zero + app == 0)
    throw ValidationError(ValidationError::Kind::ZeroSum,
                          "zero weight and application weight cannot both be 0");
  if (succ == 0 || abs == 0)
    throw ValidationError(ValidationError::Kind::ZeroSuccessorOrAbstraction,
                          "successor and abstraction weights must be >= 1");
  const std::uint64_t g =
      std::gcd(std::gcd(static_cast<std::uint64_t>(succ), static_cast<std::uint64_t>(abs)),
               static_cast<std::uint64_t>(zero + app));
  if (g != 1)
    throw ValidationError(ValidationError::Kind::GcdViolation,
                          "gcd(successor, abstraction, zero+application) is " +
                              std::to_string(g) + ", must be 1");
  return SizeSpec(static_cast<std::uint32_t>(zero), static_cast<std::uint32_t>(succ),
                  static_cast<std::uint32_t>(abs), static_cast<std::uint32_t>(app));
}

SizeSpec SizeSpec::preset(SizePreset p) {
  switch (p) {
    case SizePreset::Natural:     return SizeSpec(1, 1, 1, 1);
    case SizePreset::LessNatural: return SizeSpec(0, 1, 1, 2);
    case SizePreset::Binary:      return SizeSpec(2, 1, 2, 2);
  }
  throw ValidationError(ValidationError::Kind::UnknownPreset, "unknown preset");
}

std::optional<SizePreset> SizeSpec::preset_by_name(std::string_view name) {
  if (name == "natural") return SizePreset::Natural;
  if (name == "less-natural") return SizePreset::LessNatural;
  if (name == "binary") return SizePreset::Binary;
  return std::nullopt;
}

SizeSpec SizeSpec::preset(std::string_view name) {
  if (auto p = preset_by_name(name)) return preset(*p);
  throw ValidationError(ValidationError::Kind::UnknownPreset,
                        "unknown preset '" + std::string(name) +
                            "' (expected natural, less-natural, or binary)");
}

std::uint64_t SizeSpec::stabilization_level(std::uint64_t n) const noexcept {
  if (n < zero_) return 0;
  return (n - zero_) / succ_ + 1;
}

std::string SizeSpec::to_string() const {
  return std::to_string(zero_) + "," + std::to_string(succ_) + "," +
         std::to_string(abs_) + "," + std::to_string(app_);
}

SizeSpec parse_size_spec(std::string_view text) {
  std::int64_t w[4];
  std::size_t pos = 0;
  for (int i = 0; i < 4; ++i) {
    if (i > 0) {
      if (pos >= text.size() || text[pos] != ',')
        throw ValidationError(ValidationError::Kind::BadArgument,
                              "expected four comma-separated weights, got '" +
                                  std::string(text) + "'");
      ++pos;
    }
    std::size_t start = pos;
    while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') ++pos;
    if (pos == start)
      throw ValidationError(ValidationError::Kind::BadArgument,
                            "expected decimal weight in '" + std::string(text) + "'");
    if (pos - start > 18)
      throw ValidationError(ValidationError::Kind::BadArgument, "weight out of range");
    w[i] = 0;
    for (std::size_t k = start; k < pos; ++k) w[i] = w[i] * 10 + (text[k] - '0');
  }
  if (pos != text.size())
    throw ValidationError(ValidationError::Kind::BadArgument,
                          "trailing characters in size spec '" + std::string(text) + "'");
  return SizeSpec::validated(w[0], w[1], w[2], w[3]);
}

} // namespace lterm
