#pragma once

#include <cstdint>
#include <optional>
#include <string>

namespace chf {

/// A real parameter carrying an exact integer tag.
///
/// Integer-ness is decided once, at construction, and every classification
/// predicate reads the tag only. Constructing from a double tags the value as
/// an integer exactly when the double is integral; no tolerance is involved.
/// Use `snap` to round near-integers deliberately.
class ExactParam {
 public:
  ExactParam() = default;
  explicit ExactParam(double value);

  static ExactParam integer(std::int64_t k);

  double value() const noexcept { return value_; }
  const std::optional<std::int64_t>& integer_tag() const noexcept { return tag_; }

  bool is_integer() const noexcept { return tag_.has_value(); }
  bool is_nonpositive_integer() const noexcept { return tag_ && *tag_ <= 0; }
  bool is_positive_integer() const noexcept { return tag_ && *tag_ > 0; }
  bool is_integer_at_least(std::int64_t k) const noexcept { return tag_ && *tag_ >= k; }

  /// Exact integer shift; the tag is carried along.
  ExactParam shifted(std::int64_t k) const;

  std::string to_string() const;

  friend bool operator==(const ExactParam&, const ExactParam&) = default;

 private:
  double value_ = 0.0;
  std::optional<std::int64_t> tag_ = 0;
};

struct SnapResult {
  ExactParam param;
  double original = 0.0;
  bool snapped = false;  // value moved onto an integer
};

/// Rounds `x` to the nearest integer when |x - round(x)| <= tol and records it.
SnapResult snap(double x, double tol);

/// a - b as an exact integer, when that relation holds exactly.
///
/// Both tagged: integer arithmetic on the tags. Otherwise the floating
/// difference must be integral and free of rounding error.
std::optional<std::int64_t> integer_difference(const ExactParam& a, const ExactParam& b);

/// k + a - b with the integer tag derived from `integer_difference`.
ExactParam offset_difference(std::int64_t k, const ExactParam& a, const ExactParam& b);

}  // namespace chf
