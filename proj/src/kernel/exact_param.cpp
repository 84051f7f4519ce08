#include "chf/exact_param.hpp"

#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace chf {

namespace {

constexpr double kMaxTaggable = 9007199254740992.0;  // 2^53

bool integral(double x) { return std::isfinite(x) && x == std::floor(x) && std::fabs(x) <= kMaxTaggable; }

}  // namespace

ExactParam::ExactParam(double value) : value_(value), tag_(std::nullopt) {
  if (!std::isfinite(value)) throw std::invalid_argument("ExactParam: non-finite value");
  if (integral(value)) tag_ = static_cast<std::int64_t>(value);
}

ExactParam ExactParam::integer(std::int64_t k) {
  ExactParam p;
  p.value_ = static_cast<double>(k);
  p.tag_ = k;
  return p;
}

ExactParam ExactParam::shifted(std::int64_t k) const {
  if (tag_) return integer(*tag_ + k);
  return ExactParam(value_ + static_cast<double>(k));
}

std::string ExactParam::to_string() const {
  std::ostringstream os;
  os.precision(17);
  if (tag_)
    os << *tag_ << " (integer)";
  else
    os << value_;
  return os.str();
}

SnapResult snap(double x, double tol) {
  const double r = std::round(x);
  if (std::isfinite(x) && x != r && std::fabs(x - r) <= tol)
    return {ExactParam::integer(static_cast<std::int64_t>(r)), x, true};
  return {ExactParam(x), x, false};
}

std::optional<std::int64_t> integer_difference(const ExactParam& a, const ExactParam& b) {
  if (a.is_integer() && b.is_integer()) return *a.integer_tag() - *b.integer_tag();
  // One side is not an integer; a - b can only be an integer through a
  // rounding accident, so require the subtraction to be error free (TwoSum).
  const double x = a.value();
  const double y = -b.value();
  const double s = x + y;
  const double bp = s - x;
  const double err = (x - (s - bp)) + (y - bp);
  if (err != 0.0 || !integral(s)) return std::nullopt;
  return static_cast<std::int64_t>(s);
}

ExactParam offset_difference(std::int64_t k, const ExactParam& a, const ExactParam& b) {
  if (auto d = integer_difference(a, b)) return ExactParam::integer(k + *d);
  return ExactParam((static_cast<double>(k) + a.value()) - b.value());
}

}  // namespace chf
