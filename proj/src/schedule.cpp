#include "gibbsgrid/schedule.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace gibbsgrid {

LambdaSchedule LambdaSchedule::constant(double lambda) {
  if (!std::isfinite(lambda)) throw std::invalid_argument("lambda must be finite");
  return {Kind::constant, lambda, 1.0, lambda};
}

LambdaSchedule LambdaSchedule::ramp(double lambda0, double growth, double lambda_max) {
  if (!(std::isfinite(lambda0) && std::isfinite(growth) && std::isfinite(lambda_max)))
    throw std::invalid_argument("ramp parameters must be finite");
  if (!(lambda0 > 0.0)) throw std::invalid_argument("ramp lambda0 must be positive");
  if (!(growth > 1.0)) throw std::invalid_argument("ramp growth must exceed 1");
  if (lambda_max < lambda0) throw std::invalid_argument("ramp lambda_max below lambda0");
  return {Kind::geometric_ramp, lambda0, growth, lambda_max};
}

double LambdaSchedule::at(std::uint64_t t) const {
  if (kind_ == Kind::constant) return lambda0_;
  // Evaluated in log space so huge t saturates at the cap instead of overflowing.
  const double log_value = std::log(lambda0_) + static_cast<double>(t) * std::log(growth_);
  if (log_value >= std::log(lambda_max_)) return lambda_max_;
  return std::min(lambda_max_, std::exp(log_value));
}

} // namespace gibbsgrid
