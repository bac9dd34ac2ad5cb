#pragma once

#include <cstdint>

namespace gibbsgrid {

/// Inverse-temperature schedule lambda(t) over iteration index t >= 0.
///
///   constant:        lambda(t) = lambda0
///   geometric ramp:  lambda(t) = min(lambda_max, lambda0 * growth^t)
class LambdaSchedule {
public:
  enum class Kind { constant, geometric_ramp };

  static LambdaSchedule constant(double lambda);
  /// Requires 0 < lambda0 <= lambda_max and growth > 1.
  static LambdaSchedule ramp(double lambda0, double growth, double lambda_max);

  Kind kind() const { return kind_; }
  double lambda0() const { return lambda0_; }
  double growth() const { return growth_; }
  double lambda_max() const { return lambda_max_; }

  double at(std::uint64_t t) const;

  bool operator==(const LambdaSchedule&) const = default;

private:
  LambdaSchedule(Kind kind, double lambda0, double growth, double lambda_max)
      : kind_(kind), lambda0_(lambda0), growth_(growth), lambda_max_(lambda_max) {}

  Kind kind_;
  double lambda0_;
  double growth_;
  double lambda_max_;
};

inline double lambda_at(const LambdaSchedule& schedule, std::uint64_t t) { return schedule.at(t); }

} // namespace gibbsgrid
