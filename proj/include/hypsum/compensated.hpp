#pragma once

#include <cmath>

namespace hypsum {

/// Neumaier's variant of Kahan summation: the rounding error of every
/// addition is captured with an error-free TwoSum and folded back in at the
/// end. Unlike plain Kahan it stays correct when the addend exceeds the sum.
class CompensatedSum {
 public:
  CompensatedSum& operator+=(double value) {
    const double t = sum_ + value;
    if (std::fabs(sum_) >= std::fabs(value)) {
      compensation_ += (sum_ - t) + value;
    } else {
      compensation_ += (value - t) + sum_;
    }
    sum_ = t;
    return *this;
  }

  double value() const { return sum_ + compensation_; }

 private:
  double sum_ = 0.0;
  double compensation_ = 0.0;
};

}  // namespace hypsum
