#include "accut/state_vector.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

namespace accut {

StateVector::StateVector(std::vector<double> values) : values_(std::move(values)) {
  if (values_.empty()) throw std::invalid_argument("state vector must be nonempty");
  for (double v : values_) {
    if (!std::isfinite(v)) throw std::invalid_argument("state vector entries must be finite");
    norm_inf_ = std::max(norm_inf_, std::fabs(v));
  }
  if (norm_inf_ == 0.0) throw std::invalid_argument("state vector must be nonzero");
  sides_.resize(values_.size());
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (values_[i] == norm_inf_) {
      sides_[i] = 1;
      ++plus_count_;
    } else if (values_[i] == -norm_inf_) {
      sides_[i] = -1;
      ++minus_count_;
    } else {
      sides_[i] = 0;
    }
  }
}

}  // namespace accut
