#ifndef ACCUT_STATE_VECTOR_HPP
#define ACCUT_STATE_VECTOR_HPP

#include <cstdint>
#include <vector>

namespace accut {

// Continuous relaxation iterate. Caches ||x||_inf and the side classification
// of every coordinate: +1 at the positive peak (x_i == +||x||_inf), -1 at the
// negative peak, 0 strictly inside. Classification uses exact comparison; the
// solver produces peak values by construction, not by accumulation, so equal
// values compare equal.
class StateVector {
 public:
  // Throws std::invalid_argument if values is empty or identically zero.
  explicit StateVector(std::vector<double> values);

  const std::vector<double>& values() const { return values_; }
  double operator[](int i) const { return values_[i]; }
  int size() const { return static_cast<int>(values_.size()); }

  double norm_inf() const { return norm_inf_; }

  // +1, -1, or 0 per the class of coordinate i.
  int side(int i) const { return sides_[i]; }
  const std::vector<std::int8_t>& sides() const { return sides_; }
  int peak_count() const { return plus_count_ + minus_count_; }
  int interior_count() const { return size() - peak_count(); }

 private:
  std::vector<double> values_;
  std::vector<std::int8_t> sides_;
  double norm_inf_ = 0.0;
  int plus_count_ = 0;
  int minus_count_ = 0;
};

}  // namespace accut

#endif
