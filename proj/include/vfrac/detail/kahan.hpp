#pragma once

namespace vfrac::detail {

// Compensated (Kahan) accumulator; works for double and std::complex<double>
// since both have componentwise +/-.
template <typename T>
class KahanSum {
 public:
  void add(T v) {
    T y = v - comp_;
    T t = sum_ + y;
    comp_ = (t - sum_) - y;
    sum_ = t;
  }
  T value() const { return sum_; }

 private:
  T sum_{};
  T comp_{};
};

}  // namespace vfrac::detail
