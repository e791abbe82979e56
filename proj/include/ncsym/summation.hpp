#pragma once

#include <cmath>
#include <complex>
#include <type_traits>

namespace ncsym {

// Neumaier compensated summation; complex values are compensated per component.
template <class T>
class NeumaierSum {
 public:
  void operator+=(T x) { add(x); }
  T value() const { return sum_ + comp_; }

 private:
  static void step(double& s, double& c, double x) {
    const double t = s + x;
    if (std::abs(s) >= std::abs(x))
      c += (s - t) + x;
    else
      c += (x - t) + s;
    s = t;
  }
  void add(T x) {
    if constexpr (std::is_same_v<T, double>) {
      step(sum_, comp_, x);
    } else {
      double sr = sum_.real(), si = sum_.imag(), cr = comp_.real(), ci = comp_.imag();
      step(sr, cr, x.real());
      step(si, ci, x.imag());
      sum_ = {sr, si};
      comp_ = {cr, ci};
    }
  }
  T sum_{};
  T comp_{};
};

}  // namespace ncsym
