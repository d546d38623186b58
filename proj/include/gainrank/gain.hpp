#pragma once

#include <complex>

namespace gainrank {

/// An element of the circle group: a complex number of modulus one.
///
/// Construction renormalizes, so every stored value satisfies
/// |re^2 + im^2 - 1| <= 1e-12. The default value is the identity gain 1.
class UnitGain {
 public:
  constexpr UnitGain() = default;

  /// exp(2*pi*i*turns). Quarter turns are exact (0.25 gives exactly i).
  static UnitGain from_turns(double turns);

  /// Accepts z when ||z| - 1| <= accept_tol and rescales it onto the circle.
  static UnitGain from_complex(std::complex<double> z, double accept_tol = 1e-12);

  double re() const noexcept { return re_; }
  double im() const noexcept { return im_; }
  std::complex<double> value() const noexcept { return {re_, im_}; }

  /// Field-wise negation of the imaginary part; equal to the inverse.
  UnitGain conj() const noexcept { return UnitGain(re_, -im_); }
  UnitGain inverse() const noexcept { return conj(); }

  friend UnitGain operator*(UnitGain a, UnitGain b);
  friend bool operator==(UnitGain a, UnitGain b) noexcept {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }

 private:
  constexpr UnitGain(double re, double im) : re_(re), im_(im) {}

  double re_ = 1.0;
  double im_ = 0.0;
};

/// Realizes exp(2*pi*i*t); throws Error(InvalidGain) for non-finite t.
inline UnitGain make_gain(double angle_turns) { return UnitGain::from_turns(angle_turns); }

}  // namespace gainrank
