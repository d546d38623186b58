#include "gainrank/gain.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "gainrank/error.hpp"

namespace gainrank {
namespace {

// Leaves values that are already unit to the last few ulps untouched so
// that serialized gains read back bit-identically.
std::complex<double> onto_circle(std::complex<double> z) {
  const double norm2 = std::norm(z);
  if (std::abs(norm2 - 1.0) <= 4.0 * std::numeric_limits<double>::epsilon()) return z;
  return z / std::sqrt(norm2);
}

}  // namespace

UnitGain UnitGain::from_turns(double turns) {
  if (!std::isfinite(turns)) throw Error(ErrorCode::InvalidGain, "angle must be finite");
  double r = turns - std::floor(turns);  // [0, 1]
  const double quarter = std::round(4.0 * r);
  const double rest = r - quarter / 4.0;  // [-1/8, 1/8]
  const double angle = 2.0 * std::numbers::pi * rest;
  const double c = std::cos(angle);
  const double s = std::sin(angle);
  switch (static_cast<int>(quarter) % 4) {
    case 0: return UnitGain(c, s);
    case 1: return UnitGain(-s, c);
    case 2: return UnitGain(-c, -s);
    default: return UnitGain(s, -c);
  }
}

UnitGain UnitGain::from_complex(std::complex<double> z, double accept_tol) {
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
    throw Error(ErrorCode::InvalidGain, "gain must be finite");
  }
  if (std::abs(std::abs(z) - 1.0) > accept_tol) {
    throw Error(ErrorCode::InvalidGain, "gain is not of unit modulus");
  }
  const auto w = onto_circle(z);
  return UnitGain(w.real(), w.imag());
}

UnitGain operator*(UnitGain a, UnitGain b) {
  const auto w = onto_circle(a.value() * b.value());
  return UnitGain(w.real(), w.imag());
}

}  // namespace gainrank
