#pragma once

#include <complex>
#include <span>
#include <string>
#include <vector>

#include "gainrank/graph.hpp"

namespace gainrank {

inline constexpr double kDefaultTol = 1e-9;

/// Dense n-by-n complex matrix intended to be Hermitian. Indices are
/// 0-based: entry (i, j) belongs to vertices i + 1 and j + 1.
class HermitianMatrix {
 public:
  HermitianMatrix() = default;
  explicit HermitianMatrix(int n);
  /// Row-major entries; Error(InvalidEdge) unless entries.size() == n * n.
  HermitianMatrix(int n, std::vector<std::complex<double>> entries);

  int dim() const noexcept { return n_; }
  std::complex<double>& operator()(int i, int j) { return a_[index(i, j)]; }
  const std::complex<double>& operator()(int i, int j) const { return a_[index(i, j)]; }
  std::span<const std::complex<double>> entries() const noexcept { return a_; }

  /// Largest entry modulus; 0 for the zero matrix.
  double scale() const noexcept;
  /// Largest |a_ij - conj(a_ji)| over all pairs, diagonal included.
  double hermitian_defect() const noexcept;

 private:
  std::size_t index(int i, int j) const noexcept {
    return static_cast<std::size_t>(i) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(j);
  }
  int n_ = 0;
  std::vector<std::complex<double>> a_;
};

struct InertiaTriple {
  int pos = 0;
  int neg = 0;
  int zero = 0;

  int rank() const noexcept { return pos + neg; }
  int order() const noexcept { return pos + neg + zero; }
  friend InertiaTriple operator+(InertiaTriple a, InertiaTriple b) noexcept {
    return {a.pos + b.pos, a.neg + b.neg, a.zero + b.zero};
  }
  friend bool operator==(const InertiaTriple&, const InertiaTriple&) = default;
};

std::string to_string(const InertiaTriple& t);

HermitianMatrix adjacency(const GainGraph& g);

/// S * M * S^H for a row-major n-by-n matrix S, re-symmetrized.
HermitianMatrix congruence_transform(const HermitianMatrix& m,
                                     std::span<const std::complex<double>> s);

/// Inertia by symmetric pivoted LDL* (Bunch-Parlett, alpha = (1 + sqrt 17) / 8).
/// Pivots of magnitude at most tol * n * scale count as zero; once the whole
/// trailing block is that small its order is added to the nullity.
InertiaTriple inertia_congruence(const HermitianMatrix& m, double tol = kDefaultTol);

/// Eigenvalues, ascending, of the real symmetric 2n-by-2n embedding
/// [[Re, -Im], [Im, Re]] by cyclic Jacobi. Each eigenvalue of m appears
/// twice.
std::vector<double> embedded_eigenvalues(const HermitianMatrix& m, double tol = kDefaultTol);

/// Inertia read off the eigenvalues of the real embedding, zero threshold
/// tol * n * scale.
InertiaTriple inertia_eigen(const HermitianMatrix& m, double tol = kDefaultTol);

InertiaTriple inertia(const GainGraph& g, double tol = kDefaultTol);
int rank(const GainGraph& g, double tol = kDefaultTol);

}  // namespace gainrank
