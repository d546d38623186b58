#include "gainrank/hermitian.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <utility>

#include "gainrank/error.hpp"

namespace gainrank {
namespace {

using cd = std::complex<double>;

const double kAlpha = (1.0 + std::sqrt(17.0)) / 8.0;
constexpr int kMaxSweeps = 30;

void require_hermitian(const HermitianMatrix& m, double tol) {
  const double limit = tol * std::max(m.scale(), 1.0);
  const double defect = m.hermitian_defect();
  if (!(defect <= limit)) {
    throw Error(ErrorCode::NotHermitian,
                "Hermitian defect " + std::to_string(defect) + " exceeds " + std::to_string(limit));
  }
}

double zero_threshold(const HermitianMatrix& m, double tol) {
  return tol * static_cast<double>(m.dim()) * m.scale();
}

// Symmetric permutation of rows and columns i and j.
void swap_symmetric(std::vector<cd>& a, int n, int i, int j) {
  if (i == j) return;
  const auto at = [&](int r, int c) -> cd& {
    return a[static_cast<std::size_t>(r) * static_cast<std::size_t>(n) + static_cast<std::size_t>(c)];
  };
  for (int c = 0; c < n; ++c) std::swap(at(i, c), at(j, c));
  for (int r = 0; r < n; ++r) std::swap(at(r, i), at(r, j));
}

}  // namespace

HermitianMatrix::HermitianMatrix(int n) : n_(n), a_(static_cast<std::size_t>(n) * n) {
  if (n < 0) throw Error(ErrorCode::TooSmall, "negative matrix dimension");
}

HermitianMatrix::HermitianMatrix(int n, std::vector<cd> entries) : n_(n), a_(std::move(entries)) {
  if (n < 0 || a_.size() != static_cast<std::size_t>(n) * static_cast<std::size_t>(n)) {
    throw Error(ErrorCode::InvalidEdge, "matrix entry count does not match dimension");
  }
}

double HermitianMatrix::scale() const noexcept {
  double s = 0.0;
  for (const cd& z : a_) s = std::max(s, std::abs(z));
  return s;
}

double HermitianMatrix::hermitian_defect() const noexcept {
  double d = 0.0;
  for (int i = 0; i < n_; ++i) {
    for (int j = i; j < n_; ++j) d = std::max(d, std::abs((*this)(i, j) - std::conj((*this)(j, i))));
  }
  return d;
}

std::string to_string(const InertiaTriple& t) {
  return "(" + std::to_string(t.pos) + ", " + std::to_string(t.neg) + ", " +
         std::to_string(t.zero) + ")";
}

HermitianMatrix adjacency(const GainGraph& g) {
  HermitianMatrix m(g.order());
  for (const GainEdge& e : g.edges()) {
    m(e.u - 1, e.v - 1) = e.gain.value();
    m(e.v - 1, e.u - 1) = e.gain.conj().value();
  }
  return m;
}

HermitianMatrix congruence_transform(const HermitianMatrix& m, std::span<const cd> s) {
  const int n = m.dim();
  if (s.size() != static_cast<std::size_t>(n) * static_cast<std::size_t>(n)) {
    throw Error(ErrorCode::InvalidEdge, "transform size does not match matrix dimension");
  }
  const auto S = [&](int i, int j) { return s[static_cast<std::size_t>(i) * n + j]; };
  std::vector<cd> sm(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      cd acc = 0.0;
      for (int k = 0; k < n; ++k) acc += S(i, k) * m(k, j);
      sm[static_cast<std::size_t>(i) * n + j] = acc;
    }
  }
  HermitianMatrix out(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      cd acc = 0.0;
      for (int k = 0; k < n; ++k) acc += sm[static_cast<std::size_t>(i) * n + k] * std::conj(S(j, k));
      out(i, j) = acc;
    }
  }
  for (int i = 0; i < n; ++i) {
    out(i, i) = out(i, i).real();
    for (int j = i + 1; j < n; ++j) {
      const cd avg = 0.5 * (out(i, j) + std::conj(out(j, i)));
      out(i, j) = avg;
      out(j, i) = std::conj(avg);
    }
  }
  return out;
}

InertiaTriple inertia_congruence(const HermitianMatrix& m, double tol) {
  require_hermitian(m, tol);
  const int n = m.dim();
  const double thr = zero_threshold(m, tol);
  std::vector<cd> a(m.entries().begin(), m.entries().end());
  const auto at = [&](int r, int c) -> cd& {
    return a[static_cast<std::size_t>(r) * static_cast<std::size_t>(n) + static_cast<std::size_t>(c)];
  };

  InertiaTriple out;
  int k = 0;
  while (k < n) {
    int diag_arg = k;
    double diag_max = 0.0;
    int off_r = k, off_c = k;
    double off_max = 0.0;
    for (int i = k; i < n; ++i) {
      const double d = std::abs(at(i, i).real());
      if (d > diag_max) {
        diag_max = d;
        diag_arg = i;
      }
      for (int j = i + 1; j < n; ++j) {
        const double o = std::abs(at(i, j));
        if (o > off_max) {
          off_max = o;
          off_r = i;
          off_c = j;
        }
      }
    }
    if (std::max(diag_max, off_max) <= thr) {
      out.zero += n - k;
      break;
    }

    if (diag_max >= kAlpha * off_max) {
      swap_symmetric(a, n, k, diag_arg);
      const double d = at(k, k).real();
      (d > 0 ? out.pos : out.neg) += 1;
      for (int i = k + 1; i < n; ++i) {
        const cd lik = at(i, k) / d;
        if (lik == cd{}) continue;
        for (int j = k + 1; j < n; ++j) at(i, j) -= lik * at(k, j);
      }
      for (int i = k + 1; i < n; ++i) at(i, i) = at(i, i).real();
      k += 1;
      continue;
    }

    // 2x2 pivot: |b|^2 > (alpha * off_max)^2 >= |a c|, so the block is
    // indefinite and contributes one positive and one negative eigenvalue.
    swap_symmetric(a, n, k, off_r);
    swap_symmetric(a, n, k + 1, off_c);
    const double e11 = at(k, k).real();
    const double e22 = at(k + 1, k + 1).real();
    const cd e12 = at(k, k + 1);
    const double det = e11 * e22 - std::norm(e12);
    out.pos += 1;
    out.neg += 1;
    for (int i = k + 2; i < n; ++i) {
      const cd x = at(i, k);
      const cd y = at(i, k + 1);
      // Row i of L = [x y] * E^{-1}.
      const cd l1 = (x * e22 - y * std::conj(e12)) / det;
      const cd l2 = (y * e11 - x * e12) / det;
      for (int j = k + 2; j < n; ++j) at(i, j) -= l1 * at(k, j) + l2 * at(k + 1, j);
    }
    for (int i = k + 2; i < n; ++i) at(i, i) = at(i, i).real();
    k += 2;
  }
  return out;
}

std::vector<double> embedded_eigenvalues(const HermitianMatrix& m, double tol) {
  require_hermitian(m, tol);
  const int n = m.dim();
  const int N = 2 * n;
  std::vector<double> a(static_cast<std::size_t>(N) * N);
  const auto at = [&](int r, int c) -> double& {
    return a[static_cast<std::size_t>(r) * static_cast<std::size_t>(N) + static_cast<std::size_t>(c)];
  };
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const cd z = m(i, j);
      at(i, j) = z.real();
      at(i, j + n) = -z.imag();
      at(i + n, j) = z.imag();
      at(i + n, j + n) = z.real();
    }
  }

  const double target = tol * m.scale();
  const auto off_norm = [&] {
    double s = 0.0;
    for (int i = 0; i < N; ++i) {
      for (int j = i + 1; j < N; ++j) s += 2.0 * at(i, j) * at(i, j);
    }
    return std::sqrt(s);
  };

  int sweep = 0;
  while (off_norm() > target) {
    if (sweep++ == kMaxSweeps) {
      throw Error(ErrorCode::NoConvergence,
                  "Jacobi did not converge in " + std::to_string(kMaxSweeps) + " sweeps");
    }
    for (int p = 0; p < N - 1; ++p) {
      for (int q = p + 1; q < N; ++q) {
        const double apq = at(p, q);
        if (apq == 0.0) continue;
        const double theta = (at(q, q) - at(p, p)) / (2.0 * apq);
        const double t = std::copysign(1.0, theta) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (int r = 0; r < N; ++r) {
          const double arp = at(r, p);
          const double arq = at(r, q);
          at(r, p) = c * arp - s * arq;
          at(r, q) = s * arp + c * arq;
        }
        for (int r = 0; r < N; ++r) {
          const double apr = at(p, r);
          const double aqr = at(q, r);
          at(p, r) = c * apr - s * aqr;
          at(q, r) = s * apr + c * aqr;
        }
        at(p, q) = 0.0;
        at(q, p) = 0.0;
      }
    }
  }

  std::vector<double> eig(static_cast<std::size_t>(N));
  for (int i = 0; i < N; ++i) eig[static_cast<std::size_t>(i)] = at(i, i);
  std::sort(eig.begin(), eig.end());
  return eig;
}

InertiaTriple inertia_eigen(const HermitianMatrix& m, double tol) {
  const double thr = zero_threshold(m, tol);
  InertiaTriple doubled;
  for (double x : embedded_eigenvalues(m, tol)) {
    if (x > thr) {
      ++doubled.pos;
    } else if (x < -thr) {
      ++doubled.neg;
    } else {
      ++doubled.zero;
    }
  }
  if (doubled.pos % 2 || doubled.neg % 2 || doubled.zero % 2) {
    throw Error(ErrorCode::InternalInconsistency,
                "real embedding has odd multiplicities " + to_string(doubled));
  }
  return {doubled.pos / 2, doubled.neg / 2, doubled.zero / 2};
}

InertiaTriple inertia(const GainGraph& g, double tol) {
  return inertia_congruence(adjacency(g), tol);
}

int rank(const GainGraph& g, double tol) {
  const HermitianMatrix m = adjacency(g);
  const InertiaTriple t = inertia_congruence(m, tol);
  assert(g.order() > 24 || t.rank() == inertia_eigen(m, tol).rank());
  return t.rank();
}

}  // namespace gainrank
