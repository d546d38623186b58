#pragma once

// Independent reference computations used only by tests.

#include <algorithm>
#include <cmath>
#include <complex>
#include <set>
#include <vector>

#include "gainrank/graph.hpp"
#include "gainrank/hermitian.hpp"

namespace oracle {

/// Coefficients c_0..c_n of det(xI - A) by Faddeev-LeVerrier.
inline std::vector<double> characteristic_polynomial(const gainrank::HermitianMatrix& a) {
  const int n = a.dim();
  using cd = std::complex<double>;
  std::vector<cd> m(static_cast<std::size_t>(n * n), 0.0);
  std::vector<cd> am(static_cast<std::size_t>(n * n), 0.0);
  std::vector<double> c(static_cast<std::size_t>(n + 1), 0.0);
  c[static_cast<std::size_t>(n)] = 1.0;
  for (int k = 1; k <= n; ++k) {
    // M_k = A M_{k-1} + c_{n-k+1} I
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        cd acc = 0.0;
        for (int t = 0; t < n; ++t) acc += a(i, t) * m[static_cast<std::size_t>(t * n + j)];
        am[static_cast<std::size_t>(i * n + j)] = acc;
      }
    }
    for (int i = 0; i < n; ++i) am[static_cast<std::size_t>(i * n + i)] += c[static_cast<std::size_t>(n - k + 1)];
    m = am;
    cd trace = 0.0;
    for (int i = 0; i < n; ++i) {
      for (int t = 0; t < n; ++t) trace += a(i, t) * m[static_cast<std::size_t>(t * n + i)];
    }
    c[static_cast<std::size_t>(n - k)] = -trace.real() / k;
  }
  return c;
}

inline int sign_changes(const std::vector<double>& coeffs, double eps) {
  int changes = 0;
  int last = 0;
  for (double x : coeffs) {
    const int s = x > eps ? 1 : x < -eps ? -1 : 0;
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

/// Inertia from the characteristic polynomial. Descartes' rule of signs is
/// exact for polynomials with only real roots.
inline gainrank::InertiaTriple inertia_by_sign_rule(const gainrank::HermitianMatrix& a) {
  auto c = characteristic_polynomial(a);
  double scale = 0.0;
  for (double x : c) scale = std::max(scale, std::abs(x));
  const double eps = 1e-9 * scale;
  int zero = 0;
  while (zero < static_cast<int>(c.size()) && std::abs(c[static_cast<std::size_t>(zero)]) <= eps) ++zero;
  std::vector<double> pos(c.begin() + zero, c.end());
  std::vector<double> neg = pos;
  for (std::size_t i = 1; i < neg.size(); i += 2) neg[i] = -neg[i];
  return {sign_changes(pos, eps), sign_changes(neg, eps), zero};
}

/// Every simple cycle as a sorted vertex set, by exhaustive path search.
inline std::set<std::vector<gainrank::Vertex>> cycle_vertex_sets(const gainrank::GainGraph& g) {
  std::set<std::vector<gainrank::Vertex>> out;
  const int n = g.order();
  std::vector<gainrank::Vertex> path;
  std::vector<bool> on(static_cast<std::size_t>(n + 1), false);
  auto dfs = [&](auto&& self, gainrank::Vertex start, gainrank::Vertex cur) -> void {
    for (gainrank::Vertex w : g.neighbors(cur)) {
      if (w == start && path.size() >= 3) {
        auto s = path;
        std::sort(s.begin(), s.end());
        out.insert(s);
      }
      if (w > start && !on[static_cast<std::size_t>(w)]) {
        on[static_cast<std::size_t>(w)] = true;
        path.push_back(w);
        self(self, start, w);
        path.pop_back();
        on[static_cast<std::size_t>(w)] = false;
      }
    }
  };
  for (gainrank::Vertex s = 1; s <= n; ++s) {
    path = {s};
    on[static_cast<std::size_t>(s)] = true;
    dfs(dfs, s, s);
    on[static_cast<std::size_t>(s)] = false;
  }
  return out;
}

}  // namespace oracle
