#pragma once

// Independent spectral classification of Coxeter label matrices, used only by
// tests as the oracle against the table-driven recognizer.

#include <Eigen/Dense>
#include <cmath>
#include <vector>

#include "rigiditykit/coxeter.hpp"

namespace rigiditykit::testing {

inline constexpr double kSpectralTol = 1e-9;

// labels: n*n defining-convention matrix, 0 = infinity, diagonal ignored.
inline Eigen::MatrixXd gram_matrix(int n, const int* labels) {
  Eigen::MatrixXd b(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i == j) {
        b(i, j) = 1.0;
        continue;
      }
      const int m = labels[i * n + j];
      b(i, j) = m == 0 ? -1.0 : -std::cos(M_PI / m);
    }
  }
  return b;
}

inline CoxKind spectral_kind(int n, const int* labels) {
  const Eigen::MatrixXd b = gram_matrix(n, labels);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(b, Eigen::EigenvaluesOnly);
  const auto& ev = solver.eigenvalues();  // ascending
  if (ev(0) > kSpectralTol) return CoxKind::spherical;
  if (std::abs(ev(0)) <= kSpectralTol && (n == 1 || ev(1) > kSpectralTol))
    return CoxKind::affine;
  return CoxKind::other_infinite;
}

inline bool positive_definite(int n, const int* labels) {
  return spectral_kind(n, labels) == CoxKind::spherical;
}

// PSD with a one-dimensional kernel.
inline bool affine_spectrum(int n, const int* labels) {
  return spectral_kind(n, labels) == CoxKind::affine;
}

inline CoxKind spectral_kind(const std::vector<int>& labels, int n) {
  return spectral_kind(n, labels.data());
}

}  // namespace rigiditykit::testing
