#pragma once

#include <functional>
#include <random>

#include "flq/types.hpp"

namespace flq::test {

// Central-difference gradient of a scalar function; the independent oracle
// used against the hand-coded derivatives.
inline Vec fd_gradient(const std::function<double(const Vec&)>& f, const Vec& x,
                       double h = 1e-5) {
  Vec g(x.size());
  Vec xp = x;
  for (int i = 0; i < x.size(); ++i) {
    const double xi = x[i];
    xp[i] = xi + h;
    const double fp = f(xp);
    xp[i] = xi - h;
    const double fm = f(xp);
    xp[i] = xi;
    g[i] = (fp - fm) / (2.0 * h);
  }
  return g;
}

inline Mat fd_hessian(const std::function<double(const Vec&)>& f, const Vec& x,
                      double h = 1e-5) {
  const int n = static_cast<int>(x.size());
  Mat H(n, n);
  Vec xp = x;
  for (int i = 0; i < n; ++i) {
    const double xi = x[i];
    xp[i] = xi + h;
    const Vec gp = fd_gradient(f, xp, h);
    xp[i] = xi - h;
    const Vec gm = fd_gradient(f, xp, h);
    xp[i] = xi;
    H.row(i) = ((gp - gm) / (2.0 * h)).transpose();
  }
  return 0.5 * (H + H.transpose());
}

inline Mat fd_jacobian(const std::function<Vec(const Vec&)>& f, const Vec& x,
                       double h = 1e-6) {
  Vec xp = x;
  xp[0] += h;
  const int m = static_cast<int>(f(x).size());
  xp[0] = x[0];
  Mat J(m, x.size());
  for (int i = 0; i < x.size(); ++i) {
    const double xi = x[i];
    xp[i] = xi + h;
    const Vec fp = f(xp);
    xp[i] = xi - h;
    const Vec fm = f(xp);
    xp[i] = xi;
    J.col(i) = (fp - fm) / (2.0 * h);
  }
  return J;
}

inline double rel_err(double got, double want, double floor_scale = 1.0) {
  return std::abs(got - want) / std::max(std::abs(want), floor_scale);
}

// Relative matrix error with an absolute floor so that near-zero entries are
// compared absolutely.
inline double rel_err(const Mat& got, const Mat& want, double floor_scale = 1.0) {
  const double scale = std::max(want.cwiseAbs().maxCoeff(), floor_scale);
  return (got - want).cwiseAbs().maxCoeff() / scale;
}

}  // namespace flq::test
