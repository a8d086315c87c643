#include "flq/dynamics.hpp"

#include <cmath>
#include <stdexcept>

#include "flq/errors.hpp"

namespace flq {

namespace {

void check_dims(const PlayerDynamics& d, const Vec& x, const Vec& u) {
  if (x.size() != d.state_dim() || u.size() != d.control_dim()) {
    throw std::invalid_argument("player dynamics: dimension mismatch");
  }
}

}  // namespace

Vec PlayerDynamics::derivative(const Vec& x, const Vec& u) const {
  check_dims(*this, x, u);
  Vec dx(state_dim());
  if (kind == ModelKind::Unicycle4) {
    const double theta = x[2], v = x[3];
    dx[0] = v * std::cos(theta);
    dx[1] = v * std::sin(theta);
    dx[2] = u[0];
    dx[3] = u[1];
  } else {
    const double theta = x[2], v = x[3], phi = x[4], a = x[5];
    dx[0] = v * std::cos(theta);
    dx[1] = v * std::sin(theta);
    dx[2] = v / wheelbase * std::tan(phi);
    dx[3] = a;
    dx[4] = u[0];
    dx[5] = u[1];
  }
  return dx;
}

Mat PlayerDynamics::state_jacobian(const Vec& x, const Vec& u) const {
  check_dims(*this, x, u);
  Mat J = Mat::Zero(state_dim(), state_dim());
  const double theta = x[2], v = x[3];
  J(0, 2) = -v * std::sin(theta);
  J(0, 3) = std::cos(theta);
  J(1, 2) = v * std::cos(theta);
  J(1, 3) = std::sin(theta);
  if (kind == ModelKind::Bicycle6) {
    const double phi = x[4];
    const double sec2 = 1.0 / (std::cos(phi) * std::cos(phi));
    J(2, 3) = std::tan(phi) / wheelbase;
    J(2, 4) = v / wheelbase * sec2;
    J(3, 5) = 1.0;
  }
  return J;
}

Mat PlayerDynamics::control_matrix() const {
  Mat g = Mat::Zero(state_dim(), 2);
  if (kind == ModelKind::Unicycle4) {
    g(2, 0) = 1.0;  // theta' <- w
    g(3, 1) = 1.0;  // v' <- a
  } else {
    g(4, 0) = 1.0;  // phi' <- omega
    g(5, 1) = 1.0;  // a' <- kappa
  }
  return g;
}

MultiPlayerDynamics::MultiPlayerDynamics(std::vector<PlayerDynamics> players)
    : players_(std::move(players)) {
  if (players_.empty()) throw std::invalid_argument("need at least one player");
  for (const auto& p : players_) {
    if (p.kind == ModelKind::Bicycle6 && p.wheelbase <= 0.0) {
      throw std::invalid_argument("bicycle wheelbase must be positive");
    }
    state_offsets_.push_back(state_dim_);
    control_offsets_.push_back(control_dim_);
    state_dim_ += p.state_dim();
    control_dim_ += p.control_dim();
  }
}

Vec MultiPlayerDynamics::derivative(const Vec& x, const Vec& u) const {
  if (x.size() != state_dim_ || u.size() != control_dim_) {
    throw std::invalid_argument("joint dynamics: dimension mismatch");
  }
  Vec dx(state_dim_);
  for (int i = 0; i < num_players(); ++i) {
    const auto& p = players_[i];
    dx.segment(state_offsets_[i], p.state_dim()) =
        p.derivative(x.segment(state_offsets_[i], p.state_dim()),
                     u.segment(control_offsets_[i], p.control_dim()));
  }
  return dx;
}

Vec MultiPlayerDynamics::single_rk4_step(const Vec& x, const Vec& u,
                                         double dt) const {
  const Vec k1 = derivative(x, u);
  const Vec k2 = derivative(x + 0.5 * dt * k1, u);
  const Vec k3 = derivative(x + 0.5 * dt * k2, u);
  const Vec k4 = derivative(x + dt * k3, u);
  return x + (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
}

std::vector<Vec> MultiPlayerDynamics::integrate(
    const Vec& x0, const std::function<Vec(int)>& control_for_step, double dt,
    int steps) const {
  if (dt <= 0.0) throw std::invalid_argument("integrate: dt must be positive");
  std::vector<Vec> out;
  out.reserve(steps + 1);
  out.push_back(x0);
  for (int k = 0; k < steps; ++k) {
    out.push_back(single_rk4_step(out.back(), control_for_step(k), dt));
    if (!out.back().allFinite()) {
      throw DivergenceError("integrate: non-finite state", k + 1);
    }
  }
  return out;
}

std::vector<Vec> MultiPlayerDynamics::integrate_closed_loop(
    const Vec& x0, const std::function<Vec(double, const Vec&)>& policy,
    double dt, int steps) const {
  if (dt <= 0.0) throw std::invalid_argument("integrate: dt must be positive");
  std::vector<Vec> out;
  out.reserve(steps + 1);
  out.push_back(x0);
  for (int k = 0; k < steps; ++k) {
    const double t = k * dt;
    const Vec& x = out.back();
    const Vec k1 = derivative(x, policy(t, x));
    const Vec x2 = x + 0.5 * dt * k1;
    const Vec k2 = derivative(x2, policy(t + 0.5 * dt, x2));
    const Vec x3 = x + 0.5 * dt * k2;
    const Vec k3 = derivative(x3, policy(t + 0.5 * dt, x3));
    const Vec x4 = x + dt * k3;
    const Vec k4 = derivative(x4, policy(t + dt, x4));
    out.push_back(x + (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4));
    if (!out.back().allFinite()) {
      throw DivergenceError("integrate_closed_loop: non-finite state", k + 1);
    }
  }
  return out;
}

void MultiPlayerDynamics::linearize(const Vec& x, const Vec& u, double dt,
                                    Mat& A, std::vector<Mat>& B) const {
  if (x.size() != state_dim_ || u.size() != control_dim_) {
    throw std::invalid_argument("linearize: dimension mismatch");
  }
  A = Mat::Identity(state_dim_, state_dim_);
  B.assign(num_players(), Mat());
  for (int i = 0; i < num_players(); ++i) {
    const auto& p = players_[i];
    const int so = state_offsets_[i];
    A.block(so, so, p.state_dim(), p.state_dim()) +=
        dt * p.state_jacobian(x.segment(so, p.state_dim()),
                              u.segment(control_offsets_[i], p.control_dim()));
    B[i] = Mat::Zero(state_dim_, p.control_dim());
    B[i].block(so, 0, p.state_dim(), p.control_dim()) =
        dt * p.control_matrix();
  }
}

}  // namespace flq
