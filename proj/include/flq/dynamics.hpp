#pragma once

#include <functional>
#include <vector>

#include "flq/types.hpp"

namespace flq {

enum class ModelKind { Unicycle4, Bicycle6 };

inline int state_dim_of(ModelKind kind) {
  return kind == ModelKind::Unicycle4 ? 4 : 6;
}
inline int control_dim_of(ModelKind) { return 2; }

// One player's control-affine model.
//
// Unicycle4: x = (p_x, p_y, theta, v), u = (w, a)
//   p_x' = v cos(theta), p_y' = v sin(theta), theta' = w, v' = a
// Bicycle6: x = (p_x, p_y, theta, v, phi, a), u = (omega, kappa)
//   p_x' = v cos(theta), p_y' = v sin(theta), theta' = (v/L) tan(phi),
//   v' = a, phi' = omega, a' = kappa
struct PlayerDynamics {
  ModelKind kind = ModelKind::Unicycle4;
  double wheelbase = 0.0;  // inter-axle distance L [m], bicycle only

  int state_dim() const { return state_dim_of(kind); }
  int control_dim() const { return control_dim_of(kind); }

  Vec derivative(const Vec& x, const Vec& u) const;
  // Continuous-time d/dx of derivative(x, u). Input matrices are constant
  // for both models so g(x) carries no state dependence.
  Mat state_jacobian(const Vec& x, const Vec& u) const;
  Mat control_matrix() const;  // g, state_dim x 2
};

// Joint dynamics of all players; blocks are decoupled across players and the
// joint state/control vectors are concatenations in player order.
class MultiPlayerDynamics {
 public:
  explicit MultiPlayerDynamics(std::vector<PlayerDynamics> players);

  int num_players() const { return static_cast<int>(players_.size()); }
  int state_dim() const { return state_dim_; }
  int control_dim() const { return control_dim_; }
  int state_offset(int i) const { return state_offsets_[i]; }
  int control_offset(int i) const { return control_offsets_[i]; }
  const PlayerDynamics& player(int i) const { return players_[i]; }
  const std::vector<PlayerDynamics>& players() const { return players_; }

  Vec derivative(const Vec& x, const Vec& u) const;

  // Fixed-step RK4 with the per-step control held constant. Returns steps+1
  // samples at t = 0, dt, ..., steps*dt. Throws DivergenceError on the first
  // non-finite state.
  std::vector<Vec> integrate(const Vec& x0,
                             const std::function<Vec(int)>& control_for_step,
                             double dt, int steps) const;

  // RK4 with the control re-evaluated from the stage state (closed loop in
  // continuous time up to integration error).
  std::vector<Vec> integrate_closed_loop(
      const Vec& x0, const std::function<Vec(double, const Vec&)>& policy,
      double dt, int steps) const;

  // Discrete-time Jacobian linearization about (x, u): A = I + dt * df/dx,
  // B_i = dt * g_i.
  void linearize(const Vec& x, const Vec& u, double dt, Mat& A,
                 std::vector<Mat>& B) const;

  Vec single_rk4_step(const Vec& x, const Vec& u, double dt) const;

 private:
  std::vector<PlayerDynamics> players_;
  std::vector<int> state_offsets_;
  std::vector<int> control_offsets_;
  int state_dim_ = 0;
  int control_dim_ = 0;
};

}  // namespace flq
