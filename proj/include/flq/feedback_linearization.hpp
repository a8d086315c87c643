#pragma once

#include <array>
#include <vector>

#include "flq/dynamics.hpp"
#include "flq/types.hpp"

namespace flq {

// Derivatives of the linearizing control law u(x, z) = W(x) (z - m(x)),
// W = M^{-1}, taken with respect to the "active" model states the law
// actually depends on (unicycle: theta, v; bicycle: theta, v, phi, a).
// Second-derivative slots hold the upper triangle (q <= r).
struct LawDerivs {
  Mat2 W;
  Vec2 m;
  std::array<Mat2, 4> dW;
  std::array<Vec2, 4> dm;
  std::array<std::array<Mat2, 4>, 4> d2W;
  std::array<std::array<Vec2, 4>, 4> d2m;
  int n_active = 0;
  std::array<int, 4> active_x;  // active var -> model state index
};

// x = lambda(xi) together with its Jacobian and per-component Hessians.
struct StateMapDerivs {
  Vec x;               // model state
  Mat J;               // dx/dxi, d x d
  std::vector<Mat> H;  // H[p] = d^2 x_p / dxi^2, d x d
};

// Per-player feedback linearization for the two built-in models. Outputs are
// the positions (p_x, p_y); relative degree is (2,2) for the unicycle and
// (3,3) for the bicycle, so both models are full-state linearizable.
//
// Linearized state layout (one chain per output):
//   unicycle: xi = (p_x, p_x', p_y, p_y')
//   bicycle:  xi = (p_x, p_x', p_x'', p_y, p_y', p_y'')
class PlayerFL {
 public:
  PlayerFL(ModelKind kind, double wheelbase, double v_min, double phi_max);

  ModelKind kind() const { return kind_; }
  int dim() const { return state_dim_of(kind_); }
  int chain_length() const { return kind_ == ModelKind::Unicycle4 ? 2 : 3; }
  double v_min() const { return v_min_; }
  double phi_max() const { return phi_max_; }

  // Positions inside this player's xi block.
  int pos_x_index() const { return 0; }
  int pos_y_index() const { return chain_length(); }

  bool singular(const Vec& x) const;
  // Checks the same guards through the inverse map (speed, recovered phi).
  bool singular_linear(const Vec& xi) const;

  // Inverse decoupling matrix and drift; throws SingularityError.
  Mat2 decoupling_inverse(const Vec& x) const;
  Vec2 drift(const Vec& x) const;
  // u = M^{-1}(x) (z - m(x))
  Vec2 fl_control(const Vec& x, const Vec2& z) const;
  // z = M(x) u + m(x)
  Vec2 aux_from_control(const Vec& x, const Vec2& u) const;

  Vec to_linear_state(const Vec& x) const;
  Vec from_linear_state(const Vec& xi) const;  // throws SingularityError

  void state_map_derivs(const Vec& xi, StateMapDerivs& out) const;
  void law_derivs(const Vec& x, LawDerivs& out) const;

  // Exact discretization of the per-output integrator chains.
  void chain_discretization(double dt, Mat& A, Mat& B) const;

 private:
  ModelKind kind_;
  double wheelbase_;
  double v_min_;
  double phi_max_;
};

// Joint discrete-time linear system in xi coordinates; identical at every
// time step and every solver iteration.
struct LinearSystem {
  Mat A;               // n x n, block diagonal over players
  std::vector<Mat> B;  // per player, n x k_i
};

class MultiPlayerFL {
 public:
  MultiPlayerFL(std::vector<PlayerFL> players);

  int num_players() const { return static_cast<int>(players_.size()); }
  int state_dim() const { return state_dim_; }
  int state_offset(int i) const { return offsets_[i]; }
  const PlayerFL& player(int i) const { return players_[i]; }

  LinearSystem linear_system(double dt) const;

  Vec to_linear_state(const Vec& x) const;
  Vec from_linear_state(const Vec& xi) const;
  bool singular_linear(const Vec& xi) const;

  // Joint u from joint (x, z) and back.
  Vec fl_control(const Vec& x, const Vec& z) const;
  Vec aux_from_control(const Vec& x, const Vec& u) const;

 private:
  std::vector<PlayerFL> players_;
  std::vector<int> offsets_;
  int state_dim_ = 0;
};

}  // namespace flq
