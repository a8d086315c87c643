#include "flq/feedback_linearization.hpp"

#include <cmath>
#include <stdexcept>

#include "flq/errors.hpp"

namespace flq {

namespace {

// Inverse state conversion derivatives, unicycle. Variables (vx, vy) are the
// position derivatives inside xi; upper triangles filled.
struct UniLambdaDerivs {
  double d_th[2], d_v[2];
  double h_th[2][2], h_v[2][2];
};

void unicycle_lambda_derivs(double vx, double vy, UniLambdaDerivs& out) {
  const double x0 = vx * vx;
  const double x1 = vy * vy;
  const double x2 = x0 + x1;
  const double x3 = 1.0 / x2;
  const double x4 = vx * vy;
  const double x5 = 2 * x4 / (x2 * x2);
  const double x6 = x1 * x3;
  const double x7 = 1.0 / std::sqrt(x2);
  out.d_th[0] = -vy * x3;
  out.d_th[1] = vx * x3;
  out.h_th[0][0] = x5;
  out.h_th[0][1] = x3 * (2 * x6 - 1);
  out.h_th[1][1] = -x5;
  out.d_v[0] = vx * x7;
  out.d_v[1] = vy * x7;
  out.h_v[0][0] = -x7 * (x0 * x3 - 1);
  out.h_v[0][1] = -x4 / std::pow(x2, 1.5);
  out.h_v[1][1] = -x7 * (x6 - 1);
}

// Bicycle analogue over (vx, ax, vy, ay); see the model comment in the
// header for the xi layout. Expressions derived symbolically from
//   theta = atan2(vy, vx), v = |(vx, vy)|,
//   a = (vx ax + vy ay) / v, phi = atan(L (vx ay - vy ax) / v^3).
struct BiLambdaDerivs {
  double d_th[4], d_v[4], d_a[4], d_phi[4];
  double h_th[4][4], h_v[4][4], h_a[4][4], h_phi[4][4];
};

void bicycle_lambda_derivs(double vx, double ax, double vy, double ay,
                           double L, BiLambdaDerivs& out) {
  const double x0 = vx * vx;
  const double x1 = vy * vy;
  const double x2 = x0 + x1;
  const double x3 = 1.0 / x2;
  const double x4 = vy * x3;
  const double x5 = vx * x3;
  const double x6 = vx * vy;
  const double x7 = 2 / (x2 * x2);
  const double x8 = x6 * x7;
  const double x9 = x1 * x3;
  const double x10 = 1.0 / std::sqrt(x2);
  const double x11 = vx * x10;
  const double x12 = vy * x10;
  const double x13 = x0 * x3;
  const double x14 = -x10 * (x13 - 1);
  const double x15 = std::pow(x2, -1.5);
  const double x16 = -x15 * x6;
  const double x17 = -x10 * (x9 - 1);
  const double x18 = ax * vx;
  const double x19 = ay * vy;
  const double x20 = x18 + x19;
  const double x21 = x20 * x4;
  const double x22 = 3 * x13;
  const double x23 = ax * vy;
  const double x24 = ay * vx;
  const double x25 = 3 * vx;
  const double x26 = 3 * x9 - 1;
  const double x27 = x23 - x24;
  const double x28 = 3 * x27;
  const double x29 = ay + x28 * x5;
  const double x30 = L * L;
  const double x31 = x30 / std::pow(x2, 3);
  const double x32 = x27 * x27 * x31 + 1;
  const double x33 = 1.0 / x32;
  const double x34 = L * x33;
  const double x35 = x15 * x34;
  const double x36 = ax - x28 * x4;
  const double x37 = 15 * x27;
  const double x38 = x27 * x33;
  const double x39 = x30 * x38 * x7;
  const double x40 = x34 / std::pow(x2, 2.5);
  const double x41 = x29 * x39;
  const double x42 = 2 * x31 * x38;
  const double x43 =
      2 * x30 * L * x27 / (std::pow(x2, 4.5) * (x32 * x32));
  out.d_th[0] = -x4;
  out.d_th[1] = 0;
  out.d_th[2] = x5;
  out.d_th[3] = 0;
  out.h_th[0][0] = x8;
  out.h_th[0][1] = 0;
  out.h_th[0][2] = x3 * (2 * x9 - 1);
  out.h_th[0][3] = 0;
  out.h_th[1][1] = 0;
  out.h_th[1][2] = 0;
  out.h_th[1][3] = 0;
  out.h_th[2][2] = -x8;
  out.h_th[2][3] = 0;
  out.h_th[3][3] = 0;
  out.d_v[0] = x11;
  out.d_v[1] = 0;
  out.d_v[2] = x12;
  out.d_v[3] = 0;
  out.h_v[0][0] = x14;
  out.h_v[0][1] = 0;
  out.h_v[0][2] = x16;
  out.h_v[0][3] = 0;
  out.h_v[1][1] = 0;
  out.h_v[1][2] = 0;
  out.h_v[1][3] = 0;
  out.h_v[2][2] = x17;
  out.h_v[2][3] = 0;
  out.h_v[3][3] = 0;
  out.d_a[0] = x10 * (ax - x20 * x5);
  out.d_a[1] = x11;
  out.d_a[2] = x10 * (ay - x21);
  out.d_a[3] = x12;
  out.h_a[0][0] = -x15 * (2 * x18 - x20 * (x22 - 1));
  out.h_a[0][1] = x14;
  out.h_a[0][2] = -x15 * (-x21 * x25 + x23 + x24);
  out.h_a[0][3] = x16;
  out.h_a[1][1] = 0;
  out.h_a[1][2] = x16;
  out.h_a[1][3] = 0;
  out.h_a[2][2] = -x15 * (2 * x19 - x20 * x26);
  out.h_a[2][3] = x17;
  out.h_a[3][3] = 0;
  out.d_phi[0] = x29 * x35;
  out.d_phi[1] = -vy * x35;
  out.d_phi[2] = -x35 * x36;
  out.d_phi[3] = vx * x35;
  out.h_phi[0][0] = x40 * (-x13 * x37 + 3 * x23 - 9 * x24 + x29 * x29 * x39);
  out.h_phi[0][1] = -vy * x40 * (-x25 + x41);
  out.h_phi[0][2] = -x40 * (vx * x37 * x4 - 3 * x18 + 3 * x19 + x36 * x41);
  out.h_phi[0][3] = x35 * (vx * x29 * x42 - x22 + 1);
  out.h_phi[1][1] = x1 * x43;
  out.h_phi[1][2] = x35 * (vy * x36 * x42 + x26);
  out.h_phi[1][3] = -x43 * x6;
  out.h_phi[2][2] = x40 * (9 * x23 - 3 * x24 + x36 * x36 * x39 - x37 * x9);
  out.h_phi[2][3] = -vx * x40 * (3 * vy + x36 * x39);
  out.h_phi[3][3] = x0 * x43;
}

void zero_law(LawDerivs& out, int n_active) {
  out.W.setZero();
  out.m.setZero();
  out.n_active = n_active;
  for (int q = 0; q < 4; ++q) {
    out.dW[q].setZero();
    out.dm[q].setZero();
    for (int r = 0; r < 4; ++r) {
      out.d2W[q][r].setZero();
      out.d2m[q][r].setZero();
    }
  }
}

// Control-law derivatives wrt (theta, v), unicycle; m(x) = 0 identically.
void unicycle_law_derivs(double theta, double v, LawDerivs& out) {
  zero_law(out, 2);
  out.active_x = {2, 3, -1, -1};
  const double x0 = 1.0 / v;
  const double x1 = std::sin(theta);
  const double x2 = x0 * x1;
  const double x3 = -x2;
  const double x4 = std::cos(theta);
  const double x5 = x0 * x4;
  const double x6 = -x5;
  const double x7 = -x1;
  const double x8 = 1.0 / (v * v);
  const double x9 = x1 * x8;
  const double x10 = x4 * x8;
  const double x11 = 2 / (v * v * v);
  out.W(0, 0) = x3;
  out.W(0, 1) = x5;
  out.W(1, 0) = x4;
  out.W(1, 1) = x1;
  out.dW[0](0, 0) = x6;
  out.dW[0](0, 1) = x3;
  out.dW[0](1, 0) = x7;
  out.dW[0](1, 1) = x4;
  out.dW[1](0, 0) = x9;
  out.dW[1](0, 1) = -x10;
  out.d2W[0][0](0, 0) = x2;
  out.d2W[0][0](0, 1) = x6;
  out.d2W[0][0](1, 0) = -x4;
  out.d2W[0][0](1, 1) = x7;
  out.d2W[0][1](0, 0) = x10;
  out.d2W[0][1](0, 1) = x9;
  out.d2W[1][1](0, 0) = -x1 * x11;
  out.d2W[1][1](0, 1) = x11 * x4;
}

// Control-law derivatives wrt (theta, v, phi, a), bicycle. Derived
// symbolically from
//   W = [[-L cos^2(phi) sin(theta)/v^2, L cos^2(phi) cos(theta)/v^2],
//        [cos(theta), sin(theta)]]
//   m = (-3 v a tan(phi) sin(theta)/L - v^3 tan^2(phi) cos(theta)/L^2,
//         3 v a tan(phi) cos(theta)/L - v^3 tan^2(phi) sin(theta)/L^2)
void bicycle_law_derivs(double theta, double v, double phi, double a, double L,
                        LawDerivs& out) {
  zero_law(out, 4);
  out.active_x = {2, 3, 4, 5};
  const double x0 = std::sin(theta);
  const double x1 = v * v;
  const double x2 = 1.0 / x1;
  const double x3 = std::cos(phi);
  const double x4 = x3 * x3;
  const double x5 = L * x4;
  const double x6 = x2 * x5;
  const double x7 = x0 * x6;
  const double x8 = -x7;
  const double x9 = std::cos(theta);
  const double x10 = x6 * x9;
  const double x11 = a * x0;
  const double x12 = 3 * x11;
  const double x13 = 1.0 / L;
  const double x14 = std::tan(phi);
  const double x15 = x13 * x14;
  const double x16 = x1 * x15;
  const double x17 = x16 * x9;
  const double x18 = v * x15;
  const double x19 = x18 * (x12 + x17);
  const double x20 = -x19;
  const double x21 = a * x9;
  const double x22 = 3 * x21;
  const double x23 = x0 * x16;
  const double x24 = -x23;
  const double x25 = x22 + x24;
  const double x26 = x18 * x25;
  const double x27 = -x10;
  const double x28 = -x0;
  const double x29 = x0 * x5;
  const double x30 = 1.0 / (v * v * v);
  const double x31 = 2 * x30;
  const double x32 = x29 * x31;
  const double x33 = x5 * x9;
  const double x34 = x31 * x33;
  const double x35 = 3 * x15;
  const double x36 = -x35 * (x11 + x17);
  const double x37 = x35 * (x21 + x24);
  const double x38 = L * x0;
  const double x39 = 2 * x2;
  const double x40 = std::sin(phi);
  const double x41 = x3 * x40;
  const double x42 = x39 * x41;
  const double x43 = x38 * x42;
  const double x44 = L * x9;
  const double x45 = x42 * x44;
  const double x46 = 2 * x17;
  const double x47 = x14 * x14;
  const double x48 = x13 * (x47 + 1);
  const double x49 = v * x48;
  const double x50 = -x49 * (x12 + x46);
  const double x51 = -2 * x23;
  const double x52 = x49 * (x22 + x51);
  const double x53 = 3 * x18;
  const double x54 = -x0 * x53;
  const double x55 = x53 * x9;
  const double x56 = 6 / (x1 * x1);
  const double x57 = x47 * x9;
  const double x58 = 6 * v / (L * L);
  const double x59 = x0 * x47;
  const double x60 = 4 * x30 * x41;
  const double x61 = 3 * x48;
  const double x62 = x39 * (-x4 + x40 * x40);
  const double x63 = x1 * x48;
  const double x64 = 2 * x1 * x13;
  const double x65 = 2 * x49;
  const double x66 = 3 * x49;
  out.W(0, 0) = x8;
  out.W(0, 1) = x10;
  out.W(1, 0) = x9;
  out.W(1, 1) = x0;
  out.m(0) = x20;
  out.m(1) = x26;
  out.dW[0](0, 0) = x27;
  out.dW[0](0, 1) = x8;
  out.dW[0](1, 0) = x28;
  out.dW[0](1, 1) = x9;
  out.dm[0](0) = -x18 * x25;
  out.dm[0](1) = x20;
  out.dW[1](0, 0) = x32;
  out.dW[1](0, 1) = -x34;
  out.dm[1](0) = x36;
  out.dm[1](1) = x37;
  out.dW[2](0, 0) = x43;
  out.dW[2](0, 1) = -x45;
  out.dm[2](0) = x50;
  out.dm[2](1) = x52;
  out.dm[3](0) = x54;
  out.dm[3](1) = x55;
  out.d2W[0][0](0, 0) = x7;
  out.d2W[0][0](0, 1) = x27;
  out.d2W[0][0](1, 0) = -x9;
  out.d2W[0][0](1, 1) = x28;
  out.d2m[0][0](0) = x19;
  out.d2m[0][0](1) = -x26;
  out.d2W[0][1](0, 0) = x34;
  out.d2W[0][1](0, 1) = x32;
  out.d2m[0][1](0) = -x37;
  out.d2m[0][1](1) = x36;
  out.d2W[0][2](0, 0) = x45;
  out.d2W[0][2](0, 1) = x43;
  out.d2m[0][2](0) = -x52;
  out.d2m[0][2](1) = x50;
  out.d2m[0][3](0) = -x55;
  out.d2m[0][3](1) = x54;
  out.d2W[1][1](0, 0) = -x29 * x56;
  out.d2W[1][1](0, 1) = x33 * x56;
  out.d2m[1][1](0) = -x57 * x58;
  out.d2m[1][1](1) = -x58 * x59;
  out.d2W[1][2](0, 0) = -x38 * x60;
  out.d2W[1][2](0, 1) = x44 * x60;
  out.d2m[1][2](0) = -x61 * (x11 + x46);
  out.d2m[1][2](1) = x61 * (x21 + x51);
  out.d2m[1][3](0) = -x0 * x35;
  out.d2m[1][3](1) = x35 * x9;
  out.d2W[2][2](0, 0) = -x38 * x62;
  out.d2W[2][2](0, 1) = x44 * x62;
  out.d2m[2][2](0) = -x65 * (x12 * x14 + x57 * x64 + x63 * x9);
  out.d2m[2][2](1) = -x65 * (x0 * x63 - x14 * x22 + x59 * x64);
  out.d2m[2][3](0) = -x0 * x66;
  out.d2m[2][3](1) = x66 * x9;
}

}  // namespace

PlayerFL::PlayerFL(ModelKind kind, double wheelbase, double v_min,
                   double phi_max)
    : kind_(kind), wheelbase_(wheelbase), v_min_(v_min), phi_max_(phi_max) {
  if (v_min <= 0.0) throw std::invalid_argument("v_min must be positive");
  if (kind == ModelKind::Bicycle6) {
    if (wheelbase <= 0.0) throw std::invalid_argument("wheelbase must be positive");
    if (phi_max >= M_PI / 2) throw std::invalid_argument("phi_max must be < pi/2");
  }
}

bool PlayerFL::singular(const Vec& x) const {
  if (x[3] < v_min_) return true;
  if (kind_ == ModelKind::Bicycle6 && std::abs(x[4]) > phi_max_) return true;
  return false;
}

bool PlayerFL::singular_linear(const Vec& xi) const {
  const int r = chain_length();
  const double vx = xi[1], vy = xi[r + 1];
  const double speed = std::hypot(vx, vy);
  if (speed < v_min_) return true;
  if (kind_ == ModelKind::Bicycle6) {
    const double curl = vx * xi[r + 2] - vy * xi[2];
    const double phi = std::atan(wheelbase_ * curl / (speed * speed * speed));
    if (std::abs(phi) > phi_max_) return true;
  }
  return false;
}

Mat2 PlayerFL::decoupling_inverse(const Vec& x) const {
  if (singular(x)) throw SingularityError("decoupling matrix singular", x);
  const double theta = x[2], v = x[3];
  Mat2 W;
  if (kind_ == ModelKind::Unicycle4) {
    W << -std::sin(theta) / v, std::cos(theta) / v,  //
        std::cos(theta), std::sin(theta);
  } else {
    const double c2 = std::cos(x[4]) * std::cos(x[4]);
    const double s = wheelbase_ * c2 / (v * v);
    W << -s * std::sin(theta), s * std::cos(theta),  //
        std::cos(theta), std::sin(theta);
  }
  return W;
}

Vec2 PlayerFL::drift(const Vec& x) const {
  if (kind_ == ModelKind::Unicycle4) return Vec2::Zero();
  const double theta = x[2], v = x[3], phi = x[4], a = x[5];
  const double L = wheelbase_;
  const double tph = std::tan(phi);
  const double c1 = 3.0 * v * a * tph / L;
  const double c2 = v * v * v * tph * tph / (L * L);
  return Vec2(-c1 * std::sin(theta) - c2 * std::cos(theta),
              c1 * std::cos(theta) - c2 * std::sin(theta));
}

Vec2 PlayerFL::fl_control(const Vec& x, const Vec2& z) const {
  return decoupling_inverse(x) * (z - drift(x));
}

Vec2 PlayerFL::aux_from_control(const Vec& x, const Vec2& u) const {
  const double theta = x[2], v = x[3];
  Mat2 M;
  if (kind_ == ModelKind::Unicycle4) {
    M << -v * std::sin(theta), std::cos(theta),  //
        v * std::cos(theta), std::sin(theta);
  } else {
    const double s = v * v / (wheelbase_ * std::cos(x[4]) * std::cos(x[4]));
    M << -s * std::sin(theta), std::cos(theta),  //
        s * std::cos(theta), std::sin(theta);
  }
  return M * u + drift(x);
}

Vec PlayerFL::to_linear_state(const Vec& x) const {
  const double theta = x[2], v = x[3];
  Vec xi(dim());
  if (kind_ == ModelKind::Unicycle4) {
    xi << x[0], v * std::cos(theta), x[1], v * std::sin(theta);
  } else {
    const double phi = x[4], a = x[5];
    const double cen = v * v / wheelbase_ * std::tan(phi);  // centripetal accel
    xi << x[0], v * std::cos(theta), a * std::cos(theta) - cen * std::sin(theta),
        x[1], v * std::sin(theta), a * std::sin(theta) + cen * std::cos(theta);
  }
  return xi;
}

Vec PlayerFL::from_linear_state(const Vec& xi) const {
  const int r = chain_length();
  const double vx = xi[1], vy = xi[r + 1];
  const double speed = std::hypot(vx, vy);
  if (speed < v_min_) {
    throw SingularityError("state conversion below minimum speed", xi);
  }
  Vec x(dim());
  if (kind_ == ModelKind::Unicycle4) {
    x << xi[0], xi[2], std::atan2(vy, vx), speed;
  } else {
    const double ax = xi[2], ay = xi[5];
    const double accel = (vx * ax + vy * ay) / speed;
    const double curl = vx * ay - vy * ax;
    const double phi = std::atan(wheelbase_ * curl / (speed * speed * speed));
    x << xi[0], xi[3], std::atan2(vy, vx), speed, phi, accel;
  }
  return x;
}

void PlayerFL::state_map_derivs(const Vec& xi, StateMapDerivs& out) const {
  const int d = dim();
  out.x = from_linear_state(xi);
  out.J = Mat::Zero(d, d);
  out.H.assign(d, Mat::Zero(d, d));
  if (kind_ == ModelKind::Unicycle4) {
    // xi = (px, vx, py, vy); x = (px, py, theta, v)
    UniLambdaDerivs ld;
    unicycle_lambda_derivs(xi[1], xi[3], ld);
    out.J(0, 0) = 1.0;
    out.J(1, 2) = 1.0;
    const int vars[2] = {1, 3};
    for (int q = 0; q < 2; ++q) {
      out.J(2, vars[q]) = ld.d_th[q];
      out.J(3, vars[q]) = ld.d_v[q];
      for (int r = q; r < 2; ++r) {
        out.H[2](vars[q], vars[r]) = out.H[2](vars[r], vars[q]) = ld.h_th[q][r];
        out.H[3](vars[q], vars[r]) = out.H[3](vars[r], vars[q]) = ld.h_v[q][r];
      }
    }
  } else {
    // xi = (px, vx, ax, py, vy, ay); x = (px, py, theta, v, phi, a)
    BiLambdaDerivs ld;
    bicycle_lambda_derivs(xi[1], xi[2], xi[4], xi[5], wheelbase_, ld);
    out.J(0, 0) = 1.0;
    out.J(1, 3) = 1.0;
    const int vars[4] = {1, 2, 4, 5};  // (vx, ax, vy, ay)
    for (int q = 0; q < 4; ++q) {
      out.J(2, vars[q]) = ld.d_th[q];
      out.J(3, vars[q]) = ld.d_v[q];
      out.J(4, vars[q]) = ld.d_phi[q];
      out.J(5, vars[q]) = ld.d_a[q];
      for (int r = q; r < 4; ++r) {
        out.H[2](vars[q], vars[r]) = out.H[2](vars[r], vars[q]) = ld.h_th[q][r];
        out.H[3](vars[q], vars[r]) = out.H[3](vars[r], vars[q]) = ld.h_v[q][r];
        out.H[4](vars[q], vars[r]) = out.H[4](vars[r], vars[q]) =
            ld.h_phi[q][r];
        out.H[5](vars[q], vars[r]) = out.H[5](vars[r], vars[q]) = ld.h_a[q][r];
      }
    }
  }
}

void PlayerFL::law_derivs(const Vec& x, LawDerivs& out) const {
  if (singular(x)) throw SingularityError("law derivatives at singular state", x);
  if (kind_ == ModelKind::Unicycle4) {
    unicycle_law_derivs(x[2], x[3], out);
  } else {
    bicycle_law_derivs(x[2], x[3], x[4], x[5], wheelbase_, out);
  }
  // mirror upper-triangle second derivatives
  for (int q = 0; q < out.n_active; ++q) {
    for (int r = 0; r < q; ++r) {
      out.d2W[q][r] = out.d2W[r][q];
      out.d2m[q][r] = out.d2m[r][q];
    }
  }
}

void PlayerFL::chain_discretization(double dt, Mat& A, Mat& B) const {
  if (dt <= 0.0) throw std::invalid_argument("dt must be positive");
  const int r = chain_length();
  const int d = dim();
  Mat Ac = Mat::Zero(r, r);
  Vec Bc(r);
  for (int i = 0; i < r; ++i) {
    double fact = 1.0;
    for (int j = i; j < r; ++j) {
      fact *= (j == i) ? 1.0 : (j - i);
      Ac(i, j) = std::pow(dt, j - i) / fact;
    }
    // row i of the input column: dt^(r-i) / (r-i)!
    double f2 = 1.0;
    for (int k = 2; k <= r - i; ++k) f2 *= k;
    Bc[i] = std::pow(dt, r - i) / f2;
  }
  A = Mat::Zero(d, d);
  B = Mat::Zero(d, 2);
  A.block(0, 0, r, r) = Ac;
  A.block(r, r, r, r) = Ac;
  B.block(0, 0, r, 1) = Bc;
  B.block(r, 1, r, 1) = Bc;
}

MultiPlayerFL::MultiPlayerFL(std::vector<PlayerFL> players)
    : players_(std::move(players)) {
  for (const auto& p : players_) {
    offsets_.push_back(state_dim_);
    state_dim_ += p.dim();
  }
}

LinearSystem MultiPlayerFL::linear_system(double dt) const {
  LinearSystem sys;
  sys.A = Mat::Zero(state_dim_, state_dim_);
  sys.B.resize(players_.size());
  for (int i = 0; i < num_players(); ++i) {
    Mat Ai, Bi;
    players_[i].chain_discretization(dt, Ai, Bi);
    const int o = offsets_[i], d = players_[i].dim();
    sys.A.block(o, o, d, d) = Ai;
    sys.B[i] = Mat::Zero(state_dim_, 2);
    sys.B[i].block(o, 0, d, 2) = Bi;
  }
  return sys;
}

Vec MultiPlayerFL::to_linear_state(const Vec& x) const {
  Vec xi(state_dim_);
  for (int i = 0; i < num_players(); ++i) {
    const int o = offsets_[i], d = players_[i].dim();
    xi.segment(o, d) = players_[i].to_linear_state(x.segment(o, d));
  }
  return xi;
}

Vec MultiPlayerFL::from_linear_state(const Vec& xi) const {
  Vec x(state_dim_);
  for (int i = 0; i < num_players(); ++i) {
    const int o = offsets_[i], d = players_[i].dim();
    x.segment(o, d) = players_[i].from_linear_state(xi.segment(o, d));
  }
  return x;
}

bool MultiPlayerFL::singular_linear(const Vec& xi) const {
  for (int i = 0; i < num_players(); ++i) {
    if (players_[i].singular_linear(
            xi.segment(offsets_[i], players_[i].dim()))) {
      return true;
    }
  }
  return false;
}

Vec MultiPlayerFL::fl_control(const Vec& x, const Vec& z) const {
  Vec u(2 * num_players());
  for (int i = 0; i < num_players(); ++i) {
    const int o = offsets_[i], d = players_[i].dim();
    u.segment<2>(2 * i) =
        players_[i].fl_control(x.segment(o, d), z.segment<2>(2 * i));
  }
  return u;
}

Vec MultiPlayerFL::aux_from_control(const Vec& x, const Vec& u) const {
  Vec z(2 * num_players());
  for (int i = 0; i < num_players(); ++i) {
    const int o = offsets_[i], d = players_[i].dim();
    z.segment<2>(2 * i) =
        players_[i].aux_from_control(x.segment(o, d), u.segment<2>(2 * i));
  }
  return z;
}

}  // namespace flq
