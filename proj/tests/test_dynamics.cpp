#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "flq/dynamics.hpp"
#include "flq/errors.hpp"
#include "test_util.hpp"

using namespace flq;

namespace {

MultiPlayerDynamics single_unicycle() {
  return MultiPlayerDynamics({PlayerDynamics{ModelKind::Unicycle4}});
}

MultiPlayerDynamics single_bicycle(double L) {
  return MultiPlayerDynamics({PlayerDynamics{ModelKind::Bicycle6, L}});
}

Vec vec(std::initializer_list<double> v) {
  Vec out(static_cast<int>(v.size()));
  int i = 0;
  for (double x : v) out[i++] = x;
  return out;
}

}  // namespace

TEST_CASE("unicycle derivative") {
  auto dyn = single_unicycle();
  CHECK((dyn.derivative(vec({0, 0, 0, 2}), vec({0, 1})) - vec({2, 0, 0, 1}))
            .norm() == doctest::Approx(0.0));
  CHECK(dyn.derivative(vec({0, 0, 0, 0}), vec({0, 0})).norm() == 0.0);
}

TEST_CASE("bicycle derivative") {
  auto dyn = single_bicycle(1.0);
  const Vec dx = dyn.derivative(vec({0, 0, 0, 1, 0, 0}), vec({0, 0}));
  CHECK((dx - vec({1, 0, 0, 0, 0, 0})).norm() == doctest::Approx(0.0));
}

TEST_CASE("derivative dimension mismatch throws") {
  auto dyn = single_unicycle();
  CHECK_THROWS_AS(dyn.derivative(vec({0, 0, 0}), vec({0, 0})),
                  std::invalid_argument);
}

TEST_CASE("rk4 straight line") {
  auto dyn = single_unicycle();
  auto traj = dyn.integrate(vec({0, 0, 0, 1}), [](int) { return Vec::Zero(2); },
                            0.1, 10);
  REQUIRE(traj.size() == 11);
  CHECK((traj.back() - vec({1, 0, 0, 1})).norm() < 1e-9);
}

TEST_CASE("rk4 constant acceleration") {
  auto dyn = single_unicycle();
  Vec u(2);
  u << 0, 1;
  auto traj = dyn.integrate(vec({0, 0, 0, 0}), [&](int) { return u; }, 0.01, 100);
  CHECK(traj.back()[3] == doctest::Approx(1.0).epsilon(1e-6));
  CHECK(traj.back()[0] == doctest::Approx(0.5).epsilon(1e-6));
}

TEST_CASE("zero-step integrate returns initial state only") {
  auto dyn = single_unicycle();
  auto traj = dyn.integrate(vec({1, 2, 3, 4}), [](int) { return Vec::Zero(2); },
                            0.1, 0);
  REQUIRE(traj.size() == 1);
  CHECK(traj[0] == vec({1, 2, 3, 4}));
}

TEST_CASE("integrate reports divergence step") {
  auto dyn = single_unicycle();
  Vec huge(2);
  huge << 0.0, 1e200;
  bool threw = false;
  try {
    // acceleration grows the state until a multiply overflows to inf
    dyn.integrate(vec({0, 0, 0, 1e300}), [&](int) { return huge; }, 1e6, 50);
  } catch (const DivergenceError& e) {
    threw = true;
    CHECK(e.step >= 1);
  }
  CHECK(threw);
}

TEST_CASE("unicycle linearization rows") {
  auto dyn = single_unicycle();
  Mat A;
  std::vector<Mat> B;
  dyn.linearize(vec({0, 0, 0, 1}), Vec::Zero(2), 0.1, A, B);
  CHECK(A(0, 0) == doctest::Approx(1.0));
  CHECK(A(0, 2) == doctest::Approx(0.0));
  CHECK(A(0, 3) == doctest::Approx(0.1));
  CHECK(A(1, 2) == doctest::Approx(0.1));  // dt * v at theta = 0
  // B zero except theta' <- w, v' <- a scaled by dt
  Mat Bexp = Mat::Zero(4, 2);
  Bexp(2, 0) = 0.1;
  Bexp(3, 1) = 0.1;
  CHECK((B[0] - Bexp).norm() == doctest::Approx(0.0));
}

TEST_CASE("linearization at dt=0 is identity") {
  auto dyn = single_bicycle(2.0);
  Mat A;
  std::vector<Mat> B;
  dyn.linearize(vec({1, 2, 0.3, 3, 0.1, 0.5}), vec({0.2, -0.1}), 0.0, A, B);
  CHECK((A - Mat::Identity(6, 6)).norm() == doctest::Approx(0.0));
  CHECK(B[0].norm() == doctest::Approx(0.0));
}

TEST_CASE("continuous jacobian matches finite differences") {
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> dist(-2.0, 2.0);
  MultiPlayerDynamics dyn({PlayerDynamics{ModelKind::Unicycle4},
                           PlayerDynamics{ModelKind::Bicycle6, 2.5}});
  for (int trial = 0; trial < 50; ++trial) {
    Vec x(10), u(4);
    for (int i = 0; i < 10; ++i) x[i] = dist(rng);
    for (int i = 0; i < 4; ++i) u[i] = dist(rng);
    x[8] = std::clamp(x[8], -1.0, 1.0);  // bicycle phi away from pi/2

    Mat A;
    std::vector<Mat> B;
    dyn.linearize(x, u, 1.0, A, B);
    const Mat Ac = A - Mat::Identity(10, 10);  // dt = 1 recovers df/dx
    const Mat Afd = test::fd_jacobian(
        [&](const Vec& xx) { return dyn.derivative(xx, u); }, x, 1e-6);
    CHECK(test::rel_err(Ac, Afd) < 1e-5);
  }
}

TEST_CASE("rk4 convergence order on smooth controls") {
  auto dyn = single_unicycle();
  const Vec x0 = vec({0, 0, 0.3, 1.5});
  Vec u(2);
  u << 0.4, 0.2;
  auto final_state = [&](double dt, int steps) {
    return dyn.integrate(x0, [&](int) { return u; }, dt, steps).back();
  };
  const Vec truth = final_state(1.0 / 4096, 4096);
  const double e1 = (final_state(1.0 / 16, 16) - truth).norm();
  const double e2 = (final_state(1.0 / 32, 32) - truth).norm();
  const double order = std::log2(e1 / e2);
  CHECK(order >= 3.5);
}

TEST_CASE("player decoupling") {
  MultiPlayerDynamics dyn({PlayerDynamics{ModelKind::Unicycle4},
                           PlayerDynamics{ModelKind::Bicycle6, 2.0}});
  Vec x0(10);
  x0 << 0, 0, 0.2, 1, 5, 5, -0.3, 2, 0.05, 0.1;
  Vec u(4), u_zeroed(4);
  u << 0.1, 0.2, 0.3, -0.1;
  u_zeroed = u;
  u_zeroed.segment<2>(2).setZero();  // zero player 1 (bicycle) inputs

  auto a = dyn.integrate(x0, [&](int) { return u; }, 0.1, 20);
  auto b = dyn.integrate(x0, [&](int) { return u_zeroed; }, 0.1, 20);
  for (size_t k = 0; k < a.size(); ++k) {
    // player 0's block must be bitwise identical
    CHECK(a[k].head<4>() == b[k].head<4>());
  }
}
