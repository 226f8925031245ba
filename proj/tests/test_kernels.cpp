#include <diskschwarz/kernels.hpp>
#include <diskschwarz/quadrature.hpp>

#include <gtest/gtest.h>

#include <random>

namespace ds = diskschwarz;
using ds::complex;

namespace {

complex random_interior(std::mt19937_64& rng, double r_max = 0.999) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  const double r = r_max * std::sqrt(u(rng));
  return r * ds::unit(ds::two_pi * u(rng));
}

}  // namespace

TEST(PoissonKernel, CenterIsOne) {
  for (double t : {0.0, 1.0, 3.0, 6.0}) EXPECT_DOUBLE_EQ(ds::poisson_kernel(ds::DiskPoint(0, 0), ds::BoundaryAngle(t)), 1.0);
}

TEST(PoissonKernel, HandValues) {
  // (1 - 0.25) / (1 - 0.5)^2
  EXPECT_NEAR(ds::poisson_kernel(ds::DiskPoint(0.5, 0), ds::BoundaryAngle(0)), 3.0, 1e-15);
  EXPECT_NEAR(ds::poisson_kernel(ds::DiskPoint(0, 0.5), ds::BoundaryAngle(ds::pi / 2)), 3.0, 1e-14);
}

TEST(PoissonKernel, RejectsBoundaryPoint) {
  EXPECT_THROW(ds::poisson_kernel(ds::DiskPoint(1, 0), ds::BoundaryAngle(0.3)), ds::DomainError);
  EXPECT_THROW(ds::DiskPoint(1.1, 0), ds::DomainError);
}

TEST(PoissonKernel, PositiveOnRandomPairs) {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(0.0, ds::two_pi);
  for (int i = 0; i < 1000; ++i)
    EXPECT_GT(ds::poisson_kernel(ds::DiskPoint(random_interior(rng)), ds::BoundaryAngle(u(rng))), 0.0);
}

TEST(PoissonKernel, MeanValueIsOne) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 50; ++i) {
    const complex z = random_interior(rng, 0.9);
    const complex mean = ds::circle_mean([&](double t) { return complex(ds::raw::poisson_kernel(z, t)); }, 512);
    EXPECT_NEAR(mean.real(), 1.0, 1e-12);
  }
}

TEST(BiharmonicGreen, HandValues) {
  EXPECT_DOUBLE_EQ(ds::biharmonic_green(ds::DiskPoint(0, 0), ds::DiskPoint(0, 0)), -1.0);
  // 0.25 ln 4 - 0.75
  EXPECT_NEAR(ds::biharmonic_green(ds::DiskPoint(0, 0), ds::DiskPoint(0.5, 0)), 0.25 * std::log(4.0) - 0.75, 1e-15);
  for (double t : {0.0, 1.3, 4.0})
    EXPECT_NEAR(ds::biharmonic_green(ds::DiskPoint(0.3, 0.1), ds::DiskPoint::boundary(t)), 0.0, 1e-15);
}

TEST(BiharmonicGreen, Symmetric) {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 1000; ++i) {
    const complex z = random_interior(rng), w = random_interior(rng);
    EXPECT_NEAR(ds::raw::biharmonic_green(z, w), ds::raw::biharmonic_green(w, z), 1e-12);
  }
}

TEST(BiharmonicGreen, VanishesOnBoundary) {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(0.0, ds::two_pi), s(-1e-10, 1e-10);
  for (int i = 0; i < 1000; ++i) {
    const complex z = random_interior(rng);
    const complex w = (1.0 + s(rng)) * ds::unit(u(rng));
    EXPECT_LE(std::abs(ds::raw::biharmonic_green(z, w)), 1e-9);
  }
}

TEST(BiharmonicGreen, DiagonalLimit) {
  std::mt19937_64 rng(9);
  std::uniform_real_distribution<double> u(0.0, ds::two_pi);
  for (int i = 0; i < 200; ++i) {
    const complex z = random_interior(rng, 0.99);
    const double limit = -std::pow(1.0 - std::norm(z), 2);
    EXPECT_DOUBLE_EQ(ds::raw::biharmonic_green(z, z), limit);
    // G(z, z + d) - G(z, z) = O(d), so the approach must be well below the tolerance
    const complex w = z + 1e-10 * ds::unit(u(rng));
    EXPECT_LE(std::abs(ds::raw::biharmonic_green(z, w) - limit), 1e-9);
  }
}

TEST(BiharmonicGreen, FiniteNearDiagonal) {
  const complex z{0.2, -0.4};
  for (double d : {1e-8, 1e-12, 1e-15, 1e-16}) EXPECT_TRUE(std::isfinite(ds::raw::biharmonic_green(z, z + d)));
}

TEST(CauchyKernel, HandValues) {
  EXPECT_EQ(ds::cauchy_kernel(ds::DiskPoint(0, 0), ds::BoundaryAngle(1.0)), complex(0.0, 0.0));
  EXPECT_NEAR(std::abs(ds::cauchy_kernel(ds::DiskPoint(0.5, 0), ds::BoundaryAngle(0)) - 2.0), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(ds::cauchy_kernel(ds::DiskPoint(0.5, 0), ds::BoundaryAngle(ds::pi)) + 0.5 / 2.25), 0.0, 1e-15);
  EXPECT_THROW(ds::cauchy_kernel(ds::DiskPoint(0, 1), ds::BoundaryAngle(0)), ds::DomainError);
}

TEST(BoundaryAngle, Normalizes) {
  EXPECT_NEAR(ds::BoundaryAngle(-ds::pi / 2).value(), 1.5 * ds::pi, 1e-15);
  EXPECT_NEAR(ds::BoundaryAngle(5 * ds::pi).value(), ds::pi, 1e-14);
  const double t = ds::BoundaryAngle(ds::two_pi).value();
  EXPECT_GE(t, 0.0);
  EXPECT_LT(t, ds::two_pi);
}

TEST(DiskPoint, Membership) {
  EXPECT_TRUE(ds::DiskPoint(0.5, 0.5).interior());
  EXPECT_TRUE(ds::DiskPoint(0.6, 0.8).on_boundary());
  EXPECT_TRUE(ds::DiskPoint(1.0 + 4e-13, 0).on_boundary());
  EXPECT_THROW(ds::DiskPoint(1.0 + 1e-9, 0), ds::DomainError);
}
