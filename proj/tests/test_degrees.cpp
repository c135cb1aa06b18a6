#include <doctest.h>

#include <set>

#include "glsm/degrees.hpp"

using namespace glsm;

TEST_CASE("beta_rho pairing") {
  // rho_{p_x}, beta=(1,0,0,0), m=1: -3*1 + (1-2) = -4
  CHECK(beta_rho(kPx, Degree::from_thirds(3, 0, 0, 0), 1) == Rational(-4));
  // rho_{x_0}, beta=(1,0,0,1/3): 1 - 1/3
  CHECK(beta_rho(kX0, Degree::from_thirds(3, 0, 0, 1), 1) == Rational(2, 3));
  // rho_a, beta_a = 1/3: weight 3 pairs to 1, independent of m
  CHECK(beta_rho(kA, Degree::from_thirds(0, 0, 0, 1), 0) == Rational(1));
  CHECK(beta_rho(kA, Degree::from_thirds(0, 0, 0, 1), 5) == Rational(1));
}

TEST_CASE("extremal degrees") {
  CHECK(extremal_degree(chamber_xya_z(), 1) == Degree::from_thirds(0, 0, -1, 0));
  CHECK(extremal_degree(chamber_xyza(), 0) == Degree());
  CHECK(extremal_degree(chamber_xyza(), 7) == Degree());
  CHECK(extremal_degree(chamber_a_xyz(), 2) == Degree());
  CHECK(extremal_degree(chamber_a_xyz(), 1) == Degree::from_thirds(-1, -1, -1, 0));

  // additivity: beta_0(theta, m1+m2) = beta_0(theta, m1+1) + beta_0(theta, m2+1)
  for (const auto& theta : canonical_chambers())
    for (int m1 = 0; m1 <= 6; ++m1)
      for (int m2 = 0; m2 + m1 <= 6; ++m2)
        CHECK(extremal_degree(theta, m1 + m2) ==
              extremal_degree(theta, m1 + 1) + extremal_degree(theta, m2 + 1));
}

TEST_CASE("beta_theta") {
  ChamberChar t = chamber_xya_z();
  CHECK(beta_theta(extremal_degree(t, 1), 1, t) == Rational(0));
  CHECK(beta_theta(Degree::from_thirds(3, 0, -1, 0), 1, t) == Rational(3));
  CHECK(beta_theta(Degree::from_thirds(0, 0, 0, 1), 1, chamber_xyza()) == Rational(1));
}

TEST_CASE("effectiveness conditions") {
  ChamberChar t = chamber_xya_z();
  CHECK(passes_effectiveness(Degree::from_thirds(0, 0, -1, 0), 1, t));
  CHECK_FALSE(passes_effectiveness(Degree::from_thirds(-3, 0, 0, 0), 1, chamber_xyza()));
  CHECK_FALSE(passes_effectiveness(Degree::from_thirds(-3, 0, 0, 0), 4, chamber_xyza()));
  CHECK_FALSE(passes_effectiveness(Degree::from_thirds(0, 0, 3, 0), 1, t));
}

TEST_CASE("unstable tuples") {
  for (const auto& theta : canonical_chambers()) {
    Degree b02 = extremal_degree(theta, 2);
    CHECK(is_unstable_tuple(b02, 2, Epsilon::zero_plus(), theta));
    CHECK(is_unstable_tuple(b02, 2, Epsilon::finite(Rational(3, 7)), theta));
    CHECK(is_unstable_tuple(b02, 2, Epsilon::infinity(), theta));
  }
  ChamberChar t = chamber_xya_z();
  Degree b = Degree::from_thirds(3, 0, -1, 0); // beta_theta = 3
  CHECK(is_unstable_tuple(b, 1, Epsilon::zero_plus(), t));
  CHECK_FALSE(is_unstable_tuple(b, 1, Epsilon::infinity(), t));
  CHECK(is_unstable_tuple(b, 1, Epsilon::finite(Rational(1, 2)), t));  // 3 > 2
  CHECK_FALSE(is_unstable_tuple(b, 1, Epsilon::finite(Rational(1, 3)), t)); // 3 = 3
  CHECK_FALSE(is_unstable_tuple(b, 0, Epsilon::finite(Rational(1, 2)), t)); // 3 < 4
}

TEST_CASE("lattice enumeration examples") {
  auto cy = enumerate_ifunction_degrees(chamber_xyza(), Rational(1));
  std::set<Degree> cy_set(cy.begin(), cy.end());
  CHECK(cy_set.count(Degree()));
  CHECK(cy_set.count(Degree::from_thirds(0, 0, 0, 1)));
  for (const auto& d : cy) {
    CHECK(d.thirds[0] % 3 == 0);
    CHECK(d.thirds[0] >= 0);
  }

  auto z0 = enumerate_ifunction_degrees(chamber_xya_z(), Rational(0));
  REQUIRE(z0.size() == 1);
  CHECK(z0[0] == Degree::from_thirds(0, 0, -1, 0));

  // leading entry is always the extremal degree
  for (const auto& theta : canonical_chambers()) {
    auto lat = enumerate_ifunction_degrees(theta, Rational(2));
    REQUIRE(!lat.empty());
    CHECK(lat[0] == extremal_degree(theta, 1));
    CHECK(beta_theta(lat[0], 1, theta) == Rational(0));
  }
}

TEST_CASE("lattice enumeration closure against brute force") {
  for (const auto& theta : canonical_chambers()) {
    Rational cutoff(2);
    auto lat = enumerate_ifunction_degrees(theta, cutoff);
    std::set<Degree> got(lat.begin(), lat.end());
    CHECK(got.size() == lat.size()); // duplicate-free

    // independent scan of the thirds box
    int found = 0;
    for (int x = -12; x <= 12; ++x)
      for (int y = -12; y <= 12; ++y)
        for (int z = -12; z <= 12; ++z)
          for (int a = -12; a <= 12; ++a) {
            Degree d = Degree::from_thirds(x, y, z, a);
            bool member = d.thirds[3] >= 0;
            for (int v = 0; v < 3 && member; ++v) {
              int t = d.thirds[v];
              if (theta.is_superscript(Var(v)))
                member = t >= 0 && t % 3 == 0;
              else
                member = t < 0 && t % 3 != 0;
            }
            if (!member) continue;
            Rational bt = beta_theta(d, 1, theta);
            if (!(bt >= Rational(0) && bt <= cutoff)) continue;
            ++found;
            CHECK(got.count(d));
          }
    CHECK(found == int(lat.size()));

    // output is sorted by beta_theta
    for (size_t i = 1; i < lat.size(); ++i)
      CHECK(beta_theta(lat[i - 1], 1, theta) <= beta_theta(lat[i], 1, theta));
  }
}
