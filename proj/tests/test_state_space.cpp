#include <doctest.h>

#include <map>
#include <set>

#include "glsm/state_space.hpp"

using namespace glsm;

namespace {

int slot_of(const ChamberChar& theta, const SectorLabel& s, int mask) {
  return ChamberTable::get(theta).slot_index(s, mask);
}

} // namespace

TEST_CASE("ages of the all-subscript chamber") {
  auto sectors = enumerate_sectors(chamber_a_xyz());
  REQUIRE(sectors.size() == 10);
  std::map<std::array<int, 4>, Rational> ages;
  for (const auto& rec : sectors) {
    ages[rec.sector.thirds] = rec.age;
    CHECK(rec.narrow);
    CHECK(rec.locus_dim == 0);
  }
  CHECK(ages[{1, 1, 1, 0}] == Rational(3));
  CHECK(ages[{2, 2, 2, 1}] == Rational(5));
  CHECK(ages[{1, 1, 1, 2}] == Rational(4));
  CHECK(ages[{2, 2, 2, 0}] == Rational(6));
}

TEST_CASE("narrow sectors of the one-subscript chamber") {
  auto sectors = enumerate_sectors(chamber_xya_z());
  REQUIRE(sectors.size() == 4);
  std::map<std::array<int, 4>, const SectorRecord*> by_label;
  for (const auto& rec : sectors) by_label[rec.sector.thirds] = &rec;

  // (zeta, 1) and (zeta^2, 1): two-dimensional loci carrying H-classes
  REQUIRE(by_label.count({0, 0, 1, 0}));
  CHECK(by_label[{0, 0, 1, 0}]->locus_dim == 2);
  CHECK(by_label[{0, 0, 1, 0}]->slot_indices.size() == 4);
  CHECK(by_label[{0, 0, 1, 0}]->element == "(zeta,1)");

  // (zeta^2, zeta): nine points, narrow, empty monomial only
  REQUIRE(by_label.count({0, 0, 2, 1}));
  CHECK(by_label[{0, 0, 2, 1}]->locus_dim == 0);
  CHECK(by_label[{0, 0, 2, 1}]->slot_indices.size() == 1);
  CHECK(by_label[{0, 0, 2, 1}]->element == "(zeta^2,zeta)");
  REQUIRE(by_label.count({0, 0, 1, 2}));
  CHECK(by_label[{0, 0, 1, 2}]->element == "(zeta,zeta^2)");
}

TEST_CASE("basis histograms and orderings") {
  for (const auto& theta : canonical_chambers()) {
    auto basis = state_basis(theta);
    REQUIRE(basis.size() == 10);
    std::map<int, int> hist;
    for (const auto& slot : basis) hist[slot.degree]++;
    CHECK(hist[0] == 1);
    CHECK(hist[2] == 4);
    CHECK(hist[4] == 4);
    CHECK(hist[6] == 1);
    for (size_t i = 1; i < basis.size(); ++i) CHECK(basis[i - 1].degree <= basis[i].degree);
  }
  // untwisted-chamber basis: 8 monomials plus two twisted units
  auto cy = state_basis(chamber_xyza());
  int monomial_slots = 0, twisted = 0;
  for (const auto& slot : cy) {
    if (slot.sector == SectorLabel{}) {
      ++monomial_slots;
    } else {
      ++twisted;
      CHECK(slot.monomial == 0);
    }
  }
  CHECK(monomial_slots == 8);
  CHECK(twisted == 2);
  // all-subscript chamber: degree = 2 age - 6 on every slot
  for (const auto& rec : enumerate_sectors(chamber_a_xyz())) {
    const auto& basis = state_basis(chamber_a_xyz());
    for (int idx : rec.slot_indices)
      CHECK(Rational(basis[idx].degree) == Rational(2) * rec.age - Rational(6));
  }
}

TEST_CASE("reduction to the state space") {
  ChamberChar t = chamber_xya_z();
  SectorLabel s1{{0, 0, 1, 0}};

  // unit of the distinguished sector is 1_theta: the unique degree-0 slot
  int one_idx = slot_of(t, s1, 0);
  REQUIRE(one_idx >= 0);
  CHECK(state_basis(t)[one_idx].degree == 0);

  int hx_idx = slot_of(t, s1, 1);
  REQUIRE(hx_idx >= 0);
  CHECK(state_basis(t)[hx_idx].degree == 2);

  // H-classes die on the nine-point sectors
  CHECK(slot_of(t, SectorLabel{{0, 0, 2, 1}}, 1) == -1);
  CHECK(slot_of(t, SectorLabel{{0, 0, 2, 1}}, 0) >= 0);

  // H_z dies everywhere (subscript variable)
  CHECK(slot_of(t, s1, 4) == -1);

  // broad sector: silent zero for any monomial
  CHECK(slot_of(t, SectorLabel{{0, 0, 0, 0}}, 0) == -1);
  CHECK(slot_of(t, SectorLabel{{0, 0, 1, 1}}, 3) == -1);

  // inconsistent label (fractional twist at a superscript variable with
  // m_a = 0): silent for empty monomial, error when a class rides on it
  CHECK(slot_of(t, SectorLabel{{1, 0, 1, 0}}, 0) == -1);
  CHECK_THROWS_AS(slot_of(t, SectorLabel{{1, 0, 1, 0}}, 2), UnknownSector);

  AmbientClass<Rational> c(s1, NilPolyQ(Rational(5)));
  StateClassQ v = reduce_to_state(c, t);
  CHECK(v.coeff[one_idx] == Rational(5));

  // linearity and idempotence on reduced classes
  AmbientClass<Rational> c2(s1, NilPolyQ::monomial(1, Rational(2)));
  StateClassQ v2 = reduce_to_state(c2, t);
  CHECK(v2.coeff[hx_idx] == Rational(2));
}

TEST_CASE("empty-locus narrow sectors reduce to zero") {
  // untwisted chamber, m_v = m_a != 0: ambient sector exists but misses the
  // critical locus entirely
  ChamberChar t = chamber_xyza();
  CHECK(slot_of(t, SectorLabel{{1, 1, 1, 1}}, 0) == -1);
  CHECK(slot_of(t, SectorLabel{{1, 0, 0, 1}}, 0) == -1);
  CHECK(slot_of(t, SectorLabel{{0, 0, 0, 1}}, 0) >= 0);
  CHECK(slot_of(t, SectorLabel{{0, 0, 0, 1}}, 1) == -1); // 27 points kill H
}

TEST_CASE("state isomorphisms") {
  ChamberChar a = chamber_xyza();
  ChamberChar b = chamber_xya_z();
  auto iso = state_iso_slots(a, b);

  // 1 -> z-entry 1_zeta, H_z -> z-entry 1_{zeta^2}
  int i_unit = slot_of(a, SectorLabel{}, 0);
  int i_hz = slot_of(a, SectorLabel{}, 4);
  CHECK(iso[i_unit] == slot_of(b, SectorLabel{{0, 0, 1, 0}}, 0));
  CHECK(iso[i_hz] == slot_of(b, SectorLabel{{0, 0, 2, 0}}, 0));

  // degree preservation and bijectivity for every chamber pair
  for (const auto& t1 : canonical_chambers())
    for (const auto& t2 : canonical_chambers()) {
      auto map = state_iso_slots(t1, t2);
      std::set<int> seen(map.begin(), map.end());
      CHECK(seen.size() == kStateDim);
      auto b1 = state_basis(t1);
      auto b2 = state_basis(t2);
      for (int i = 0; i < kStateDim; ++i) CHECK(b1[i].degree == b2[map[i]].degree);
    }

  // round trip is the identity
  for (const auto& t1 : canonical_chambers())
    for (const auto& t2 : canonical_chambers()) {
      auto fwd = state_iso_slots(t1, t2);
      auto bwd = state_iso_slots(t2, t1);
      for (int i = 0; i < kStateDim; ++i) CHECK(bwd[fwd[i]] == i);
    }

  StateClassQ v;
  v.coeff[i_unit] = Rational(3);
  StateClassQ w = state_iso(a, b, v);
  CHECK(w.coeff[iso[i_unit]] == Rational(3));
}

TEST_CASE("sectors of permutation-image chambers are relabelings") {
  // swap y and z between ++-+ and +-++
  auto base = enumerate_sectors(chamber_xya_z());
  auto image = enumerate_sectors(ChamberChar::parse("+-++"));
  REQUIRE(base.size() == image.size());
  std::set<std::array<int, 4>> got;
  for (const auto& rec : image) got.insert(rec.sector.thirds);
  for (const auto& rec : base) {
    auto m = rec.sector.thirds;
    std::swap(m[1], m[2]);
    CHECK(got.count(m));
  }
}

TEST_CASE("pairing is perfect and graded") {
  for (const auto& theta : canonical_chambers()) {
    auto basis = state_basis(theta);
    for (int i = 0; i < kStateDim; ++i) {
      int partners = 0, partner = -1;
      for (int j = 0; j < kStateDim; ++j) {
        if (pairing(theta, i, j) != Rational(0)) {
          ++partners;
          partner = j;
        }
      }
      CHECK(partners == 1);
      CHECK(basis[i].degree + basis[partner].degree == 6);
      CHECK(pairing(theta, i, partner) == Rational(1, 3));
      CHECK(pairing(theta, partner, i) == pairing(theta, i, partner));
    }
  }
}
