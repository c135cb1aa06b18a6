#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "glsm/degrees.hpp"
#include "glsm/model.hpp"
#include "glsm/nilpoly.hpp"
#include "glsm/rational.hpp"

namespace glsm {

// Monodromy tuple (m_x, m_y, m_z, m_a), entries in {0, 1/3, 2/3} stored as
// integer thirds 0/1/2.
struct SectorLabel {
  std::array<int, 4> thirds{0, 0, 0, 0};

  static SectorLabel from_degree_fracs(const Degree& beta) {
    SectorLabel s;
    for (int i = 0; i < 4; ++i) s.thirds[i] = ((beta.thirds[i] % 3) + 3) % 3;
    return s;
  }
  SectorLabel inverse() const {
    SectorLabel s;
    for (int i = 0; i < 4; ++i) s.thirds[i] = (3 - thirds[i]) % 3;
    return s;
  }
  friend bool operator==(const SectorLabel& a, const SectorLabel& b) {
    return a.thirds == b.thirds;
  }
  friend bool operator<(const SectorLabel& a, const SectorLabel& b) {
    return a.thirds < b.thirds;
  }
  std::string str() const;
};

// Finite formal sum of (sector, nilpotent polynomial) pairs; at most one
// polynomial per sector, zero polynomials pruned.
template <typename T>
class AmbientClass {
public:
  AmbientClass() = default;
  AmbientClass(const SectorLabel& s, const NilPoly<T>& p) { add(s, p); }

  void add(const SectorLabel& s, const NilPoly<T>& p) {
    if (p.is_zero()) return;
    auto it = terms_.find(s);
    if (it == terms_.end()) {
      terms_.emplace(s, p);
    } else {
      it->second += p;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }
  const std::map<SectorLabel, NilPoly<T>>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  friend AmbientClass operator*(const T& s, const AmbientClass& c) {
    AmbientClass out;
    for (const auto& [label, p] : c.terms_) out.add(label, NilPoly<T>(s) * p);
    return out;
  }

private:
  std::map<SectorLabel, NilPoly<T>> terms_;
};

// One basis slot of the chamber state space: a sector plus a surviving
// monomial, with its shifted degree.
struct BasisSlot {
  SectorLabel sector;
  int monomial = 0; // H-mask
  int degree = 0;   // shifted degree, in {0,2,4,6}
  std::string label;
};

struct SectorRecord {
  SectorLabel sector;
  Rational age = Rational(0);
  bool narrow = false;
  int locus_dim = 0; // dimension of the sector's locus in Z(theta); -1 if empty
  std::vector<int> slot_indices;
  std::string element; // group-element tuple in the chamber presentation
};

inline constexpr int kStateDim = 10;

// Precomputed per-chamber data: narrow sectors, basis slots, index maps.
class ChamberTable {
public:
  static const ChamberTable& get(const ChamberChar& theta);

  const ChamberChar& chamber() const { return theta_; }
  const std::vector<SectorRecord>& sectors() const { return sectors_; }
  const std::vector<BasisSlot>& basis() const { return basis_; }
  int dim_z() const { return dim_z_; }

  // Slot index for (sector, monomial) or -1 when the pair reduces to zero.
  // Throws UnknownSector for labels inconsistent with the chamber when the
  // monomial is nonempty.
  int slot_index(const SectorLabel& s, int monomial_mask) const;

  // Age of an arbitrary monodromy tuple: sum over the 13 coordinates of the
  // fractional rotation numbers <w_rho . m>.
  static Rational age_of(const SectorLabel& s);

private:
  explicit ChamberTable(const ChamberChar& theta);

  enum class SectorKind { Inconsistent, Broad, EmptyLocus, Narrow };
  SectorKind classify(const SectorLabel& s, int* locus_dim, std::array<bool, 3>* h_allowed) const;

  ChamberChar theta_;
  int dim_z_ = 0;
  std::vector<SectorRecord> sectors_;
  std::vector<BasisSlot> basis_;
  std::map<std::pair<SectorLabel, int>, int> index_;
};

std::vector<SectorRecord> enumerate_sectors(const ChamberChar& theta);
std::vector<BasisSlot> state_basis(const ChamberChar& theta);

// Coefficient vector over the 10-slot chamber basis.
template <typename T>
struct StateClass {
  std::array<T, kStateDim> coeff{};

  bool is_zero() const {
    for (const auto& v : coeff)
      if (!ScalarTraits<T>::is_zero(v)) return false;
    return true;
  }
  friend StateClass operator+(const StateClass& a, const StateClass& b) {
    StateClass out;
    for (int i = 0; i < kStateDim; ++i) out.coeff[i] = a.coeff[i] + b.coeff[i];
    return out;
  }
  friend StateClass operator*(const T& s, const StateClass& c) {
    StateClass out;
    for (int i = 0; i < kStateDim; ++i) out.coeff[i] = s * c.coeff[i];
    return out;
  }
  friend bool operator==(const StateClass& a, const StateClass& b) { return a.coeff == b.coeff; }
};

using StateClassQ = StateClass<Rational>;
using StateClassC = StateClass<std::complex<double>>;

// Restriction of an ambient class to the chamber state space. Broad sectors
// and empty-locus narrow sectors drop to zero; monomials die where their
// variables degenerate on the sector locus.
template <typename T>
StateClass<T> reduce_to_state(const AmbientClass<T>& c, const ChamberChar& theta) {
  const ChamberTable& table = ChamberTable::get(theta);
  StateClass<T> out;
  for (const auto& [label, poly] : c.terms()) {
    for (int mask = 0; mask < kNumMonomials; ++mask) {
      if (ScalarTraits<T>::is_zero(poly[mask])) continue;
      int idx = table.slot_index(label, mask);
      if (idx >= 0) out.coeff[idx] = out.coeff[idx] + poly[mask];
    }
  }
  return out;
}

// Slot bijection between chamber bases, composed from single-variable moves.
// Returns per-slot target indices: iso[i] is the slot of theta2 paired with
// slot i of theta1.
std::vector<int> state_iso_slots(const ChamberChar& theta1, const ChamberChar& theta2);

template <typename T>
StateClass<T> state_iso(const ChamberChar& theta1, const ChamberChar& theta2,
                        const StateClass<T>& c) {
  auto slots = state_iso_slots(theta1, theta2);
  StateClass<T> out;
  for (int i = 0; i < kStateDim; ++i) out.coeff[slots[i]] = c.coeff[i];
  return out;
}

// Optional Poincare pairing with the convention value 1/3 on complementary
// slot pairs (sector m pairs with -m, monomials complementary within the
// sector's surviving generators). Tests rely on perfectness and grading only.
Rational pairing(const ChamberChar& theta, int slot_i, int slot_j);

} // namespace glsm
