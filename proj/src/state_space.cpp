#include "glsm/state_space.hpp"

#include <algorithm>
#include <mutex>

namespace glsm {

namespace {

const char* kZetaNames[3] = {"1", "zeta", "zeta^2"};

std::string tensor_label(const ChamberChar& theta, const SectorLabel& s, int mask) {
  // (alpha_x (x) alpha_y (x) alpha_z)_g with 1/H_v entries at superscript
  // variables and 1_zeta-type entries at subscript ones.
  static const char* kH[3] = {"Hx", "Hy", "Hz"};
  std::string out = "(";
  for (int v = 0; v < 3; ++v) {
    if (v) out += ",";
    if (theta.is_superscript(Var(v)))
      out += (mask & (1 << v)) ? kH[v] : "1";
    else
      out += std::string("1_") + kZetaNames[s.thirds[v]];
  }
  out += ")_";
  out += kZetaNames[s.thirds[3]];
  return out;
}

std::string element_tuple(const ChamberChar& theta, const SectorLabel& s) {
  std::string out = "(";
  bool first = true;
  for (int v = 0; v < 3; ++v) {
    if (!theta.is_subscript(Var(v))) continue;
    if (!first) out += ",";
    out += kZetaNames[s.thirds[v]];
    first = false;
  }
  if (!first) out += ",";
  out += kZetaNames[s.thirds[3]];
  out += ")";
  return out;
}

} // namespace

std::string SectorLabel::str() const {
  static const char* f[3] = {"0", "1/3", "2/3"};
  std::string s = "<";
  for (int i = 0; i < 4; ++i) {
    if (i) s += ",";
    s += f[thirds[i]];
  }
  s += ">";
  return s;
}

Rational ChamberTable::age_of(const SectorLabel& s) {
  const auto& model = GlsmModel::instance();
  int total_thirds = 0;
  for (int rho = 0; rho < kNumCoords; ++rho) {
    int w = 0;
    for (int i = 0; i < 4; ++i) w += model.weights[rho][i] * s.thirds[i];
    total_thirds += ((w % 3) + 3) % 3;
  }
  return Rational(total_thirds, 3);
}

ChamberTable::SectorKind ChamberTable::classify(const SectorLabel& s, int* locus_dim,
                                                std::array<bool, 3>* h_allowed) const {
  int ma = s.thirds[3];
  if (locus_dim) *locus_dim = 0;
  if (h_allowed) h_allowed->fill(false);

  for (int v = 0; v < 3; ++v) {
    if (theta_.is_superscript(Var(v))) {
      if (s.thirds[v] != 0 && s.thirds[v] != ma) return SectorKind::Inconsistent;
    }
  }
  for (int v = 0; v < 3; ++v) {
    if (theta_.is_subscript(Var(v))) {
      if (s.thirds[v] == 0 || s.thirds[v] == ma) return SectorKind::Broad;
    }
  }
  bool empty = false;
  for (int v = 0; v < 3; ++v) {
    if (!theta_.is_superscript(Var(v))) continue;
    if (s.thirds[v] == ma && ma != 0) {
      empty = true; // only the v-fixed points survive, and they miss E
    } else if (ma == 0) {
      if (locus_dim) *locus_dim += 1; // full elliptic-curve factor
      if (h_allowed) (*h_allowed)[v] = true;
    }
    // ma != 0, m_v = 0: three points in the curve factor, dimension 0
  }
  if (empty) {
    if (locus_dim) *locus_dim = -1;
    return SectorKind::EmptyLocus;
  }
  return SectorKind::Narrow;
}

ChamberTable::ChamberTable(const ChamberChar& theta) : theta_(theta) {
  dim_z_ = int(theta.superscript_vars().size());

  for (int x = 0; x < 3; ++x)
    for (int y = 0; y < 3; ++y)
      for (int z = 0; z < 3; ++z)
        for (int a = 0; a < 3; ++a) {
          SectorLabel s{{x, y, z, a}};
          int dim = 0;
          std::array<bool, 3> allowed{};
          if (classify(s, &dim, &allowed) != SectorKind::Narrow) continue;

          SectorRecord rec;
          rec.sector = s;
          rec.age = age_of(s);
          rec.narrow = true;
          rec.locus_dim = dim;
          rec.element = element_tuple(theta, s);
          sectors_.push_back(rec);

          for (int mask = 0; mask < kNumMonomials; ++mask) {
            bool ok = true;
            for (int v = 0; v < 3; ++v)
              if ((mask & (1 << v)) && !allowed[v]) ok = false;
            if (!ok) continue;
            Rational deg = Rational(2) * age_of(s) + Rational(2 * (dim_z_ - 3)) +
                           Rational(2 * monomial_weight(mask));
            if (!deg.is_integer()) throw Error("non-integer shifted degree");
            BasisSlot slot;
            slot.sector = s;
            slot.monomial = mask;
            slot.degree = int(deg.num());
            slot.label = tensor_label(theta, s, mask);
            basis_.push_back(slot);
          }
        }

  std::sort(basis_.begin(), basis_.end(), [](const BasisSlot& a, const BasisSlot& b) {
    if (a.degree != b.degree) return a.degree < b.degree;
    if (!(a.sector == b.sector)) return a.sector < b.sector;
    return a.monomial < b.monomial;
  });
  if (int(basis_.size()) != kStateDim) throw Error("state space dimension != 10");

  for (int i = 0; i < kStateDim; ++i)
    index_[{basis_[i].sector, basis_[i].monomial}] = i;
  for (auto& rec : sectors_)
    for (int i = 0; i < kStateDim; ++i)
      if (basis_[i].sector == rec.sector) rec.slot_indices.push_back(i);
}

const ChamberTable& ChamberTable::get(const ChamberChar& theta) {
  static std::map<std::array<int, 4>, ChamberTable> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(theta.exponents());
  if (it == cache.end())
    it = cache.emplace(theta.exponents(), ChamberTable(theta)).first;
  return it->second;
}

int ChamberTable::slot_index(const SectorLabel& s, int mask) const {
  int dim = 0;
  std::array<bool, 3> allowed{};
  switch (classify(s, &dim, &allowed)) {
    case SectorKind::Inconsistent:
      if (mask != 0)
        throw UnknownSector("sector " + s.str() + " inconsistent with chamber " +
                            theta_.name());
      return -1;
    case SectorKind::Broad:
    case SectorKind::EmptyLocus:
      return -1;
    case SectorKind::Narrow:
      break;
  }
  for (int v = 0; v < 3; ++v)
    if ((mask & (1 << v)) && !allowed[v]) return -1;
  auto it = index_.find({s, mask});
  return it == index_.end() ? -1 : it->second;
}

std::vector<SectorRecord> enumerate_sectors(const ChamberChar& theta) {
  return ChamberTable::get(theta).sectors();
}

std::vector<BasisSlot> state_basis(const ChamberChar& theta) {
  return ChamberTable::get(theta).basis();
}

namespace {

// Single-variable move of the slot (sector, monomial) between the chambers
// that differ in the sign of v. Moving v to the subscript sends the v-entry
// 1 -> 1_zeta and H_v -> 1_{zeta^2} when m_a = 0; when m_a != 0 only empty
// monomials occur and the image twist is forced by narrowness.
std::pair<SectorLabel, int> move_slot(const ChamberChar& from, Var v, const SectorLabel& s,
                                      int mask) {
  int ma = s.thirds[3];
  SectorLabel out = s;
  int vbit = 1 << int(v);
  if (from.is_superscript(v)) {
    int target;
    if (ma == 0)
      target = (mask & vbit) ? 2 : 1;
    else
      target = (ma == 1) ? 2 : 1;
    out.thirds[int(v)] = target;
    return {out, mask & ~vbit};
  }
  // subscript -> superscript
  out.thirds[int(v)] = 0;
  if (ma == 0 && s.thirds[int(v)] == 2) return {out, mask | vbit};
  return {out, mask};
}

} // namespace

std::vector<int> state_iso_slots(const ChamberChar& theta1, const ChamberChar& theta2) {
  const ChamberTable& t1 = ChamberTable::get(theta1);
  std::vector<int> map(kStateDim);
  for (int i = 0; i < kStateDim; ++i) map[i] = i;
  if (theta1 == theta2) return map;

  ChamberChar cur = theta1;
  std::vector<std::pair<SectorLabel, int>> slots;
  for (const auto& b : t1.basis()) slots.push_back({b.sector, b.monomial});

  for (int v = 0; v < 3; ++v) {
    if (theta1.exponent(v) == theta2.exponent(v)) continue;
    std::array<int, 4> next_signs{};
    for (int i = 0; i < 4; ++i) next_signs[i] = cur.exponent(i);
    next_signs[v] = -next_signs[v];
    ChamberChar next = ChamberChar::from_signs(next_signs);
    for (auto& sl : slots) sl = move_slot(cur, Var(v), sl.first, sl.second);
    cur = next;
  }

  const ChamberTable& t2 = ChamberTable::get(theta2);
  std::vector<bool> hit(kStateDim, false);
  for (int i = 0; i < kStateDim; ++i) {
    int j = t2.slot_index(slots[i].first, slots[i].second);
    if (j < 0) throw Error("state_iso produced a non-basis slot");
    if (hit[j]) throw Error("state_iso is not a bijection");
    hit[j] = true;
    map[i] = j;
  }
  return map;
}

Rational pairing(const ChamberChar& theta, int slot_i, int slot_j) {
  const ChamberTable& t = ChamberTable::get(theta);
  if (slot_i < 0 || slot_i >= kStateDim || slot_j < 0 || slot_j >= kStateDim)
    throw BadArgument("slot index out of range");
  const BasisSlot& a = t.basis()[slot_i];
  const BasisSlot& b = t.basis()[slot_j];
  if (!(b.sector == a.sector.inverse())) return Rational(0);
  // complementary monomials within the sector's surviving generators
  int allowed = 0;
  for (const auto& slot : t.basis())
    if (slot.sector == a.sector) allowed |= slot.monomial;
  if ((a.monomial & b.monomial) != 0) return Rational(0);
  if ((a.monomial | b.monomial) != allowed) return Rational(0);
  return Rational(1, 3);
}

} // namespace glsm
