#include "glsm/iseries.hpp"

#include <cmath>

namespace glsm {

StateClassC evaluate(const ISeriesC& series, const std::array<std::complex<double>, 4>& q) {
  using C = std::complex<double>;
  for (const auto& qv : q) {
    if (qv == C(0.0, 0.0)) throw ZeroQ("evaluation point has a zero coordinate");
    if (qv.imag() == 0.0 && qv.real() < 0.0)
      throw BranchAmbiguity("evaluation on the negative real axis is rejected");
  }
  std::array<C, 4> logs;
  for (int i = 0; i < 4; ++i) logs[i] = std::log(q[i]);

  AmbientClass<C> total;
  for (const auto& [key, logpoly] : series.terms) {
    C qpow(1.0, 0.0);
    for (int i = 0; i < 4; ++i) qpow *= std::exp(logs[i] * (double(key[i]) / 3.0));
    for (const auto& [lmask, cls] : logpoly) {
      C lfactor(1.0, 0.0);
      for (int v = 0; v < 3; ++v)
        if (lmask & (1 << v)) lfactor *= logs[v];
      for (const auto& [sector, poly] : cls.terms())
        total.add(sector, NilPoly<C>(qpow * lfactor) * poly);
    }
  }
  return reduce_to_state(total, series.chamber);
}

} // namespace glsm
