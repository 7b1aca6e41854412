#include "torsionlab/ecurve.hpp"

namespace torsionlab {

long count_points(const Curve<FFElem>& E) {
  const FiniteField& K = E.a2().field();
  if (K.p() == 2) throw Error("Unsupported", "point counting in characteristic 2");
  using R = FiniteField::Rep;
  R b2 = E.b2().rep(), b4x2 = (E.c(2) * E.b4()).rep(), b6 = E.b6().rep(), four = K.from_int(4);
  long count = 1;
  for (long xi = 0; xi < K.q(); ++xi) {
    R x = static_cast<R>(xi);
    // 4x^3 + b2 x^2 + 2 b4 x + b6
    R v = K.add(K.mul(K.add(K.mul(K.add(K.mul(four, x), b2), x), b4x2), x), b6);
    count += 1 + K.chi(v);
  }
  return count;
}

}  // namespace torsionlab
