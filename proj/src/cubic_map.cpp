#include "rcubic/cubic_map.hpp"

namespace rcubic {

CubicMapQ lift(const CubicMap& f) {
  CubicMapQ out;
  for (std::size_t i = 0; i < 2; ++i) {
    for (std::size_t j = 0; j < 4; ++j) out.F[i][j] = QuadExt(f.F[i][j]);
    for (std::size_t j = 0; j < 3; ++j) out.Q[i][j] = QuadExt(f.Q[i][j]);
    for (std::size_t j = 0; j < 2; ++j) out.L[i][j] = QuadExt(f.L[i][j]);
    out.c[i] = QuadExt(f.c[i]);
  }
  return out;
}

AffineChangeQ lift(const AffineChange& phi) {
  AffineChangeQ out;
  for (std::size_t i = 0; i < 2; ++i) {
    for (std::size_t j = 0; j < 2; ++j) out.T[i][j] = QuadExt(phi.T[i][j]);
    out.a[i] = QuadExt(phi.a[i]);
  }
  return out;
}

CubicMap map_from_tensor(const std::array<long, 4>& f1, const std::array<long, 4>& f2) {
  CubicMap f;
  for (std::size_t j = 0; j < 4; ++j) {
    f.F[0][j] = f1[j];
    f.F[1][j] = f2[j];
  }
  return f;
}

CubicMap build_map(const CoefficientBundle& raw, CoefficientMode mode) {
  CubicMap f;
  f.F = raw.F;
  f.Q = raw.Q;
  f.L = raw.L;
  f.c = raw.c;
  if (mode == CoefficientMode::polynomial) {
    for (std::size_t i = 0; i < 2; ++i) {
      f.F[i][1] /= 3;
      f.F[i][2] /= 3;
      f.Q[i][1] /= 2;
    }
  }
  return f;
}

CoefficientBundle to_bundle(const CubicMap& f, CoefficientMode mode) {
  CoefficientBundle raw;
  raw.F = f.F;
  raw.Q = f.Q;
  raw.L = f.L;
  raw.c = f.c;
  if (mode == CoefficientMode::polynomial) {
    for (std::size_t i = 0; i < 2; ++i) {
      raw.F[i][1] *= 3;
      raw.F[i][2] *= 3;
      raw.Q[i][1] *= 2;
    }
  }
  return raw;
}

}  // namespace rcubic
