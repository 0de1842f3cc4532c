#include "ein2/geometry.hpp"

namespace ein2 {

namespace {

constexpr std::size_t n = kDim;

}  // namespace

Vec3 ConnectionCoefficients::covariant(std::size_t i, std::size_t j) const {
  Vec3 v;
  for (std::size_t k = 0; k < n; ++k) v(k) = gamma_(i, j, k);
  return v;
}

ConnectionCoefficients levi_civita(const StructureConstants& sc) {
  if (!satisfies_jacobi(sc)) throw NotLieAlgebra();
  // lowered constants g([e_i,e_j], e_k) = eps_k c^k_ij
  auto low = [&sc](std::size_t i, std::size_t j, std::size_t k) {
    return FrameMetric::eps(k) > 0 ? sc(i, j, k) : -sc(i, j, k);
  };
  const Scalar half = Scalar::ratio(1, 2);
  Tensor<3> gamma;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        Scalar koszul = low(i, j, k) - low(j, k, i) + low(k, i, j);
        gamma(i, j, k) = FrameMetric::eps(k) > 0 ? half * koszul : -(half * koszul);
      }
  return ConnectionCoefficients(gamma);
}

CurvatureTensor curvature(const StructureConstants& sc, const ConnectionCoefficients& conn) {
  Tensor<4> r;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < n; ++l) {
          Scalar s;
          for (std::size_t m = 0; m < n; ++m) {
            s += conn(j, k, m) * conn(i, m, l);
            s -= conn(i, k, m) * conn(j, m, l);
            s -= sc(i, j, m) * conn(m, k, l);
          }
          r(i, j, k, l) = s;
        }
  return CurvatureTensor(r);
}

RicciData ricci_from_curvature(const CurvatureTensor& curv) {
  // weights of the three terms: -, -, +
  constexpr std::array<int, n> weight{-1, -1, 1};
  RicciData out;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Scalar s;
      for (std::size_t k = 0; k < n; ++k) {
        // g(R(e_i,e_k)e_j, e_k) = eps_k R^k_ikj
        const int w = weight[k] * FrameMetric::eps(k);
        if (w > 0) {
          s += curv(i, k, j, k);
        } else {
          s -= curv(i, k, j, k);
        }
      }
      out.rho(i, j) = s;
    }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      out.rho_op(i, j) = FrameMetric::eps(j) > 0 ? out.rho(i, j) : -out.rho(i, j);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Scalar s;
      for (std::size_t k = 0; k < n; ++k) {
        Scalar term = out.rho_op(i, k) * out.rho_op(j, k);
        if (FrameMetric::eps(k) > 0) {
          s += term;
        } else {
          s -= term;
        }
      }
      out.rho_sq(i, j) = s;
    }
  return out;
}

RicciData ricci(const StructureConstants& sc) {
  ConnectionCoefficients conn = levi_civita(sc);
  return ricci_from_curvature(curvature(sc, conn));
}

Tensor<3> torsion_residual(const StructureConstants& sc, const ConnectionCoefficients& conn) {
  Tensor<3> t;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) t(i, j, k) = conn(i, j, k) - conn(j, i, k) - sc(i, j, k);
  return t;
}

Tensor<3> metric_residual(const ConnectionCoefficients& conn) {
  Tensor<3> t;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        t(i, j, k) = Scalar(FrameMetric::eps(k)) * conn(i, j, k) + Scalar(FrameMetric::eps(j)) * conn(i, k, j);
  return t;
}

Tensor<4> bianchi_residual(const CurvatureTensor& curv) {
  Tensor<4> b;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < n; ++l) b(i, j, k, l) = curv(i, j, k, l) + curv(j, k, i, l) + curv(k, i, j, l);
  return b;
}

std::array<Scalar, 3> frame_abbreviations(const ConnectionCoefficients& conn) {
  return {conn(0, 1, 2), conn(1, 0, 2), conn(2, 0, 1)};
}

}  // namespace ein2
