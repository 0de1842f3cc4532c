#pragma once

#include <array>
#include <cstddef>

#include "ein2/scalar.hpp"

namespace ein2 {

inline constexpr std::size_t kDim = 3;

/// Pseudo-orthonormal frame e1, e2, e3 with e3 timelike: g(e_i, e_j) = eps_i delta_ij.
struct FrameMetric {
  static constexpr std::array<int, kDim> kSignature{1, 1, -1};
  static constexpr int eps(std::size_t i) { return kSignature[i]; }
  static constexpr int g(std::size_t i, std::size_t j) { return i == j ? kSignature[i] : 0; }
};

constexpr std::size_t ipow(std::size_t base, std::size_t exp) {
  return exp == 0 ? 1 : base * ipow(base, exp - 1);
}

/// Dense 3 x ... x 3 array of scalars, row-major in its indices.
template <std::size_t Rank>
class Tensor {
 public:
  static constexpr std::size_t kSize = ipow(kDim, Rank);

  template <class... Idx>
  Scalar& operator()(Idx... idx) {
    static_assert(sizeof...(Idx) == Rank);
    return data_[offset(static_cast<std::size_t>(idx)...)];
  }
  template <class... Idx>
  const Scalar& operator()(Idx... idx) const {
    static_assert(sizeof...(Idx) == Rank);
    return data_[offset(static_cast<std::size_t>(idx)...)];
  }

  auto begin() const { return data_.begin(); }
  auto end() const { return data_.end(); }
  auto begin() { return data_.begin(); }
  auto end() { return data_.end(); }

  bool is_zero() const {
    for (const auto& x : data_) {
      if (!x.is_zero()) return false;
    }
    return true;
  }
  bool is_exact() const {
    for (const auto& x : data_) {
      if (!x.is_exact()) return false;
    }
    return true;
  }

 private:
  template <class... Idx>
  static constexpr std::size_t offset(Idx... idx) {
    std::size_t off = 0;
    ((off = off * kDim + idx), ...);
    return off;
  }

  std::array<Scalar, kSize> data_{};
};

using Vec3 = Tensor<1>;
using Mat3 = Tensor<2>;

/// Tolerant element-wise equality.
template <std::size_t Rank>
bool operator==(const Tensor<Rank>& a, const Tensor<Rank>& b) {
  auto it = b.begin();
  for (const auto& x : a) {
    if (!(x == *it++)) return false;
  }
  return true;
}

}  // namespace ein2
