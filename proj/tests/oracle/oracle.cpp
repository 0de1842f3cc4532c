#include "oracle.hpp"

#include <stdexcept>
#include <vector>

namespace oracle {

namespace {

constexpr int kEps[3] = {1, 1, -1};

using Row = std::vector<Q>;

/// In-place reduced row echelon form over the first `vars` columns; returns pivot columns.
std::vector<std::size_t> rref(std::vector<Row>& m, std::size_t vars) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t col = 0; col < vars && r < m.size(); ++col) {
    std::size_t p = r;
    while (p < m.size() && m[p][col] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[r]);
    Q inv = 1 / m[r][col];
    for (auto& x : m[r]) x *= inv;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == r || m[i][col] == 0) continue;
      Q f = m[i][col];
      for (std::size_t k = 0; k < m[i].size(); ++k) m[i][k] -= f * m[r][k];
    }
    pivots.push_back(col);
    ++r;
  }
  return pivots;
}

M3 mul(const M3& a, const M3& b) {
  M3 out{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) out[i][j] += a[i][k] * b[k][j];
  return out;
}

}  // namespace

T3 brackets(const ein2::StructureConstants& sc) {
  T3 c{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) c[i][j][k] = sc(i, j, k).rational();
  return c;
}

bool jacobi_holds(const T3& c) {
  auto br = [&](const std::array<Q, 3>& x, const std::array<Q, 3>& y) {
    std::array<Q, 3> out{};
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        for (int k = 0; k < 3; ++k) out[k] += x[i] * y[j] * c[i][j][k];
    return out;
  };
  auto unit = [](int i) {
    std::array<Q, 3> e{};
    e[i] = 1;
    return e;
  };
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) {
        auto s1 = br(br(unit(i), unit(j)), unit(k));
        auto s2 = br(br(unit(j), unit(k)), unit(i));
        auto s3 = br(br(unit(k), unit(i)), unit(j));
        for (int l = 0; l < 3; ++l) {
          if (s1[l] + s2[l] + s3[l] != 0) return false;
        }
      }
  return true;
}

T3 connection(const T3& c) {
  auto u = [](int i, int j, int k) { return static_cast<std::size_t>(9 * i + 3 * j + k); };
  std::vector<Row> m;
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j)
      for (int k = 0; k < 3; ++k) {
        Row r(28);
        r[u(i, j, k)] += 1;
        r[u(j, i, k)] -= 1;
        r[27] = c[i][j][k];
        m.push_back(r);
      }
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = j; k < 3; ++k) {
        Row r(28);
        r[u(i, j, k)] += kEps[k];
        r[u(i, k, j)] += kEps[j];
        m.push_back(r);
      }
  auto pivots = rref(m, 27);
  if (pivots.size() != 27) throw std::logic_error("connection equations are singular");
  T3 g{};
  for (std::size_t r = 0; r < 27; ++r) {
    std::size_t v = pivots[r];
    g[v / 9][(v / 3) % 3][v % 3] = m[r][27];
  }
  return g;
}

M3 ricci(const T3& c) {
  T3 g = connection(c);
  std::array<M3, 3> n{};
  for (int i = 0; i < 3; ++i)
    for (int l = 0; l < 3; ++l)
      for (int m = 0; m < 3; ++m) n[i][l][m] = g[i][m][l];
  auto curv = [&](int i, int j) {
    M3 a = mul(n[i], n[j]);
    M3 b = mul(n[j], n[i]);
    M3 out{};
    for (int l = 0; l < 3; ++l)
      for (int m = 0; m < 3; ++m) {
        out[l][m] = a[l][m] - b[l][m];
        for (int k = 0; k < 3; ++k) out[l][m] -= c[i][j][k] * n[k][l][m];
      }
    return out;
  };
  M3 rho{};
  for (int l = 0; l < 3; ++l)
    for (int j = 0; j < 3; ++j) {
      M3 r = curv(l, j);
      for (int k = 0; k < 3; ++k) rho[j][k] += r[l][k];
    }
  return rho;
}

Ricci ricci_data(const T3& c) {
  Ricci out;
  out.rho = ricci(c);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) out.rho_op[i][j] = kEps[j] * out.rho[i][j];
  // g(S e_i, S e_j) with S e_i = sum_k eps_k rho_ik e_k
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) out.rho_sq[i][j] += Q(kEps[k]) * out.rho[i][k] * out.rho[j][k];
  return out;
}

std::array<std::array<Q, 3>, 6> ein2_rows(const Ricci& r, ein2::Convention convention) {
  std::array<std::array<Q, 3>, 6> rows{};
  std::size_t n = 0;
  for (int i = 0; i < 3; ++i)
    for (int j = i; j < 3; ++j) {
      Q c = i == j ? Q(convention == ein2::Convention::metric ? kEps[i] : 1) : Q(0);
      rows[n++] = {r.rho_sq[i][j], r.rho[i][j], c};
    }
  return rows;
}

Solution solve(const std::array<std::array<Q, 3>, 6>& rows) {
  std::vector<Row> m;
  for (const auto& r : rows) m.push_back({r[1], r[2], -r[0]});
  auto pivots = rref(m, 2);
  Solution s;
  for (std::size_t r = pivots.size(); r < m.size(); ++r) {
    if (m[r][2] != 0) return s;
  }
  using Kind = ein2::Ein2Solution::Kind;
  if (pivots.size() == 2) {
    s.kind = Kind::point;
    s.point = std::array<Q, 2>{m[0][2], m[1][2]};
  } else if (pivots.size() == 1) {
    s.kind = Kind::line;
    std::size_t p = pivots[0];
    std::size_t f = 1 - p;
    std::array<Q, 2> base{};
    base[p] = m[0][2];
    std::array<Q, 2> dir{};
    dir[f] = 1;
    dir[p] = -m[0][f];
    s.base = base;
    s.direction = dir;
  } else {
    s.kind = Kind::plane;
  }
  return s;
}

bool agrees(const Solution& s, const ein2::Ein2Solution& prod) {
  if (s.kind != prod.kind) return false;
  using Kind = ein2::Ein2Solution::Kind;
  if (s.kind == Kind::point) return prod.contains(ein2::Scalar((*s.point)[0]), ein2::Scalar((*s.point)[1]));
  if (s.kind == Kind::line) {
    const auto& b = *s.base;
    const auto& d = *s.direction;
    return prod.contains(ein2::Scalar(b[0]), ein2::Scalar(b[1])) &&
           prod.contains(ein2::Scalar(Q(b[0] + d[0])), ein2::Scalar(Q(b[1] + d[1])));
  }
  return true;
}

}  // namespace oracle
