#include "ein2/system.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace ein2 {

std::string to_string(Convention c) { return c == Convention::delta ? "delta" : "metric"; }

Convention parse_convention(std::string_view text) {
  if (text == "delta") return Convention::delta;
  if (text == "metric") return Convention::metric;
  throw std::invalid_argument("unknown convention '" + std::string(text) + "' (expected delta or metric)");
}

std::string to_string(Ein2Solution::Kind k) {
  switch (k) {
    case Ein2Solution::Kind::none:
      return "none";
    case Ein2Solution::Kind::point:
      return "point";
    case Ein2Solution::Kind::line:
      return "line";
    case Ein2Solution::Kind::plane:
      return "plane";
  }
  return "none";
}

Ein2System build_system(const RicciData& rd, Convention convention) {
  Ein2System sys;
  sys.convention = convention;
  std::size_t r = 0;
  for (std::size_t i = 0; i < kDim; ++i) {
    for (std::size_t j = i; j < kDim; ++j) {
      Ein2Row& row = sys.rows[r++];
      row.i = i;
      row.j = j;
      Scalar a;
      for (std::size_t k = 0; k < kDim; ++k) {
        Scalar term = rd.rho_op(i, k) * rd.rho_op(j, k);
        if (FrameMetric::eps(k) > 0) {
          a += term;
        } else {
          a -= term;
        }
      }
      row.a = a;
      row.b = FrameMetric::eps(j) > 0 ? rd.rho_op(i, j) : -rd.rho_op(i, j);
      if (i == j) {
        row.c = convention == Convention::delta ? Scalar(1) : Scalar(FrameMetric::eps(i));
      }
    }
  }
  return sys;
}

bool Ein2Solution::contains(const Scalar& l1, const Scalar& l2) const {
  switch (kind) {
    case Kind::none:
      return false;
    case Kind::plane:
      return true;
    case Kind::point:
      return point->l1 == l1 && point->l2 == l2;
    case Kind::line: {
      if (direction->l1.is_zero()) return base->l1 == l1;
      Scalar t = (l1 - base->l1) / direction->l1;
      return base->l2 + t * direction->l2 == l2;
    }
  }
  return false;
}

bool Ein2Solution::free_lambda1_at(const Scalar& l2) const {
  if (kind == Kind::plane) return true;
  if (kind != Kind::line) return false;
  return !direction->l1.is_zero() && direction->l2.is_zero() && base->l2 == l2;
}

bool Ein2Solution::has_lambda2(const Scalar& l2) const {
  switch (kind) {
    case Kind::none:
      return false;
    case Kind::plane:
      return true;
    case Kind::point:
      return point->l2 == l2;
    case Kind::line:
      return !direction->l2.is_zero() || base->l2 == l2;
  }
  return false;
}

Scalar sup_residual(const Ein2System& sys, const Scalar& l1, const Scalar& l2) {
  Scalar worst;
  for (const auto& row : sys.rows) {
    Scalar r = abs(row.evaluate(l1, l2));
    if (r > worst) worst = r;
  }
  return worst;
}

namespace {

struct Columns {
  Scalar bb, bc, cc, ba, ca;
};

Columns gram(const Ein2System& sys) {
  Columns g;
  for (const auto& row : sys.rows) {
    g.bb += row.b * row.b;
    g.bc += row.b * row.c;
    g.cc += row.c * row.c;
    g.ba += row.b * row.a;
    g.ca += row.c * row.a;
  }
  return g;
}

double system_tolerance(const Ein2System& sys) {
  double tol = 0.0;
  for (const auto& row : sys.rows) {
    tol = std::max({tol, row.a.tolerance(), row.b.tolerance(), row.c.tolerance()});
  }
  return tol;
}

bool column_is_zero(const Scalar& norm_sq, double tol) {
  if (norm_sq.is_exact()) return norm_sq.is_zero();
  return norm_sq.value() <= static_cast<long double>(tol) * tol;
}

int coefficient_rank(const Columns& g, double tol) {
  bool b_zero = column_is_zero(g.bb, tol);
  bool c_zero = column_is_zero(g.cc, tol);
  if (b_zero && c_zero) return 0;
  if (b_zero || c_zero) return 1;
  Scalar det = g.bb * g.cc - g.bc * g.bc;
  if (det.is_exact()) return det.is_zero() ? 1 : 2;
  // sin² of the angle between the two columns
  long double sin_sq = det.value() / (g.bb.value() * g.cc.value());
  return sin_sq <= tol ? 1 : 2;
}

/// Minimal sup-norm fit. The optimum of min_x max_i |r_i(x)| is attained where
/// (number of unknowns + 1) residuals are equal in magnitude, so enumerating
/// those equalities over every row subset and sign pattern finds it.
void chebyshev_fit(const Ein2System& sys, int rank, const Columns& g, Ein2Solution& out) {
  std::vector<const Ein2Row*> active;
  for (const auto& row : sys.rows) {
    if (!row.is_zero()) active.push_back(&row);
  }
  std::optional<Lambdas> best;
  Scalar best_value;
  auto consider = [&](const Scalar& l1, const Scalar& l2) {
    Scalar value = sup_residual(sys, l1, l2);
    if (!best || value < best_value) {
      best = Lambdas{l1, l2};
      best_value = value;
    }
  };

  if (rank == 0) {
    consider(Scalar(), Scalar());
  } else if (rank == 1) {
    // Residuals depend on one combination only; move along the nonzero column u.
    bool use_c = !column_is_zero(g.cc, system_tolerance(sys));
    auto u = [use_c](const Ein2Row& r) -> const Scalar& { return use_c ? r.c : r.b; };
    for (std::size_t p = 0; p < active.size(); ++p) {
      for (std::size_t q = p + 1; q < active.size(); ++q) {
        for (int s : {1, -1}) {
          // u_p t - h = -a_p ; u_q t - s h = -a_q
          const Ein2Row& rp = *active[p];
          const Ein2Row& rq = *active[q];
          Scalar det = u(rp) * Scalar(-s) + u(rq);
          if (det.is_zero()) continue;
          Scalar t = (Scalar(s) * rp.a - rq.a) / det;
          consider(use_c ? Scalar() : t, use_c ? t : Scalar());
        }
      }
    }
    if (!best) consider(Scalar(), Scalar());
  } else {
    for (std::size_t p = 0; p < active.size(); ++p) {
      for (std::size_t q = p + 1; q < active.size(); ++q) {
        for (std::size_t w = q + 1; w < active.size(); ++w) {
          for (int sq : {1, -1}) {
            for (int sw : {1, -1}) {
              const Ein2Row* rows[3] = {active[p], active[q], active[w]};
              const Scalar signs[3] = {Scalar(-1), Scalar(-sq), Scalar(-sw)};
              // columns: b, c, -s ; right-hand side -a
              auto det3 = [&](int replace) {
                auto entry = [&](int r, int col) -> Scalar {
                  if (col == replace) return -rows[r]->a;
                  if (col == 0) return rows[r]->b;
                  if (col == 1) return rows[r]->c;
                  return signs[r];
                };
                return entry(0, 0) * (entry(1, 1) * entry(2, 2) - entry(1, 2) * entry(2, 1)) -
                       entry(0, 1) * (entry(1, 0) * entry(2, 2) - entry(1, 2) * entry(2, 0)) +
                       entry(0, 2) * (entry(1, 0) * entry(2, 1) - entry(1, 1) * entry(2, 0));
              };
              Scalar det = det3(-1);
              if (det.is_zero()) continue;
              consider(det3(0) / det, det3(1) / det);
            }
          }
        }
      }
    }
    if (!best) consider(Scalar(), Scalar());
  }
  out.residual = best_value;
  out.best_fit = best;
}

}  // namespace

Ein2Solution solve_lambdas(const Ein2System& sys) {
  const double tol = system_tolerance(sys);
  const Columns g = gram(sys);
  const int rank = coefficient_rank(g, tol);

  Ein2Solution out;
  Lambdas candidate;
  switch (rank) {
    case 0:
      out.kind = Ein2Solution::Kind::plane;
      break;
    case 1: {
      out.kind = Ein2Solution::Kind::line;
      if (!column_is_zero(g.cc, tol)) {
        Scalar k = g.bc / g.cc;
        candidate = Lambdas{Scalar(), -g.ca / g.cc};
        out.direction = Lambdas{Scalar(1), -k};
      } else {
        candidate = Lambdas{-g.ba / g.bb, Scalar()};
        out.direction = Lambdas{Scalar(), Scalar(1)};
      }
      out.base = candidate;
      break;
    }
    default: {
      out.kind = Ein2Solution::Kind::point;
      Scalar det = g.bb * g.cc - g.bc * g.bc;
      candidate = Lambdas{(g.bc * g.ca - g.cc * g.ba) / det, (g.bc * g.ba - g.bb * g.ca) / det};
      out.point = candidate;
      break;
    }
  }

  out.residual = sup_residual(sys, candidate.l1, candidate.l2);
  if (!out.residual.is_zero()) {
    out.kind = Ein2Solution::Kind::none;
    out.point.reset();
    out.base.reset();
    out.direction.reset();
    chebyshev_fit(sys, rank, g, out);
  }
  return out;
}

Ein2Solution is_ein2(const StructureConstants& sc, Convention convention) {
  return solve_lambdas(build_system(ricci(sc), convention));
}

}  // namespace ein2
