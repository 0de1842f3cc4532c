#include "ein2/printed.hpp"

namespace ein2 {

namespace {

struct Table {
  Tensor<3> gamma;
  // nabla_{e_i} e_j = x1 e1 + x2 e2 + x3 e3, indices 1-based as printed
  void nabla(std::size_t i, std::size_t j, const Scalar& x1, const Scalar& x2, const Scalar& x3) {
    gamma(i - 1, j - 1, 0) = x1;
    gamma(i - 1, j - 1, 1) = x2;
    gamma(i - 1, j - 1, 2) = x3;
  }
};

Mat3 matrix(std::initializer_list<Scalar> entries) {
  Mat3 m;
  auto it = entries.begin();
  for (std::size_t i = 0; i < kDim; ++i)
    for (std::size_t j = 0; j < kDim; ++j) m(i, j) = *it++;
  return m;
}

const Scalar kZero;
const Scalar kOne(1);
const Scalar kHalf = Scalar::ratio(1, 2);

}  // namespace

ConnectionCoefficients printed_connection(const FamilyParams& p) {
  const Scalar& a = p.alpha;
  const Scalar& b = p.beta;
  const Scalar& g = p.gamma;
  const Scalar& d = p.delta;
  const Scalar& o = kZero;
  Table t;
  switch (p.family) {
    case Family::G1: {
      Scalar hb = kHalf * b;
      t.nabla(1, 1, o, -a, -a);
      t.nabla(2, 1, o, o, hb);
      t.nabla(3, 1, o, hb, o);
      t.nabla(1, 2, a, o, -hb);
      t.nabla(2, 2, o, o, a);
      t.nabla(3, 2, -hb, o, -a);
      t.nabla(1, 3, -a, -hb, o);
      t.nabla(2, 3, hb, a, o);
      t.nabla(3, 3, o, -a, o);
      break;
    }
    case Family::G2: {
      Scalar ha = kHalf * a;
      t.nabla(1, 1, o, o, o);
      t.nabla(2, 1, o, -g, ha);
      t.nabla(3, 1, o, ha, g);
      t.nabla(1, 2, o, o, ha - b);
      t.nabla(2, 2, g, o, o);
      t.nabla(3, 2, -ha, o, o);
      t.nabla(1, 3, o, ha - b, o);
      t.nabla(2, 3, ha, o, o);
      t.nabla(3, 3, g, o, o);
      break;
    }
    case Family::G3: {
      Scalar a1 = kHalf * (a - b - g);
      Scalar a2 = kHalf * (a - b + g);
      Scalar a3 = kHalf * (a + b - g);
      t.nabla(1, 1, o, o, o);
      t.nabla(2, 1, o, o, a2);
      t.nabla(3, 1, o, a3, o);
      t.nabla(1, 2, o, o, a1);
      t.nabla(2, 2, o, o, o);
      t.nabla(3, 2, -a3, o, o);
      t.nabla(1, 3, o, a1, o);
      t.nabla(2, 3, a2, o, o);
      t.nabla(3, 3, o, o, o);
      break;
    }
    case Family::G4: {
      const Scalar eta(p.eta);
      Scalar b1 = kHalf * a + eta - b;
      Scalar b2 = kHalf * a - eta;
      Scalar b3 = kHalf * a + eta;
      t.nabla(1, 1, o, o, o);
      t.nabla(2, 1, o, kOne, b2);
      t.nabla(3, 1, o, b3, -kOne);
      t.nabla(1, 2, o, o, b1);
      t.nabla(2, 2, -kOne, o, o);
      t.nabla(3, 2, -b3, o, o);
      t.nabla(1, 3, o, b1, o);
      t.nabla(2, 3, b2, o, o);
      t.nabla(3, 3, -kOne, o, o);
      break;
    }
    case Family::G5: {
      Scalar s = kHalf * (b + g);
      Scalar m = kHalf * (b - g);
      t.nabla(1, 1, o, o, a);
      t.nabla(2, 1, o, o, s);
      t.nabla(3, 1, o, -m, o);
      t.nabla(1, 2, o, o, s);
      t.nabla(2, 2, o, o, d);
      t.nabla(3, 2, m, o, o);
      t.nabla(1, 3, a, s, o);
      t.nabla(2, 3, s, d, o);
      t.nabla(3, 3, o, o, o);
      break;
    }
    case Family::G6: {
      Scalar s = kHalf * (b + g);
      Scalar m = kHalf * (b - g);
      t.nabla(1, 1, o, o, o);
      t.nabla(2, 1, o, -a, -m);
      t.nabla(3, 1, o, m, -d);
      t.nabla(1, 2, o, o, s);
      t.nabla(2, 2, a, o, o);
      t.nabla(3, 2, -m, o, o);
      t.nabla(1, 3, o, s, o);
      t.nabla(2, 3, -m, o, o);
      t.nabla(3, 3, -d, o, o);
      break;
    }
    case Family::G7: {
      Scalar hg = kHalf * g;
      t.nabla(1, 1, o, a, a);
      t.nabla(2, 1, o, b, b + hg);
      t.nabla(3, 1, o, -(b - hg), -b);
      t.nabla(1, 2, -a, o, hg);
      t.nabla(2, 2, -b, o, d);
      t.nabla(3, 2, b - hg, o, -d);
      t.nabla(1, 3, a, hg, o);
      t.nabla(2, 3, b + hg, d, o);
      t.nabla(3, 3, -b, -d, o);
      break;
    }
  }
  return ConnectionCoefficients(t.gamma);
}

Mat3 printed_ricci_operator(const FamilyParams& p) {
  const Scalar& a = p.alpha;
  const Scalar& b = p.beta;
  const Scalar& g = p.gamma;
  const Scalar& d = p.delta;
  const Scalar& o = kZero;
  switch (p.family) {
    case Family::G1: {
      Scalar hb2 = kHalf * b * b;
      Scalar a2 = Scalar(2) * a * a;
      return matrix({-hb2, -a * b, -a * b,     //
                     -a * b, -(a2 + hb2), -a2,  //
                     a * b, a2, a2 - hb2});
    }
    case Family::G2: {
      Scalar diag = kHalf * a * a - a * b;
      Scalar off = a * g - Scalar(2) * b * g;
      return matrix({-(kHalf * a * a + Scalar(2) * g * g), o, o,  //
                     o, diag, off,                                //
                     o, -off, diag});
    }
    case Family::G3: {
      Scalar a1 = kHalf * (a - b - g);
      Scalar a2 = kHalf * (a - b + g);
      Scalar a3 = kHalf * (a + b - g);
      return matrix({-a1 * a2 - a1 * a3 - b * a2 - g * a3, o, o,  //
                     o, a2 * a3 - a1 * a2 + a * a1 - g * a3, o,   //
                     o, o, -a1 * a3 + a2 * a3 + a * a1 - b * a2});
    }
    case Family::G4: {
      const Scalar eta(p.eta);
      const Scalar two(2);
      Scalar w = a - two * b + two * eta;
      return matrix({-(kHalf * a * a), o, o,                                           //
                     o, kHalf * a * a + two * eta * (a - b) - a * b + two, -w,         //
                     o, w, kHalf * a * a - a * b - two + two * eta * b});
    }
    case Family::G5: {
      Scalar q = kHalf * (b * b - g * g);
      return matrix({a * a + a * d + q, o, o,  //
                     o, a * d + d * d - q, o,  //
                     o, o, a * a + d * d + kHalf * (b + g) * (b + g)});
    }
    case Family::G6: {
      Scalar q = kHalf * (b * b - g * g);
      return matrix({-a * a - d * d + kHalf * (b - g) * (b - g), o, o,  //
                     o, -a * a - a * d + q, o,                          //
                     o, o, -d * d - a * d - q});
    }
    case Family::G7: {
      Scalar w = a * a - a * d + b * g;
      Scalar hg2 = kHalf * g * g;
      return matrix({-hg2, o, o,                          //
                     o, a * d - a * a - b * g + hg2, -w,  //
                     o, w, -a * d + a * a + b * g + hg2});
    }
  }
  return Mat3();
}

std::vector<PrintedRow> printed_system(const FamilyParams& p) {
  const Scalar& a = p.alpha;
  const Scalar& b = p.beta;
  const Scalar& g = p.gamma;
  const Scalar& d = p.delta;
  const Scalar two(2);
  const Scalar three(3);
  const Scalar quarter = Scalar::ratio(1, 4);
  const Scalar one(1);
  const Scalar& o = kZero;
  switch (p.family) {
    case Family::G1: {
      Scalar b2 = b * b;
      Scalar b4 = b2 * b2;
      Scalar a2 = a * a;
      return {{quarter * b4, -kHalf * b2, one},
              {three * a2 * b2 + quarter * b4, -(two * a2 + kHalf * b2), one},
              {three * a2 * b2 - quarter * b4, -two * a2 + kHalf * b2, one},
              {a * b * b2, -a * b, o},
              {three * a2 * b2, -two * a2, o}};
    }
    case Family::G2: {
      Scalar r = kHalf * a * a + two * g * g;
      Scalar s = (a - two * b) * (a - two * b);
      Scalar u = two * b * g - a * g;
      return {{r * r, -r, one},
              {(quarter * a * a - g * g) * s, kHalf * a * a - a * b, one},
              {(g * g - quarter * a * a) * s, a * b - kHalf * a * a, one},
              {(a * a - two * a * b) * u, u, o}};
    }
    case Family::G3: {
      Scalar x = kHalf * a * a - kHalf * (b - g) * (b - g);
      Scalar y = kHalf * b * b - kHalf * (a - g) * (a - g);
      Scalar z = kHalf * g * g - kHalf * (a - b) * (a - b);
      return {{x * x, -x, one}, {y * y, -y, one}, {z * z, -z, -one}};
    }
    case Family::G4: {
      const Scalar eta(p.eta);
      Scalar u = kHalf * a * a + two * eta * (a - b) - a * b + two;
      Scalar w = a - two * b + two * eta;
      Scalar v = kHalf * a * a - a * b - two + two * eta * b;
      return {{quarter * a * a * a * a, -kHalf * a * a, one},
              {u * u - w * w, u, one},
              {v * v - w * w, v, -one},
              {a * w * w, w, o}};
    }
    case Family::G5: {
      Scalar x = a * a + a * d + kHalf * (b * b - g * g);
      Scalar y = a * d + d * d - kHalf * (b * b - g * g);
      Scalar z = a * a + d * d + kHalf * (b + g) * (b + g);
      return {{x * x, x, one}, {y * y, y, one}, {z * z, z, -one}};
    }
    case Family::G6: {
      Scalar x = a * a + d * d - kHalf * (b - g) * (b - g);
      Scalar y = a * a + a * d - kHalf * (b * b - g * g);
      Scalar z = d * d + a * d + kHalf * (b * b - g * g);
      return {{x * x, -x, one}, {y * y, -y, one}, {-(z * z), z, one}};
    }
    case Family::G7: {
      Scalar hg2 = kHalf * g * g;
      Scalar u = a * d - a * a - b * g + hg2;
      Scalar w = a * a - a * d + b * g;
      Scalar v = -a * d + a * a + b * g + hg2;
      return {{quarter * g * g * g * g, -hg2, one},
              {u * u - w * w, u, one},
              {v * v - w * w, v, -one},
              {w * g * g, w, o}};
    }
  }
  return {};
}

namespace {

bool same_up_to_sign(const Scalar& a1, const Scalar& b1, const Scalar& c1, const Scalar& a2, const Scalar& b2,
                     const Scalar& c2) {
  if (a1 == a2 && b1 == b2 && c1 == c2) return true;
  return a1 == -a2 && b1 == -b2 && c1 == -c2;
}

}  // namespace

bool match_printed_system(const FamilyParams& p) {
  validate_params(p);
  const Ein2System sys = build_system(ricci(build_family(p)), Convention::delta);
  std::vector<PrintedRow> printed;
  for (const auto& row : printed_system(p)) {
    if (!row.is_zero()) printed.push_back(row);
  }
  std::vector<const Ein2Row*> computed;
  for (const auto& row : sys.rows) {
    if (!row.is_zero()) computed.push_back(&row);
  }
  for (const auto& pr : printed) {
    bool found = false;
    for (const auto* cr : computed) {
      if (same_up_to_sign(pr.a, pr.b, pr.c, cr->a, cr->b, cr->c)) {
        found = true;
        break;
      }
    }
    if (!found) return false;
  }
  for (const auto* cr : computed) {
    bool found = false;
    for (const auto& pr : printed) {
      if (same_up_to_sign(pr.a, pr.b, pr.c, cr->a, cr->b, cr->c)) {
        found = true;
        break;
      }
    }
    if (!found) return false;
  }
  return true;
}

}  // namespace ein2
