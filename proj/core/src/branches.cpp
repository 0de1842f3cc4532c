#include "ein2/branches.hpp"

#include <algorithm>
#include <stdexcept>

namespace ein2 {

namespace {

const Scalar kHalf = Scalar::ratio(1, 2);
const Scalar kQuarter = Scalar::ratio(1, 4);
const Scalar kTwo(2);
const Scalar kThree(3);

bool z(const Scalar& x) { return x.is_zero(); }
Scalar sq(const Scalar& x) { return x * x; }

FamilyParams make(Family f, Scalar a, Scalar b, Scalar g = Scalar(), Scalar d = Scalar(), int eta = 1) {
  FamilyParams p;
  p.family = f;
  p.alpha = std::move(a);
  p.beta = std::move(b);
  p.gamma = std::move(g);
  p.delta = std::move(d);
  p.eta = eta;
  return p;
}

Lambdas zero_lambdas(const FamilyParams&) { return {Scalar(), Scalar()}; }

// ---- case identities of each derivation ----

Lambdas g1_identities(const FamilyParams& p) {
  const Scalar& b = p.beta;
  Scalar l1 = kThree * sq(b) * kHalf;
  return {l1, l1 * sq(b) * kHalf - kQuarter * sq(sq(b))};
}

Lambdas g2_identities(const FamilyParams& p) {
  Scalar r = kHalf * sq(p.alpha) + kTwo * sq(p.gamma);
  return {r, Scalar()};
}

Lambdas g3_equal_ab(const FamilyParams& p) {
  const Scalar& a = p.alpha;
  const Scalar& g = p.gamma;
  Scalar l1 = g * (sq(kTwo * a - g) + sq(g)) / (Scalar(4) * a);
  return {l1, kQuarter * sq(sq(g)) - kHalf * sq(g) * l1};
}

Lambdas g3_sum_equals_gamma(const FamilyParams& p) { return {kTwo * p.alpha * p.beta, Scalar()}; }

Lambdas g3_generic(const FamilyParams& p) {
  const Scalar& a = p.alpha;
  const Scalar& b = p.beta;
  const Scalar& g = p.gamma;
  Scalar l1 = g * (a + b - g);
  Scalar l2 = (kHalf * sq(a) - kHalf * sq(b - g)) * (kHalf * sq(b) - kHalf * sq(a - g));
  return {l1, l2};
}

Lambdas g4_resonant(const FamilyParams& p) { return {kHalf * sq(p.alpha), Scalar()}; }

Lambdas g4_generic(const FamilyParams& p) {
  const Scalar& a = p.alpha;
  const Scalar& b = p.beta;
  const Scalar eta(p.eta);
  Scalar l1 = -a * (a - kTwo * b + kTwo * eta);
  Scalar l2 = -(kHalf * a * a * a) * (kThree * kHalf * a - kTwo * b + kTwo * eta);
  return {l1, l2};
}

Lambdas g5_null_difference(const FamilyParams& p) {
  const Scalar& a = p.alpha;
  const Scalar& b = p.beta;
  const Scalar& g = p.gamma;
  const Scalar& d = p.delta;
  Scalar y = a * d + sq(d) - kHalf * (sq(b) - sq(g));
  Scalar zz = sq(a) + sq(d) + kHalf * sq(b + g);
  Scalar den = sq(a) + a * d + kTwo * sq(d) + sq(g) + b * g;
  Scalar l1 = -(sq(y) + sq(zz)) / den;
  Scalar l2 = zz * y * (sq(a) - a * d + b * g + sq(b)) / den;
  return {l1, l2};
}

Scalar g5_lambda2(const FamilyParams& p) {
  const Scalar& a = p.alpha;
  const Scalar& b = p.beta;
  const Scalar& g = p.gamma;
  const Scalar& d = p.delta;
  Scalar q = sq(b) - sq(g);
  return a * d * sq(a + d) + kHalf * q * (sq(d) - sq(a)) - kQuarter * sq(q);
}

Lambdas g5_generic(const FamilyParams& p) { return {-sq(p.alpha + p.delta), g5_lambda2(p)}; }

Lambdas g6_null_difference(const FamilyParams& p) {
  const Scalar& a = p.alpha;
  const Scalar& b = p.beta;
  const Scalar& g = p.gamma;
  const Scalar& d = p.delta;
  Scalar q = kHalf * (sq(b) - sq(g));
  Scalar y = sq(a) + a * d - q;
  Scalar zz = sq(d) + a * d + q;
  Scalar den = sq(a + d);
  return {(sq(y) + sq(zz)) / den, y * zz * (sq(d) - sq(a) + sq(b) - sq(g)) / den};
}

Lambdas g6_generic(const FamilyParams& p) {
  const Scalar& a = p.alpha;
  const Scalar& b = p.beta;
  const Scalar& g = p.gamma;
  const Scalar& d = p.delta;
  Scalar l1 = kTwo * sq(a) + sq(d) + a * d + b * g - sq(b);
  Scalar x = sq(a) + sq(d) - kHalf * sq(b - g);
  return {l1, l1 * x - sq(x)};
}

// ---- implicit relations ----

Scalar g5_s(const Scalar& b, const Scalar& g) { return sq(sq(b) - sq(g)) + sq(sq(b + g)); }
Scalar g5_k(const Scalar& b, const Scalar& g) { return kThree * sq(b) + kThree * sq(g) - kTwo * g * b; }

Quadratic g5_quadratic(const FamilyParams& p) {
  const Scalar& b = p.beta;
  const Scalar& g = p.gamma;
  Scalar s = g5_s(b, g);
  return {g * g5_k(b, g), kHalf * b * s, kQuarter * b * b * b * s};
}

Quadratic g6_quadratic(const FamilyParams& p) {
  const Scalar& b = p.beta;
  const Scalar& g = p.gamma;
  return {b + g, g * b * (g - b), -kHalf * b * b * b * sq(b - g)};
}

bool honours_pins(const FamilyParams& p, const ParamOverrides& pins) {
  for (const auto& [name, v] : pins) {
    const Scalar actual = name == "alpha"   ? p.alpha
                          : name == "beta"  ? p.beta
                          : name == "gamma" ? p.gamma
                          : name == "delta" ? p.delta
                                            : Scalar(p.eta);
    if (!(actual == v)) return false;
  }
  return true;
}

Scalar quadratic_at_alpha(const Quadratic& q, const Scalar& alpha) {
  Scalar x = sq(alpha);
  return q[0] * sq(x) + q[1] * x + q[2];
}

/// A positive root x of the quadratic chosen by the sampler, or nullopt.
std::optional<Scalar> positive_root(const Scalar& c2, const Scalar& neg_c1, const Scalar& disc,
                                    Sampler& s, double tol) {
  if (z(c2) || disc.sign() < 0) return std::nullopt;
  Scalar root = neg_c1 + Scalar(s.sign()) * sqrt(disc, tol);
  Scalar x = root / (kTwo * c2);
  if (x.sign() <= 0) return std::nullopt;
  return x;
}

std::vector<BranchSpec> build_catalog() {
  std::vector<BranchSpec> c;
  auto add = [&c](BranchSpec spec) { c.push_back(std::move(spec)); };
  auto free_l1 = [] { return LambdaSpec{"λ₂ = 0, λ₁ free", true, {}}; };
  auto stated = [](std::string text, LambdaFn fn) { return LambdaSpec{std::move(text), false, std::move(fn)}; };

  // ---------------- G1 ----------------
  add({"2.3", "2.3", Family::G1, "β = 0, α ≠ 0", false, "", stated("λ₁ = λ₂ = 0", zero_lambdas),
       Rederivation{"λ₁ = 3β²/2, λ₂ = λ₁β²/2 − β⁴/4", g1_identities},
       [](const FamilyParams& p) { return z(p.beta) && !z(p.alpha); },
       [](Sampler& s, double) { return make(Family::G1, s.param("alpha", true), Scalar()); }, {}});

  // ---------------- G2 ----------------
  add({"2.5", "2.5", Family::G2, "α = 2β, γ ≠ 0", false, "",
       stated("λ₁ = α²/2 + 2γ², λ₂ = 0",
              [](const FamilyParams& p) { return Lambdas{kHalf * sq(p.alpha) + kTwo * sq(p.gamma), Scalar()}; }),
       Rederivation{"λ₂ = 0, λ₁ = α²/2 + 2γ²", g2_identities},
       [](const FamilyParams& p) { return p.alpha == kTwo * p.beta && !z(p.gamma); },
       [](Sampler& s, double) {
         Scalar b = s.param("beta");
         return make(Family::G2, kTwo * b, b, s.param("gamma", true));
       },
       {}});

  // ---------------- G3 ----------------
  add({"2.7(i)", "2.7", Family::G3, "α = β, γ = 0", false, "", free_l1(), std::nullopt,
       [](const FamilyParams& p) { return p.alpha == p.beta && z(p.gamma); },
       [](Sampler& s, double) {
         Scalar a = s.param("alpha");
         return make(Family::G3, a, a, Scalar());
       },
       {}});
  add({"2.7(ii)", "2.7", Family::G3, "α = β, γ ≠ 0, α ≠ 0", false, "",
       stated("λ₁ = γ[(2α − γ)² + γ²]/(4α), λ₂ = γ³(−2α² + 3αγ − γ²)/(4α)",
              [](const FamilyParams& p) {
                const Scalar& a = p.alpha;
                const Scalar& g = p.gamma;
                Scalar den = Scalar(4) * a;
                return Lambdas{g * (sq(kTwo * a - g) + sq(g)) / den,
                               g * g * g * (-kTwo * sq(a) + kThree * a * g - sq(g)) / den};
              }),
       Rederivation{"λ₁ = γ[(2α − γ)² + γ²]/(4α), λ₂ = γ⁴/4 − γ²λ₁/2", g3_equal_ab},
       [](const FamilyParams& p) { return p.alpha == p.beta && !z(p.gamma) && !z(p.alpha); },
       [](Sampler& s, double) {
         Scalar a = s.param("alpha", true);
         return make(Family::G3, a, a, s.param("gamma", true));
       },
       {}});
  add({"2.7(iii)", "2.7", Family::G3, "α = 0, β ≠ 0, β = γ", false, "", free_l1(), std::nullopt,
       [](const FamilyParams& p) { return z(p.alpha) && !z(p.beta) && p.beta == p.gamma; },
       [](Sampler& s, double) {
         Scalar b = s.param("beta", true);
         return make(Family::G3, Scalar(), b, b);
       },
       {}});
  add({"2.7(iv)", "2.7", Family::G3, "β = 0, α ≠ 0, α = γ", false, "", free_l1(), std::nullopt,
       [](const FamilyParams& p) { return z(p.beta) && !z(p.alpha) && p.alpha == p.gamma; },
       [](Sampler& s, double) {
         Scalar a = s.param("alpha", true);
         return make(Family::G3, a, Scalar(), a);
       },
       {}});
  add({"2.7(v)", "2.7", Family::G3, "α ≠ β, αβ ≠ 0, α + β − γ = 0", false, "",
       stated("λ₁ = 2αβ, λ₂ = 0", [](const FamilyParams& p) { return Lambdas{kTwo * p.alpha * p.beta, Scalar()}; }),
       Rederivation{"λ₂ = 0, λ₁ = 2αβ", g3_sum_equals_gamma},
       [](const FamilyParams& p) {
         return !(p.alpha == p.beta) && !z(p.alpha * p.beta) && z(p.alpha + p.beta - p.gamma);
       },
       [](Sampler& s, double) {
         Scalar a = s.param("alpha", true);
         Scalar b = s.param("beta", true);
         return make(Family::G3, a, b, a + b);
       },
       {}});
  add({"2.7(vi)", "2.7", Family::G3, "α ≠ β, α + β − γ ≠ 0, γ = α − β", false, "",
       stated("λ₁ = 2β(α − β), λ₂ = 0",
              [](const FamilyParams& p) { return Lambdas{kTwo * p.beta * (p.alpha - p.beta), Scalar()}; }),
       Rederivation{"λ₁ = γ(α + β − γ), λ₂ = [α²/2 − (β − γ)²/2][β²/2 − (α − γ)²/2]", g3_generic},
       [](const FamilyParams& p) {
         return !(p.alpha == p.beta) && !z(p.alpha + p.beta - p.gamma) && p.gamma == p.alpha - p.beta;
       },
       [](Sampler& s, double) {
         Scalar a = s.param("alpha");
         Scalar b = s.param("beta");
         return make(Family::G3, a, b, a - b);
       },
       {}});
  add({"2.7(vii)", "2.7", Family::G3, "α ≠ β, α + β − γ ≠ 0, γ = β − α", false, "",
       stated("λ₁ = 2α(β − α), λ₂ = 0",
              [](const FamilyParams& p) { return Lambdas{kTwo * p.alpha * (p.beta - p.alpha), Scalar()}; }),
       Rederivation{"λ₁ = γ(α + β − γ), λ₂ = [α²/2 − (β − γ)²/2][β²/2 − (α − γ)²/2]", g3_generic},
       [](const FamilyParams& p) {
         return !(p.alpha == p.beta) && !z(p.alpha + p.beta - p.gamma) && p.gamma == p.beta - p.alpha;
       },
       [](Sampler& s, double) {
         Scalar a = s.param("alpha");
         Scalar b = s.param("beta");
         return make(Family::G3, a, b, b - a);
       },
       {}});
  add({"2.7(viii)", "2.7", Family::G3, "α ≠ β, α + β − γ ≠ 0, γ = ±√(α² + β²)", false, "γ² = α² + β²",
       stated("λ₁ = ±√(α² + β²)(α + β ∓ √(α² + β²)), "
              "λ₂ = [α²/2 − (β ± √(α² + β²))²/2][β²/2 − (α ± √(α² + β²))²/2]",
              [](const FamilyParams& p) {
                // the ± sign is the sign of γ, so ±√(α² + β²) = γ
                const Scalar& a = p.alpha;
                const Scalar& b = p.beta;
                const Scalar& g = p.gamma;
                return Lambdas{g * (a + b - g), (kHalf * sq(a) - kHalf * sq(b + g)) * (kHalf * sq(b) - kHalf * sq(a + g))};
              }),
       Rederivation{"λ₁ = γ(α + β − γ), λ₂ = [α²/2 − (β − γ)²/2][β²/2 − (α − γ)²/2]", g3_generic},
       [](const FamilyParams& p) {
         return !(p.alpha == p.beta) && !z(p.alpha + p.beta - p.gamma) && sq(p.gamma) == sq(p.alpha) + sq(p.beta);
       },
       [](Sampler& s, double tol) {
         if (s.pinned("alpha") || s.pinned("beta")) {
           Scalar a = s.param("alpha");
           Scalar b = s.param("beta");
           Scalar g = Scalar(s.sign()) * sqrt(sq(a) + sq(b), tol);
           return make(Family::G3, a, b, g);
         }
         if (s.one_in(8)) {
           Scalar a = s.grid_nonzero();
           return make(Family::G3, a, Scalar(), -a);
         }
         // Pythagorean triple k(m² − n², 2mn, m² + n²)
         long m = static_cast<long>(s.below(4)) + 2;
         long n = static_cast<long>(s.below(static_cast<std::uint64_t>(m - 1))) + 1;
         Scalar k = abs(s.grid_nonzero());
         Scalar u = k * Scalar(m * m - n * n);
         Scalar v = k * Scalar(2 * m * n);
         Scalar r = k * Scalar(m * m + n * n);
         if (s.one_in(2)) std::swap(u, v);
         Scalar a = Scalar(s.sign()) * u;
         Scalar b = Scalar(s.sign()) * v;
         return make(Family::G3, a, b, Scalar(s.sign()) * r);
       },
       {}});

  // ---------------- G4 ----------------
  add({"2.9(i)", "2.9", Family::G4, "α = 0, β = η", false, "", free_l1(), std::nullopt,
       [](const FamilyParams& p) { return z(p.alpha) && p.beta == Scalar(p.eta); },
       [](Sampler& s, double) {
         int eta = s.eta();
         return make(Family::G4, Scalar(), Scalar(eta), Scalar(), Scalar(), eta);
       },
       {}});
  add({"2.9(ii)", "2.9", Family::G4, "α ≠ 0, β = α/2 + η", false, "",
       stated("λ₁ = α²/2, λ₂ = 0", [](const FamilyParams& p) { return Lambdas{kHalf * sq(p.alpha), Scalar()}; }),
       Rederivation{"λ₂ = 0, λ₁ = α²/2", g4_resonant},
       [](const FamilyParams& p) { return !z(p.alpha) && p.beta == kHalf * p.alpha + Scalar(p.eta); },
       [](Sampler& s, double) {
         Scalar a = s.param("alpha", true);
         int eta = s.eta();
         return make(Family::G4, a, kHalf * a + Scalar(eta), Scalar(), Scalar(), eta);
       },
       {}});
  add({"2.9(iii)", "2.9", Family::G4, "α = 0, β ≠ η", false, "", stated("λ₁ = λ₂ = 0", zero_lambdas),
       Rederivation{"λ₁ = −α(α − 2β + 2η), λ₂ = −(α³/2)(3α/2 − 2β + 2η)", g4_generic},
       [](const FamilyParams& p) { return z(p.alpha) && !(p.beta == Scalar(p.eta)); },
       [](Sampler& s, double) {
         int eta = s.eta();
         return make(Family::G4, Scalar(), s.param("beta"), Scalar(), Scalar(), eta);
       },
       {}});

  // ---------------- G5 ----------------
  const Rederivation g5_case1{
      "λ₁ = −[(αδ + δ² − (β² − γ²)/2)² + (α² + δ² + (β + γ)²/2)²]/(α² + αδ + 2δ² + γ² + βγ), "
      "λ₂ = (α² + δ² + (β + γ)²/2)(αδ + δ² − (β² − γ²)/2)(α² − αδ + βγ + β²)/(α² + αδ + 2δ² + γ² + βγ)",
      g5_null_difference};
  const Rederivation g5_case2{
      "λ₁ = −(α + δ)², λ₂ = αδ(α + δ)² + (β² − γ²)(δ² − α²)/2 − (β² − γ²)²/4", g5_generic};
  add({"3.2(i)", "3.2", Family::G5, "γ = −β, α = δ, δ ≠ 0", false, "",
       stated("λ₁ = −2α², λ₂ = 0", [](const FamilyParams& p) { return Lambdas{-kTwo * sq(p.alpha), Scalar()}; }),
       g5_case1, [](const FamilyParams& p) { return p.gamma == -p.beta && p.alpha == p.delta && !z(p.delta); },
       [](Sampler& s, double) {
         Scalar b = s.param("beta");
         Scalar a = s.param("alpha", true);
         return make(Family::G5, a, b, -b, a);
       },
       {}});
  add({"3.2(ii)", "3.2", Family::G5, "α = β = γ = 0, δ ≠ 0", false, "",
       stated("λ₁ = −δ², λ₂ = 0", [](const FamilyParams& p) { return Lambdas{-sq(p.delta), Scalar()}; }), g5_case2,
       [](const FamilyParams& p) { return z(p.alpha) && z(p.beta) && z(p.gamma) && !z(p.delta); },
       [](Sampler& s, double) { return make(Family::G5, Scalar(), Scalar(), Scalar(), s.param("delta", true)); },
       {}});
  add({"3.2(iii)", "3.2", Family::G5, "α ≠ 0, β = γ = δ = 0", false, "",
       stated("λ₁ = −α², λ₂ = 0", [](const FamilyParams& p) { return Lambdas{-sq(p.alpha), Scalar()}; }), g5_case2,
       [](const FamilyParams& p) { return !z(p.alpha) && z(p.beta) && z(p.gamma) && z(p.delta); },
       [](Sampler& s, double) { return make(Family::G5, s.param("alpha", true), Scalar(), Scalar(), Scalar()); },
       {}});
  add({"3.2(iv)", "3.2", Family::G5,
       "α² + β² − δ² − γ² ≠ 0, α + δ ≠ 0, β ≠ 0, δ = −αγ/β, α² a root of the quadratic below", true,
       "γ(3β² + 3γ² − 2γβ)α⁴ + (β/2)[(β² − γ²)² + (β + γ)⁴]α² + (β³/4)[(β² − γ²)² + (β + γ)⁴] = 0",
       stated("λ₁ = −(α + δ)², λ₂ = αδ(α + δ)² + (β² − γ²)(δ² − α²)/2 − (β² − γ²)²/4", g5_generic), g5_case2,
       [](const FamilyParams& p) {
         const Scalar& a = p.alpha;
         const Scalar& b = p.beta;
         const Scalar& g = p.gamma;
         const Scalar& d = p.delta;
         return !z(sq(a) + sq(b) - sq(d) - sq(g)) && !z(a + d) && !z(b) && d == -a * g / b &&
                z(quadratic_at_alpha(g5_quadratic(p), a));
       },
       [](Sampler& s, double tol) -> std::optional<FamilyParams> {
         Scalar b = s.param("beta", true);
         Scalar g = s.param("gamma", true);
         Scalar sv = g5_s(b, g);
         Scalar k = g5_k(b, g);
         Scalar disc = kQuarter * sq(b) * sq(sv) - b * b * b * g * k * sv;
         auto x = positive_root(g * k, -kHalf * b * sv, disc, s, tol);
         if (!x) return std::nullopt;
         Scalar a = Scalar(s.sign()) * sqrt(*x, tol);
         return make(Family::G5, a, b, g, -a * g / b);
       },
       g5_quadratic});

  // ---------------- G6 ----------------
  const Rederivation g6_case1{
      "λ₁ = [(α² + αδ − (β² − γ²)/2)² + (δ² + αδ + (β² − γ²)/2)²]/(α + δ)², "
      "λ₂ = (α² + αδ − (β² − γ²)/2)(δ² + αδ + (β² − γ²)/2)(δ² − α² + β² − γ²)/(α + δ)²",
      g6_null_difference};
  const Rederivation g6_case2{
      "λ₁ = 2α² + δ² + αδ + βγ − β², λ₂ = λ₁[α² + δ² − (β − γ)²/2] − [α² + δ² − (β − γ)²/2]²", g6_generic};
  add({"3.4(i)", "3.4", Family::G6, "γ = β ≠ 0, α = δ ≠ 0", false, "",
       stated("λ₁ = 2α², λ₂ = 0", [](const FamilyParams& p) { return Lambdas{kTwo * sq(p.alpha), Scalar()}; }),
       g6_case1,
       [](const FamilyParams& p) { return p.gamma == p.beta && !z(p.beta) && p.alpha == p.delta && !z(p.delta); },
       [](Sampler& s, double) {
         Scalar b = s.param("beta", true);
         Scalar a = s.param("alpha", true);
         return make(Family::G6, a, b, b, a);
       },
       {}});
  add({"3.4(ii)", "3.4", Family::G6, "β = γ = δ = 0, α ≠ 0", false, "",
       stated("λ₁ = α², λ₂ = 0", [](const FamilyParams& p) { return Lambdas{sq(p.alpha), Scalar()}; }), g6_case1,
       [](const FamilyParams& p) { return z(p.beta) && z(p.gamma) && z(p.delta) && !z(p.alpha); },
       [](Sampler& s, double) { return make(Family::G6, s.param("alpha", true), Scalar(), Scalar(), Scalar()); },
       {}});
  add({"3.4(iii)", "3.4", Family::G6, "γ = β = 0, α = δ ≠ 0", false, "",
       stated("λ₁ = 2α², λ₂ = 0", [](const FamilyParams& p) { return Lambdas{kTwo * sq(p.alpha), Scalar()}; }),
       g6_case1, [](const FamilyParams& p) { return z(p.gamma) && z(p.beta) && p.alpha == p.delta && !z(p.delta); },
       [](Sampler& s, double) {
         Scalar a = s.param("alpha", true);
         return make(Family::G6, a, Scalar(), Scalar(), a);
       },
       {}});
  add({"3.4(iv)", "3.4", Family::G6, "β ≠ γ, δ = γ ≠ 0, α = β, α + δ ≠ 0", false, "",
       stated("λ₁ = (α + δ)²/2, λ₂ = 0",
              [](const FamilyParams& p) { return Lambdas{kHalf * sq(p.alpha + p.delta), Scalar()}; }),
       g6_case1,
       [](const FamilyParams& p) {
         return !(p.beta == p.gamma) && p.delta == p.gamma && !z(p.gamma) && p.alpha == p.beta && !z(p.alpha + p.delta);
       },
       [](Sampler& s, double) {
         Scalar b = s.param("beta");
         Scalar g = s.param("gamma", true);
         return make(Family::G6, b, b, g, g);
       },
       {}});
  add({"3.4(v)", "3.4", Family::G6, "β ≠ γ, δ = γ = 0, α ≠ 0", false, "",
       stated("λ₁ = (α⁴ − α²β² + β⁴)/α², λ₂ = β²(α² − β²/2)(β² − α²)/(2α²)",
              [](const FamilyParams& p) {
                Scalar a2 = sq(p.alpha);
                Scalar b2 = sq(p.beta);
                return Lambdas{(sq(a2) - a2 * b2 + sq(b2)) / a2, b2 * (a2 - kHalf * b2) * (b2 - a2) / (kTwo * a2)};
              }),
       Rederivation{"λ₁ = (α⁴ − α²β² + β⁴/2)/α², λ₂ = β²(α² − β²/2)(β² − α²)/(2α²)", g6_null_difference},
       [](const FamilyParams& p) { return !(p.beta == p.gamma) && z(p.delta) && z(p.gamma) && !z(p.alpha); },
       [](Sampler& s, double) { return make(Family::G6, s.param("alpha", true), s.param("beta", true)); }, {}});
  add({"3.4(vi)", "3.4", Family::G6, "β ≠ γ, δ ≠ γ, δ = −γ ≠ 0, α = −β, α + δ ≠ 0", false, "",
       stated("λ₁ = (α + δ)²/2, λ₂ = 0",
              [](const FamilyParams& p) { return Lambdas{kHalf * sq(p.alpha + p.delta), Scalar()}; }),
       g6_case1,
       [](const FamilyParams& p) {
         return !(p.beta == p.gamma) && !(p.delta == p.gamma) && p.delta == -p.gamma && !z(p.gamma) &&
                p.alpha == -p.beta && !z(p.alpha + p.delta);
       },
       [](Sampler& s, double) {
         Scalar b = s.param("beta");
         Scalar g = s.param("gamma", true);
         return make(Family::G6, -b, b, g, -g);
       },
       {}});
  add({"3.4(vii)", "3.4", Family::G6,
       "β ≠ 0, δ = αγ/β, δ² − αδ + βγ − γ² ≠ 0, α + δ ≠ 0, α² a root of the quadratic below", true,
       "(β + γ)α⁴ + γβ(γ − β)α² − (β³/2)(β − γ)² = 0",
       stated("λ₁ = 2α² + δ² + αδ + βγ − β², "
              "λ₂ = (2α² + δ² + αδ + βγ − β²)[α² + δ² − (β − γ)²/2] − [α² + δ² − (β − γ)²/2]²",
              g6_generic),
       g6_case2,
       [](const FamilyParams& p) {
         const Scalar& a = p.alpha;
         const Scalar& b = p.beta;
         const Scalar& g = p.gamma;
         const Scalar& d = p.delta;
         return !z(b) && d == a * g / b && !z(sq(d) - a * d + b * g - sq(g)) && !z(a + d) &&
                z(quadratic_at_alpha(g6_quadratic(p), a));
       },
       [](Sampler& s, double tol) -> std::optional<FamilyParams> {
         Scalar b = s.param("beta", true);
         Scalar g = s.param("gamma", true);
         Scalar disc = sq(g) * sq(b) * sq(g - b) + kTwo * b * b * b * (b + g) * sq(b - g);
         auto x = positive_root(b + g, g * b * (b - g), disc, s, tol);
         if (!x) return std::nullopt;
         Scalar a = Scalar(s.sign()) * sqrt(*x, tol);
         return make(Family::G6, a, b, g, a * g / b);
       },
       g6_quadratic});
  add({"3.4(viii)", "3.4", Family::G6, "α = β = γ = 0, δ ≠ 0", false, "",
       stated("λ₁ = δ², λ₂ = 0", [](const FamilyParams& p) { return Lambdas{sq(p.delta), Scalar()}; }), g6_case2,
       [](const FamilyParams& p) { return z(p.alpha) && z(p.beta) && z(p.gamma) && !z(p.delta); },
       [](Sampler& s, double) { return make(Family::G6, Scalar(), Scalar(), Scalar(), s.param("delta", true)); },
       {}});
  add({"3.4(viiii)", "3.4", Family::G6, "α = β = 0, γ ≠ 0, δ² = γ²/2", true, "δ² = γ²/2",
       stated("λ₁ = δ², λ₂ = 0", [](const FamilyParams& p) { return Lambdas{sq(p.delta), Scalar()}; }), g6_case2,
       [](const FamilyParams& p) { return z(p.alpha) && z(p.beta) && !z(p.gamma) && sq(p.delta) == kHalf * sq(p.gamma); },
       [](Sampler& s, double tol) {
         Scalar g = s.param("gamma", true);
         return make(Family::G6, Scalar(), Scalar(), g, Scalar(s.sign()) * sqrt(kHalf * sq(g), tol));
       },
       {}});

  // ---------------- G7 ----------------
  add({"3.6(i)", "3.6", Family::G7, "α = β = γ = 0, δ ≠ 0", false, "", free_l1(), std::nullopt,
       [](const FamilyParams& p) { return z(p.alpha) && z(p.beta) && z(p.gamma) && !z(p.delta); },
       [](Sampler& s, double) { return make(Family::G7, Scalar(), Scalar(), Scalar(), s.param("delta", true)); },
       {}});
  add({"3.6(ii)", "3.6", Family::G7, "α = γ = 0, β ≠ 0, δ ≠ 0", false, "", free_l1(), std::nullopt,
       [](const FamilyParams& p) { return z(p.alpha) && z(p.gamma) && !z(p.beta) && !z(p.delta); },
       [](Sampler& s, double) {
         return make(Family::G7, Scalar(), s.param("beta", true), Scalar(), s.param("delta", true));
       },
       {}});
  add({"3.6(iii)", "3.6", Family::G7, "α ≠ 0, γ = 0, α = δ", false, "", free_l1(), std::nullopt,
       [](const FamilyParams& p) { return !z(p.alpha) && z(p.gamma) && p.alpha == p.delta; },
       [](Sampler& s, double) {
         Scalar a = s.param("alpha", true);
         return make(Family::G7, a, s.param("beta"), Scalar(), a);
       },
       {}});
  add({"3.6(iv)", "3.6", Family::G7, "α ≠ 0, γ = 0, α ≠ ±δ", false, "", stated("λ₁ = λ₂ = 0", zero_lambdas),
       Rederivation{"λ₂ = 0, (α − δ)λ₁ = 0", zero_lambdas},
       [](const FamilyParams& p) {
         return !z(p.alpha) && z(p.gamma) && !(p.alpha == p.delta) && !(p.alpha == -p.delta);
       },
       [](Sampler& s, double) {
         return make(Family::G7, s.param("alpha", true), s.param("beta"), Scalar(), s.param("delta"));
       },
       {}});
  return c;
}

}  // namespace

const std::vector<BranchSpec>& branch_catalog() {
  static const std::vector<BranchSpec> catalog = build_catalog();
  return catalog;
}

const BranchSpec& find_branch(std::string_view id) {
  for (const auto& spec : branch_catalog()) {
    if (spec.id == id) return spec;
  }
  throw std::invalid_argument("unknown branch '" + std::string(id) + "'");
}

const std::vector<std::string>& theorem_ids() {
  static const std::vector<std::string> ids{"2.3", "2.5", "2.7", "2.9", "3.2", "3.4", "3.6"};
  return ids;
}

Family theorem_family(std::string_view theorem) {
  const auto& ids = theorem_ids();
  auto it = std::find(ids.begin(), ids.end(), theorem);
  if (it == ids.end()) throw std::invalid_argument("unknown theorem '" + std::string(theorem) + "'");
  return static_cast<Family>(it - ids.begin());
}

std::vector<const BranchSpec*> branches_of_theorem(std::string_view theorem) {
  theorem_family(theorem);
  std::vector<const BranchSpec*> out;
  for (const auto& spec : branch_catalog()) {
    if (spec.theorem == theorem) out.push_back(&spec);
  }
  return out;
}

std::vector<const BranchSpec*> branches_of_family(Family f) {
  std::vector<const BranchSpec*> out;
  for (const auto& spec : branch_catalog()) {
    if (spec.family == f) out.push_back(&spec);
  }
  return out;
}

std::vector<FamilyParams> sample_branch(const BranchSpec& spec, std::size_t count, std::uint64_t seed,
                                        const ParamOverrides& overrides, double tol) {
  Sampler sampler(seed, overrides);
  const std::size_t budget = std::max(kMinDrawBudget, 100 * count);
  std::vector<FamilyParams> out;
  for (std::size_t n = 0; n < budget && out.size() < count; ++n) {
    std::optional<FamilyParams> p;
    try {
      p = spec.draw(sampler, tol);
    } catch (const std::domain_error&) {
      continue;  // a pinned value made a substitution divide by zero
    }
    if (!p || violated_constraint(*p) || !spec.member(*p) || !honours_pins(*p, overrides)) continue;
    out.push_back(std::move(*p));
  }
  if (out.empty()) throw EmptyBranch(spec.id);
  return out;
}

std::string format_quadratic(const Quadratic& q) {
  static const char* const kTerms[] = {"x²", "x", ""};
  std::string out;
  for (std::size_t i = 0; i < 3; ++i) {
    if (q[i].is_zero()) continue;
    Scalar mag = abs(q[i]);
    std::string coef = mag.to_string();
    if (kTerms[i][0] != '\0' && mag == Scalar(1) && mag.is_exact()) coef.clear();
    if (out.empty()) {
      out = (q[i].sign() < 0 ? "−" : "") + coef + kTerms[i];
    } else {
      out += (q[i].sign() < 0 ? " − " : " + ") + coef + kTerms[i];
    }
  }
  if (out.empty()) out = "0";
  return out + " = 0, x = α²";
}

}  // namespace ein2
