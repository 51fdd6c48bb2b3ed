// formcanon: exact canonical forms for forms and operators over involutive fields.
// SPDX-License-Identifier: MIT
#include "formcanon/extfield.hpp"

#include <algorithm>
#include <sstream>

#include "formcanon/common.hpp"
#include "formcanon/factor.hpp"

namespace formcanon {

namespace {

// Exact square root inside the base field, or nullopt when none exists.
std::optional<scalar> base_sqrt(const scalar& c) {
  const field& f = c.get_field();
  if (c.is_zero()) return f.zero();
  switch (f.kind()) {
    case field_kind::rationals: {
      const mpq_class& v = c.rational_part();
      if (v < 0) return std::nullopt;
      mpz_class num = v.get_num(), den = v.get_den();
      if (mpz_perfect_square_p(num.get_mpz_t()) == 0 ||
          mpz_perfect_square_p(den.get_mpz_t()) == 0)
        return std::nullopt;
      mpz_class rn, rd;
      mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
      mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
      return f.from_rational(mpq_class(rn, rd));
    }
    case field_kind::gaussian_rationals: {
      const field q = field::rationals();
      const scalar a = q.from_rational(c.rational_part());
      const scalar b = q.from_rational(c.imaginary_part());
      auto lift = [&](const scalar& re, const scalar& im) {
        return scalar::parse(f, "[" + re.to_string() + "," + im.to_string() + "]");
      };
      if (b.is_zero()) {
        if (auto r = base_sqrt(a)) return lift(*r, q.zero());
        if (auto r = base_sqrt(-a)) return lift(q.zero(), *r);
        return std::nullopt;
      }
      // (x + iy)^2 = a + ib needs x^2 = (a + s)/2 with s = sqrt(a^2 + b^2).
      auto s = base_sqrt(a * a + b * b);
      if (!s) return std::nullopt;
      auto x = base_sqrt((a + *s) / q.from_int(2));
      if (!x) return std::nullopt;
      return lift(*x, b / (q.from_int(2) * *x));
    }
    case field_kind::prime_field:
    case field_kind::prime_square_field: {
      if (!c.is_square()) return std::nullopt;
      for (const scalar& w : f.all_elements())
        if (w * w == c) return w;
      throw internal_error("square scalar without a root in enumeration");
    }
  }
  throw internal_error("unreachable field kind");
}

// Resultant of two nonzero scalar polynomials, by the Euclidean recurrence.
scalar resultant(poly a, poly b) {
  const field& f = a.get_field();
  require_internal(!a.is_zero() && !b.is_zero(), "resultant of zero input");
  scalar acc = f.one();
  while (b.degree() > 0) {
    poly r = a % b;
    if (r.is_zero()) return f.zero();
    // res(a,b) = (-1)^(deg a * deg b) * lc(b)^(deg a - deg r) * res(b, r)
    if ((a.degree() % 2) != 0 && (b.degree() % 2) != 0) acc = -acc;
    acc = acc * b.leading().pow(
                    static_cast<std::uint64_t>(a.degree() - r.degree()));
    a = b;
    b = r;
  }
  // deg b == 0: res(a, b) = b^(deg a)
  return acc * b.coeff(0).pow(static_cast<std::uint64_t>(a.degree()));
}

// Lagrange interpolation through (points[i], values[i]).
poly interpolate(const field& f, const std::vector<scalar>& points,
                 const std::vector<scalar>& values) {
  poly result(f);
  for (std::size_t i = 0; i < points.size(); ++i) {
    poly basis = poly::constant(f.one());
    scalar denom = f.one();
    for (std::size_t j = 0; j < points.size(); ++j) {
      if (j == i) continue;
      basis = basis * (poly::x(f) - poly::constant(points[j]));
      denom = denom * (points[i] - points[j]);
    }
    result = result + basis * (values[i] / denom);
  }
  return result;
}

}  // namespace

// ---------------------------------------------------------------------------
// ext_field
// ---------------------------------------------------------------------------

ext_field::ext_field(const poly& modulus, involution_action action)
    : modulus_(modulus),
      action_(action),
      delta_(modulus.get_field().one()) {
  require_input(action != involution_action::kappa_delta,
                "kappa_delta action needs an explicit scaling; use the "
                "(modulus, delta) constructor");
  init_checks();
}

ext_field::ext_field(const poly& modulus, const scalar& delta)
    : modulus_(modulus),
      action_(involution_action::kappa_delta),
      delta_(delta) {
  require_input(delta.get_field() == modulus.get_field(),
                "delta must live in the coefficient field of the modulus");
  init_checks();
}

void ext_field::init_checks() {
  const field& f = base();
  require_input(modulus_.degree() >= 1 && modulus_.is_monic(),
                "extension modulus must be monic of degree >= 1");
  require_input(is_irreducible(modulus_),
                "extension modulus must be irreducible: " +
                    modulus_.to_string());
  switch (action_) {
    case involution_action::plain:
      require_input(modulus_.conj_coeffs() == modulus_,
                    "plain action needs a conj-invariant modulus");
      break;
    case involution_action::kappa_inverse:
      require_input(is_conj_self_reciprocal(modulus_),
                    "kappa_inverse action needs a conj-self-reciprocal "
                    "modulus");
      break;
    case involution_action::kappa_delta: {
      require_input(!delta_.is_zero() && delta_ * delta_.conj() == f.one(),
                    "kappa_delta scaling must satisfy delta * conj(delta) = 1");
      require_input(modulus_.conj_coeffs().scale_argument(delta_).monic() ==
                        modulus_,
                    "kappa_delta action needs conj(p)(delta x) ~ p");
      break;
    }
  }
  const poly k = kappa();
  require_internal(conj_res(conj_res(k)) == k, "residue involution squares to the identity");
  identity_ = f.identity_involution() && conj_res(k) == k;
}

const scalar& ext_field::delta() const {
  require_input(action_ == involution_action::kappa_delta,
                "delta() is only defined for the kappa_delta action");
  return delta_;
}

mpz_class ext_field::order() const {
  require_input(base().is_finite(), "order() needs a finite base field");
  mpz_class o = 1;
  for (int i = 0; i < degree(); ++i) o *= mpz_class(base().order());
  return o;
}

bool operator==(const ext_field& a, const ext_field& b) {
  if (a.modulus_ != b.modulus_ || a.action_ != b.action_) return false;
  if (a.action_ == involution_action::kappa_delta && a.delta_ != b.delta_)
    return false;
  return true;
}

poly ext_field::reduce(const poly& f) const { return f % modulus_; }

poly ext_field::mul(const poly& a, const poly& b) const {
  return (a * b) % modulus_;
}

poly ext_field::pow(const poly& a, const mpz_class& e) const {
  return poly_powmod(reduce(a), e, modulus_);
}

poly ext_field::inv(const poly& a) const {
  poly r = reduce(a);
  require_input(!r.is_zero(), "residue inverse of zero");
  return poly_mod_inverse(r, modulus_);
}

poly ext_field::conj_res(const poly& a) const {
  poly c = reduce(a).conj_coeffs();
  switch (action_) {
    case involution_action::plain:
      return reduce(c);
    case involution_action::kappa_delta:
      return reduce(c.scale_argument(delta_));
    case involution_action::kappa_inverse: {
      const poly kinv = inv(poly::x(base()));
      poly acc(base());
      for (int j = c.degree(); j >= 0; --j)
        acc = mul(acc, kinv) + poly::constant(c.coeff(j));
      return reduce(acc);
    }
  }
  throw internal_error("unreachable involution action");
}

poly ext_field::kappa() const { return reduce(poly::x(base())); }

poly ext_field::one() const { return poly::constant(base().one()); }

poly ext_field::from_base(const scalar& c) const {
  require_input(c.get_field() == base(), "scalar from the wrong field");
  return poly::constant(c);
}

bool ext_field::is_stationary(const poly& a) const {
  poly r = reduce(a);
  return conj_res(r) == r;
}

std::vector<poly> ext_field::all_residues(std::size_t cap) const {
  require_input(base().is_finite(), "all_residues() needs a finite base");
  require_input(order() <= static_cast<long>(cap),
                "residue field too large to enumerate");
  const std::vector<scalar> digits = base().all_elements();
  const int d = degree();
  std::vector<poly> out;
  std::vector<std::size_t> idx(static_cast<std::size_t>(d), 0);
  while (true) {
    std::vector<scalar> coeffs;
    coeffs.reserve(static_cast<std::size_t>(d));
    for (int i = 0; i < d; ++i) coeffs.push_back(digits[idx[static_cast<std::size_t>(i)]]);
    out.emplace_back(base(), coeffs);
    int pos = 0;
    while (pos < d) {
      auto& at = idx[static_cast<std::size_t>(pos)];
      if (++at < digits.size()) break;
      at = 0;
      ++pos;
    }
    if (pos == d) break;
  }
  return out;
}

poly ext_field::min_poly_res(const poly& elem) const {
  const field& f = base();
  const int d = degree();
  const poly a = reduce(elem);
  // Krylov: find the first linear dependence among 1, a, a^2, ...
  std::vector<poly> powers{one()};
  for (int k = 1; k <= d; ++k) powers.push_back(mul(powers.back(), a));
  for (int k = 1; k <= d; ++k) {
    matrix m(f, static_cast<std::size_t>(d), static_cast<std::size_t>(k));
    for (int j = 0; j < k; ++j)
      for (int i = 0; i < d; ++i)
        m(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) =
            powers[static_cast<std::size_t>(j)].coeff(i);
    matrix rhs(f, static_cast<std::size_t>(d), 1);
    for (int i = 0; i < d; ++i)
      rhs(static_cast<std::size_t>(i), 0) =
          -powers[static_cast<std::size_t>(k)].coeff(i);
    if (auto sol = solve_linear(m, rhs)) {
      std::vector<scalar> coeffs;
      for (int j = 0; j < k; ++j)
        coeffs.push_back((*sol)(static_cast<std::size_t>(j), 0));
      coeffs.push_back(f.one());
      poly mp(f, coeffs);
      // Exact check: mp(a) = 0 in the residue field.
      poly acc(f);
      for (int j = mp.degree(); j >= 0; --j)
        acc = mul(acc, a) + poly::constant(mp.coeff(j));
      acc = reduce(acc);
      require_internal(acc.is_zero(), "minimal polynomial annihilates");
      return mp;
    }
  }
  throw internal_error("residue has no minimal polynomial of degree <= [T:K]");
}

// ---------------------------------------------------------------------------
// Square roots in the residue field.
// ---------------------------------------------------------------------------

namespace {

// T[y] polynomials with residue coefficients (index = power of y).
using tpoly = std::vector<poly>;

tpoly tpoly_trim(tpoly v) {
  while (!v.empty() && v.back().is_zero()) v.pop_back();
  return v;
}

tpoly tpoly_mod(const ext_field& e, tpoly a, const tpoly& b) {
  a = tpoly_trim(std::move(a));
  const poly lead_inv = e.inv(b.back());
  while (a.size() >= b.size() && !a.empty()) {
    const poly factor = e.mul(a.back(), lead_inv);
    const std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i)
      a[shift + i] = e.reduce(a[shift + i] - e.mul(factor, b[i]));
    a = tpoly_trim(std::move(a));
  }
  return a;
}

tpoly tpoly_gcd(const ext_field& e, tpoly a, tpoly b) {
  a = tpoly_trim(std::move(a));
  b = tpoly_trim(std::move(b));
  while (!b.empty()) {
    tpoly r = tpoly_mod(e, a, b);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    const poly lead_inv = e.inv(a.back());
    for (poly& c : a) c = e.mul(c, lead_inv);
  }
  return a;
}

}  // namespace

ext_field::sqrt_result ext_field::sqrt_res(const poly& elem) const {
  const field& f = base();
  const poly c = reduce(elem);
  if (c.is_zero()) return {true, poly(f)};

  if (f.is_finite()) {
    const mpz_class q = order();
    const mpz_class half = (q - 1) / 2;
    if (poly_powmod(c, half, modulus_) != one()) return {true, std::nullopt};
    // Tonelli-Shanks over the residue field, with a deterministic nonsquare.
    mpz_class t = q - 1;
    unsigned s = 0;
    while (mpz_even_p(t.get_mpz_t())) {
      t /= 2;
      ++s;
    }
    if (s == 1) {
      poly r = poly_powmod(c, (q + 1) / 4, modulus_);
      require_internal(mul(r, r) == c, "square root verifies");
      return {true, r};
    }
    poly nonsquare(f);
    for (const poly& z : all_residues()) {
      if (z.is_zero()) continue;
      if (poly_powmod(z, half, modulus_) != one()) {
        nonsquare = z;
        break;
      }
    }
    require_internal(!nonsquare.is_zero(), "finite field has a nonsquare");
    poly g = poly_powmod(nonsquare, t, modulus_);
    poly r = poly_powmod(c, (t + 1) / 2, modulus_);
    poly w = poly_powmod(c, t, modulus_);
    unsigned m = s;
    while (w != one()) {
      unsigned i = 0;
      poly probe = w;
      while (probe != one()) {
        probe = mul(probe, probe);
        ++i;
        require_internal(i < m, "Tonelli-Shanks order bound");
      }
      poly gpow = g;
      for (unsigned j = 0; j + i + 1 < m; ++j) gpow = mul(gpow, gpow);
      r = mul(r, gpow);
      g = mul(gpow, gpow);
      w = mul(w, g);
      m = i;
    }
    require_internal(mul(r, r) == c, "square root verifies");
    return {true, r};
  }

  // Number-field base: factor y^2 - c over T by norm descent. For a shift
  // lambda, N(y) = Res_x(p(x), (y - lambda x)^2 - c(x)) lies in K[y]; when N
  // is squarefree, gcds against its irreducible factors recover the factors
  // of y^2 - c over T.
  if (degree() == 1) {
    auto r = base_sqrt(c.coeff(0));
    if (!r) return {true, std::nullopt};
    return {true, poly::constant(*r)};
  }
  const int d = degree();
  for (int lam = 0; lam <= 12; ++lam) {
    const scalar lambda = f.from_int(lam);
    // Evaluate N at 2d + 1 points and interpolate.
    const int npts = 2 * d + 1;
    std::vector<scalar> pts, vals;
    bool degenerate = false;
    for (int i = 0; i < npts; ++i) {
      const scalar y0 = f.from_int(i - d);
      // (y0 - lambda x)^2 - c(x) as a polynomial in x.
      poly qx = (poly::constant(y0) - poly::x(f) * lambda).pow(2) - c;
      if (qx.is_zero() || qx.degree() < 1) {
        // Still fine for the resultant recurrence unless zero.
        if (qx.is_zero()) {
          degenerate = true;
          break;
        }
      }
      pts.push_back(y0);
      vals.push_back(resultant(modulus_, qx));
    }
    if (degenerate) continue;
    poly norm = interpolate(f, pts, vals);
    if (norm.is_zero() || norm.degree() != 2 * d) continue;
    if (poly_gcd(norm, norm.derivative()).degree() != 0) continue;  // bad shift
    // Factor the norm and map factors back through gcds over T.
    for (const auto& [g, mult] : factorize(norm)) {
      (void)mult;
      // g(y + lambda * kappa) in T[y], by Horner.
      tpoly shifted{poly(f)};
      const poly lk = reduce(poly::x(f) * lambda);
      for (int j = g.degree(); j >= 0; --j) {
        // shifted = shifted * (y + lk) + g_j
        tpoly next(shifted.size() + 1, poly(f));
        for (std::size_t i = 0; i < shifted.size(); ++i) {
          next[i + 1] = reduce(next[i + 1] + shifted[i]);
          next[i] = reduce(next[i] + mul(shifted[i], lk));
        }
        next[0] = reduce(next[0] + poly::constant(g.coeff(j)));
        shifted = tpoly_trim(std::move(next));
      }
      tpoly target{reduce(-c), poly(f), one()};  // y^2 - c
      tpoly h = tpoly_gcd(*this, target, shifted);
      if (h.size() == 2) {  // linear: y + h[0]
        poly root = reduce(-h[0]);
        if (mul(root, root) == c) return {true, root};
      }
    }
    // The norm was squarefree and no factor produced a root: y^2 - c has no
    // root over T.
    return {true, std::nullopt};
  }
  return {false, std::nullopt};
}

// ---------------------------------------------------------------------------
// Symmetric Laurent representation under the kappa_inverse action.
// ---------------------------------------------------------------------------

namespace {

// Fixed subfield of the base involution, and the K0-coordinates of a scalar.
field fixed_subfield(const field& f) {
  switch (f.kind()) {
    case field_kind::rationals:
    case field_kind::prime_field:
      return f;
    case field_kind::gaussian_rationals:
      return field::rationals();
    case field_kind::prime_square_field:
      return field::prime(f.characteristic());
  }
  throw internal_error("unreachable field kind");
}

std::vector<scalar> coordinates(const field& k0, const scalar& c) {
  switch (c.get_field().kind()) {
    case field_kind::rationals:
    case field_kind::prime_field:
      return {c};
    case field_kind::gaussian_rationals:
      return {k0.from_rational(c.rational_part()),
              k0.from_rational(c.imaginary_part())};
    case field_kind::prime_square_field:
      return {k0.from_int(c.residue_a()), k0.from_int(c.residue_b())};
  }
  throw internal_error("unreachable field kind");
}

scalar embed(const field& k, const scalar& c0) {
  switch (k.kind()) {
    case field_kind::rationals:
    case field_kind::prime_field:
      return c0;
    case field_kind::gaussian_rationals:
      return k.from_rational(c0.rational_part());
    case field_kind::prime_square_field:
      return k.from_int(c0.residue_a());
  }
  throw internal_error("unreachable field kind");
}

}  // namespace

std::vector<scalar> ext_field::stationary_coefficients(const poly& elem) const {
  require_input(action_ == involution_action::kappa_inverse,
                "the symmetric Laurent representation needs the "
                "kappa_inverse action");
  const field& f = base();
  const poly a = reduce(elem);
  require_input(is_stationary(a),
                "element is not stationary under the involution");

  const int d = degree();
  const int r = laurent_radius();
  const bool id_base = f.identity_involution();
  const scalar p0 = modulus_.constant_term();

  // Generators of the stationary K0-subspace: for each index i the fixed
  // direction k^i + k^-i and (nonidentity base) the skew direction
  // u(k^i - k^-i); the top index of an even-degree modulus keeps only the
  // direction allowed by the constraint on a_r.
  struct gen {
    int index;
    bool skew;
    poly value;
  };
  const poly k = kappa();
  const poly kinv = inv(k);
  const std::optional<scalar> u = f.skew_unit();
  std::vector<gen> gens;
  gens.push_back({0, false, one()});
  poly kp = one(), kn = one();
  for (int i = 1; i <= r; ++i) {
    kp = mul(kp, k);
    kn = mul(kn, kinv);
    const bool top_even = (i == r && d % 2 == 0);
    bool allow_fix = true, allow_skew = !id_base;
    if (top_even) {
      if (id_base) {
        allow_fix = false;
      } else if (p0 == f.one()) {
        allow_fix = false;
      } else {
        allow_skew = false;
      }
    }
    if (allow_fix) gens.push_back({i, false, reduce(kp + kn)});
    if (allow_skew)
      gens.push_back({i, true, reduce((kp - kn) * *u)});
  }

  // Solve for the K0-coordinates of elem in this generator basis.
  const field k0 = fixed_subfield(f);
  const std::size_t comp = id_base ? 1 : 2;
  matrix m(k0, static_cast<std::size_t>(d) * comp, gens.size());
  for (std::size_t j = 0; j < gens.size(); ++j)
    for (int i = 0; i < d; ++i) {
      const auto coords = coordinates(k0, gens[j].value.coeff(i));
      for (std::size_t t = 0; t < comp; ++t)
        m(static_cast<std::size_t>(i) * comp + t, j) = coords[t];
    }
  matrix rhs(k0, static_cast<std::size_t>(d) * comp, 1);
  for (int i = 0; i < d; ++i) {
    const auto coords = coordinates(k0, a.coeff(i));
    for (std::size_t t = 0; t < comp; ++t)
      rhs(static_cast<std::size_t>(i) * comp + t, 0) = coords[t];
  }
  auto sol = solve_linear(m, rhs);
  require_internal(sol.has_value(),
                   "stationary element lies in the generator span");

  std::vector<scalar> coeffs(static_cast<std::size_t>(r) + 1, f.zero());
  for (std::size_t j = 0; j < gens.size(); ++j) {
    const scalar t = embed(f, (*sol)(j, 0));
    const std::size_t i = static_cast<std::size_t>(gens[j].index);
    coeffs[i] = coeffs[i] + (gens[j].skew ? t * *u : t);
  }
  require_internal(from_stationary_coefficients(coeffs) == a,
                   "symmetric Laurent representation reconstructs");
  return coeffs;
}

poly ext_field::from_stationary_coefficients(
    const std::vector<scalar>& coeffs) const {
  require_input(action_ == involution_action::kappa_inverse,
                "the symmetric Laurent representation needs the "
                "kappa_inverse action");
  const field& f = base();
  const int d = degree();
  const int r = laurent_radius();
  require_input(coeffs.size() == static_cast<std::size_t>(r) + 1,
                "expected radius + 1 coefficients");
  for (const scalar& c : coeffs)
    require_input(c.get_field() == f, "coefficient from the wrong field");
  require_input(coeffs[0].is_conj_fixed(),
                "the constant coefficient must be conj-fixed");
  if (d % 2 == 0 && r >= 1) {
    const scalar& top = coeffs[static_cast<std::size_t>(r)];
    if (f.identity_involution()) {
      require_input(top.is_zero(),
                    "top coefficient must vanish for an even-degree modulus "
                    "over an identity-involution base");
    } else if (modulus_.constant_term() == f.one()) {
      require_input(top.conj() == -top,
                    "top coefficient must be conj-negated when p(0) = 1");
    } else {
      require_input(top.is_conj_fixed(),
                    "top coefficient must be conj-fixed when p(0) != 1");
    }
  }
  const poly k = kappa();
  const poly kinv = inv(k);
  poly acc = poly::constant(coeffs[0]);
  poly kp = one(), kn = one();
  for (int i = 1; i <= r; ++i) {
    kp = mul(kp, k);
    kn = mul(kn, kinv);
    const scalar& ai = coeffs[static_cast<std::size_t>(i)];
    acc = reduce(acc + kp * ai + kn * ai.conj());
  }
  require_internal(is_stationary(acc), "assembled element is stationary");
  return acc;
}

// ---------------------------------------------------------------------------
// residue_matrix
// ---------------------------------------------------------------------------

residue_matrix::residue_matrix(const ext_field& e, std::size_t rows,
                               std::size_t cols)
    : e_(e), rows_(rows), cols_(cols), a_(rows * cols, poly(e.base())) {}

residue_matrix residue_matrix::identity(const ext_field& e, std::size_t n) {
  residue_matrix m(e, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = e.one();
  return m;
}

residue_matrix residue_matrix::diagonal(const ext_field& e,
                                        const std::vector<poly>& d) {
  residue_matrix m(e, d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = e.reduce(d[i]);
  return m;
}

poly& residue_matrix::operator()(std::size_t i, std::size_t j) {
  return a_[i * cols_ + j];
}

const poly& residue_matrix::operator()(std::size_t i, std::size_t j) const {
  return a_[i * cols_ + j];
}

residue_matrix residue_matrix::operator*(const residue_matrix& o) const {
  require_input(e_ == o.e_ && cols_ == o.rows_,
                "residue matrix product shape mismatch");
  residue_matrix out(e_, rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      if ((*this)(i, k).is_zero()) continue;
      for (std::size_t j = 0; j < o.cols_; ++j)
        out(i, j) = e_.reduce(out(i, j) + (*this)(i, k) * o(k, j));
    }
  return out;
}

residue_matrix residue_matrix::adjoint() const {
  residue_matrix out(e_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      out(j, i) = e_.conj_res((*this)(i, j));
  return out;
}

residue_matrix residue_matrix::inverse() const {
  require_input(rows_ == cols_, "residue matrix inverse needs a square input");
  residue_matrix work = *this;
  residue_matrix inv = identity(e_, rows_);
  for (std::size_t col = 0; col < cols_; ++col) {
    std::size_t pivot = col;
    while (pivot < rows_ && work(pivot, col).is_zero()) ++pivot;
    require_input(pivot < rows_, "residue matrix is singular");
    for (std::size_t j = 0; j < cols_; ++j) {
      std::swap(work(pivot, j), work(col, j));
      std::swap(inv(pivot, j), inv(col, j));
    }
    const poly scale = e_.inv(work(col, col));
    for (std::size_t j = 0; j < cols_; ++j) {
      work(col, j) = e_.mul(work(col, j), scale);
      inv(col, j) = e_.mul(inv(col, j), scale);
    }
    for (std::size_t i = 0; i < rows_; ++i) {
      if (i == col || work(i, col).is_zero()) continue;
      const poly factor = work(i, col);
      for (std::size_t j = 0; j < cols_; ++j) {
        work(i, j) = e_.reduce(work(i, j) - factor * work(col, j));
        inv(i, j) = e_.reduce(inv(i, j) - factor * inv(col, j));
      }
    }
  }
  return inv;
}

bool operator==(const residue_matrix& a, const residue_matrix& b) {
  return a.e_ == b.e_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ &&
         a.a_ == b.a_;
}

std::string residue_matrix::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < rows_; ++i) {
    os << (i == 0 ? "[" : " ");
    for (std::size_t j = 0; j < cols_; ++j)
      os << (j ? ", " : "[") << (*this)(i, j).to_string();
    os << "]" << (i + 1 == rows_ ? "]" : "\n");
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// Congruent diagonalization over a residue field.
// ---------------------------------------------------------------------------

std::pair<std::vector<poly>, residue_matrix> hermitian_diagonalize(
    const ext_field& e, const residue_matrix& g) {
  require_input(g.rows() == g.cols(), "diagonalization needs a square input");
  require_input(g == g.adjoint(), "diagonalization needs a Hermitian input");
  const std::size_t n = g.rows();
  residue_matrix work = g;
  residue_matrix c = residue_matrix::identity(e, n);

  // Column operation col_j += col_i * t, mirrored on rows (adjoint) and
  // accumulated into c.
  auto add_col = [&](std::size_t j, std::size_t i, const poly& t) {
    for (std::size_t row = 0; row < n; ++row)
      work(row, j) = e.reduce(work(row, j) + work(row, i) * t);
    const poly tc = e.conj_res(t);
    for (std::size_t col = 0; col < n; ++col)
      work(j, col) = e.reduce(work(j, col) + tc * work(i, col));
    for (std::size_t row = 0; row < n; ++row)
      c(row, j) = e.reduce(c(row, j) + c(row, i) * t);
  };
  auto swap_cols = [&](std::size_t i, std::size_t j) {
    for (std::size_t row = 0; row < n; ++row) std::swap(work(row, i), work(row, j));
    for (std::size_t col = 0; col < n; ++col) std::swap(work(i, col), work(j, col));
    for (std::size_t row = 0; row < n; ++row) std::swap(c(row, i), c(row, j));
  };

  for (std::size_t k = 0; k < n; ++k) {
    // Find a nonzero diagonal entry at or after k.
    std::size_t pivot = n;
    for (std::size_t i = k; i < n; ++i)
      if (!work(i, i).is_zero()) {
        pivot = i;
        break;
      }
    if (pivot == n) {
      // All remaining diagonal entries vanish; mix in an off-diagonal one.
      std::size_t oi = n, oj = n;
      for (std::size_t i = k; i < n && oi == n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
          if (!work(i, j).is_zero()) {
            oi = i;
            oj = j;
            break;
          }
      if (oi == n) break;  // the remaining block is zero
      // col_oi += col_oj * conj(w) makes the (oi, oi) entry 2 * w * conj(w).
      add_col(oi, oj, e.conj_res(work(oi, oj)));
      require_internal(!work(oi, oi).is_zero(),
                       "off-diagonal mixing creates a pivot (char != 2)");
      pivot = oi;
    }
    if (pivot != k) swap_cols(pivot, k);
    const poly dinv = e.inv(work(k, k));
    for (std::size_t j = k + 1; j < n; ++j) {
      if (work(k, j).is_zero()) continue;
      add_col(j, k, e.reduce(-e.mul(dinv, work(k, j))));
    }
  }

  std::vector<poly> d;
  d.reserve(n);
  for (std::size_t i = 0; i < n; ++i) d.push_back(work(i, i));
  require_internal(c.adjoint() * g * c == residue_matrix::diagonal(e, d),
                   "congruent diagonalization verifies");
  return {d, c};
}

}  // namespace formcanon
