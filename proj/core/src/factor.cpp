// formcanon: exact canonical forms for forms and operators over involutive fields.
// SPDX-License-Identifier: MIT
#include "formcanon/factor.hpp"

#include <algorithm>
#include <map>

namespace formcanon {

namespace {

using factor_list = std::vector<std::pair<poly, int>>;

void append_factor(factor_list& out, const poly& f, int mult) {
  for (auto& [g, m] : out) {
    if (g == f) {
      m += mult;
      return;
    }
  }
  out.emplace_back(f, mult);
}

void sort_factors(factor_list& out) {
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    int c = poly::compare(a.first, b.first);
    if (c != 0) return c < 0;
    return a.second < b.second;
  });
}

// ---------------------------------------------------------------------------
// finite fields: squarefree split + distinct-degree + equal-degree splitting
// ---------------------------------------------------------------------------

// p-th root of a coefficient: identity on GF(p), Frobenius inverse (= conj)
// on GF(p^2).
scalar coeff_pth_root(const scalar& a) {
  return a.get_field().kind() == field_kind::prime_square_field ? a.conj() : a;
}

// For f with f' = 0 (so f = h(x^p) = r^p), returns the exact p-th root r.
poly poly_pth_root(const poly& f) {
  const field& fld = f.get_field();
  auto p = static_cast<int>(fld.modulus());
  std::vector<scalar> cs;
  for (int i = 0; i <= f.degree(); i += p) {
    require_internal(i % p == 0, "pth root stride");
    cs.push_back(coeff_pth_root(f.coeff(i)));
  }
  for (int i = 0; i <= f.degree(); ++i)
    require_internal(i % p == 0 || f.coeff(i).is_zero(), "polynomial is not a p-th power");
  return poly(fld, std::move(cs));
}

poly random_poly_below(const field& fld, int deg_bound, rng& r) {
  std::vector<scalar> cs;
  for (int i = 0; i < deg_bound; ++i) cs.push_back(fld.random_element(r));
  return poly(fld, std::move(cs));
}

// Equal-degree splitting of a squarefree product of irreducibles of degree d.
void equal_degree_split(const poly& f, int d, rng& r, std::vector<poly>& out) {
  if (f.degree() == d) {
    out.push_back(f.monic());
    return;
  }
  const field& fld = f.get_field();
  mpz_class q(static_cast<long>(fld.modulus()));
  if (fld.kind() == field_kind::prime_square_field) q *= q;
  mpz_class e;
  mpz_pow_ui(e.get_mpz_t(), q.get_mpz_t(), static_cast<unsigned long>(d));
  e = (e - 1) / 2;

  while (true) {
    poly a = random_poly_below(fld, f.degree(), r);
    if (a.degree() < 1) continue;
    poly g = poly_gcd(a, f);
    if (g.degree() > 0 && g.degree() < f.degree()) {
      equal_degree_split(g, d, r, out);
      equal_degree_split((f / g).monic(), d, r, out);
      return;
    }
    poly b = poly_powmod(a, e, f);
    poly h = poly_gcd(b - poly::constant(fld.one()), f);
    if (h.degree() > 0 && h.degree() < f.degree()) {
      equal_degree_split(h, d, r, out);
      equal_degree_split((f / h).monic(), d, r, out);
      return;
    }
  }
}

// Factors a squarefree monic polynomial over a finite field.
std::vector<poly> factor_squarefree_finite(const poly& f, rng& r) {
  std::vector<poly> out;
  const field& fld = f.get_field();
  mpz_class q(static_cast<long>(fld.modulus()));
  if (fld.kind() == field_kind::prime_square_field) q *= q;

  poly w = f;
  poly h = poly::x(fld) % w;  // x^(q^d) mod w, incrementally
  for (int d = 1; w.degree() >= 2 * d; ++d) {
    h = poly_powmod(h, q, w);
    poly g = poly_gcd(h - poly::x(fld), w);
    if (g.degree() > 0) {
      equal_degree_split(g, d, r, out);
      w = (w / g).monic();
      h = h % w;
    }
  }
  if (w.degree() > 0) out.push_back(w);
  return out;
}

void factor_finite(const poly& f, int outer_mult, rng& r, factor_list& out) {
  if (f.degree() <= 0) return;
  poly g = f.monic();
  poly gp = g.derivative();
  if (gp.is_zero()) {
    auto p = static_cast<int>(f.get_field().modulus());
    factor_finite(poly_pth_root(g), outer_mult * p, r, out);
    return;
  }
  // w = product of the distinct irreducibles whose multiplicity is not
  // divisible by the characteristic.
  poly w = (g / poly_gcd(g, gp)).monic();
  poly rest = g;
  for (const poly& q : factor_squarefree_finite(w, r)) {
    int mult = 0;
    while (q.divides(rest)) {
      rest = (rest / q).monic();
      ++mult;
    }
    append_factor(out, q, outer_mult * mult);
  }
  // Whatever remains has all multiplicities divisible by p, hence is an exact
  // p-th power.
  if (rest.degree() > 0) {
    auto p = static_cast<int>(f.get_field().modulus());
    factor_finite(poly_pth_root(rest), outer_mult * p, r, out);
  }
}

// ---------------------------------------------------------------------------
// characteristic zero: Yun's squarefree decomposition
// ---------------------------------------------------------------------------

// f monic nonconstant; returns (g_i, i) with f = prod g_i^i.
factor_list yun_squarefree(const poly& f) {
  factor_list out;
  poly g = poly_gcd(f, f.derivative());
  poly w = (f / g).monic();
  int i = 1;
  while (w.degree() > 0) {
    poly y = poly_gcd(w, g);
    poly z = (w / y).monic();
    if (z.degree() > 0) out.emplace_back(z, i);
    w = y;
    if (!g.is_zero() && g.degree() > 0) g = (g / y).monic();
    ++i;
  }
  return out;
}

// ---------------------------------------------------------------------------
// rationals: reduction mod p + quadratic Hensel lifting + recombination
// ---------------------------------------------------------------------------

// Dense integer polynomials with arithmetic modulo m (m may be a prime power).
struct zpoly {
  std::vector<mpz_class> c;  // ascending, may have leading zeros until trim()

  void trim() {
    while (!c.empty() && c.back() == 0) c.pop_back();
  }
  int degree() const { return static_cast<int>(c.size()) - 1; }
  mpz_class coeff(int i) const {
    return (i >= 0 && i < static_cast<int>(c.size())) ? c[static_cast<std::size_t>(i)] : mpz_class(0);
  }
};

zpoly zp_mod(const zpoly& a, const mpz_class& m) {
  zpoly r = a;
  for (auto& x : r.c) {
    x %= m;
    if (x < 0) x += m;
  }
  r.trim();
  return r;
}

zpoly zp_mul(const zpoly& a, const zpoly& b, const mpz_class& m) {
  if (a.c.empty() || b.c.empty()) return {};
  zpoly r;
  r.c.assign(a.c.size() + b.c.size() - 1, mpz_class(0));
  for (std::size_t i = 0; i < a.c.size(); ++i)
    for (std::size_t j = 0; j < b.c.size(); ++j) r.c[i + j] += a.c[i] * b.c[j];
  return zp_mod(r, m);
}

zpoly zp_add(const zpoly& a, const zpoly& b, const mpz_class& m) {
  zpoly r;
  r.c.assign(std::max(a.c.size(), b.c.size()), mpz_class(0));
  for (std::size_t i = 0; i < r.c.size(); ++i)
    r.c[i] = a.coeff(static_cast<int>(i)) + b.coeff(static_cast<int>(i));
  return zp_mod(r, m);
}

zpoly zp_sub(const zpoly& a, const zpoly& b, const mpz_class& m) {
  zpoly r;
  r.c.assign(std::max(a.c.size(), b.c.size()), mpz_class(0));
  for (std::size_t i = 0; i < r.c.size(); ++i)
    r.c[i] = a.coeff(static_cast<int>(i)) - b.coeff(static_cast<int>(i));
  return zp_mod(r, m);
}

// Division by a monic divisor, coefficients mod m.
std::pair<zpoly, zpoly> zp_divmod_monic(const zpoly& a, const zpoly& d, const mpz_class& m) {
  require_internal(!d.c.empty() && d.c.back() == 1, "zp_divmod requires monic divisor");
  zpoly r = zp_mod(a, m);
  zpoly q;
  int dd = d.degree();
  if (r.degree() >= dd) q.c.assign(static_cast<std::size_t>(r.degree() - dd + 1), mpz_class(0));
  for (int k = r.degree(); k >= dd; --k) {
    mpz_class c = r.coeff(k) % m;
    if (c < 0) c += m;
    q.c[static_cast<std::size_t>(k - dd)] = c;
    if (c == 0) continue;
    for (int i = 0; i <= dd; ++i)
      r.c[static_cast<std::size_t>(k - dd + i)] -= c * d.coeff(i);
  }
  r = zp_mod(r, m);
  zpoly rem;
  rem.c.assign(r.c.begin(), r.c.begin() + std::min<std::ptrdiff_t>(static_cast<std::ptrdiff_t>(r.c.size()), dd));
  rem.trim();
  q.trim();
  return {q, rem};
}

zpoly zpoly_from(const poly& f, std::int64_t p) {
  // f over gf:p -> integer rep with coefficients in [0, p).
  zpoly z;
  (void)p;
  for (int i = 0; i <= f.degree(); ++i)
    z.c.emplace_back(static_cast<long>(f.coeff(i).residue_a()));
  z.trim();
  return z;
}

// One quadratic Hensel step: from f = g h (mod m), s g + t h = 1 (mod m)
// (g, h monic, deg s < deg h, deg t < deg g) to the same equations mod m^2.
void hensel_step(const zpoly& f, zpoly& g, zpoly& h, zpoly& s, zpoly& t, const mpz_class& m) {
  mpz_class m2 = m * m;
  zpoly e = zp_sub(f, zp_mul(g, h, m2), m2);
  auto [q, r] = zp_divmod_monic(zp_mul(s, e, m2), h, m2);
  zpoly g1 = zp_add(g, zp_add(zp_mul(t, e, m2), zp_mul(q, g, m2), m2), m2);
  zpoly h1 = zp_add(h, r, m2);
  zpoly one;
  one.c = {mpz_class(1)};
  zpoly b = zp_sub(zp_add(zp_mul(s, g1, m2), zp_mul(t, h1, m2), m2), one, m2);
  auto [c, d] = zp_divmod_monic(zp_mul(s, b, m2), h1, m2);
  zpoly s1 = zp_sub(s, d, m2);
  zpoly t1 = zp_sub(t, zp_add(zp_mul(t, b, m2), zp_mul(c, g1, m2), m2), m2);
  g = g1;
  h = h1;
  s = s1;
  t = t1;
}

// Lifts the factorization f = prod factors (mod p) to the target modulus
// p^(2^rounds), recursively over a balanced factor tree. On entry factors[i]
// hold the mod-p irreducibles; on exit they hold their lifted versions.
// f is the (already lifted) product over [lo, hi); everything is monic.
void hensel_lift_tree(const zpoly& f, std::vector<zpoly>& factors, std::size_t lo, std::size_t hi,
                      std::int64_t p, int rounds, const mpz_class& target_modulus) {
  if (hi - lo == 1) {
    factors[lo] = zp_mod(f, target_modulus);
    return;
  }
  std::size_t mid = lo + (hi - lo) / 2;
  mpz_class pz(static_cast<long>(p));
  // g = prod of left half, h = prod of right half, computed mod p.
  zpoly g, h;
  g.c = {mpz_class(1)};
  h.c = {mpz_class(1)};
  for (std::size_t i = lo; i < mid; ++i) g = zp_mul(g, factors[i], pz);
  for (std::size_t i = mid; i < hi; ++i) h = zp_mul(h, factors[i], pz);

  // Bezout coefficients mod p via the finite-field extended gcd.
  field gfp = field::prime(p);
  auto to_poly = [&](const zpoly& z) {
    std::vector<scalar> cs;
    for (const auto& v : z.c) cs.push_back(gfp.from_int(v.get_si()));
    return poly(gfp, std::move(cs));
  };
  poly u(gfp), v(gfp);
  poly gg = poly_ext_gcd(to_poly(g), to_poly(h), &u, &v);
  require_internal(gg.degree() == 0, "hensel: factor halves are not coprime mod p");
  zpoly s = zpoly_from(u, p), t = zpoly_from(v, p);

  mpz_class m = pz;
  zpoly gl = g, hl = h;
  for (int i = 0; i < rounds; ++i) {
    hensel_step(zp_mod(f, m * m), gl, hl, s, t, m);
    m = m * m;
  }
  hensel_lift_tree(gl, factors, lo, mid, p, rounds, target_modulus);
  hensel_lift_tree(hl, factors, mid, hi, p, rounds, target_modulus);
}

mpz_class balanced(const mpz_class& v, const mpz_class& m) {
  mpz_class r = v % m;
  if (r < 0) r += m;
  if (2 * r > m) r -= m;
  return r;
}

// Trial division over Z: does cand (monic, integer) divide f (monic, integer)?
bool z_divides(const zpoly& f, const zpoly& cand, zpoly* quotient) {
  zpoly r = f;
  zpoly q;
  int dd = cand.degree();
  if (f.degree() < dd) return false;
  q.c.assign(static_cast<std::size_t>(f.degree() - dd + 1), mpz_class(0));
  for (int k = f.degree(); k >= dd; --k) {
    mpz_class c = r.coeff(k);
    if (c == 0) continue;
    q.c[static_cast<std::size_t>(k - dd)] = c;
    for (int i = 0; i <= dd; ++i) {
      std::size_t idx = static_cast<std::size_t>(k - dd + i);
      if (idx >= r.c.size()) r.c.resize(idx + 1, mpz_class(0));
      r.c[idx] -= c * cand.coeff(i);
    }
  }
  r.trim();
  bool ok = std::all_of(r.c.begin(), r.c.begin() + std::min<std::ptrdiff_t>(r.c.size(), dd),
                        [](const mpz_class& x) { return x == 0; }) &&
            r.degree() < dd;
  if (ok && quotient) {
    q.trim();
    *quotient = q;
  }
  return ok;
}

poly poly_from_zpoly(const field& fq, const zpoly& z) {
  std::vector<scalar> cs;
  for (const auto& v : z.c) cs.push_back(fq.from_rational(mpq_class(v)));
  return poly(fq, std::move(cs));
}

// Factors a squarefree monic integer polynomial (as a poly over q with
// integer coefficients) into monic irreducibles over Z.
std::vector<zpoly> factor_squarefree_monic_integer(const zpoly& fz, std::uint64_t seed) {
  int n = fz.degree();
  std::vector<zpoly> result;
  if (n <= 0) return result;
  if (n == 1) {
    result.push_back(fz);
    return result;
  }

  // Pick an odd prime p where f stays squarefree (p not dividing disc).
  std::int64_t p = 3;
  field gfp = field::rationals();  // placeholder
  poly fp(field::rationals());
  for (;; p += 2) {
    if (!is_probable_prime(mpz_class(static_cast<long>(p)))) continue;
    gfp = field::prime(p);
    std::vector<scalar> cs;
    for (int i = 0; i <= n; ++i) {
      mpz_class c = fz.coeff(i) % p;
      cs.push_back(gfp.from_int(c.get_si()));
    }
    fp = poly(gfp, std::move(cs));
    if (fp.degree() != n) continue;  // p divides the leading coefficient (monic: cannot happen)
    if (poly_gcd(fp, fp.derivative()).degree() == 0) break;
  }

  // Factor mod p.
  rng r(seed ^ 0x9e3779b97f4a7c15ull);
  factor_list modp;
  factor_finite(fp, 1, r, modp);
  sort_factors(modp);
  if (modp.size() == 1 && modp[0].second == 1) {
    result.push_back(fz);
    return result;
  }
  std::vector<zpoly> lifted;
  for (const auto& [g, m] : modp) {
    require_internal(m == 1, "squarefree input split with multiplicity mod p");
    lifted.push_back(zpoly_from(g, p));
  }

  // Coefficient bound for monic factors (generous Landau-Mignotte style).
  mpz_class norm2 = 0;
  for (const auto& c : fz.c) norm2 += c * c;
  mpz_class norm;
  mpz_sqrt(norm.get_mpz_t(), norm2.get_mpz_t());
  mpz_class bound = (norm + 1);
  mpz_class two_n;
  mpz_ui_pow_ui(two_n.get_mpz_t(), 2, static_cast<unsigned long>(n + 1));
  bound *= two_n;

  int rounds = 0;
  mpz_class modulus(static_cast<long>(p));
  while (modulus <= 2 * bound) {
    modulus = modulus * modulus;
    ++rounds;
  }
  hensel_lift_tree(zp_mod(fz, modulus), lifted, 0, lifted.size(), p, rounds, modulus);

  // Verify the lift.
  {
    zpoly prod;
    prod.c = {mpz_class(1)};
    for (const auto& g : lifted) prod = zp_mul(prod, g, modulus);
    require_internal(zp_sub(prod, zp_mod(fz, modulus), modulus).c.empty(), "hensel lift mismatch");
  }

  // Subset recombination.
  zpoly remaining = fz;
  std::vector<zpoly> pool = lifted;
  std::size_t cardinality = 1;
  while (2 * cardinality <= pool.size()) {
    // Iterate subsets of the given cardinality in lexicographic index order.
    std::vector<std::size_t> idx(cardinality);
    for (std::size_t i = 0; i < cardinality; ++i) idx[i] = i;
    bool advanced_cardinality = true;
    while (true) {
      zpoly cand;
      cand.c = {mpz_class(1)};
      for (std::size_t i : idx) cand = zp_mul(cand, pool[i], modulus);
      for (auto& c : cand.c) c = balanced(c, modulus);
      cand.trim();
      zpoly quotient;
      if (cand.degree() >= 1 && z_divides(remaining, cand, &quotient)) {
        result.push_back(cand);
        remaining = quotient;
        std::vector<zpoly> next_pool;
        for (std::size_t i = 0; i < pool.size(); ++i)
          if (std::find(idx.begin(), idx.end(), i) == idx.end()) next_pool.push_back(pool[i]);
        pool = std::move(next_pool);
        advanced_cardinality = false;
        break;  // restart same cardinality with the reduced pool
      }
      // next subset
      std::size_t k = cardinality;
      while (k > 0 && idx[k - 1] == pool.size() - cardinality + (k - 1)) --k;
      if (k == 0) break;
      ++idx[k - 1];
      for (std::size_t j = k; j < cardinality; ++j) idx[j] = idx[j - 1] + 1;
    }
    if (advanced_cardinality) ++cardinality;
  }
  if (remaining.degree() >= 1) result.push_back(remaining);
  return result;
}

void factor_rationals(const poly& f, std::uint64_t seed, factor_list& out) {
  for (const auto& [g, mult] : yun_squarefree(f.monic())) {
    // Monicize with integer coefficients: for g = x^k + a_{k-1} x^{k-1} + ...
    // over q, substitute x -> x/l and scale to make integral, where l is the
    // lcm of denominators... Simpler: g is monic with rational coefficients;
    // let l = lcm of coefficient denominators, G(x) = l^k g(x/l) is monic
    // with integer coefficients; factors map back via x -> l x and monic
    // rescale.
    int k = g.degree();
    mpz_class l(1);
    for (int i = 0; i < k; ++i) {
      mpz_class den = g.coeff(i).rational_part().get_den();
      mpz_class gg;
      mpz_gcd(gg.get_mpz_t(), l.get_mpz_t(), den.get_mpz_t());
      l = l / gg * den;
    }
    // G coefficients: coeff of x^i in l^k g(x/l) is g_i * l^(k-i).
    zpoly gz;
    gz.c.assign(static_cast<std::size_t>(k) + 1, mpz_class(0));
    mpz_class mult_l(1);
    for (int i = k; i >= 0; --i) {
      mpq_class c = g.coeff(i).rational_part() * mpq_class(mult_l);
      require_internal(c.get_den() == 1, "monicization failed to clear denominators");
      gz.c[static_cast<std::size_t>(i)] = c.get_num();
      mult_l *= l;
    }
    const field& fq = f.get_field();
    for (const auto& hz : factor_squarefree_monic_integer(gz, seed)) {
      // Map back: h(x) -> h(l x), then monic.
      poly h = poly_from_zpoly(fq, hz);
      poly back = h.scale_argument(fq.from_rational(mpq_class(l)));
      append_factor(out, back.monic(), mult);
    }
  }
}

// ---------------------------------------------------------------------------
// gaussian rationals: squarefree norm descent
// ---------------------------------------------------------------------------

void factor_gaussian(const poly& f, std::uint64_t seed, factor_list& out) {
  const field& fqi = f.get_field();
  field fq = field::rationals();
  scalar iunit = *fqi.skew_unit();

  for (const auto& [g0, mult] : yun_squarefree(f.monic())) {
    if (g0.degree() == 1) {
      append_factor(out, g0, mult);
      continue;
    }
    // Find a shift s so that the norm N(g(x - s*i)) = g * conj(g) is squarefree.
    for (std::int64_t s = 0;; ++s) {
      poly shifted = g0.compose(poly::x(fqi) - poly::constant(iunit * fqi.from_int(s)));
      poly norm_qi = shifted * shifted.conj_coeffs();
      // The norm has rational coefficients; move it to q.
      bool rational = true;
      std::vector<scalar> cs;
      for (int i = 0; i <= norm_qi.degree(); ++i) {
        if (norm_qi.coeff(i).imaginary_part() != 0) {
          rational = false;
          break;
        }
        cs.push_back(fq.from_rational(norm_qi.coeff(i).rational_part()));
      }
      require_internal(rational, "norm polynomial must have rational coefficients");
      poly norm_q(fq, std::move(cs));
      if (poly_gcd(norm_q, norm_q.derivative()).degree() != 0) continue;

      factor_list norm_factors;
      factor_rationals(norm_q, seed, norm_factors);
      for (const auto& [h, hm] : norm_factors) {
        require_internal(hm == 1, "squarefree norm split with multiplicity");
        // Pull h back to qi and intersect with the shifted polynomial.
        std::vector<scalar> hc;
        for (int i = 0; i <= h.degree(); ++i)
          hc.push_back(fqi.from_rational(h.coeff(i).rational_part()));
        poly h_qi(fqi, std::move(hc));
        poly factor_shifted = poly_gcd(shifted, h_qi);
        if (factor_shifted.degree() == 0) continue;
        // Undo the shift: x -> x + s*i.
        poly factor = factor_shifted.compose(poly::x(fqi) + poly::constant(iunit * fqi.from_int(s)));
        append_factor(out, factor.monic(), mult);
      }
      break;
    }
  }
}

}  // namespace

// ---------------------------------------------------------------------------
// public interface
// ---------------------------------------------------------------------------

poly poly_powmod(const poly& base, const mpz_class& e, const poly& m) {
  require_input(e >= 0, "negative exponent in poly_powmod");
  const field& f = base.get_field();
  poly acc = poly::constant(f.one()) % m;
  poly b = base % m;
  mpz_class k = e;
  while (k > 0) {
    if (mpz_odd_p(k.get_mpz_t())) acc = (acc * b) % m;
    b = (b * b) % m;
    k >>= 1;
  }
  return acc;
}

std::vector<std::pair<poly, int>> factorize(const poly& f, std::uint64_t seed) {
  require_input(!f.is_zero(), "cannot factor the zero polynomial");
  factor_list out;
  if (f.degree() == 0) return out;
  switch (f.get_field().kind()) {
    case field_kind::prime_field:
    case field_kind::prime_square_field: {
      rng r(seed);
      factor_finite(f.monic(), 1, r, out);
      break;
    }
    case field_kind::rationals:
      factor_rationals(f, seed, out);
      break;
    case field_kind::gaussian_rationals:
      factor_gaussian(f, seed, out);
      break;
  }
  sort_factors(out);
  // Exactness check: the product must reproduce the monic input.
  poly prod = poly::constant(f.get_field().one());
  for (const auto& [g, m] : out) prod = prod * g.pow(m);
  require_internal(prod == f.monic(), "factorization does not multiply back");
  return out;
}

bool is_irreducible(const poly& f, std::uint64_t seed) {
  require_input(f.degree() >= 1, "irreducibility is defined for degree >= 1");
  auto fs = factorize(f, seed);
  return fs.size() == 1 && fs[0].second == 1;
}

std::vector<poly> monic_irreducibles(const field& f, int d) {
  require_input(f.is_finite(), "monic_irreducibles requires a finite field");
  require_input(d >= 1, "degree must be positive");
  double total = 1;
  for (int i = 0; i < d; ++i) total *= static_cast<double>(f.order());
  require_input(total <= 1e6, "enumeration too large");

  std::vector<poly> out;
  std::vector<scalar> elems = f.all_elements();
  std::vector<std::size_t> digits(static_cast<std::size_t>(d), 0);
  while (true) {
    std::vector<scalar> cs;
    cs.reserve(static_cast<std::size_t>(d) + 1);
    for (int i = 0; i < d; ++i) cs.push_back(elems[digits[static_cast<std::size_t>(i)]]);
    cs.push_back(f.one());
    poly cand(f, std::move(cs));
    if (is_irreducible(cand)) out.push_back(cand);
    // increment
    int pos = 0;
    while (pos < d) {
      if (++digits[static_cast<std::size_t>(pos)] < elems.size()) break;
      digits[static_cast<std::size_t>(pos)] = 0;
      ++pos;
    }
    if (pos == d) break;
  }
  std::sort(out.begin(), out.end(), [](const poly& a, const poly& b) {
    return poly::compare(a, b) < 0;
  });
  return out;
}

}  // namespace formcanon
