// formcanon: exact canonical forms for forms and operators over involutive fields.
// SPDX-License-Identifier: MIT
#include "formcanon/rational_forms.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

#include "formcanon/common.hpp"
#include "formcanon/scalar.hpp"

namespace formcanon {

namespace {

// p-adic valuation of a nonzero rational; also returns the unit part's
// numerator and denominator.
int valuation(const mpq_class& a, const mpz_class& p, mpz_class* unit_num,
              mpz_class* unit_den) {
  mpz_class num = a.get_num(), den = a.get_den();
  mpz_class nn, dd;
  const auto vn = mpz_remove(nn.get_mpz_t(), num.get_mpz_t(), p.get_mpz_t());
  const auto vd = mpz_remove(dd.get_mpz_t(), den.get_mpz_t(), p.get_mpz_t());
  if (unit_num) *unit_num = nn;
  if (unit_den) *unit_den = dd;
  return static_cast<int>(vn) - static_cast<int>(vd);
}

// Odd residue of a 2-unit rational modulo 8, in {1, 3, 5, 7}.
int mod8(const mpz_class& num, const mpz_class& den) {
  mpz_class n8 = num % 8, d8 = den % 8;
  if (n8 < 0) n8 += 8;
  if (d8 < 0) d8 += 8;
  // For odd d, d^-1 = d (mod 8).
  return static_cast<int>(mpz_class((n8 * d8) % 8).get_si());
}

bool is_perfect_square_q(const mpq_class& a, mpq_class* root) {
  if (a < 0) return false;
  mpz_class num = a.get_num(), den = a.get_den();
  if (mpz_perfect_square_p(num.get_mpz_t()) == 0 ||
      mpz_perfect_square_p(den.get_mpz_t()) == 0)
    return false;
  if (root) {
    mpz_class rn, rd;
    mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
    *root = mpq_class(rn, rd);
  }
  return true;
}

int sgn_q(const mpq_class& a) { return sgn(a); }

}  // namespace

// ---------------------------------------------------------------------------
// Hilbert symbols and local invariants.
// ---------------------------------------------------------------------------

int hilbert_symbol(const mpq_class& a, const mpq_class& b,
                   const mpz_class& v) {
  require_input(a != 0 && b != 0, "Hilbert symbol of zero");
  if (v == 0) return (a < 0 && b < 0) ? -1 : 1;
  require_input(v >= 2 && is_probable_prime(v),
                "Hilbert place must be 0 (real) or a prime");
  mpz_class an, ad, bn, bd;
  const int alpha = valuation(a, v, &an, &ad);
  const int beta = valuation(b, v, &bn, &bd);
  if (v == 2) {
    const int u8 = mod8(an, ad), w8 = mod8(bn, bd);
    const int eps_u = (u8 % 4 == 3) ? 1 : 0;
    const int eps_w = (w8 % 4 == 3) ? 1 : 0;
    const int om_u = (u8 == 3 || u8 == 5) ? 1 : 0;
    const int om_w = (w8 == 3 || w8 == 5) ? 1 : 0;
    const int e = eps_u * eps_w + alpha * om_w + beta * om_u;
    return (e % 2 == 0) ? 1 : -1;
  }
  // Odd prime: (-1)^(alpha beta eps(v)) (u|v)^beta (w|v)^alpha.
  int result = 1;
  const bool eps_v = mpz_class(v % 4) == 3;
  if (alpha % 2 != 0 && beta % 2 != 0 && eps_v) result = -result;
  if (beta % 2 != 0)
    result *= legendre_symbol(an, v) * legendre_symbol(ad, v);
  if (alpha % 2 != 0)
    result *= legendre_symbol(bn, v) * legendre_symbol(bd, v);
  require_internal(result == 1 || result == -1, "Hilbert symbol is a sign");
  return result;
}

std::vector<mpz_class> relevant_places(const std::vector<mpq_class>& values) {
  std::set<mpz_class> places{mpz_class(0), mpz_class(2)};
  for (const mpq_class& a : values) {
    require_input(a != 0, "relevant places of a zero value");
    const mpz_class sf = squarefree_part(a.get_num() * a.get_den());
    for (const auto& [p, e] : factor_integer(sf)) {
      (void)e;
      places.insert(p);
    }
  }
  return {places.begin(), places.end()};
}

int hasse_invariant(const std::vector<mpq_class>& diag, const mpz_class& v) {
  int result = 1;
  for (std::size_t i = 0; i < diag.size(); ++i)
    for (std::size_t j = i + 1; j < diag.size(); ++j)
      result *= hilbert_symbol(diag[i], diag[j], v);
  return result;
}

std::pair<int, int> signature_of(const std::vector<mpq_class>& diag) {
  int pos = 0, neg = 0;
  for (const mpq_class& a : diag) {
    require_input(a != 0, "signature of a degenerate form");
    (a > 0 ? pos : neg)++;
  }
  return {pos, neg};
}

// ---------------------------------------------------------------------------
// Representation search.
// ---------------------------------------------------------------------------

std::optional<std::vector<mpq_class>> represent_by_diagonal(
    const std::vector<mpq_class>& f, const mpq_class& target, int height_cap) {
  const std::size_t n = f.size();
  require_input(target != 0, "representation target must be nonzero");
  for (const mpq_class& a : f)
    require_input(a != 0, "degenerate diagonal entry");
  if (n == 0) return std::nullopt;

  // Stage 1: a single coordinate with a square ratio.
  for (std::size_t i = 0; i < n; ++i) {
    mpq_class root;
    if (is_perfect_square_q(target / f[i], &root)) {
      std::vector<mpq_class> v(n, mpq_class(0));
      v[i] = root;
      return v;
    }
  }

  // Integerize: F_i = f_i * L, T = target * L with L the common denominator.
  mpz_class L = target.get_den();
  for (const mpq_class& a : f) mpz_lcm(L.get_mpz_t(), L.get_mpz_t(), a.get_den().get_mpz_t());
  std::vector<mpz_class> F;
  for (const mpq_class& a : f) F.push_back(mpz_class(a * L));
  const mpz_class T = mpz_class(target * L);

  // Stage 2: coordinate pairs over a growing common denominator m.
  const int m_cap = std::max(2, height_cap / 8);
  for (int m = 1; m <= m_cap; ++m) {
    const mpz_class rhs = T * m * m;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        if (i == j) continue;
        // F_i z^2 + F_j w^2 = rhs; bound z exactly in the definite case.
        mpz_class zmax;
        if (sgn(F[i]) == sgn(F[j])) {
          if (sgn(rhs) != sgn(F[i])) continue;
          mpz_class q = rhs / F[i];
          mpz_sqrt(zmax.get_mpz_t(), q.get_mpz_t());
        } else {
          zmax = height_cap;
        }
        for (mpz_class z = 0; z <= zmax; ++z) {
          const mpz_class rem = rhs - F[i] * z * z;
          if (rem % F[j] != 0) continue;
          const mpz_class w2 = rem / F[j];
          if (w2 < 0 || mpz_perfect_square_p(w2.get_mpz_t()) == 0) continue;
          mpz_class w;
          mpz_sqrt(w.get_mpz_t(), w2.get_mpz_t());
          std::vector<mpq_class> v(n, mpq_class(0));
          v[i] = mpq_class(z, m);
          v[j] = mpq_class(w, m);
          v[i].canonicalize();
          v[j].canonicalize();
          return v;
        }
      }
  }

  // Stage 3: pruned integer search over all coordinates.
  if (n >= 3) {
    std::vector<std::size_t> order(n);
    for (std::size_t i = 0; i < n; ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      return abs(F[a]) > abs(F[b]);
    });
    const int zb = std::max(4, height_cap / 6);
    // Tail range of achievable partial sums with |z_k| <= zb.
    std::vector<mpz_class> tail_max(n + 1, mpz_class(0)), tail_min(n + 1, 0);
    for (std::size_t k = n; k-- > 0;) {
      const mpz_class amp = F[order[k]] * zb * zb;
      tail_max[k] = tail_max[k + 1] + (amp > 0 ? amp : mpz_class(0));
      tail_min[k] = tail_min[k + 1] + (amp < 0 ? amp : mpz_class(0));
    }
    for (int m = 1; m <= std::max(2, height_cap / 20); ++m) {
      const mpz_class rhs = T * m * m;
      std::vector<mpz_class> z(n, mpz_class(0));
      // Depth-first over order[0..n-1].
      std::function<bool(std::size_t, const mpz_class&)> dfs =
          [&](std::size_t k, const mpz_class& remaining) -> bool {
        if (k == n) return remaining == 0;
        if (remaining < tail_min[k] || remaining > tail_max[k]) return false;
        for (long c = 0; c <= zb; ++c) {
          for (int sign : {1, -1}) {
            if (c == 0 && sign < 0) continue;
            const mpz_class val = mpz_class(sign * c);
            z[order[k]] = val;
            if (dfs(k + 1, remaining - F[order[k]] * val * val)) return true;
          }
        }
        z[order[k]] = 0;
        return false;
      };
      if (dfs(0, rhs)) {
        std::vector<mpq_class> v(n);
        for (std::size_t i = 0; i < n; ++i) {
          v[i] = mpq_class(z[i], m);
          v[i].canonicalize();
        }
        return v;
      }
    }
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Equivalence decision with witness construction.
// ---------------------------------------------------------------------------

quadratic_verdict decide_quadratic(const std::vector<mpq_class>& f,
                                   const std::vector<mpq_class>& g,
                                   int height_cap) {
  quadratic_verdict out;
  std::ostringstream report;
  const field q = field::rationals();

  if (f.size() != g.size()) {
    report << "rank: " << f.size() << " vs " << g.size();
    out.report = report.str();
    return out;
  }
  const auto [fp, fn] = signature_of(f);
  const auto [gp, gn] = signature_of(g);
  report << "rank: " << f.size() << " = " << g.size();
  if (fp != gp || fn != gn) {
    report << "; signature: (" << fp << "," << fn << ") vs (" << gp << ","
           << gn << ")";
    out.report = report.str();
    return out;
  }
  report << "; signature: (" << fp << "," << fn << ")";

  mpq_class df = 1, dg = 1;
  for (const auto& a : f) df *= a;
  for (const auto& a : g) dg *= a;
  if (!f.empty() && !is_perfect_square_q(df * dg, nullptr)) {
    report << "; discriminant classes "
           << squarefree_part(df.get_num() * df.get_den()) << " vs "
           << squarefree_part(dg.get_num() * dg.get_den());
    out.report = report.str();
    return out;
  }
  report << "; discriminant class matches";

  std::vector<mpq_class> all = f;
  all.insert(all.end(), g.begin(), g.end());
  for (const mpz_class& v :
       f.empty() ? std::vector<mpz_class>{} : relevant_places(all)) {
    const int hf = hasse_invariant(f, v);
    const int hg = hasse_invariant(g, v);
    if (hf != hg) {
      report << "; Hasse invariant at "
             << (v == 0 ? std::string("the real place")
                        : v.get_str())
             << ": " << hf << " vs " << hg;
      out.report = report.str();
      return out;
    }
  }
  report << "; Hasse invariants match";
  out.equivalent = true;

  // Witness: peel the entries of g off f by represent-and-split.
  matrix w = matrix::identity(q, f.size());
  std::vector<mpq_class> cur = f;
  bool complete = true;
  for (std::size_t k = 0; k < g.size() && complete; ++k) {
    const std::size_t m = cur.size();
    auto rep = represent_by_diagonal(cur, g[k], height_cap);
    if (!rep) {
      complete = false;
      break;
    }
    // Step matrix: first column is the representing vector, the others are
    // unit vectors orthogonalized against it.
    std::size_t pivot = m;
    for (std::size_t i = 0; i < m; ++i)
      if ((*rep)[i] != 0) {
        pivot = i;
        break;
      }
    matrix step(q, m, m);
    for (std::size_t i = 0; i < m; ++i)
      step(i, 0) = q.from_rational((*rep)[i]);
    std::size_t col = 1;
    for (std::size_t j = 0; j < m; ++j) {
      if (j == pivot) continue;
      // e_j - (<v, e_j> / target) * v with <v, e_j> = cur_j v_j.
      const mpq_class coeff = cur[j] * (*rep)[j] / g[k];
      for (std::size_t i = 0; i < m; ++i)
        step(i, col) = q.from_rational(((i == j) ? mpq_class(1) : mpq_class(0)) -
                                       coeff * (*rep)[i]);
      ++col;
    }
    // Gram of the step: diag(g[k]) + complement block; re-diagonalize the
    // complement.
    matrix dcur = matrix::diag(q, [&] {
      std::vector<scalar> d;
      for (const auto& a : cur) d.push_back(q.from_rational(a));
      return d;
    }());
    const matrix gram = step.adjoint() * dcur * step;
    require_internal(gram(0, 0) == q.from_rational(g[k]),
                     "split step represents the target");
    const matrix sub = gram.submatrix(1, 1, m - 1, m - 1);
    auto [dsub, csub] = congruent_diagonalize(sub);
    matrix corr(q, m, m);
    corr(0, 0) = q.one();
    corr.set_block(1, 1, csub);
    const matrix fullstep = step * corr;
    matrix lift = matrix::identity(q, f.size());
    lift.set_block(f.size() - m, f.size() - m, fullstep);
    w = w * lift;
    cur.clear();
    for (const scalar& d : dsub) {
      require_internal(!d.is_zero(), "split keeps the form nondegenerate");
      cur.push_back(d.rational_part());
    }
  }
  if (complete) {
    std::vector<scalar> df2, dg2;
    for (const auto& a : f) df2.push_back(q.from_rational(a));
    for (const auto& a : g) dg2.push_back(q.from_rational(a));
    require_internal(w.adjoint() * matrix::diag(q, df2) * w ==
                         matrix::diag(q, dg2),
                     "congruence witness verifies");
    out.witness = w;
    out.witness_found = true;
    report << "; witness constructed";
  } else {
    report << "; witness search capped";
  }
  out.report = report.str();
  return out;
}

// ---------------------------------------------------------------------------
// Sturm chains and real roots.
// ---------------------------------------------------------------------------

namespace {

std::vector<poly> sturm_chain(const poly& f) {
  std::vector<poly> chain{f, f.derivative()};
  while (chain.back().degree() > 0) {
    poly r = chain[chain.size() - 2] % chain.back();
    if (r.is_zero()) break;
    chain.push_back(-r);
  }
  return chain;
}

int variations_at(const std::vector<poly>& chain, const mpq_class& at) {
  const field q = field::rationals();
  const scalar x = q.from_rational(at);
  int v = 0, prev = 0;
  for (const poly& p : chain) {
    const scalar val = p.eval(x);
    const int s = val.is_zero() ? 0 : (val.rational_part() > 0 ? 1 : -1);
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++v;
    prev = s;
  }
  return v;
}

}  // namespace

int sturm_count(const poly& f, const mpq_class& a, const mpq_class& b) {
  require_input(f.get_field().kind() == field_kind::rationals,
                "Sturm counting works over the rationals");
  require_input(!f.is_zero(), "Sturm count of the zero polynomial");
  require_input(a <= b, "Sturm interval must be ordered");
  const poly sf = squarefree_part_poly(f);
  if (sf.degree() < 1) return 0;
  const auto chain = sturm_chain(sf);
  return variations_at(chain, a) - variations_at(chain, b);
}

std::vector<root_interval> isolate_real_roots(const poly& f) {
  require_input(f.get_field().kind() == field_kind::rationals,
                "root isolation works over the rationals");
  require_input(!f.is_zero(), "root isolation of the zero polynomial");
  const field q = field::rationals();
  const poly sf = squarefree_part_poly(f);
  std::vector<root_interval> out;
  if (sf.degree() < 1) return out;

  mpq_class bound = 1;
  for (int i = 0; i < sf.degree(); ++i) {
    mpq_class c = abs(sf.coeff(i).rational_part() /
                      sf.leading().rational_part());
    bound += c;
  }
  const auto chain = sturm_chain(sf);
  auto count = [&](const mpq_class& a, const mpq_class& b) {
    return variations_at(chain, a) - variations_at(chain, b);
  };
  auto value_at = [&](const mpq_class& at) {
    return sf.eval(q.from_rational(at));
  };

  // Bisection of (a, b]; emits isolating intervals in increasing order.
  std::function<void(const mpq_class&, const mpq_class&, int)> split =
      [&](const mpq_class& a, const mpq_class& b, int c) {
        if (c == 0) return;
        if (c == 1) {
          if (value_at(b).is_zero()) {
            out.push_back({b, b});
            return;
          }
          // Shrink until the left endpoint is not a root (it never is, since
          // counting is open at a) and the interval is clean.
          out.push_back({a, b});
          return;
        }
        // An exact root at the midpoint lands in the left half, since the
        // count is open on the left and closed on the right.
        const mpq_class mid = (a + b) / 2;
        const int left = count(a, mid);
        split(a, mid, left);
        split(mid, b, c - left);
      };
  split(-bound, bound, count(-bound, bound));
  return out;
}

int sign_at_root(const poly& g, const poly& f, root_interval iv) {
  require_input(f.get_field().kind() == field_kind::rationals &&
                    g.get_field().kind() == field_kind::rationals,
                "sign evaluation works over the rationals");
  const field q = field::rationals();
  const poly sf = squarefree_part_poly(f);
  if (iv.lo == iv.hi) {
    const scalar v = g.eval(q.from_rational(iv.lo));
    return v.is_zero() ? 0 : sgn_q(v.rational_part());
  }
  require_input(sturm_count(sf, iv.lo, iv.hi) == 1,
                "interval does not isolate a single root");
  if (g.is_zero()) return 0;
  // Zero exactly when the root is shared with g.
  const poly h = poly_gcd(sf, g);
  if (h.degree() >= 1 && sturm_count(h, iv.lo, iv.hi) > 0) return 0;
  // Refine until g has no root in the interval, then read off the sign.
  mpq_class lo = iv.lo, hi = iv.hi;
  while (sturm_count(g, lo, hi) > 0) {
    const mpq_class mid = (lo + hi) / 2;
    if (sf.eval(q.from_rational(mid)).is_zero()) {
      const scalar v = g.eval(q.from_rational(mid));
      return v.is_zero() ? 0 : sgn_q(v.rational_part());
    }
    if (sturm_count(sf, lo, mid) == 1)
      hi = mid;
    else
      lo = mid;
  }
  const scalar v = g.eval(q.from_rational((lo + hi) / 2));
  require_internal(!v.is_zero(), "refined interval avoids roots of g");
  return sgn_q(v.rational_part());
}

// ---------------------------------------------------------------------------
// Norm equations in quadratic extensions.
// ---------------------------------------------------------------------------

bool is_norm_from_quadratic(const mpq_class& a, const mpz_class& D) {
  require_input(a != 0, "norm test of zero");
  require_input(D != 0 && D != 1 && squarefree_part(D) == D,
                "the extension discriminant must be a squarefree nonsquare");
  std::vector<mpq_class> vals{a, mpq_class(D)};
  for (const mpz_class& v : relevant_places(vals))
    if (hilbert_symbol(a, mpq_class(D), v) != 1) return false;
  return true;
}

std::optional<std::pair<mpq_class, mpq_class>> sum_of_two_squares(
    const mpq_class& a) {
  require_input(a != 0, "two-squares decomposition of zero");
  if (a < 0) return std::nullopt;
  const mpz_class n = a.get_num() * a.get_den();
  // Gaussian factorization: X^2 + Y^2 = n.
  mpz_class X = 1, Y = 0;
  auto gauss_mul = [&](const mpz_class& c, const mpz_class& d) {
    const mpz_class nx = X * c - Y * d;
    const mpz_class ny = X * d + Y * c;
    X = nx;
    Y = ny;
  };
  for (const auto& [p, e] : factor_integer(n)) {
    if (p == 2) {
      for (int i = 0; i < e; ++i) gauss_mul(1, 1);
    } else if (mpz_class(p % 4) == 1) {
      // Cornacchia: t^2 = -1 (mod p), then descend below sqrt(p).
      mpz_class nr = 2;
      while (legendre_symbol(nr, p) != -1) ++nr;
      mpz_class t, exp = (p - 1) / 4;
      mpz_powm(t.get_mpz_t(), nr.get_mpz_t(), exp.get_mpz_t(), p.get_mpz_t());
      require_internal(mpz_class((t * t + 1) % p) == 0,
                       "fourth-power residue squares to -1");
      mpz_class r0 = p, r1 = t;
      while (r1 * r1 > p) {
        mpz_class r2 = r0 % r1;
        r0 = r1;
        r1 = r2;
      }
      mpz_class c = r1, d2 = p - c * c, d;
      require_internal(mpz_perfect_square_p(d2.get_mpz_t()) != 0,
                       "Cornacchia remainder is a square");
      mpz_sqrt(d.get_mpz_t(), d2.get_mpz_t());
      for (int i = 0; i < e; ++i) gauss_mul(c, d);
    } else {
      if (e % 2 != 0) return std::nullopt;  // obstruction at p = 3 (mod 4)
      for (int i = 0; i < e / 2; ++i) gauss_mul(p, 0);
    }
  }
  require_internal(X * X + Y * Y == n, "two-squares decomposition verifies");
  mpq_class x(X, a.get_den()), y(Y, a.get_den());
  x.canonicalize();
  y.canonicalize();
  require_internal(x * x + y * y == a, "rational two-squares verifies");
  return std::make_pair(x, y);
}

std::optional<std::pair<mpq_class, mpq_class>> solve_norm_equation(
    const mpq_class& a, const mpz_class& D, int height_cap) {
  require_input(a != 0, "norm equation with zero right-hand side");
  require_input(D != 0 && D != 1 && squarefree_part(D) == D,
                "the extension discriminant must be a squarefree nonsquare");
  if (!is_norm_from_quadratic(a, D)) return std::nullopt;
  if (D == -1) {
    auto r = sum_of_two_squares(a);
    require_internal(r.has_value(), "norm from Q(i) is a sum of two squares");
    return std::make_pair(r->first, r->second);
  }
  // x = X / (da m), y = Y / (da m): X^2 - D Y^2 = na * da * m^2.
  const mpz_class na = a.get_num(), da = a.get_den();
  for (int m = 1; m <= height_cap; ++m) {
    const mpz_class rhs = na * da * m * m;
    mpz_class ymax;
    if (D < 0) {
      if (rhs < 0) continue;
      mpz_class quot = rhs / (-D);
      mpz_sqrt(ymax.get_mpz_t(), quot.get_mpz_t());
    } else {
      ymax = height_cap;
    }
    for (mpz_class Y = 0; Y <= ymax; ++Y) {
      const mpz_class x2 = rhs + D * Y * Y;
      if (x2 < 0 || mpz_perfect_square_p(x2.get_mpz_t()) == 0) continue;
      mpz_class X;
      mpz_sqrt(X.get_mpz_t(), x2.get_mpz_t());
      mpq_class x(X, da * m), y(Y, da * m);
      x.canonicalize();
      y.canonicalize();
      require_internal(x * x - D * y * y == a, "norm equation verifies");
      return std::make_pair(x, y);
    }
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Palindromic compression.
// ---------------------------------------------------------------------------

poly compressed_reciprocal(const poly& p) {
  const field& f = p.get_field();
  require_input(p.degree() >= 2 && p.degree() % 2 == 0,
                "compression needs an even degree >= 2");
  const int r = p.degree() / 2;
  for (int i = 0; i <= p.degree(); ++i)
    require_input(p.coeff(i) == p.coeff(p.degree() - i),
                  "compression needs palindromic coefficients");
  // p / x^r = c_r + sum_{i>=1} c_{r+i} (x^i + x^-i) and x^i + x^-i = t_i(y)
  // with t_0 = 2, t_1 = y, t_{i+1} = y t_i - t_{i-1}.
  const poly y = poly::x(f);
  poly tprev = poly::constant(f.from_int(2));
  poly tcur = y;
  poly out = poly::constant(p.coeff(r));
  for (int i = 1; i <= r; ++i) {
    out = out + tcur * p.coeff(r + i);
    const poly tnext = y * tcur - tprev;
    tprev = tcur;
    tcur = tnext;
  }
  // Verify x^r * out(x + 1/x) = p exactly, term by term:
  // out_k * (x^2 + 1)^k * x^(r - k).
  poly check(f);
  const poly x2p1 = poly::x(f) * poly::x(f) + poly::constant(f.one());
  for (int k = 0; k <= out.degree(); ++k)
    check = check + x2p1.pow(k) * poly::monomial(f, r - k, out.coeff(k));
  require_internal(check == p, "palindromic compression verifies");
  return out;
}

}  // namespace formcanon
