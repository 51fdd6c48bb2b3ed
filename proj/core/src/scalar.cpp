// formcanon: exact canonical forms for forms and operators over involutive fields.
// SPDX-License-Identifier: MIT
#include "formcanon/scalar.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>

namespace formcanon {

namespace {

constexpr std::int64_t max_prime = (std::int64_t{1} << 31) - 1;

std::int64_t mod_norm(std::int64_t v, std::int64_t p) {
  v %= p;
  if (v < 0) v += p;
  return v;
}

std::int64_t mod_inverse(std::int64_t a, std::int64_t p) {
  // Extended Euclid; a nonzero mod p, p prime.
  std::int64_t t = 0, new_t = 1, r = p, new_r = mod_norm(a, p);
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    std::int64_t tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  require_internal(r == 1, "mod_inverse of non-unit");
  return mod_norm(t, p);
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

mpq_class parse_rational(std::string_view text) {
  auto t = trim(text);
  require_input(!t.empty(), "empty rational literal");
  for (char c : t)
    require_input(std::isdigit(static_cast<unsigned char>(c)) || c == '-' || c == '+' || c == '/',
                  "bad character in rational literal: '" + std::string(t) + "'");
  mpq_class q;
  try {
    q = mpq_class(std::string(t), 10);
  } catch (const std::invalid_argument&) {
    throw invalid_input_error("unparsable rational literal: '" + std::string(t) + "'");
  }
  require_input(q.get_den() != 0, "zero denominator in rational literal");
  q.canonicalize();
  return q;
}

std::int64_t parse_residue(std::string_view text, std::int64_t p) {
  auto t = trim(text);
  require_input(!t.empty(), "empty residue literal");
  mpz_class z;
  try {
    z = mpz_class(std::string(t), 10);
  } catch (const std::invalid_argument&) {
    throw invalid_input_error("unparsable integer literal: '" + std::string(t) + "'");
  }
  mpz_class r = z % p;
  if (r < 0) r += p;
  return r.get_si();
}

// Splits "[x,y]" into its two top-level components.
std::pair<std::string_view, std::string_view> split_bracket_pair(std::string_view t) {
  require_input(t.size() >= 2 && t.front() == '[' && t.back() == ']',
                "expected bracketed pair '[..,..]', got '" + std::string(t) + "'");
  auto inner = t.substr(1, t.size() - 2);
  auto comma = inner.find(',');
  require_input(comma != std::string_view::npos, "expected two comma-separated components");
  return {inner.substr(0, comma), inner.substr(comma + 1)};
}

}  // namespace

// ---------------------------------------------------------------------------
// field
// ---------------------------------------------------------------------------

field field::rationals() { return field(field_kind::rationals, 0, 0); }
field field::gaussian_rationals() { return field(field_kind::gaussian_rationals, 0, 0); }

field field::prime(std::int64_t p) {
  require_input(p != 2, "characteristic 2 is not supported (the theory requires 1/2)");
  require_input(p >= 3 && p <= max_prime, "prime modulus out of supported range");
  require_input(is_probable_prime(mpz_class(static_cast<long>(p))), "modulus is not prime");
  return field(field_kind::prime_field, p, 0);
}

field field::prime_square(std::int64_t p) {
  field base = prime(p);  // validates p
  return field(field_kind::prime_square_field, p, least_nonresidue(base.modulus()));
}

field field::parse(std::string_view tag) {
  auto t = trim(tag);
  if (t == "q") return rationals();
  if (t == "qi") return gaussian_rationals();
  if (t.substr(0, 3) == "gf:") {
    auto rest = t.substr(3);
    auto comma = rest.find(',');
    std::string pstr(comma == std::string_view::npos ? rest : rest.substr(0, comma));
    std::int64_t p = 0;
    auto [ptr, ec] = std::from_chars(pstr.data(), pstr.data() + pstr.size(), p);
    require_input(ec == std::errc() && ptr == pstr.data() + pstr.size(),
                  "bad prime in field tag '" + std::string(t) + "'");
    if (comma == std::string_view::npos) return prime(p);
    auto deg = rest.substr(comma + 1);
    require_input(deg == "2", "only quadratic extensions gf:P,2 are supported");
    return prime_square(p);
  }
  throw unsupported_error("unknown field tag '" + std::string(t) +
                          "' (expected q, qi, gf:P, or gf:P,2)");
}

std::int64_t field::characteristic() const {
  return is_finite() ? p_ : 0;
}

bool field::is_finite() const {
  return kind_ == field_kind::prime_field || kind_ == field_kind::prime_square_field;
}

std::uint64_t field::order() const {
  require_input(is_finite(), "order() requires a finite field");
  auto up = static_cast<std::uint64_t>(p_);
  return kind_ == field_kind::prime_field ? up : up * up;
}

bool field::identity_involution() const {
  return kind_ == field_kind::rationals || kind_ == field_kind::prime_field;
}

std::string field::tag() const {
  switch (kind_) {
    case field_kind::rationals: return "q";
    case field_kind::gaussian_rationals: return "qi";
    case field_kind::prime_field: return "gf:" + std::to_string(p_);
    case field_kind::prime_square_field: return "gf:" + std::to_string(p_) + ",2";
  }
  return "?";
}

scalar field::zero() const { return from_int(0); }
scalar field::one() const { return from_int(1); }

scalar field::from_int(std::int64_t n) const {
  switch (kind_) {
    case field_kind::rationals: return scalar(*this, mpq_class(static_cast<long>(n)));
    case field_kind::gaussian_rationals:
      return scalar(*this, scalar::qi_value{mpq_class(static_cast<long>(n)), mpq_class(0)});
    case field_kind::prime_field:
    case field_kind::prime_square_field:
      return scalar(*this, scalar::fin_value{mod_norm(n, p_), 0});
  }
  throw internal_error("bad field kind");
}

scalar field::from_rational(const mpq_class& q) const {
  switch (kind_) {
    case field_kind::rationals: return scalar(*this, q);
    case field_kind::gaussian_rationals: return scalar(*this, scalar::qi_value{q, mpq_class(0)});
    default:
      throw invalid_input_error("from_rational requires q or qi");
  }
}

std::optional<scalar> field::skew_unit() const {
  switch (kind_) {
    case field_kind::gaussian_rationals:
      return scalar(*this, scalar::qi_value{mpq_class(0), mpq_class(1)});
    case field_kind::prime_square_field:
      return scalar(*this, scalar::fin_value{0, 1});
    default:
      return std::nullopt;
  }
}

std::vector<scalar> field::all_elements() const {
  require_input(is_finite(), "all_elements requires a finite field");
  std::vector<scalar> out;
  if (kind_ == field_kind::prime_field) {
    out.reserve(static_cast<std::size_t>(p_));
    for (std::int64_t a = 0; a < p_; ++a) out.push_back(scalar(*this, scalar::fin_value{a, 0}));
  } else {
    out.reserve(static_cast<std::size_t>(p_ * p_));
    for (std::int64_t a = 0; a < p_; ++a)
      for (std::int64_t b = 0; b < p_; ++b) out.push_back(scalar(*this, scalar::fin_value{a, b}));
  }
  return out;
}

scalar field::random_element(rng& r, std::int64_t height) const {
  switch (kind_) {
    case field_kind::prime_field:
      return scalar(*this, scalar::fin_value{r.range(0, p_ - 1), 0});
    case field_kind::prime_square_field:
      return scalar(*this, scalar::fin_value{r.range(0, p_ - 1), r.range(0, p_ - 1)});
    case field_kind::rationals: {
      mpq_class q(static_cast<long>(r.range(-height, height)),
                  static_cast<long>(r.range(1, height)));
      q.canonicalize();
      return scalar(*this, q);
    }
    case field_kind::gaussian_rationals: {
      mpq_class re(static_cast<long>(r.range(-height, height)),
                   static_cast<long>(r.range(1, height)));
      mpq_class im(static_cast<long>(r.range(-height, height)),
                   static_cast<long>(r.range(1, height)));
      re.canonicalize();
      im.canonicalize();
      return scalar(*this, scalar::qi_value{re, im});
    }
  }
  throw internal_error("bad field kind");
}

// ---------------------------------------------------------------------------
// scalar arithmetic
// ---------------------------------------------------------------------------

namespace {
void check_same_field(const scalar& a, const scalar& b) {
  require_internal(a.get_field() == b.get_field(), "mixed-field scalar arithmetic");
}
}  // namespace

scalar scalar::operator+(const scalar& o) const {
  check_same_field(*this, o);
  switch (f_.kind()) {
    case field_kind::rationals:
      return scalar(f_, std::get<mpq_class>(v_) + std::get<mpq_class>(o.v_));
    case field_kind::gaussian_rationals: {
      const auto& a = std::get<qi_value>(v_);
      const auto& b = std::get<qi_value>(o.v_);
      return scalar(f_, qi_value{a.re + b.re, a.im + b.im});
    }
    default: {
      const auto& a = std::get<fin_value>(v_);
      const auto& b = std::get<fin_value>(o.v_);
      auto p = f_.modulus();
      return scalar(f_, fin_value{mod_norm(a.a + b.a, p), mod_norm(a.b + b.b, p)});
    }
  }
}

scalar scalar::operator-(const scalar& o) const { return *this + (-o); }

scalar scalar::operator-() const {
  switch (f_.kind()) {
    case field_kind::rationals: return scalar(f_, mpq_class(-std::get<mpq_class>(v_)));
    case field_kind::gaussian_rationals: {
      const auto& a = std::get<qi_value>(v_);
      return scalar(f_, qi_value{-a.re, -a.im});
    }
    default: {
      const auto& a = std::get<fin_value>(v_);
      auto p = f_.modulus();
      return scalar(f_, fin_value{mod_norm(-a.a, p), mod_norm(-a.b, p)});
    }
  }
}

scalar scalar::operator*(const scalar& o) const {
  check_same_field(*this, o);
  switch (f_.kind()) {
    case field_kind::rationals:
      return scalar(f_, mpq_class(std::get<mpq_class>(v_) * std::get<mpq_class>(o.v_)));
    case field_kind::gaussian_rationals: {
      const auto& a = std::get<qi_value>(v_);
      const auto& b = std::get<qi_value>(o.v_);
      return scalar(f_, qi_value{a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re});
    }
    case field_kind::prime_field: {
      const auto& a = std::get<fin_value>(v_);
      const auto& b = std::get<fin_value>(o.v_);
      auto p = f_.modulus();
      return scalar(f_, fin_value{mod_norm(a.a * b.a % p, p), 0});
    }
    default: {
      // (a + bt)(c + dt) = (ac + bd n) + (ad + bc) t, with t^2 = n.
      const auto& x = std::get<fin_value>(v_);
      const auto& y = std::get<fin_value>(o.v_);
      auto p = f_.modulus();
      auto n = f_.nonresidue();
      std::int64_t re = mod_norm((x.a * y.a + ((x.b * y.b) % p) * n) % p, p);
      std::int64_t im = mod_norm((x.a * y.b + x.b * y.a) % p, p);
      return scalar(f_, fin_value{re, im});
    }
  }
}

scalar scalar::inverse() const {
  require_input(!is_zero(), "division by zero");
  switch (f_.kind()) {
    case field_kind::rationals:
      return scalar(f_, mpq_class(1 / std::get<mpq_class>(v_)));
    case field_kind::gaussian_rationals: {
      const auto& a = std::get<qi_value>(v_);
      mpq_class n = a.re * a.re + a.im * a.im;
      return scalar(f_, qi_value{a.re / n, -a.im / n});
    }
    case field_kind::prime_field: {
      const auto& a = std::get<fin_value>(v_);
      return scalar(f_, fin_value{mod_inverse(a.a, f_.modulus()), 0});
    }
    default: {
      // 1/(a + bt) = (a - bt) / (a^2 - n b^2); the norm is nonzero because
      // t^2 = n is a nonresidue.
      const auto& x = std::get<fin_value>(v_);
      auto p = f_.modulus();
      auto n = f_.nonresidue();
      std::int64_t nrm = mod_norm((x.a * x.a - ((x.b * x.b) % p) * n) % p, p);
      std::int64_t ninv = mod_inverse(nrm, p);
      return scalar(f_, fin_value{mod_norm(x.a * ninv % p, p), mod_norm(-x.b * ninv % p, p)});
    }
  }
}

scalar scalar::operator/(const scalar& o) const { return *this * o.inverse(); }

scalar scalar::conj() const {
  switch (f_.kind()) {
    case field_kind::rationals:
    case field_kind::prime_field:
      return *this;
    case field_kind::gaussian_rationals: {
      const auto& a = std::get<qi_value>(v_);
      return scalar(f_, qi_value{a.re, -a.im});
    }
    default: {
      const auto& a = std::get<fin_value>(v_);
      return scalar(f_, fin_value{a.a, mod_norm(-a.b, f_.modulus())});
    }
  }
}

scalar scalar::pow(std::uint64_t e) const {
  scalar acc = f_.one();
  scalar base = *this;
  while (e > 0) {
    if (e & 1) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

bool scalar::is_zero() const {
  switch (f_.kind()) {
    case field_kind::rationals: return std::get<mpq_class>(v_) == 0;
    case field_kind::gaussian_rationals: {
      const auto& a = std::get<qi_value>(v_);
      return a.re == 0 && a.im == 0;
    }
    default: {
      const auto& a = std::get<fin_value>(v_);
      return a.a == 0 && a.b == 0;
    }
  }
}

bool scalar::is_one() const { return *this == f_.one(); }

bool operator==(const scalar& a, const scalar& b) {
  return a.f_ == b.f_ && a.v_ == b.v_;
}

int scalar::compare(const scalar& a, const scalar& b) {
  require_internal(a.f_ == b.f_, "mixed-field scalar comparison");
  switch (a.f_.kind()) {
    case field_kind::rationals: {
      int c = cmp(std::get<mpq_class>(a.v_), std::get<mpq_class>(b.v_));
      return c < 0 ? -1 : c > 0 ? 1 : 0;
    }
    case field_kind::gaussian_rationals: {
      const auto& x = std::get<qi_value>(a.v_);
      const auto& y = std::get<qi_value>(b.v_);
      int c = cmp(x.re, y.re);
      if (c != 0) return c < 0 ? -1 : 1;
      c = cmp(x.im, y.im);
      return c < 0 ? -1 : c > 0 ? 1 : 0;
    }
    default: {
      const auto& x = std::get<fin_value>(a.v_);
      const auto& y = std::get<fin_value>(b.v_);
      if (x.a != y.a) return x.a < y.a ? -1 : 1;
      if (x.b != y.b) return x.b < y.b ? -1 : 1;
      return 0;
    }
  }
}

std::string scalar::to_string() const {
  switch (f_.kind()) {
    case field_kind::rationals: return std::get<mpq_class>(v_).get_str();
    case field_kind::gaussian_rationals: {
      const auto& a = std::get<qi_value>(v_);
      return "[" + a.re.get_str() + "," + a.im.get_str() + "]";
    }
    case field_kind::prime_field: return std::to_string(std::get<fin_value>(v_).a);
    default: {
      const auto& a = std::get<fin_value>(v_);
      return "[" + std::to_string(a.a) + "," + std::to_string(a.b) + "]";
    }
  }
}

scalar scalar::parse(const field& f, std::string_view text) {
  auto t = trim(text);
  switch (f.kind()) {
    case field_kind::rationals: return scalar(f, parse_rational(t));
    case field_kind::gaussian_rationals: {
      if (!t.empty() && t.front() == '[') {
        auto [re, im] = split_bracket_pair(t);
        return scalar(f, qi_value{parse_rational(re), parse_rational(im)});
      }
      return scalar(f, qi_value{parse_rational(t), mpq_class(0)});
    }
    case field_kind::prime_field:
      return scalar(f, fin_value{parse_residue(t, f.modulus()), 0});
    default: {
      if (!t.empty() && t.front() == '[') {
        auto [a, b] = split_bracket_pair(t);
        return scalar(f, fin_value{parse_residue(a, f.modulus()), parse_residue(b, f.modulus())});
      }
      return scalar(f, fin_value{parse_residue(t, f.modulus()), 0});
    }
  }
}

mpz_class scalar::height() const {
  switch (f_.kind()) {
    case field_kind::rationals: {
      const auto& q = std::get<mpq_class>(v_);
      mpz_class n = abs(q.get_num());
      mpz_class d = abs(q.get_den());
      return n > d ? n : d;
    }
    case field_kind::gaussian_rationals: {
      const auto& a = std::get<qi_value>(v_);
      mpz_class h = 1;
      for (const mpq_class* q : {&a.re, &a.im}) {
        mpz_class n = abs(q->get_num());
        mpz_class d = abs(q->get_den());
        if (n > h) h = n;
        if (d > h) h = d;
      }
      return h;
    }
    default:
      return mpz_class(1);
  }
}

const mpq_class& scalar::rational_part() const {
  if (f_.kind() == field_kind::rationals) return std::get<mpq_class>(v_);
  require_input(f_.kind() == field_kind::gaussian_rationals, "rational_part requires q or qi");
  return std::get<qi_value>(v_).re;
}

const mpq_class& scalar::imaginary_part() const {
  require_input(f_.kind() == field_kind::gaussian_rationals, "imaginary_part requires qi");
  return std::get<qi_value>(v_).im;
}

std::int64_t scalar::residue_a() const {
  require_input(f_.is_finite(), "residue_a requires a finite field");
  return std::get<fin_value>(v_).a;
}

std::int64_t scalar::residue_b() const {
  require_input(f_.is_finite(), "residue_b requires a finite field");
  return std::get<fin_value>(v_).b;
}

// ---------------------------------------------------------------------------
// squares and norms
// ---------------------------------------------------------------------------

namespace {
bool rational_is_square(const mpq_class& q, mpq_class* root = nullptr) {
  if (q < 0) return false;
  mpz_class n = q.get_num(), d = q.get_den();
  if (mpz_perfect_square_p(n.get_mpz_t()) == 0) return false;
  if (mpz_perfect_square_p(d.get_mpz_t()) == 0) return false;
  if (root) {
    mpz_class rn, rd;
    mpz_sqrt(rn.get_mpz_t(), n.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), d.get_mpz_t());
    *root = mpq_class(rn) / mpq_class(rd);
  }
  return true;
}
}  // namespace

bool scalar::is_square() const {
  if (is_zero()) return true;
  switch (f_.kind()) {
    case field_kind::rationals:
      return rational_is_square(std::get<mpq_class>(v_));
    case field_kind::gaussian_rationals: {
      // z = w^2 iff N(z) is a rational square n^2 (n >= 0) and (re + n)/2 is a
      // rational square (then w = c + di with c^2 = (re+n)/2, d = im/(2c)),
      // or re <= 0 and im = 0 with -re a square (w purely imaginary).
      const auto& z = std::get<qi_value>(v_);
      mpq_class norm = z.re * z.re + z.im * z.im;
      mpq_class n;
      if (!rational_is_square(norm, &n)) return false;
      mpq_class c2 = (z.re + n) / 2;
      mpq_class c;
      if (rational_is_square(c2, &c) && c != 0) return true;
      // Here re + n = 0, so im = 0 and z = re <= 0: need -re to be a square.
      return z.im == 0 && rational_is_square(mpq_class(-z.re));
    }
    case field_kind::prime_field:
      return legendre_symbol(mpz_class(static_cast<long>(std::get<fin_value>(v_).a)),
                             mpz_class(static_cast<long>(f_.modulus()))) == 1;
    default:
      // Euler's criterion in GF(p^2): x is a square iff x^((p^2-1)/2) = 1.
      return pow((f_.order() - 1) / 2).is_one();
  }
}

scalar scalar::square_class_representative() const {
  switch (f_.kind()) {
    case field_kind::rationals: {
      const auto& q = std::get<mpq_class>(v_);
      if (q == 0) return f_.zero();
      // num/den ~ num*den modulo squares.
      mpz_class nd = q.get_num() * q.get_den();
      return scalar(f_, mpq_class(squarefree_part(nd)));
    }
    case field_kind::prime_field: {
      if (is_zero()) return f_.zero();
      return is_square() ? f_.one() : f_.from_int(least_nonresidue(f_.modulus()));
    }
    default:
      throw unsupported_error("square_class_representative is defined for q and gf:P only");
  }
}

scalar scalar::norm_class_representative() const {
  require_input(!f_.identity_involution(),
                "norm_class_representative requires a nonidentity involution");
  require_input(is_conj_fixed(), "norm_class_representative requires a conj-fixed scalar");
  if (is_zero()) return f_.zero();
  if (f_.kind() == field_kind::prime_square_field) {
    // The norm map GF(p^2)* -> GF(p)* is surjective, so all nonzero conj-fixed
    // scalars (elements of GF(p)*) are equivalent.
    return f_.one();
  }
  // q(i): norms are the positive rationals whose squarefree part contains no
  // prime = 3 (mod 4). Keep the sign and those primes.
  const auto& q = std::get<qi_value>(v_).re;
  mpz_class sf = squarefree_part(q.get_num() * q.get_den());
  mpz_class rep = sf < 0 ? mpz_class(-1) : mpz_class(1);
  for (const auto& [prime, exp] : factor_integer(sf)) {
    if (prime % 4 == 3) rep *= prime;
  }
  return scalar(f_, qi_value{mpq_class(rep), mpq_class(0)});
}

// ---------------------------------------------------------------------------
// integer number theory
// ---------------------------------------------------------------------------

bool is_probable_prime(const mpz_class& n) {
  if (n < 2) return false;
  // 2 rounds of Baillie-ish testing via GMP's implementation, which is
  // deterministic for 64-bit inputs and astronomically reliable beyond.
  return mpz_probab_prime_p(n.get_mpz_t(), 32) != 0;
}

namespace {

mpz_class pollard_rho(const mpz_class& n, unsigned long c0) {
  // Floyd cycle detection on x -> x^2 + c (mod n).
  mpz_class x = 2, y = 2, d = 1, c = c0;
  while (d == 1) {
    x = (x * x + c) % n;
    y = (y * y + c) % n;
    y = (y * y + c) % n;
    mpz_class diff = x - y;
    if (diff < 0) diff = -diff;
    if (diff == 0) return 0;  // cycle without factor; caller retries with new c
    mpz_gcd(d.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
  }
  return d == n ? mpz_class(0) : d;
}

void factor_rec(const mpz_class& n, std::vector<mpz_class>& out) {
  if (n == 1) return;
  if (is_probable_prime(n)) {
    out.push_back(n);
    return;
  }
  for (unsigned long c = 1;; ++c) {
    mpz_class d = pollard_rho(n, c);
    if (d != 0) {
      factor_rec(d, out);
      factor_rec(n / d, out);
      return;
    }
  }
}

}  // namespace

std::vector<std::pair<mpz_class, int>> factor_integer(const mpz_class& n) {
  require_input(n != 0, "cannot factor zero");
  mpz_class m = abs(n);
  std::vector<mpz_class> primes;
  // Strip small primes first; rho handles the rest.
  for (long p : {2L, 3L, 5L, 7L, 11L, 13L, 17L, 19L, 23L, 29L, 31L, 37L, 41L, 43L, 47L}) {
    while (m % p == 0) {
      primes.emplace_back(p);
      m /= p;
    }
  }
  factor_rec(m, primes);
  std::sort(primes.begin(), primes.end());
  std::vector<std::pair<mpz_class, int>> out;
  for (const auto& p : primes) {
    if (!out.empty() && out.back().first == p)
      ++out.back().second;
    else
      out.emplace_back(p, 1);
  }
  return out;
}

mpz_class squarefree_part(const mpz_class& n) {
  require_input(n != 0, "squarefree part of zero is undefined");
  mpz_class result = n < 0 ? mpz_class(-1) : mpz_class(1);
  for (const auto& [p, e] : factor_integer(n)) {
    if (e % 2 == 1) result *= p;
  }
  return result;
}

int legendre_symbol(const mpz_class& a, const mpz_class& p) {
  return mpz_legendre(a.get_mpz_t(), p.get_mpz_t());
}

std::int64_t least_nonresidue(std::int64_t p) {
  mpz_class pz(static_cast<long>(p));
  for (std::int64_t n = 2; n < p; ++n) {
    if (legendre_symbol(mpz_class(static_cast<long>(n)), pz) == -1) return n;
  }
  throw internal_error("no quadratic nonresidue found");
}

}  // namespace formcanon
