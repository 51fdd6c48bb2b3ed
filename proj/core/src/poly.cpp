// formcanon: exact canonical forms for forms and operators over involutive fields.
// SPDX-License-Identifier: MIT
#include "formcanon/poly.hpp"

#include <algorithm>
#include <cctype>

#include "formcanon/factor.hpp"

namespace formcanon {

poly::poly(const field& f, std::vector<scalar> ascending_coeffs)
    : f_(f), c_(std::move(ascending_coeffs)) {
  for (const auto& c : c_) require_internal(c.get_field() == f_, "poly coefficient field mismatch");
  normalize();
}

void poly::normalize() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

poly poly::constant(const scalar& c) {
  return poly(c.get_field(), std::vector<scalar>{c});
}

poly poly::x(const field& f) { return monomial(f, 1, f.one()); }

poly poly::monomial(const field& f, int deg, const scalar& c) {
  std::vector<scalar> cs(static_cast<std::size_t>(deg) + 1, f.zero());
  cs.back() = c;
  return poly(f, std::move(cs));
}

poly poly::from_descending(const field& f, const std::vector<scalar>& cs) {
  std::vector<scalar> asc(cs.rbegin(), cs.rend());
  return poly(f, std::move(asc));
}

scalar poly::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(c_.size())) return f_.zero();
  return c_[static_cast<std::size_t>(i)];
}

scalar poly::leading() const {
  require_input(!is_zero(), "leading coefficient of zero polynomial");
  return c_.back();
}

poly poly::operator+(const poly& o) const {
  require_internal(f_ == o.f_, "mixed-field polynomial arithmetic");
  std::vector<scalar> cs(std::max(c_.size(), o.c_.size()), f_.zero());
  for (std::size_t i = 0; i < cs.size(); ++i)
    cs[i] = coeff(static_cast<int>(i)) + o.coeff(static_cast<int>(i));
  return poly(f_, std::move(cs));
}

poly poly::operator-(const poly& o) const { return *this + (-o); }

poly poly::operator-() const {
  std::vector<scalar> cs(c_);
  for (auto& c : cs) c = -c;
  return poly(f_, std::move(cs));
}

poly poly::operator*(const poly& o) const {
  require_internal(f_ == o.f_, "mixed-field polynomial arithmetic");
  if (is_zero() || o.is_zero()) return poly(f_);
  std::vector<scalar> cs(c_.size() + o.c_.size() - 1, f_.zero());
  for (std::size_t i = 0; i < c_.size(); ++i)
    for (std::size_t j = 0; j < o.c_.size(); ++j) cs[i + j] += c_[i] * o.c_[j];
  return poly(f_, std::move(cs));
}

poly poly::operator*(const scalar& c) const {
  std::vector<scalar> cs(c_);
  for (auto& v : cs) v = v * c;
  return poly(f_, std::move(cs));
}

bool operator==(const poly& a, const poly& b) {
  return a.f_ == b.f_ && a.c_ == b.c_;
}

std::pair<poly, poly> poly::divmod(const poly& d) const {
  require_input(!d.is_zero(), "polynomial division by zero");
  poly r = *this;
  poly q(f_);
  scalar lead_inv = d.leading().inverse();
  int dd = d.degree();
  while (!r.is_zero() && r.degree() >= dd) {
    int k = r.degree() - dd;
    scalar c = r.leading() * lead_inv;
    poly t = poly::monomial(f_, k, c);
    q = q + t;
    r = r - t * d;
  }
  return {q, r};
}

bool poly::divides(const poly& multiple) const {
  if (is_zero()) return multiple.is_zero();
  return multiple.divmod(*this).second.is_zero();
}

bool poly::is_monic() const { return !is_zero() && leading().is_one(); }

poly poly::monic() const {
  require_input(!is_zero(), "monic() of zero polynomial");
  return *this * leading().inverse();
}

poly poly::pow(int e) const {
  require_input(e >= 0, "negative polynomial power");
  poly acc = poly::constant(f_.one());
  poly base = *this;
  while (e > 0) {
    if (e & 1) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

poly poly::derivative() const {
  if (degree() <= 0) return poly(f_);
  std::vector<scalar> cs;
  cs.reserve(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) cs.push_back(c_[i] * f_.from_int(static_cast<std::int64_t>(i)));
  return poly(f_, std::move(cs));
}

scalar poly::eval(const scalar& at) const {
  scalar acc = f_.zero();
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * at + *it;
  return acc;
}

poly poly::conj_coeffs() const {
  std::vector<scalar> cs(c_);
  for (auto& c : cs) c = c.conj();
  return poly(f_, std::move(cs));
}

poly poly::scale_argument(const scalar& c) const {
  std::vector<scalar> cs(c_);
  scalar acc = f_.one();
  for (std::size_t i = 1; i < cs.size(); ++i) {
    acc = acc * c;
    cs[i] = cs[i] * acc;
  }
  return poly(f_, std::move(cs));
}

poly poly::compose(const poly& g) const {
  poly acc(f_);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * g + poly::constant(*it);
  return acc;
}

int poly::compare(const poly& a, const poly& b) {
  require_internal(a.f_ == b.f_, "mixed-field polynomial comparison");
  if (a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
  for (int i = a.degree(); i >= 0; --i) {
    int c = scalar::compare(a.coeff(i), b.coeff(i));
    if (c != 0) return c;
  }
  return 0;
}

// ---------------------------------------------------------------------------
// gcd and friends
// ---------------------------------------------------------------------------

poly poly_gcd(poly a, poly b) {
  while (!b.is_zero()) {
    poly r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.is_zero() ? a : a.monic();
}

poly poly_ext_gcd(const poly& a, const poly& b, poly* u, poly* v) {
  const field& f = a.get_field();
  poly r0 = a, r1 = b;
  poly s0 = poly::constant(f.one()), s1(f);
  poly t0(f), t1 = poly::constant(f.one());
  while (!r1.is_zero()) {
    auto [q, r] = r0.divmod(r1);
    r0 = r1; r1 = r;
    poly s = s0 - q * s1; s0 = s1; s1 = s;
    poly t = t0 - q * t1; t0 = t1; t1 = t;
  }
  if (r0.is_zero()) {
    if (u) *u = s0;
    if (v) *v = t0;
    return r0;
  }
  scalar inv = r0.leading().inverse();
  if (u) *u = s0 * inv;
  if (v) *v = t0 * inv;
  return r0 * inv;
}

poly poly_mod_inverse(const poly& a, const poly& m) {
  poly u(a.get_field()), v(a.get_field());
  poly g = poly_ext_gcd(a % m, m, &u, &v);
  require_input(g.degree() == 0, "element is not invertible modulo the given polynomial");
  return u % m;
}

poly squarefree_part_poly(const poly& f) {
  require_input(!f.is_zero(), "squarefree part of zero polynomial");
  poly out = poly::constant(f.get_field().one());
  for (const auto& [factor, mult] : factorize(f)) out = out * factor;
  return out;
}

poly conj_reciprocal(const poly& f) {
  require_input(!f.is_zero() && !f.constant_term().is_zero(),
                "conjugate-reciprocal requires a nonzero constant term");
  int n = f.degree();
  std::vector<scalar> cs(static_cast<std::size_t>(n) + 1, f.get_field().zero());
  for (int i = 0; i <= n; ++i) cs[static_cast<std::size_t>(i)] = f.coeff(n - i).conj();
  poly rev(f.get_field(), std::move(cs));
  return rev * f.constant_term().conj().inverse();
}

bool is_conj_self_reciprocal(const poly& f) {
  if (f.is_zero() || f.constant_term().is_zero()) return false;
  return conj_reciprocal(f) == f;
}

poly random_monic_poly(const field& f, int d, rng& r, std::int64_t height) {
  std::vector<scalar> cs;
  cs.reserve(static_cast<std::size_t>(d) + 1);
  for (int i = 0; i < d; ++i) cs.push_back(f.random_element(r, height));
  cs.push_back(f.one());
  return poly(f, std::move(cs));
}

// ---------------------------------------------------------------------------
// text form
// ---------------------------------------------------------------------------

std::string poly::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    scalar c = coeff(i);
    if (c.is_zero()) continue;
    bool negative = false;
    if (f_.kind() == field_kind::rationals && c.rational_part() < 0) {
      negative = true;
      c = -c;
    }
    if (first) {
      if (negative) out += "-";
      first = false;
    } else {
      out += negative ? " - " : " + ";
    }
    std::string xpart = i == 0 ? "" : (i == 1 ? "x" : "x^" + std::to_string(i));
    if (i == 0) {
      out += c.to_string();
    } else if (c.is_one()) {
      out += xpart;
    } else {
      out += c.to_string() + "*" + xpart;
    }
  }
  return out;
}

namespace {

// One additive term of the text form: sign * coefficient * x^exponent.
struct text_term {
  int sign;
  std::string coeff;  // empty means 1
  int exponent;
};

std::vector<text_term> tokenize_poly(std::string_view text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  require_input(!s.empty(), "empty polynomial text");

  std::vector<text_term> terms;
  std::size_t i = 0;
  while (i < s.size()) {
    int sign = 1;
    while (i < s.size() && (s[i] == '+' || s[i] == '-')) {
      if (s[i] == '-') sign = -sign;
      ++i;
    }
    require_input(i < s.size(), "dangling sign in polynomial text");
    // Scan one term: until a top-level '+' or '-'.
    std::size_t start = i;
    int depth = 0;
    while (i < s.size()) {
      char c = s[i];
      if (c == '[') ++depth;
      if (c == ']') --depth;
      if (depth == 0 && (c == '+' || c == '-') && i > start) break;
      ++i;
    }
    require_input(depth == 0, "unbalanced brackets in polynomial text");
    std::string term = s.substr(start, i - start);

    // Split the term around a top-level 'x'.
    std::size_t xpos = std::string::npos;
    depth = 0;
    for (std::size_t j = 0; j < term.size(); ++j) {
      if (term[j] == '[') ++depth;
      if (term[j] == ']') --depth;
      if (depth == 0 && term[j] == 'x') {
        xpos = j;
        break;
      }
    }
    text_term t{sign, "", 0};
    if (xpos == std::string::npos) {
      require_input(!term.empty(), "empty term in polynomial text");
      t.coeff = term;
      t.exponent = 0;
    } else {
      std::string pre = term.substr(0, xpos);
      if (!pre.empty() && pre.back() == '*') pre.pop_back();
      t.coeff = pre;
      std::string post = term.substr(xpos + 1);
      if (post.empty()) {
        t.exponent = 1;
      } else {
        require_input(post.front() == '^', "expected '^' after x in '" + term + "'");
        post.erase(post.begin());
        require_input(!post.empty() && std::all_of(post.begin(), post.end(), [](char c) {
                        return std::isdigit(static_cast<unsigned char>(c));
                      }),
                      "bad exponent in '" + term + "'");
        t.exponent = std::stoi(post);
      }
    }
    terms.push_back(std::move(t));
  }
  return terms;
}

}  // namespace

poly poly::parse(const field& f, std::string_view text) {
  poly out(f);
  for (const auto& t : tokenize_poly(text)) {
    scalar c = t.coeff.empty() ? f.one() : scalar::parse(f, t.coeff);
    if (t.sign < 0) c = -c;
    out = out + poly::monomial(f, t.exponent, c);
  }
  return out;
}

// ---------------------------------------------------------------------------
// sequence windows
// ---------------------------------------------------------------------------

sequence_window::sequence_window(int lo, std::vector<scalar> values)
    : lo_(lo), vals_(std::move(values)) {
  require_input(!vals_.empty(), "empty sequence window");
}

const scalar& sequence_window::at(int index) const {
  require_input(index >= lo() && index <= hi(), "sequence window index out of range");
  return vals_[static_cast<std::size_t>(index - lo_)];
}

bool sequence_window::satisfies(const poly& f) const {
  require_input(!f.is_zero(), "zero polynomial is not a recurrence");
  int m = f.degree();
  const field& fld = f.get_field();
  for (int l = lo(); l + m <= hi(); ++l) {
    scalar acc = fld.zero();
    for (int i = 0; i <= m; ++i) acc += f.coeff(i) * at(l + i);
    if (!acc.is_zero()) return false;
  }
  return true;
}

sequence_window sequence_window::extend(const poly& f, int new_lo, int new_hi) const {
  require_input(!f.is_zero(), "zero polynomial is not a recurrence");
  require_input(new_lo <= lo() && new_hi >= hi(), "extension must contain the current window");
  int m = f.degree();
  require_input(length() >= m, "window too short to extend under this recurrence");
  require_input(satisfies(f), "window does not satisfy the recurrence");
  const field& fld = f.get_field();

  std::vector<scalar> vals(static_cast<std::size_t>(new_hi - new_lo + 1), fld.zero());
  auto ref = [&](int idx) -> scalar& { return vals[static_cast<std::size_t>(idx - new_lo)]; };
  for (int i = lo(); i <= hi(); ++i) ref(i) = at(i);

  if (m == 0) {
    // Degree-0 recurrence g0 * a_l = 0 forces the zero sequence.
    for (int i = lo(); i <= hi(); ++i)
      require_input(at(i).is_zero(), "window does not satisfy the recurrence");
    return sequence_window(new_lo, std::move(vals));
  }

  scalar lead_inv = f.coeff(m).inverse();
  for (int t = hi() + 1; t <= new_hi; ++t) {
    scalar acc = fld.zero();
    for (int i = 0; i < m; ++i) acc += f.coeff(i) * ref(t - m + i);
    ref(t) = -acc * lead_inv;
  }
  if (new_lo < lo()) {
    require_input(!f.constant_term().is_zero(),
                  "cannot extend the sequence to the left: the recurrence has a "
                  "non-invertible end coefficient (constant term is zero)");
    scalar tail_inv = f.constant_term().inverse();
    for (int t = lo() - 1; t >= new_lo; --t) {
      scalar acc = fld.zero();
      for (int i = 1; i <= m; ++i) acc += f.coeff(i) * ref(t + i);
      ref(t) = -acc * tail_inv;
    }
  }
  return sequence_window(new_lo, std::move(vals));
}

bool is_strictly_recurrent(const sequence_window& w, const poly& p, int s) {
  require_input(s >= 1, "power must be at least 1");
  return w.satisfies(p.pow(s)) && !w.satisfies(p.pow(s - 1));
}

}  // namespace formcanon
