#include "gsp4/exactring.hpp"

#include <algorithm>
#include <sstream>

namespace gsp4 {

long vp(const mpz_class& n, long p) {
  if (n == 0) throw Error("ValuationOfZero", "v_p(0) requested");
  mpz_class m = n, q, r;
  long v = 0;
  for (;;) {
    mpz_fdiv_qr_ui(q.get_mpz_t(), r.get_mpz_t(), m.get_mpz_t(), (unsigned long)p);
    if (r != 0) return v;
    m = q;
    ++v;
  }
}

long vp(const Rational& x, long p) {
  if (x == 0) throw Error("ValuationOfZero", "v_p(0) requested");
  return vp(x.get_num(), p) - vp(x.get_den(), p);
}

Rational p_pow(long p, long e) {
  mpz_class z;
  mpz_ui_pow_ui(z.get_mpz_t(), (unsigned long)p, (unsigned long)(e < 0 ? -e : e));
  Rational r(z);
  return e < 0 ? Rational(1) / r : r;
}

bool is_p_integral(const Rational& x, long p) {
  return x == 0 || vp(x, p) >= 0;
}

long mod_p(const Rational& x, long p) {
  if (!is_p_integral(x, p)) throw Error("NotIntegral", "residue of non-integral rational");
  mpz_class num = x.get_num() % p, den = x.get_den() % p;
  long n = mpz_class(num % p).get_si() % p;
  long dm = mpz_class(den % p).get_si() % p;
  if (n < 0) n += p;
  if (dm < 0) dm += p;
  // invert the denominator mod p
  long inv = 1, base = dm, e = p - 2;
  while (e) {
    if (e & 1) inv = inv * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return n * inv % p;
}

std::string to_string(const Rational& x) {
  if (x.get_den() == 1) return x.get_num().get_str();
  return x.get_num().get_str() + "/" + x.get_den().get_str();
}

// ---------------------------------------------------------------------------
// QuadElement
// ---------------------------------------------------------------------------

static long unify_d(const QuadElement& a, const QuadElement& b) {
  if (a.v == 0) return b.v == 0 ? std::max(a.d, b.d) : b.d;
  if (b.v == 0) return a.d;
  if (a.d != b.d) throw Error("MixedDiscriminant", "arithmetic across different sqrt(-d)");
  return a.d;
}

QuadElement operator+(const QuadElement& a, const QuadElement& b) {
  return {a.u + b.u, a.v + b.v, unify_d(a, b)};
}

QuadElement operator-(const QuadElement& a, const QuadElement& b) {
  return {a.u - b.u, a.v - b.v, unify_d(a, b)};
}

QuadElement operator*(const QuadElement& a, const QuadElement& b) {
  long d = unify_d(a, b);
  return {a.u * b.u - Rational(d) * a.v * b.v, a.u * b.v + a.v * b.u, d};
}

QuadElement QuadElement::inv() const {
  Rational n = norm();
  if (n == 0) throw Error("DivisionByZero", "inverse of zero quadratic element");
  return {u / n, -v / n, d};
}

QuadElement operator/(const QuadElement& a, const QuadElement& b) {
  return a * b.inv();
}

bool is_p_integral(const QuadElement& x, long p) {
  return is_p_integral(x.u, p) && is_p_integral(x.v, p);
}

std::pair<long, long> quad_reduce_mod_p(const QuadElement& x, long p) {
  if (!is_p_integral(x, p))
    throw Error("NotIntegral", "quadratic element has p in a denominator");
  return {mod_p(x.u, p), mod_p(x.v, p)};
}

std::string to_string(const QuadElement& x) {
  if (x.v == 0) return to_string(x.u);
  std::ostringstream os;
  os << to_string(x.u) << "+" << to_string(x.v) << "*sqrt(-" << x.d << ")";
  return os.str();
}

// ---------------------------------------------------------------------------
// SymPoly
// ---------------------------------------------------------------------------

const char* const kSymNames[NSYM] = {"T", "lam", "z1", "A", "B", "b1", "b2", "b3", "b4"};

SymPoly::SymPoly(const Rational& r) {
  if (r != 0) c[Mono{}] = r;
}

SymPoly SymPoly::monomial(Sym s, int e, const Rational& coeff) {
  Mono m{};
  m[s] = (int16_t)e;
  return from_mono(m, coeff);
}

SymPoly SymPoly::from_mono(const Mono& m, const Rational& coeff) {
  SymPoly p;
  if (coeff != 0) p.c[m] = coeff;
  return p;
}

bool SymPoly::is_constant() const {
  return c.empty() || (c.size() == 1 && c.begin()->first == Mono{});
}

Rational SymPoly::coeff_of(const Mono& m) const {
  auto it = c.find(m);
  return it == c.end() ? Rational(0) : it->second;
}

int SymPoly::min_exp(Sym s) const {
  int r = 0;
  bool first = true;
  for (auto& [m, co] : c) {
    if (first || m[s] < r) r = m[s];
    first = false;
  }
  return r;
}

int SymPoly::max_exp(Sym s) const {
  int r = 0;
  bool first = true;
  for (auto& [m, co] : c) {
    if (first || m[s] > r) r = m[s];
    first = false;
  }
  return r;
}

bool SymPoly::depends_on(Sym s) const {
  for (auto& [m, co] : c)
    if (m[s] != 0) return true;
  return false;
}

SymPoly SymPoly::mono_mul(const Mono& m, const Rational& coeff) const {
  SymPoly r;
  if (coeff == 0) return r;
  for (auto& [mm, co] : c) {
    Mono k = mm;
    for (int i = 0; i < NSYM; ++i) k[i] = (int16_t)(k[i] + m[i]);
    r.c[k] = co * coeff;
  }
  return r;
}

SymPoly SymPoly::mono_inverse() const {
  if (!is_monomial()) throw Error("NonUnit", "inverse of a non-monomial polynomial");
  auto& [m, co] = *c.begin();
  Mono k{};
  for (int i = 0; i < NSYM; ++i) k[i] = (int16_t)(-m[i]);
  return from_mono(k, Rational(1) / co);
}

SymPoly operator-(const SymPoly& x) {
  SymPoly r;
  for (auto& [m, co] : x.c) r.c[m] = -co;
  return r;
}

SymPoly operator+(const SymPoly& a, const SymPoly& b) {
  SymPoly r = a;
  for (auto& [m, co] : b.c) {
    auto [it, fresh] = r.c.try_emplace(m, co);
    if (!fresh) {
      it->second += co;
      if (it->second == 0) r.c.erase(it);
    }
  }
  return r;
}

SymPoly operator-(const SymPoly& a, const SymPoly& b) { return a + (-b); }

SymPoly operator*(const SymPoly& a, const SymPoly& b) {
  SymPoly r;
  for (auto& [ma, ca] : a.c)
    for (auto& [mb, cb] : b.c) {
      Mono m;
      for (int i = 0; i < NSYM; ++i) m[i] = (int16_t)(ma[i] + mb[i]);
      auto [it, fresh] = r.c.try_emplace(m, ca * cb);
      if (!fresh) it->second += ca * cb;
    }
  for (auto it = r.c.begin(); it != r.c.end();)
    it = it->second == 0 ? r.c.erase(it) : std::next(it);
  return r;
}

SymPoly operator*(const SymPoly& a, const Rational& r) {
  SymPoly out;
  if (r == 0) return out;
  for (auto& [m, co] : a.c) out.c[m] = co * r;
  return out;
}

SymPoly SymPoly::pow(long e) const {
  if (e < 0) return mono_inverse().pow(-e);
  SymPoly r(1), base = *this;
  while (e) {
    if (e & 1) r *= base;
    if (e >>= 1) base *= base;
  }
  return r;
}

std::string to_string(const SymPoly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto& [m, co] : p.c) {
    if (!first) os << " + ";
    first = false;
    os << to_string(co);
    for (int i = 0; i < NSYM; ++i)
      if (m[i] != 0) os << "*" << kSymNames[i] << "^" << m[i];
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// SymSeries
// ---------------------------------------------------------------------------

SymSeries SymSeries::from_poly(const SymPoly& p, int order) {
  SymSeries s(order);
  for (auto& [m, co] : p.c) {
    if (m[S_T] < 0) throw Error("NegativeTExponent", "series from Laurent polynomial");
    if (m[S_T] > order) continue;
    Mono k = m;
    int t = k[S_T];
    k[S_T] = 0;
    s.c[t] += SymPoly::from_mono(k, co);
  }
  return s;
}

static void check_orders(const SymSeries& a, const SymSeries& b) {
  if (a.order != b.order) throw Error("OrderMismatch", "series truncation orders differ");
}

SymSeries operator+(const SymSeries& a, const SymSeries& b) {
  check_orders(a, b);
  SymSeries r(a.order);
  for (int k = 0; k <= a.order; ++k) r.c[k] = a.c[k] + b.c[k];
  return r;
}

SymSeries operator-(const SymSeries& a, const SymSeries& b) {
  check_orders(a, b);
  SymSeries r(a.order);
  for (int k = 0; k <= a.order; ++k) r.c[k] = a.c[k] - b.c[k];
  return r;
}

SymSeries operator*(const SymSeries& a, const SymSeries& b) {
  check_orders(a, b);
  SymSeries r(a.order);
  for (int i = 0; i <= a.order; ++i) {
    if (a.c[i].is_zero()) continue;
    for (int j = 0; i + j <= a.order; ++j) r.c[i + j] += a.c[i] * b.c[j];
  }
  return r;
}

bool operator==(const SymSeries& a, const SymSeries& b) {
  return a.order == b.order && a.c == b.c;
}

SymSeries series_invert(const SymSeries& s) {
  if (s.c[0].is_zero() || !s.c[0].is_monomial())
    throw Error("NonUnitConstantTerm", "series constant term is not a unit");
  SymSeries r(s.order);
  SymPoly inv0 = s.c[0].mono_inverse();
  r.c[0] = inv0;
  for (int k = 1; k <= s.order; ++k) {
    SymPoly acc;
    for (int j = 1; j <= k; ++j) acc += s.c[j] * r.c[k - j];
    r.c[k] = -(inv0 * acc);
  }
  return r;
}

// ---------------------------------------------------------------------------
// SymRatFn
// ---------------------------------------------------------------------------

static void canonicalize(SymPoly& num, SymPoly& den) {
  if (den.is_zero()) throw Error("DivisionByZero", "zero denominator");
  if (num.is_zero()) {
    den = SymPoly(1);
    return;
  }
  // Clear all coefficient denominators, then remove the integer content gcd.
  mpz_class lcm = 1, g = 0;
  for (auto* p : {&num, &den})
    for (auto& [m, co] : p->c) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), co.get_den().get_mpz_t());
  num = num * Rational(lcm);
  den = den * Rational(lcm);
  for (auto* p : {&num, &den})
    for (auto& [m, co] : p->c) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), co.get_num().get_mpz_t());
  if (g > 1) {
    num = num * Rational(mpz_class(1), g);
    den = den * Rational(mpz_class(1), g);
  }
  if (den.c.begin()->second < 0) {
    num = -num;
    den = -den;
  }
}

SymRatFn::SymRatFn(SymPoly n, SymPoly d) : num(std::move(n)), den(std::move(d)) {
  canonicalize(num, den);
}

SymRatFn operator+(const SymRatFn& a, const SymRatFn& b) {
  return {a.num * b.den + b.num * a.den, a.den * b.den};
}

SymRatFn operator-(const SymRatFn& a, const SymRatFn& b) {
  return {a.num * b.den - b.num * a.den, a.den * b.den};
}

SymRatFn operator*(const SymRatFn& a, const SymRatFn& b) {
  return {a.num * b.num, a.den * b.den};
}

SymRatFn operator/(const SymRatFn& a, const SymRatFn& b) {
  return {a.num * b.den, a.den * b.num};
}

bool ratfn_eq(const SymRatFn& x, const SymRatFn& y) {
  return (x.num * y.den - y.num * x.den).is_zero();
}

SymRatFn geometric_sum_closed(const SymPoly& ratio, const SymPoly& first) {
  SymPoly den = SymPoly(1) - ratio;
  if (den.is_zero()) throw Error("DegenerateRatio", "geometric ratio equals 1");
  return {first, den};
}

SymSeries series_expand(const SymRatFn& r, int order) {
  if (r.num.min_exp(S_T) < 0 || r.den.min_exp(S_T) < 0)
    throw Error("NegativeTExponent", "expansion of Laurent rational function");
  return SymSeries::from_poly(r.num, order) * series_invert(SymSeries::from_poly(r.den, order));
}

std::string to_string(const SymRatFn& r) {
  if (r.den == SymPoly(1)) return to_string(r.num);
  return "(" + to_string(r.num) + ") / (" + to_string(r.den) + ")";
}

}  // namespace gsp4
