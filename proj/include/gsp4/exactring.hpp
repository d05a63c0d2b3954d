#ifndef GSP4_EXACTRING_HPP
#define GSP4_EXACTRING_HPP

#include <gmpxx.h>

#include <array>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace gsp4 {

using Rational = mpq_class;

// All structured failures carry a short stable code plus a human message.
struct Error : std::runtime_error {
  std::string code;
  Error(std::string code_, const std::string& msg)
      : std::runtime_error(code_ + ": " + msg), code(std::move(code_)) {}
};

// p-adic valuation of a nonzero integer / rational.
long vp(const mpz_class& n, long p);
long vp(const Rational& x, long p);

// p^e as a rational, e of either sign.
Rational p_pow(long p, long e);

bool is_p_integral(const Rational& x, long p);

// Reduce a p-integral rational to a canonical residue in [0, p).
long mod_p(const Rational& x, long p);

std::string to_string(const Rational& x);  // "num/den" or "num"

// Element u + v*sqrt(-d) of an imaginary quadratic field.  d == 0 marks a
// plain rational (v must then be 0); mixed-d arithmetic is rejected.
struct QuadElement {
  Rational u, v;
  long d = 0;

  QuadElement() : u(0), v(0), d(0) {}
  QuadElement(Rational r) : u(std::move(r)), v(0), d(0) {}
  QuadElement(long n) : u(n), v(0), d(0) {}
  QuadElement(Rational u_, Rational v_, long d_)
      : u(std::move(u_)), v(std::move(v_)), d(d_) {
    if (v == 0 && d != 0) d = d_;  // keep context; harmless
  }

  bool is_rational() const { return v == 0; }
  bool is_zero() const { return u == 0 && v == 0; }

  QuadElement conj() const { return {u, -v, d}; }
  Rational norm() const { return u * u + d * v * v; }
  QuadElement inv() const;

  friend QuadElement operator-(const QuadElement& x) { return {-x.u, -x.v, x.d}; }
  friend QuadElement operator+(const QuadElement& a, const QuadElement& b);
  friend QuadElement operator-(const QuadElement& a, const QuadElement& b);
  friend QuadElement operator*(const QuadElement& a, const QuadElement& b);
  friend QuadElement operator/(const QuadElement& a, const QuadElement& b);
  friend bool operator==(const QuadElement& a, const QuadElement& b) {
    return a.u == b.u && a.v == b.v;
  }
  friend bool operator!=(const QuadElement& a, const QuadElement& b) { return !(a == b); }
};

bool is_p_integral(const QuadElement& x, long p);

// (u mod p, v mod p) for a p-integral element; error NotIntegral otherwise.
std::pair<long, long> quad_reduce_mod_p(const QuadElement& x, long p);

std::string to_string(const QuadElement& x);

// ---------------------------------------------------------------------------
// Laurent polynomials over Q in the formal variable T and the invertible
// symbols lam, z1, A, B, b1..b4.
// ---------------------------------------------------------------------------

enum Sym : int { S_T = 0, S_LAM, S_Z1, S_A, S_B, S_B1, S_B2, S_B3, S_B4, NSYM };

extern const char* const kSymNames[NSYM];

using Mono = std::array<int16_t, NSYM>;

struct SymPoly {
  std::map<Mono, Rational> c;  // no zero coefficients stored

  SymPoly() = default;
  SymPoly(const Rational& r);
  SymPoly(long n) : SymPoly(Rational(n)) {}

  static SymPoly monomial(Sym s, int e, const Rational& coeff = 1);
  static SymPoly from_mono(const Mono& m, const Rational& coeff);

  bool is_zero() const { return c.empty(); }
  bool is_constant() const;
  // The single-monomial test backs unit detection for series inversion.
  bool is_monomial() const { return c.size() == 1; }

  Rational coeff_of(const Mono& m) const;
  int min_exp(Sym s) const;  // 0 on the zero polynomial
  int max_exp(Sym s) const;
  bool depends_on(Sym s) const;

  SymPoly mono_mul(const Mono& m, const Rational& coeff) const;
  SymPoly mono_inverse() const;  // requires is_monomial()

  friend SymPoly operator-(const SymPoly& x);
  friend SymPoly operator+(const SymPoly& a, const SymPoly& b);
  friend SymPoly operator-(const SymPoly& a, const SymPoly& b);
  friend SymPoly operator*(const SymPoly& a, const SymPoly& b);
  friend SymPoly operator*(const SymPoly& a, const Rational& r);
  friend bool operator==(const SymPoly& a, const SymPoly& b) { return a.c == b.c; }
  friend bool operator!=(const SymPoly& a, const SymPoly& b) { return !(a == b); }

  SymPoly& operator+=(const SymPoly& o) { return *this = *this + o; }
  SymPoly& operator-=(const SymPoly& o) { return *this = *this - o; }
  SymPoly& operator*=(const SymPoly& o) { return *this = *this * o; }

  SymPoly pow(long e) const;  // e < 0 only for monomials
};

std::string to_string(const SymPoly& p);

// Truncated power series in T; coefficients are T-free SymPoly.
struct SymSeries {
  int order = 0;
  std::vector<SymPoly> c;  // size order + 1

  SymSeries() : c(1) {}
  explicit SymSeries(int order_) : order(order_), c(order_ + 1) {}

  static SymSeries from_poly(const SymPoly& p, int order);

  const SymPoly& at(int k) const { return c.at(k); }

  friend SymSeries operator+(const SymSeries& a, const SymSeries& b);
  friend SymSeries operator-(const SymSeries& a, const SymSeries& b);
  friend SymSeries operator*(const SymSeries& a, const SymSeries& b);
  friend bool operator==(const SymSeries& a, const SymSeries& b);
};

// Multiplicative inverse up to the truncation order.  The constant term must
// be a unit (a single nonzero monomial); error NonUnitConstantTerm otherwise.
SymSeries series_invert(const SymSeries& s);

// Rational function num/den in canonical form: both parts are cleared to
// integer coefficients, their content gcd removed, and the sign fixed so the
// lexicographically least monomial of the denominator has positive
// coefficient.
struct SymRatFn {
  SymPoly num, den;

  SymRatFn() : num(0), den(1) {}
  SymRatFn(SymPoly n, SymPoly d);
  SymRatFn(const SymPoly& n) : SymRatFn(n, SymPoly(1)) {}
  SymRatFn(const Rational& r) : SymRatFn(SymPoly(r), SymPoly(1)) {}

  friend SymRatFn operator+(const SymRatFn& a, const SymRatFn& b);
  friend SymRatFn operator-(const SymRatFn& a, const SymRatFn& b);
  friend SymRatFn operator*(const SymRatFn& a, const SymRatFn& b);
  friend SymRatFn operator/(const SymRatFn& a, const SymRatFn& b);
};

bool ratfn_eq(const SymRatFn& x, const SymRatFn& y);

// first / (1 - ratio); error DegenerateRatio when ratio == 1.
SymRatFn geometric_sum_closed(const SymPoly& ratio, const SymPoly& first);

// T-expansion of a rational function whose numerator and denominator have no
// negative T-exponents and whose denominator has a unit T^0 part.
SymSeries series_expand(const SymRatFn& r, int order);

std::string to_string(const SymRatFn& r);

}  // namespace gsp4

#endif
