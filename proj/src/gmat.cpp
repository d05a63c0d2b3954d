#include "gsp4/gmat.hpp"

#include <sstream>

namespace gsp4 {

GMat GMat::identity() {
  GMat m;
  for (int i = 0; i < 4; ++i) m.at(i, i) = QuadElement(1);
  return m;
}

GMat GMat::from_ints(const std::array<long, 16>& v) {
  GMat m;
  for (int i = 0; i < 16; ++i) m.a[i] = QuadElement(v[i]);
  return m;
}

GMat operator*(const GMat& x, const GMat& y) {
  GMat r;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      QuadElement acc;
      for (int k = 0; k < 4; ++k) acc = acc + x.at(i, k) * y.at(k, j);
      r.at(i, j) = acc;
    }
  return r;
}

GMat operator-(const GMat& x) {
  GMat r = x;
  for (auto& e : r.a) e = -e;
  return r;
}

GMat GMat::transpose() const {
  GMat r;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) r.at(i, j) = at(j, i);
  return r;
}

GMat GMat::conj() const {
  GMat r = *this;
  for (auto& e : r.a) e = e.conj();
  return r;
}

GMat GMat::scaled(const QuadElement& s) const {
  GMat r = *this;
  for (auto& e : r.a) e = e * s;
  return r;
}

std::optional<GMat> GMat::inverse() const {
  std::array<QuadElement, 32> m;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) m[8 * i + j] = at(i, j);
  for (int i = 0; i < 4; ++i) m[8 * i + 4 + i] = QuadElement(1);
  for (int col = 0; col < 4; ++col) {
    int piv = -1;
    for (int r = col; r < 4; ++r)
      if (!m[8 * r + col].is_zero()) {
        piv = r;
        break;
      }
    if (piv < 0) return std::nullopt;
    if (piv != col)
      for (int j = 0; j < 8; ++j) std::swap(m[8 * piv + j], m[8 * col + j]);
    QuadElement inv = m[8 * col + col].inv();
    for (int j = 0; j < 8; ++j) m[8 * col + j] = m[8 * col + j] * inv;
    for (int r = 0; r < 4; ++r) {
      if (r == col || m[8 * r + col].is_zero()) continue;
      QuadElement f = m[8 * r + col];
      for (int j = 0; j < 8; ++j) m[8 * r + j] = m[8 * r + j] - f * m[8 * col + j];
    }
  }
  GMat r;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) r.at(i, j) = m[8 * i + 4 + j];
  return r;
}

bool GMat::is_rational() const {
  for (const auto& e : a)
    if (!e.is_rational()) return false;
  return true;
}

bool GMat::is_p_integral(long p) const {
  for (const auto& e : a)
    if (!gsp4::is_p_integral(e, p)) return false;
  return true;
}

FMat GMat::reduce_fp(long p) const {
  FMat r{p, {}};
  for (int i = 0; i < 16; ++i) {
    if (!a[i].is_rational()) throw Error("NotRational", "irrational entry in reduce_fp");
    if (!gsp4::is_p_integral(a[i].u, p))
      throw Error("NotIntegral", "entry not p-integral in reduce_fp");
    r.a[i] = mod_p(a[i].u, p);
  }
  return r;
}

Fp2Mat GMat::reduce_fp2(const Fp2Ctx& ctx) const {
  Fp2Mat r{ctx, {}};
  for (int i = 0; i < 16; ++i) {
    auto [u, v] = quad_reduce_mod_p(a[i], ctx.p);
    r.a[i] = Fp2{u, v};
  }
  return r;
}

std::string GMat::str() const {
  std::ostringstream os;
  os << "[";
  for (int i = 0; i < 4; ++i) {
    os << (i ? ";" : "") << "[";
    for (int j = 0; j < 4; ++j) os << (j ? "," : "") << to_string(at(i, j));
    os << "]";
  }
  os << "]";
  return os.str();
}

std::optional<QuadElement> gsp_similitude(const GMat& g) {
  GMat w = g.transpose() * j4() * g;
  QuadElement mu = w.at(0, 2);
  if (mu.is_zero()) return std::nullopt;
  if (w != j4().scaled(mu)) return std::nullopt;
  return mu;
}

std::optional<Rational> gu_similitude(const GMat& g) {
  GMat w = g.conj().transpose() * j4() * g;
  QuadElement mu = w.at(0, 2);
  if (mu.is_zero() || !mu.is_rational()) return std::nullopt;
  if (w != j4().scaled(mu)) return std::nullopt;
  return mu.u;
}

bool in_gsp4_zp(const GMat& g, long p) {
  if (!g.is_rational() || !g.is_p_integral(p)) return false;
  auto mu = gsp_similitude(g);
  return mu && vp(mu->u, p) == 0;
}

bool in_iwahori(const GMat& g, long p) {
  return in_gsp4_zp(g, p) && iwahori_pattern(g.reduce_fp(p));
}

bool same_iwahori_coset(const GMat& x, const GMat& y, long p) {
  auto xi = x.inverse();
  if (!xi) return false;
  return in_iwahori(*xi * y, p);
}

bool in_gu_zp(const GMat& g, long p) {
  if (!g.is_p_integral(p)) return false;
  auto mu = gu_similitude(g);
  return mu && vp(*mu, p) == 0;
}

bool in_gu_iwahori(const GMat& g, long p, const Fp2Ctx& ctx) {
  if (!in_gu_zp(g, p)) return false;
  Fp2Mat r = g.reduce_fp2(ctx);
  return r.at(0, 1).is_zero() && r.at(2, 0).is_zero() && r.at(2, 1).is_zero() &&
         r.at(3, 0).is_zero() && r.at(3, 1).is_zero() && r.at(3, 2).is_zero();
}

bool in_gu_u_tilde(const GMat& g, long p, const Fp2Ctx& ctx) {
  if (!in_gu_zp(g, p)) return false;
  Fp2Mat r = g.reduce_fp2(ctx);
  return r.at(0, 1).is_zero() && r.at(2, 1).is_zero() && r.at(3, 0).is_zero() &&
         r.at(3, 1).is_zero() && r.at(3, 2).is_zero();
}

// ---------------------------------------------------------------------------
// Standard elements
// ---------------------------------------------------------------------------

SParams SParams::from_d(long d) {
  long r = ((d % 4) + 4) % 4;
  if (r == 0) return SParams{Rational(d / 4), Rational(0), Rational(1), d};
  if (r == 3) return SParams{Rational((1 + d) / 4), Rational(1), Rational(1), d};
  throw Error("BadDiscriminant", "d must be 0 or 3 mod 4");
}

QuadElement SParams::alpha() const {
  Rational twoc = 2 * c;
  return QuadElement(b / twoc, Rational(1) / twoc, d);
}

GMat j4() {
  GMat m;
  m.at(0, 2) = QuadElement(1);
  m.at(1, 3) = QuadElement(1);
  m.at(2, 0) = QuadElement(-1);
  m.at(3, 1) = QuadElement(-1);
  return m;
}

GMat u_x(const Rational& n, const Rational& q, const Rational& r) {
  GMat m = GMat::identity();
  m.at(0, 2) = QuadElement(n);
  m.at(0, 3) = QuadElement(q);
  m.at(1, 2) = QuadElement(q);
  m.at(1, 3) = QuadElement(r);
  return m;
}

GMat z_y(const Rational& y) {
  GMat m = GMat::identity();
  m.at(0, 1) = QuadElement(y);
  m.at(3, 2) = QuadElement(-y);
  return m;
}

GMat z_inf() {
  return GMat::from_ints({0, 1, 0, 0, 1, 0, 0, 0, 0, 0, 0, 1, 0, 0, 1, 0});
}

GMat d_lambda(const Rational& lam) {
  if (lam == 0)
    return GMat::from_ints({0, 0, 0, 1, -1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1, 0});
  GMat m;
  Rational li = Rational(1) / lam;
  m.at(0, 0) = QuadElement(-lam);
  m.at(0, 3) = QuadElement(1);
  m.at(1, 0) = QuadElement(1);
  m.at(1, 3) = QuadElement(li);
  m.at(2, 1) = QuadElement(1);
  m.at(2, 2) = QuadElement(li);
  m.at(3, 1) = QuadElement(lam);
  m.at(3, 2) = QuadElement(-1);
  return m;
}

GMat d_lambda_inf() {
  return GMat::from_ints({-1, 0, 0, 0, 0, 0, 0, 1, 0, 0, 1, 0, 0, 1, 0, 0});
}

GMat h_lm(long p, long l, long m) {
  GMat h;
  h.at(0, 0) = QuadElement(p_pow(p, 2 * m + l));
  h.at(1, 1) = QuadElement(p_pow(p, m + l));
  h.at(2, 2) = QuadElement(1);
  h.at(3, 3) = QuadElement(p_pow(p, m));
  return h;
}

GMat eta_p(long p) {
  GMat m;
  m.at(0, 3) = QuadElement(1);
  m.at(1, 2) = QuadElement(1);
  m.at(2, 1) = QuadElement(p);
  m.at(3, 0) = QuadElement(p);
  return m;
}

GMat s1() {
  return GMat::from_ints({0, 1, 0, 0, 1, 0, 0, 0, 0, 0, 0, 1, 0, 0, 1, 0});
}

GMat r_y(const Rational& y) {
  GMat m = GMat::identity();
  m.at(2, 0) = QuadElement(y);
  return m;
}

GMat r_inf() {
  return GMat::from_ints({0, 0, -1, 0, 0, -1, 0, 0, -1, 0, 0, 0, 0, 0, 0, 1});
}

GMat m1(const QuadElement& x) {
  GMat m = GMat::identity();
  m.at(0, 0) = x;
  m.at(2, 2) = x.conj().inv();
  return m;
}

GMat m2(const std::array<QuadElement, 4>& g) {
  QuadElement det = g[0] * g[3] - g[1] * g[2];
  GMat m = GMat::identity();
  m.at(1, 1) = g[0];
  m.at(1, 3) = g[1];
  m.at(3, 1) = g[2];
  m.at(3, 3) = g[3];
  m.at(2, 2) = det;
  return m;
}

GMat embed_gl2(const std::array<QuadElement, 4>& g) {
  QuadElement det = g[0] * g[3] - g[1] * g[2];
  if (det.is_zero()) throw Error("DivisionByZero", "singular 2x2 block");
  // det(g) (g^{-1})^T = [[d, -c], [-b, a]]^T ... computed directly.
  GMat m;
  m.at(0, 0) = g[0];
  m.at(0, 1) = g[1];
  m.at(1, 0) = g[2];
  m.at(1, 1) = g[3];
  m.at(2, 2) = g[3];
  m.at(2, 3) = -g[2];
  m.at(3, 2) = -g[1];
  m.at(3, 3) = g[0];
  return m;
}

GMat torus_embed(const SParams& s, const QuadElement& z) {
  // z = u + v sqrt(-d) corresponds to u + (2v) xi since xi^2 = -d/4.
  Rational x = z.u, y = 2 * z.v;
  std::array<QuadElement, 4> g = {QuadElement(x + y * s.b / 2), QuadElement(y * s.c),
                                  QuadElement(-y * s.a), QuadElement(x - y * s.b / 2)};
  return embed_gl2(g);
}

GMat theta(const SParams& s) {
  QuadElement al = s.alpha();
  GMat m = GMat::identity();
  m.at(1, 0) = al;
  m.at(2, 3) = -al.conj();
  return m;
}

GMat n_of_m(const SParams& s, long p, long m) {
  QuadElement al = s.alpha();
  QuadElement pm = QuadElement(p_pow(p, m));
  GMat r = GMat::identity();
  r.at(1, 0) = pm * al;
  r.at(2, 3) = -(pm * al.conj());
  return r;
}

}  // namespace gsp4
