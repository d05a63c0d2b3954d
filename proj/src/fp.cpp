#include "gsp4/fp.hpp"

#include <sstream>

namespace gsp4 {

long fp_inv(long a, long p) {
  a %= p;
  if (a < 0) a += p;
  if (a == 0) throw Error("DivisionByZero", "inverse of 0 mod p");
  long r = 1, base = a, e = p - 2;
  while (e) {
    if (e & 1) r = r * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return r;
}

FMat FMat::identity(long p) {
  FMat m{p, {}};
  for (int i = 0; i < 4; ++i) m.at(i, i) = 1;
  return m;
}

FMat operator*(const FMat& x, const FMat& y) {
  FMat r{x.p, {}};
  for (int i = 0; i < 4; ++i)
    for (int k = 0; k < 4; ++k) {
      long v = x.at(i, k);
      if (!v) continue;
      for (int j = 0; j < 4; ++j) r.at(i, j) = (r.at(i, j) + v * y.at(k, j)) % x.p;
    }
  return r;
}

FMat FMat::transpose() const {
  FMat r{p, {}};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) r.at(i, j) = at(j, i);
  return r;
}

long FMat::det() const {
  // Gaussian elimination on a copy.
  std::array<long, 16> m = a;
  long d = 1;
  for (int col = 0; col < 4; ++col) {
    int piv = -1;
    for (int r = col; r < 4; ++r)
      if (m[4 * r + col] % p != 0) {
        piv = r;
        break;
      }
    if (piv < 0) return 0;
    if (piv != col) {
      for (int j = 0; j < 4; ++j) std::swap(m[4 * piv + j], m[4 * col + j]);
      d = p - d;
    }
    long lead = m[4 * col + col] % p;
    d = d * lead % p;
    long inv = fp_inv(lead, p);
    for (int r = col + 1; r < 4; ++r) {
      long f = m[4 * r + col] % p * inv % p;
      if (!f) continue;
      for (int j = col; j < 4; ++j)
        m[4 * r + j] = ((m[4 * r + j] - f * m[4 * col + j]) % p + p) % p;
    }
  }
  return d % p;
}

std::optional<FMat> FMat::inverse() const {
  std::array<long, 32> m{};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) m[8 * i + j] = at(i, j);
  for (int i = 0; i < 4; ++i) m[8 * i + 4 + i] = 1;
  for (int col = 0; col < 4; ++col) {
    int piv = -1;
    for (int r = col; r < 4; ++r)
      if (m[8 * r + col] != 0) {
        piv = r;
        break;
      }
    if (piv < 0) return std::nullopt;
    if (piv != col)
      for (int j = 0; j < 8; ++j) std::swap(m[8 * piv + j], m[8 * col + j]);
    long inv = fp_inv(m[8 * col + col], p);
    for (int j = 0; j < 8; ++j) m[8 * col + j] = m[8 * col + j] * inv % p;
    for (int r = 0; r < 4; ++r) {
      if (r == col || m[8 * r + col] == 0) continue;
      long f = m[8 * r + col];
      for (int j = 0; j < 8; ++j)
        m[8 * r + j] = ((m[8 * r + j] - f * m[8 * col + j]) % p + p) % p;
    }
  }
  FMat r{p, {}};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) r.at(i, j) = m[8 * i + 4 + j];
  return r;
}

std::string FMat::str() const {
  std::ostringstream os;
  os << "[";
  for (int i = 0; i < 4; ++i) {
    os << (i ? ";" : "") << "[";
    for (int j = 0; j < 4; ++j) os << (j ? "," : "") << at(i, j);
    os << "]";
  }
  os << "]";
  return os.str();
}

std::optional<long> fp_similitude(const FMat& g) {
  // J has +1 at (0,2),(1,3) and -1 at (2,0),(3,1).
  FMat j{g.p, {}};
  j.at(0, 2) = 1;
  j.at(1, 3) = 1;
  j.at(2, 0) = g.p - 1;
  j.at(3, 1) = g.p - 1;
  FMat w = g.transpose() * j * g;
  long mu = w.at(0, 2);
  if (mu == 0) return std::nullopt;
  FMat expect = j;
  for (auto& v : expect.a) v = v * mu % g.p;
  if (!(w == expect)) return std::nullopt;
  return mu;
}

bool iwahori_pattern(const FMat& g) {
  return g.at(0, 1) == 0 && g.at(2, 0) == 0 && g.at(2, 1) == 0 && g.at(3, 0) == 0 &&
         g.at(3, 1) == 0 && g.at(3, 2) == 0;
}

bool in_borel_fp(const FMat& g) {
  if (!fp_similitude(g)) throw Error("NotInGroup", "not a symplectic similitude mod p");
  return iwahori_pattern(g);
}

// ---------------------------------------------------------------------------
// F_{p^2}
// ---------------------------------------------------------------------------

static long fpn(long x, long p) {
  x %= p;
  return x < 0 ? x + p : x;
}

Fp2 fp2_add(const Fp2& a, const Fp2& b, const Fp2Ctx& c) {
  return {fpn(a.x + b.x, c.p), fpn(a.y + b.y, c.p)};
}

Fp2 fp2_sub(const Fp2& a, const Fp2& b, const Fp2Ctx& c) {
  return {fpn(a.x - b.x, c.p), fpn(a.y - b.y, c.p)};
}

Fp2 fp2_mul(const Fp2& a, const Fp2& b, const Fp2Ctx& c) {
  return {fpn(a.x * b.x + c.s2 * a.y * b.y, c.p), fpn(a.x * b.y + a.y * b.x, c.p)};
}

Fp2 fp2_conj(const Fp2& a, const Fp2Ctx& c) { return {a.x, fpn(-a.y, c.p)}; }

Fp2 fp2_inv(const Fp2& a, const Fp2Ctx& c) {
  long n = fpn(a.x * a.x - c.s2 * a.y * a.y, c.p);
  if (n == 0) throw Error("DivisionByZero", "inverse of 0 in F_p^2");
  long ni = fp_inv(n, c.p);
  return {fpn(a.x * ni, c.p), fpn(-a.y * ni, c.p)};
}

Fp2Mat operator*(const Fp2Mat& x, const Fp2Mat& y) {
  Fp2Mat r{x.ctx, {}};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      Fp2 acc{};
      for (int k = 0; k < 4; ++k)
        acc = fp2_add(acc, fp2_mul(x.at(i, k), y.at(k, j), x.ctx), x.ctx);
      r.at(i, j) = acc;
    }
  return r;
}

std::optional<Fp2Mat> Fp2Mat::inverse() const {
  std::array<Fp2, 32> m{};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) m[8 * i + j] = at(i, j);
  for (int i = 0; i < 4; ++i) m[8 * i + 4 + i] = Fp2{1, 0};
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
    Fp2 inv = fp2_inv(m[8 * col + col], ctx);
    for (int j = 0; j < 8; ++j) m[8 * col + j] = fp2_mul(m[8 * col + j], inv, ctx);
    for (int r = 0; r < 4; ++r) {
      if (r == col || m[8 * r + col].is_zero()) continue;
      Fp2 f = m[8 * r + col];
      for (int j = 0; j < 8; ++j)
        m[8 * r + j] = fp2_sub(m[8 * r + j], fp2_mul(f, m[8 * col + j], ctx), ctx);
    }
  }
  Fp2Mat r{ctx, {}};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) r.at(i, j) = m[8 * i + 4 + j];
  return r;
}

Fp2Vec fp2_apply(const Fp2Mat& m, const Fp2Vec& v) {
  Fp2Vec r{};
  for (int i = 0; i < 4; ++i) {
    Fp2 acc{};
    for (int k = 0; k < 4; ++k) acc = fp2_add(acc, fp2_mul(m.at(i, k), v[k], m.ctx), m.ctx);
    r[i] = acc;
  }
  return r;
}

}  // namespace gsp4
