#include "gsp4/enumerate.hpp"

#include <array>
#include <unordered_set>
#include <vector>

namespace gsp4 {

long gsp4_order(long p) {
  return p * p * p * p * (p - 1) * (p - 1) * (p - 1) * (p + 1) * (p + 1) * (p * p + 1);
}

long borel_order(long p) { return p * p * p * p * (p - 1) * (p - 1) * (p - 1); }

namespace {

using Vec = std::array<long, 4>;

// <u, v> = u0 v2 + u1 v3 - u2 v0 - u3 v1 (the standard alternating form).
long pair_form(const Vec& u, const Vec& v, long p) {
  long s = u[0] * v[2] + u[1] * v[3] - u[2] * v[0] - u[3] * v[1];
  s %= p;
  return s < 0 ? s + p : s;
}

// Coefficient vector of x -> <u, x>.
Vec functional(const Vec& u, long p) {
  auto n = [p](long x) {
    x %= p;
    return x < 0 ? x + p : x;
  };
  return {n(-u[2]), n(-u[3]), n(u[0]), n(u[1])};
}

// Basis of the joint kernel of two independent functionals.
std::array<Vec, 2> kernel2(const Vec& c0, const Vec& c1, long p) {
  std::array<Vec, 2> rows = {c0, c1};
  int pivcol[2] = {-1, -1};
  int r = 0;
  for (int col = 0; col < 4 && r < 2; ++col) {
    int pr = -1;
    for (int i = r; i < 2; ++i)
      if (rows[i][col] != 0) {
        pr = i;
        break;
      }
    if (pr < 0) continue;
    std::swap(rows[pr], rows[r]);
    long inv = fp_inv(rows[r][col], p);
    for (int j = 0; j < 4; ++j) rows[r][j] = rows[r][j] * inv % p;
    for (int i = 0; i < 2; ++i) {
      if (i == r || rows[i][col] == 0) continue;
      long f = rows[i][col];
      for (int j = 0; j < 4; ++j)
        rows[i][j] = ((rows[i][j] - f * rows[r][j]) % p + p) % p;
    }
    pivcol[r++] = col;
  }
  std::array<Vec, 2> basis{};
  int bi = 0;
  for (int col = 0; col < 4; ++col) {
    if (col == pivcol[0] || col == pivcol[1]) continue;
    Vec v{};
    v[col] = 1;
    for (int i = 0; i < r; ++i) v[pivcol[i]] = (p - rows[i][col]) % p;
    basis[bi++] = v;
  }
  return basis;
}

}  // namespace

void enumerate_gsp4(long p, const std::function<void(const FMat&)>& visit) {
  std::vector<Vec> all;
  all.reserve(p * p * p * p);
  for (long a = 0; a < p; ++a)
    for (long b = 0; b < p; ++b)
      for (long c = 0; c < p; ++c)
        for (long d = 0; d < p; ++d) all.push_back(Vec{a, b, c, d});

  FMat g{p, {}};
  for (const Vec& e1 : all) {
    if (e1 == Vec{0, 0, 0, 0}) continue;
    Vec ce1 = functional(e1, p);
    // Particular solution of <e1, x> = 1 plus the kernel of ce1.
    int pi = 0;
    while (ce1[pi] == 0) ++pi;
    Vec f0{};
    f0[pi] = fp_inv(ce1[pi], p);
    // Kernel basis of the single functional ce1: free columns != pi.
    std::array<Vec, 3> ker{};
    {
      int bi = 0;
      long inv = fp_inv(ce1[pi], p);
      for (int col = 0; col < 4; ++col) {
        if (col == pi) continue;
        Vec v{};
        v[col] = 1;
        v[pi] = (p - ce1[col] * inv % p) % p;
        ker[bi++] = v;
      }
    }
    for (long s0 = 0; s0 < p; ++s0)
      for (long s1 = 0; s1 < p; ++s1)
        for (long s2 = 0; s2 < p; ++s2) {
          Vec f1;
          for (int j = 0; j < 4; ++j)
            f1[j] = (f0[j] + s0 * ker[0][j] + s1 * ker[1][j] + s2 * ker[2][j]) % p;
          Vec cf1 = functional(f1, p);
          auto wb = kernel2(ce1, cf1, p);
          long gamma = pair_form(wb[0], wb[1], p);
          long ginv = fp_inv(gamma, p);
          for (long a = 0; a < p; ++a)
            for (long b = 0; b < p; ++b) {
              if (a == 0 && b == 0) continue;
              // e2 = a w0 + b w1; f2 = x w0 + y w1 with (a y - b x) = gamma^{-1}.
              // One particular (x, y) plus multiples of (a, b).
              long x0, y0;
              if (a != 0) {
                x0 = 0;
                y0 = ginv * fp_inv(a, p) % p;
              } else {
                x0 = (p - ginv * fp_inv(b, p) % p) % p;
                y0 = 0;
              }
              for (long t = 0; t < p; ++t) {
                long x = (x0 + t * a) % p;
                long y = (y0 + t * b) % p;
                Vec e2, f2;
                for (int j = 0; j < 4; ++j) {
                  e2[j] = (a * wb[0][j] + b * wb[1][j]) % p;
                  f2[j] = (x * wb[0][j] + y * wb[1][j]) % p;
                }
                for (long mu = 1; mu < p; ++mu) {
                  // Columns (e1, e2, mu f1, mu f2) give similitude mu.
                  for (int i = 0; i < 4; ++i) {
                    g.at(i, 0) = e1[i];
                    g.at(i, 1) = e2[i];
                    g.at(i, 2) = mu * f1[i] % p;
                    g.at(i, 3) = mu * f2[i] % p;
                  }
                  visit(g);
                }
              }
            }
        }
  }
}

long enumerate_gsp4_count(long p, bool check_unique) {
  long count = 0;
  std::unordered_set<unsigned long long> seen;
  enumerate_gsp4(p, [&](const FMat& g) {
    ++count;
    if (!fp_similitude(g))
      throw Error("NotInGroup", "enumerated element fails the similitude test");
    if (check_unique) {
      unsigned long long h = 0;
      for (long v : g.a) h = h * 1000003ULL + static_cast<unsigned long long>(v);
      if (!seen.insert(h).second)
        throw Error("DuplicateElement", "hash collision or repeated element");
    }
  });
  return count;
}

}  // namespace gsp4
