#ifndef GSP4_FP_HPP
#define GSP4_FP_HPP

#include <array>
#include <optional>
#include <string>

#include "gsp4/exactring.hpp"

namespace gsp4 {

long fp_inv(long a, long p);  // a != 0 mod p

// 4x4 matrix over F_p, row-major, entries in [0, p).
struct FMat {
  long p = 0;
  std::array<long, 16> a{};

  long& at(int i, int j) { return a[4 * i + j]; }
  long at(int i, int j) const { return a[4 * i + j]; }

  static FMat identity(long p);
  static FMat zero(long p) { return FMat{p, {}}; }

  friend FMat operator*(const FMat& x, const FMat& y);
  friend bool operator==(const FMat& x, const FMat& y) { return x.p == y.p && x.a == y.a; }

  FMat transpose() const;
  std::optional<FMat> inverse() const;
  long det() const;
  std::string str() const;
};

// Similitude factor mu with g^T J g = mu J, or nullopt if g is not a
// symplectic similitude over F_p.
std::optional<long> fp_similitude(const FMat& g);

// Zero pattern of the Iwahori / Borel reduction: entries (0,1), (2,0), (2,1),
// (3,0), (3,1), (3,2) vanish (0-based).
bool iwahori_pattern(const FMat& g);

bool in_borel_fp(const FMat& g);  // error NotInGroup if g fails the similitude test

// F_{p^2} = F_p(s) with s^2 = -d mod p; requires -d to be a non-residue.
struct Fp2Ctx {
  long p;
  long s2;  // -d mod p
};

struct Fp2 {
  long x = 0, y = 0;  // x + y*s
  bool is_zero() const { return x == 0 && y == 0; }
  bool is_rational() const { return y == 0; }
  friend bool operator==(const Fp2& a, const Fp2& b) = default;
};

Fp2 fp2_add(const Fp2& a, const Fp2& b, const Fp2Ctx& c);
Fp2 fp2_sub(const Fp2& a, const Fp2& b, const Fp2Ctx& c);
Fp2 fp2_mul(const Fp2& a, const Fp2& b, const Fp2Ctx& c);
Fp2 fp2_inv(const Fp2& a, const Fp2Ctx& c);
Fp2 fp2_conj(const Fp2& a, const Fp2Ctx& c);  // Frobenius: s -> -s

struct Fp2Mat {
  Fp2Ctx ctx{};
  std::array<Fp2, 16> a{};

  Fp2& at(int i, int j) { return a[4 * i + j]; }
  const Fp2& at(int i, int j) const { return a[4 * i + j]; }

  friend Fp2Mat operator*(const Fp2Mat& x, const Fp2Mat& y);
  std::optional<Fp2Mat> inverse() const;
};

using Fp2Vec = std::array<Fp2, 4>;

Fp2Vec fp2_apply(const Fp2Mat& m, const Fp2Vec& v);

}  // namespace gsp4

#endif
