#ifndef GSP4_GMAT_HPP
#define GSP4_GMAT_HPP

#include <array>
#include <optional>

#include "gsp4/exactring.hpp"
#include "gsp4/fp.hpp"

namespace gsp4 {

// 4x4 matrix with entries in Q(sqrt(-d)), row-major.
struct GMat {
  std::array<QuadElement, 16> a{};

  QuadElement& at(int i, int j) { return a[4 * i + j]; }
  const QuadElement& at(int i, int j) const { return a[4 * i + j]; }

  static GMat identity();
  static GMat from_ints(const std::array<long, 16>& m);

  friend GMat operator*(const GMat& x, const GMat& y);
  friend GMat operator-(const GMat& x);
  friend bool operator==(const GMat& x, const GMat& y) { return x.a == y.a; }
  friend bool operator!=(const GMat& x, const GMat& y) { return !(x == y); }

  GMat transpose() const;
  GMat conj() const;  // entrywise Galois conjugate
  GMat scaled(const QuadElement& s) const;
  std::optional<GMat> inverse() const;

  bool is_rational() const;
  bool is_p_integral(long p) const;

  // Reduction mod p; error NotIntegral if some entry is not p-integral,
  // NotRational for reduce_fp on an irrational entry.
  FMat reduce_fp(long p) const;
  Fp2Mat reduce_fp2(const Fp2Ctx& ctx) const;

  std::string str() const;
};

// g^T J g = mu J with J the standard symplectic form (+1 at (0,2),(1,3)).
std::optional<QuadElement> gsp_similitude(const GMat& g);

// conj(g)^T J g = mu J with mu rational (quasi-split unitary similitude).
std::optional<Rational> gu_similitude(const GMat& g);

// Membership in GSp4(Z_p) (rational p-integral entries, unit similitude) and
// in its Iwahori subgroup (Borel pattern mod p).
bool in_gsp4_zp(const GMat& g, long p);
bool in_iwahori(const GMat& g, long p);

// x and y lie in the same left Iwahori coset: x^{-1} y in I_p.
bool same_iwahori_coset(const GMat& x, const GMat& y, long p);

// GU(2,2) analogues over the inert quadratic extension: Iwahori pattern and
// the looser pattern with the (2,0) entry free (0-based zero set (0,1),
// (2,1), (3,0), (3,1), (3,2)).
bool in_gu_zp(const GMat& g, long p);
bool in_gu_iwahori(const GMat& g, long p, const Fp2Ctx& ctx);
bool in_gu_u_tilde(const GMat& g, long p, const Fp2Ctx& ctx);

// ---------------------------------------------------------------------------
// Standard elements
// ---------------------------------------------------------------------------

// Anisotropic torus data: the binary form a x^2 + b xy + c y^2 of
// discriminant b^2 - 4ac = -d, with xi = [[b/2, c], [-a, -b/2]].
struct SParams {
  Rational a, b, c;
  long d = 0;

  // Canonical choice per residue of d mod 4.
  static SParams from_d(long d);

  // alpha = (b + sqrt(-d)) / (2c).
  QuadElement alpha() const;
};

GMat j4();
GMat u_x(const Rational& n, const Rational& q, const Rational& r);
GMat z_y(const Rational& y);
GMat z_inf();
GMat d_lambda(const Rational& lam);  // finite lambda, including 0
GMat d_lambda_inf();
GMat h_lm(long p, long l, long m);  // diag(p^{2m+l}, p^{m+l}, 1, p^m)
GMat eta_p(long p);
GMat s1();
GMat r_y(const Rational& y);
GMat r_inf();

// Levi embeddings of the Siegel-type parabolic of GU(2,2).
GMat m1(const QuadElement& x);                           // diag(x, 1, conj(x)^{-1}, 1)
GMat m2(const std::array<QuadElement, 4>& g);            // 2x2 block at rows/cols {1,3}
GMat embed_gl2(const std::array<QuadElement, 4>& g);     // g -> diag(g, det(g) (g^{-1})^T)

// Image of x + y*xi under the torus embedding into GSp(4).
GMat torus_embed(const SParams& s, const QuadElement& z);

GMat theta(const SParams& s);             // I + alpha E21 - conj(alpha) E34
GMat n_of_m(const SParams& s, long p, long m);

}  // namespace gsp4

#endif
