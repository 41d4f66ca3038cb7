#pragma once

#include <span>

#include "nambu/constructions.hpp"
#include "nambu/hom_algebra.hpp"

namespace nambu {

// Symmetric bilinear form <x,y> = x^t M y.
struct BilinearForm {
  LinearMap matrix;

  Rational apply(const Vector& x, const Vector& y) const;
  // Dim 2N, basis a_{-1}..a_{-N}, a_{+1}..a_{+N}; <a_{-j}, a_{+k}> = delta_{jk},
  // <a_{+j}, a_{+k}> = <a_{-j}, a_{-k}> = 0.
  static BilinearForm fermionic(int N);
};

// [xyz] = lambda(<y,z>x - <z,x>y), twists (Id, Id).
HomAlgebra bilinear_lts(const BilinearForm& form, const Rational& lambda);
// {xyz} = lambda(<x,y>z + <y,z>x - <z,x>y), twists (Id, Id).
HomAlgebra bilinear_jts(const BilinearForm& form, const Rational& lambda);

struct FermionicSystem {
  HomAlgebra algebra;  // the twisted algebra V_alpha
  LinearMap alpha;     // alpha(a_{+-j}) = eta_j^{+-1} a_{+-j}
};
// Requires N >= 2 and every eta_j nonzero. The generator builds the bracket
// both from the explicit product relations and via the twist construction and
// asserts they agree.
FermionicSystem fermionic_system(int N, const Rational& lambda, std::span<const Rational> eta);

// The eight-dimensional alternative algebra, basis e_0..e_7, twist Id.
HomAlgebra octonions();
// e_1 -> e_5, e_2 -> e_6, e_3 -> e_7, e_4 -> e_1, ... (cycle), e_0 fixed.
LinearMap octonion_basic_triple_automorphism();
// x -> conjugate of x (negates e_1..e_7).
LinearMap octonion_conjugate();

// 3x3 Hermitian octonionic matrices with X * Y = (XY + YX)/2, dim 27.
// Basis: 3 diagonal slots, then the (1,2), (1,3), (2,3) octonion entries
// (8 coordinates each, e_0 first).
HomAlgebra exceptional_jordan();
// Entry-wise extension of a unit- and conjugate-preserving octonion morphism
// to dim 27 (hypotheses checked).
LinearMap exceptional_jordan_lift(const LinearMap& alpha_oct);

// p x q rational matrices with {xyz} = x y^t z + z y^t x, twists (Id, Id).
HomAlgebra matrix_jts(int p, int q);

// 2x2 rational matrices with theta = transpose and
// {xyz} = x theta(y) z + z theta(y) x, twists (Id, Id).
HomAlgebra involution_jts();

struct HomPairTernary {
  HomAlgebra algebra;  // untwisted ternary ring, twists (Id, Id)
  LinearMap alpha;     // alpha(f + g) = (gamma^{-1} f beta) + (beta^{-1} g gamma)
};
// Carrier Hom(V,W) + Hom(W,V) with dim V = p, dim W = q, product
// (f1+g1, f2+g2, f3+g3) = (f3 g2 f1) + (g3 f2 g1). Coordinates: the q x p
// matrix f row-major, then the p x q matrix g row-major. beta (p x p) and
// gamma (q x q) must be invertible.
HomPairTernary hom_pair_ternary_ring(int p, int q, const LinearMap& beta, const LinearMap& gamma);

// [e_i, e_j, e_k] = sign(ijkl) e_l for {i,j,k,l} = {1,2,3,4}; anti-symmetric,
// twists (Id, Id).
HomAlgebra quaternion_cross_3lie();

// sl(2) with basis (h, e, f): [h,e] = 2e, [h,f] = -2f, [e,f] = h; twist Id.
HomAlgebra sl2();
// diag(1, t, 1/t); an automorphism of sl(2) for t != 0.
LinearMap sl2_scaling_automorphism(const Rational& t);

// 2-dim algebra [e_1, e_2] = e_2, twist Id.
HomAlgebra affine2();
// tau = (1, 0); a trace function on affine2.
TraceFunctional affine2_trace();

}  // namespace nambu
