#pragma once

#include <span>

#include "nambu/check.hpp"
#include "nambu/hom_algebra.hpp"

namespace nambu {

// Every construction validates its hypotheses and refuses (HypothesisError)
// when they fail. Verify::off skips validation for callers that have already
// established the hypotheses.
enum class Verify { on, off };

// Linear form tau(x) = coeffs . x.
struct TraceFunctional {
  Vector coeffs;

  Rational apply(const Vector& v) const;
};

// Yau twist V_beta = (V, beta o [.], (beta a_1, ..., beta a_{n-1})).
// Requires beta to be a weak self-morphism.
HomAlgebra twist(const HomAlgebra& V, const LinearMap& beta, Verify verify = Verify::on);

// k-th derived algebra of a multiplicative algebra:
// (V, a^{2^k - 1} o [.], a^{2^k}); k = 0 returns V.
HomAlgebra derived(const HomAlgebra& V, unsigned k, Verify verify = Verify::on);

// The arity-3 twisting used for ternary Hom-associative algebras and
// Hom-Jordan/Hom-Lie triple systems; same construction as twist.
HomAlgebra ternary_twist(const HomAlgebra& V, const LinearMap& beta, Verify verify = Verify::on);

// {xyz} = (xyz) + (zyx) on a ternary algebra with equal twists. Total
// Hom-associativity of the input is the caller's responsibility.
HomAlgebra jts_from_ternary_assoc(const HomAlgebra& A, Verify verify = Verify::on);

// Meyberg: [xyz] = {xyz} - {yxz} on a triple system with equal twists.
HomAlgebra lts_from_jts(const HomAlgebra& J, Verify verify = Verify::on);

// [xyz] = (xyz) - (yxz) - (zxy) + (zyx); equals the composition of the two
// constructions above (asserted).
HomAlgebra lts_from_ternary_assoc(const HomAlgebra& A, Verify verify = Verify::on);

// A_T = (A, (xyz) = (xy)a(z), (a^2, a^2)) from a Hom-associative algebra.
HomAlgebra ternary_assoc_from_hom_assoc(const HomAlgebra& A, Verify verify = Verify::on);

// L_T = (L, [[x,y],a(z)], (a^2, a^2)) from a multiplicative Hom-Lie algebra.
HomAlgebra lts_from_hom_lie(const HomAlgebra& L, Verify verify = Verify::on);

// A_L = (A, (xy)a(z) - (yx)a(z) - (zx)a(y) + (zy)a(x), (a^2, a^2)) from a
// Hom-associative algebra; equals the composition route (asserted).
HomAlgebra lts_from_hom_assoc(const HomAlgebra& A, Verify verify = Verify::on);

// x * y = (xy + yx)/2 on a binary algebra with identity twist.
HomAlgebra plus_algebra(const HomAlgebra& A, Verify verify = Verify::on);
// [x,y] = xy - yx on a binary algebra with identity twist.
HomAlgebra minus_algebra(const HomAlgebra& A, Verify verify = Verify::on);
// {xyz} = x(yz) + (xy)z - y(xz) from a Jordan algebra (commutativity and the
// Jordan identity are checked).
HomAlgebra jts_from_jordan(const HomAlgebra& A, Verify verify = Verify::on);
// [xyz] = 2(xy)z - (zx)y - (yz)x from a Maltsev algebra.
HomAlgebra lts_from_maltsev(const HomAlgebra& A, Verify verify = Verify::on);

// Arity doubling of a multiplicative Hom-Nambu algebra:
// [x_1..x_{2n-1}]^(1) = [[x_1..x_n], a(x_{n+1}), ..., a(x_{2n-1})], twists
// all a^2. cfg controls the Hom-Nambu hypothesis check and the output table
// size guard.
HomAlgebra raise_arity(const HomAlgebra& L, Verify verify = Verify::on,
                       const CheckConfig& cfg = {});
// k-fold iteration; arity 2^k(n-1)+1, twists a^{2^k}.
HomAlgebra iterate_raise(const HomAlgebra& L, unsigned k, Verify verify = Verify::on,
                         const CheckConfig& cfg = {});

// Arity reduction by a fixed element: [x_1..x_{n-1}]' = [a, x_1..x_{n-1}],
// twists (a_2..a_{n-1}). Requires a_1(a) = a and [a, x, a] = 0 for all x
// (automatic, and skipped, when the bracket is anti-symmetric).
HomAlgebra lower_arity(const HomAlgebra& L, const Vector& a, Verify verify = Verify::on);
// Repeated reduction by a_1, ..., a_k with stage-by-stage hypothesis checks.
HomAlgebra lower_arity_k(const HomAlgebra& L, std::span<const Vector> as,
                         Verify verify = Verify::on);

// [xyz]_tau = tau(x)[y,z] + tau(y)[z,x] + tau(z)[x,y] on a Hom-Lie algebra,
// twists (a, beta). tau must be a trace function and satisfy the three
// compatibility conditions with a and beta.
HomAlgebra ternary_from_trace(const HomAlgebra& L, const TraceFunctional& tau,
                              const LinearMap& beta, Verify verify = Verify::on);

// [x,y]' = tau(a)[x,y] + [a, tau(y)x - tau(x)y], twist beta; equals
// lower_arity(ternary_from_trace(L, tau, beta), a) (asserted).
HomAlgebra reduce_trace_bracket(const HomAlgebra& L, const TraceFunctional& tau,
                                const LinearMap& beta, const Vector& a,
                                Verify verify = Verify::on);

}  // namespace nambu
