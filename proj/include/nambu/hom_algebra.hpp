#pragma once

#include <span>
#include <vector>

#include "nambu/linalg.hpp"
#include "nambu/report.hpp"

namespace nambu {

// An n-ary Hom-algebra: carrier dimension, n-linear bracket, and the ordered
// list of n-1 twisting maps.
class HomAlgebra {
 public:
  HomAlgebra() = default;
  HomAlgebra(MultilinearMap bracket, std::vector<LinearMap> twists);

  // Convenience for the multiplicative layout where all twists are equal.
  static HomAlgebra with_equal_twists(MultilinearMap bracket, const LinearMap& alpha);
  static HomAlgebra untwisted(MultilinearMap bracket);

  int dim() const { return bracket_.dim(); }
  int arity() const { return bracket_.arity(); }
  const MultilinearMap& bracket() const { return bracket_; }
  const std::vector<LinearMap>& twists() const { return twists_; }
  const LinearMap& twist(int i) const { return twists_[static_cast<std::size_t>(i)]; }
  bool twists_equal() const;
  bool twists_identity() const;

  friend bool operator==(const HomAlgebra& a, const HomAlgebra& b) {
    return a.bracket_ == b.bracket_ && a.twists_ == b.twists_;
  }

 private:
  MultilinearMap bracket_;
  std::vector<LinearMap> twists_;
};

// The n-ary Hom-Jacobian J^n evaluated on n-1 xs and n ys:
//   [a1(x1),...,a_{n-1}(x_{n-1}),[y1..yn]]
//   - sum_i [a1(y1),...,a_{i-1}(y_{i-1}),[x1..x_{n-1},y_i],a_i(y_{i+1}),...,a_{n-1}(y_n)]
Vector hom_jacobian(const HomAlgebra& L, std::span<const Vector> xs, std::span<const Vector> ys);
// out += scale * J^n(args) where args = (x_1..x_{n-1}, y_1..y_n) as pointers.
void hom_jacobian_acc(const HomAlgebra& L, Vector& out, const Rational& scale,
                      std::span<const Vector* const> args);

// (xy)a(z) - a(x)(yz) for a binary Hom-algebra.
Vector hom_associator(const HomAlgebra& A, const Vector& x, const Vector& y, const Vector& z);
void hom_associator_acc(const HomAlgebra& A, Vector& out, const Rational& scale,
                        std::span<const Vector* const> xyz);

// Twists all equal and compatible with the bracket. The note distinguishes
// "twists unequal" from "twist not compatible with bracket".
CheckReport is_multiplicative(const HomAlgebra& L);

// f o [.]_src = [.]_dst o f^(tensor n), checked on all basis tuples.
CheckReport is_weak_morphism(const LinearMap& f, const HomAlgebra& src, const HomAlgebra& dst);
// Weak morphism plus f o a_i = a_i o f for every twist pair.
CheckReport is_morphism(const LinearMap& f, const HomAlgebra& src, const HomAlgebra& dst);

}  // namespace nambu
