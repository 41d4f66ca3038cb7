#pragma once

#include <cstdint>
#include <initializer_list>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "nambu/rational.hpp"

namespace nambu {

// Shape violations (dimension/arity mismatches) are programming errors at the
// API boundary; they throw with a message naming the offending slot.
struct ShapeError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

class Vector {
 public:
  Vector() = default;
  explicit Vector(int dim) : c_(static_cast<std::size_t>(dim)) {}
  Vector(std::initializer_list<Rational> coords) : c_(coords) {}
  explicit Vector(std::vector<Rational> coords) : c_(std::move(coords)) {}

  static Vector unit(int dim, int i);

  int dim() const { return static_cast<int>(c_.size()); }
  const Rational& operator[](int i) const { return c_[static_cast<std::size_t>(i)]; }
  Rational& operator[](int i) { return c_[static_cast<std::size_t>(i)]; }

  bool is_zero() const;
  void set_zero();

  Vector& operator+=(const Vector& o);
  Vector& operator-=(const Vector& o);
  Vector& operator*=(const Rational& s);
  // this += s * o
  void axpy(const Rational& s, const Vector& o);

  friend Vector operator+(Vector a, const Vector& b) { return a += b; }
  friend Vector operator-(Vector a, const Vector& b) { return a -= b; }
  friend Vector operator*(const Rational& s, Vector v) { return v *= s; }
  friend Vector operator-(Vector v);
  friend bool operator==(const Vector& a, const Vector& b) { return a.c_ == b.c_; }

  std::string to_string() const;

 private:
  std::vector<Rational> c_;
};

// A dim x dim matrix of rationals; column j is the image of basis vector e_j.
class LinearMap {
 public:
  LinearMap() = default;
  explicit LinearMap(int dim) : dim_(dim), m_(static_cast<std::size_t>(dim) * dim) {}

  static LinearMap identity(int dim);
  static LinearMap scalar(int dim, const Rational& s);
  static LinearMap diagonal(std::span<const Rational> diag);
  // Rows given in the usual math layout.
  static LinearMap from_rows(const std::vector<std::vector<Rational>>& rows);

  int dim() const { return dim_; }
  const Rational& at(int row, int col) const { return m_[static_cast<std::size_t>(col) * dim_ + row]; }
  Rational& at(int row, int col) { return m_[static_cast<std::size_t>(col) * dim_ + row]; }

  Vector column(int j) const;
  bool is_identity() const;

  Vector apply(const Vector& v) const;
  LinearMap compose(const LinearMap& g) const;  // this after g
  LinearMap power(unsigned k) const;
  LinearMap transpose() const;
  // Exact inverse by Gaussian elimination; nullopt when singular.
  std::optional<LinearMap> inverse() const;

  friend bool operator==(const LinearMap& a, const LinearMap& b) {
    return a.dim_ == b.dim_ && a.m_ == b.m_;
  }

 private:
  int dim_ = 0;
  std::vector<Rational> m_;  // column-major
};

// Packs basis-index tuples into a single ordered key; lexicographic tuple
// order coincides with numeric key order.
std::uint64_t pack_indices(std::span<const int> idx, int dim);
std::vector<int> unpack_indices(std::uint64_t key, int dim, int arity);

// An arity-n product on a d-dimensional space stored as sparse structure
// constants: absent basis tuples map to zero. Immutable after construction.
class MultilinearMap {
 public:
  MultilinearMap() = default;
  MultilinearMap(int dim, int arity, std::map<std::uint64_t, Vector> table);
  // dense_ points into this object's own table, so copies must rebuild it.
  // Moves keep it valid: map nodes are stable under move.
  MultilinearMap(const MultilinearMap& o);
  MultilinearMap& operator=(const MultilinearMap& o);
  MultilinearMap(MultilinearMap&&) = default;
  MultilinearMap& operator=(MultilinearMap&&) = default;
  ~MultilinearMap() = default;

  static MultilinearMap zero(int dim, int arity);

  // Materializes structure constants by evaluating fn on every basis tuple.
  template <typename Fn>
  static MultilinearMap from_fn(int dim, int arity, Fn&& fn) {
    std::map<std::uint64_t, Vector> table;
    std::vector<int> idx(static_cast<std::size_t>(arity), 0);
    while (true) {
      Vector v = fn(std::span<const int>(idx));
      if (!v.is_zero()) table.emplace(pack_indices(idx, dim), std::move(v));
      int slot = arity - 1;
      while (slot >= 0 && ++idx[static_cast<std::size_t>(slot)] == dim) idx[static_cast<std::size_t>(slot--)] = 0;
      if (slot < 0) break;
    }
    return MultilinearMap(dim, arity, std::move(table));
  }

  int dim() const { return dim_; }
  int arity() const { return arity_; }
  const std::map<std::uint64_t, Vector>& table() const { return table_; }
  bool is_zero() const { return table_.empty(); }

  // Value on a basis tuple; nullptr means zero.
  const Vector* basis_value(std::span<const int> idx) const;
  const Vector* basis_value_packed(std::uint64_t key) const;

  Vector eval(std::span<const Vector> args) const;
  Vector eval(std::span<const Vector* const> args) const;
  // out += scale * eval(args); avoids temporaries in hot loops.
  void eval_acc(Vector& out, const Rational& scale, std::span<const Vector* const> args) const;

  // Structure constants of beta o this.
  MultilinearMap twist_product(const LinearMap& beta) const;

  friend bool operator==(const MultilinearMap& a, const MultilinearMap& b) {
    return a.dim_ == b.dim_ && a.arity_ == b.arity_ && a.table_ == b.table_;
  }

 private:
  int dim_ = 0;
  int arity_ = 0;
  std::map<std::uint64_t, Vector> table_;
  // Direct-indexed view of the table, built when dim^arity is small enough.
  std::vector<const Vector*> dense_;
  std::uint64_t key_count_ = 0;

  void build_dense();
};

}  // namespace nambu
