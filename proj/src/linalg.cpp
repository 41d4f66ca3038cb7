#include "nambu/linalg.hpp"

#include <sstream>

namespace nambu {

Vector Vector::unit(int dim, int i) {
  Vector v(dim);
  v[i] = 1;
  return v;
}

bool Vector::is_zero() const {
  for (const auto& x : c_)
    if (sgn(x) != 0) return false;
  return true;
}

void Vector::set_zero() {
  for (auto& x : c_) x = 0;
}

Vector& Vector::operator+=(const Vector& o) {
  if (o.dim() != dim()) throw ShapeError("vector addition: dimension mismatch");
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

Vector& Vector::operator-=(const Vector& o) {
  if (o.dim() != dim()) throw ShapeError("vector subtraction: dimension mismatch");
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
  return *this;
}

Vector& Vector::operator*=(const Rational& s) {
  for (auto& x : c_) x *= s;
  return *this;
}

void Vector::axpy(const Rational& s, const Vector& o) {
  for (std::size_t i = 0; i < c_.size(); ++i)
    if (sgn(o.c_[i]) != 0) c_[i] += s * o.c_[i];
}

Vector operator-(Vector v) {
  for (auto& x : v.c_) x = -x;
  return v;
}

std::string Vector::to_string() const {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (i) os << ", ";
    os << c_[i].get_str();
  }
  os << ")";
  return os.str();
}

LinearMap LinearMap::identity(int dim) {
  LinearMap f(dim);
  for (int i = 0; i < dim; ++i) f.at(i, i) = 1;
  return f;
}

LinearMap LinearMap::scalar(int dim, const Rational& s) {
  LinearMap f(dim);
  for (int i = 0; i < dim; ++i) f.at(i, i) = s;
  return f;
}

LinearMap LinearMap::diagonal(std::span<const Rational> diag) {
  LinearMap f(static_cast<int>(diag.size()));
  for (int i = 0; i < f.dim_; ++i) f.at(i, i) = diag[static_cast<std::size_t>(i)];
  return f;
}

LinearMap LinearMap::from_rows(const std::vector<std::vector<Rational>>& rows) {
  const int d = static_cast<int>(rows.size());
  LinearMap f(d);
  for (int i = 0; i < d; ++i) {
    if (static_cast<int>(rows[static_cast<std::size_t>(i)].size()) != d)
      throw ShapeError("matrix row " + std::to_string(i + 1) + " has wrong length");
    for (int j = 0; j < d; ++j) f.at(i, j) = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
  }
  return f;
}

Vector LinearMap::column(int j) const {
  Vector v(dim_);
  for (int i = 0; i < dim_; ++i) v[i] = at(i, j);
  return v;
}

bool LinearMap::is_identity() const {
  for (int j = 0; j < dim_; ++j)
    for (int i = 0; i < dim_; ++i)
      if (at(i, j) != ((i == j) ? 1 : 0)) return false;
  return true;
}

Vector LinearMap::apply(const Vector& v) const {
  if (v.dim() != dim_) throw ShapeError("apply: vector dimension mismatch");
  Vector out(dim_);
  for (int j = 0; j < dim_; ++j) {
    if (is_zero(v[j])) continue;
    for (int i = 0; i < dim_; ++i)
      if (sgn(at(i, j)) != 0) out[i] += at(i, j) * v[j];
  }
  return out;
}

LinearMap LinearMap::compose(const LinearMap& g) const {
  if (g.dim_ != dim_) throw ShapeError("compose: dimension mismatch");
  LinearMap out(dim_);
  for (int j = 0; j < dim_; ++j)
    for (int k = 0; k < dim_; ++k) {
      if (sgn(g.at(k, j)) == 0) continue;
      for (int i = 0; i < dim_; ++i)
        if (sgn(at(i, k)) != 0) out.at(i, j) += at(i, k) * g.at(k, j);
    }
  return out;
}

LinearMap LinearMap::power(unsigned k) const {
  LinearMap out = identity(dim_);
  for (unsigned i = 0; i < k; ++i) out = compose(out);
  return out;
}

LinearMap LinearMap::transpose() const {
  LinearMap out(dim_);
  for (int j = 0; j < dim_; ++j)
    for (int i = 0; i < dim_; ++i) out.at(j, i) = at(i, j);
  return out;
}

std::optional<LinearMap> LinearMap::inverse() const {
  LinearMap a = *this;
  LinearMap inv = identity(dim_);
  for (int col = 0; col < dim_; ++col) {
    int pivot = -1;
    for (int r = col; r < dim_; ++r)
      if (sgn(a.at(r, col)) != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) return std::nullopt;
    if (pivot != col)
      for (int j = 0; j < dim_; ++j) {
        swap(a.at(pivot, j), a.at(col, j));
        swap(inv.at(pivot, j), inv.at(col, j));
      }
    const Rational p = a.at(col, col);
    for (int j = 0; j < dim_; ++j) {
      a.at(col, j) /= p;
      inv.at(col, j) /= p;
    }
    for (int r = 0; r < dim_; ++r) {
      if (r == col || sgn(a.at(r, col)) == 0) continue;
      const Rational f = a.at(r, col);
      for (int j = 0; j < dim_; ++j) {
        a.at(r, j) -= f * a.at(col, j);
        inv.at(r, j) -= f * inv.at(col, j);
      }
    }
  }
  return inv;
}

std::uint64_t pack_indices(std::span<const int> idx, int dim) {
  std::uint64_t key = 0;
  for (int i : idx) key = key * static_cast<std::uint64_t>(dim) + static_cast<std::uint64_t>(i);
  return key;
}

std::vector<int> unpack_indices(std::uint64_t key, int dim, int arity) {
  std::vector<int> idx(static_cast<std::size_t>(arity));
  for (int i = arity - 1; i >= 0; --i) {
    idx[static_cast<std::size_t>(i)] = static_cast<int>(key % static_cast<std::uint64_t>(dim));
    key /= static_cast<std::uint64_t>(dim);
  }
  return idx;
}

namespace {

constexpr std::uint64_t kDenseLimit = 1u << 21;

std::uint64_t checked_key_count(int dim, int arity) {
  std::uint64_t n = 1;
  for (int i = 0; i < arity; ++i) {
    if (n > (std::uint64_t(1) << 62) / static_cast<std::uint64_t>(dim))
      throw ShapeError("multilinear map: dim^arity overflows the index space");
    n *= static_cast<std::uint64_t>(dim);
  }
  return n;
}

}  // namespace

MultilinearMap::MultilinearMap(int dim, int arity, std::map<std::uint64_t, Vector> table)
    : dim_(dim), arity_(arity), table_(std::move(table)) {
  if (dim < 1) throw ShapeError("multilinear map: dimension must be positive");
  if (arity < 2) throw ShapeError("multilinear map: arity must be at least 2");
  key_count_ = checked_key_count(dim, arity);
  for (auto it = table_.begin(); it != table_.end();) {
    if (it->first >= key_count_) throw ShapeError("multilinear map: basis-index tuple out of range");
    if (it->second.dim() != dim) throw ShapeError("multilinear map: table value has wrong dimension");
    it = it->second.is_zero() ? table_.erase(it) : std::next(it);
  }
  build_dense();
}

MultilinearMap MultilinearMap::zero(int dim, int arity) { return MultilinearMap(dim, arity, {}); }

MultilinearMap::MultilinearMap(const MultilinearMap& o)
    : dim_(o.dim_), arity_(o.arity_), table_(o.table_), key_count_(o.key_count_) {
  build_dense();
}

MultilinearMap& MultilinearMap::operator=(const MultilinearMap& o) {
  if (this != &o) {
    dim_ = o.dim_;
    arity_ = o.arity_;
    table_ = o.table_;
    key_count_ = o.key_count_;
    dense_.clear();
    build_dense();
  }
  return *this;
}

void MultilinearMap::build_dense() {
  if (key_count_ > kDenseLimit) return;
  dense_.assign(key_count_, nullptr);
  for (const auto& [key, value] : table_) dense_[key] = &value;
}

const Vector* MultilinearMap::basis_value_packed(std::uint64_t key) const {
  if (!dense_.empty()) return dense_[key];
  auto it = table_.find(key);
  return it == table_.end() ? nullptr : &it->second;
}

const Vector* MultilinearMap::basis_value(std::span<const int> idx) const {
  return basis_value_packed(pack_indices(idx, dim_));
}

void MultilinearMap::eval_acc(Vector& out, const Rational& scale,
                              std::span<const Vector* const> args) const {
  if (static_cast<int>(args.size()) != arity_)
    throw ShapeError("eval: expected " + std::to_string(arity_) + " arguments, got " +
                     std::to_string(args.size()));
  for (std::size_t s = 0; s < args.size(); ++s)
    if (args[s]->dim() != dim_)
      throw ShapeError("eval: argument in slot " + std::to_string(s + 1) + " has dimension " +
                       std::to_string(args[s]->dim()) + ", expected " + std::to_string(dim_));
  if (out.dim() != dim_) throw ShapeError("eval: output vector has wrong dimension");
  if (table_.empty()) return;

  // Depth-first over the support product of the arguments; coefficient
  // products accumulate along the path, zero coordinates prune.
  std::vector<Rational> coeff(args.size());
  std::vector<int> idx(args.size());
  auto descend = [&](auto&& self, std::size_t slot, std::uint64_t key) -> void {
    if (slot == args.size()) {
      if (const Vector* v = basis_value_packed(key)) out.axpy(coeff[slot - 1], *v);
      return;
    }
    const Vector& a = *args[slot];
    for (int i = 0; i < dim_; ++i) {
      if (sgn(a[i]) == 0) continue;
      if (slot == 0)
        coeff[0] = scale * a[i];
      else
        coeff[slot] = coeff[slot - 1] * a[i];
      self(self, slot + 1, key * static_cast<std::uint64_t>(dim_) + static_cast<std::uint64_t>(i));
    }
  };
  descend(descend, 0, 0);
}

Vector MultilinearMap::eval(std::span<const Vector* const> args) const {
  Vector out(dim_);
  eval_acc(out, Rational(1), args);
  return out;
}

Vector MultilinearMap::eval(std::span<const Vector> args) const {
  std::vector<const Vector*> ptrs;
  ptrs.reserve(args.size());
  for (const Vector& v : args) ptrs.push_back(&v);
  return eval(std::span<const Vector* const>(ptrs));
}

MultilinearMap MultilinearMap::twist_product(const LinearMap& beta) const {
  if (beta.dim() != dim_) throw ShapeError("twist_product: dimension mismatch");
  std::map<std::uint64_t, Vector> table;
  for (const auto& [key, value] : table_) {
    Vector w = beta.apply(value);
    if (!w.is_zero()) table.emplace(key, std::move(w));
  }
  return MultilinearMap(dim_, arity_, std::move(table));
}

}  // namespace nambu
