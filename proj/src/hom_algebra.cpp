#include "nambu/hom_algebra.hpp"

#include <sstream>

namespace nambu {

std::string Witness::to_string() const {
  std::ostringstream os;
  os << identity << ": ";
  if (!basis_tuple.empty()) {
    os << "basis tuple (";
    for (std::size_t i = 0; i < basis_tuple.size(); ++i) {
      if (i) os << ",";
      os << basis_tuple[i] + 1;  // 1-based in reports
    }
    os << "), ";
  }
  os << "lhs = " << lhs.to_string() << ", rhs = " << rhs.to_string();
  return os.str();
}

HypothesisError::HypothesisError(std::string hyp, std::optional<Witness> w)
    : std::runtime_error("hypothesis violated: " + hyp +
                         (w ? "; " + w->to_string() : std::string())),
      hypothesis(std::move(hyp)),
      witness(std::move(w)) {}

HomAlgebra::HomAlgebra(MultilinearMap bracket, std::vector<LinearMap> twists)
    : bracket_(std::move(bracket)), twists_(std::move(twists)) {
  if (static_cast<int>(twists_.size()) != bracket_.arity() - 1)
    throw ShapeError("hom-algebra: expected " + std::to_string(bracket_.arity() - 1) +
                     " twisting maps, got " + std::to_string(twists_.size()));
  for (std::size_t i = 0; i < twists_.size(); ++i)
    if (twists_[i].dim() != bracket_.dim())
      throw ShapeError("hom-algebra: twisting map " + std::to_string(i + 1) +
                       " has wrong dimension");
}

HomAlgebra HomAlgebra::with_equal_twists(MultilinearMap bracket, const LinearMap& alpha) {
  std::vector<LinearMap> twists(static_cast<std::size_t>(bracket.arity() - 1), alpha);
  return HomAlgebra(std::move(bracket), std::move(twists));
}

HomAlgebra HomAlgebra::untwisted(MultilinearMap bracket) {
  const int d = bracket.dim();
  return with_equal_twists(std::move(bracket), LinearMap::identity(d));
}

bool HomAlgebra::twists_equal() const {
  for (std::size_t i = 1; i < twists_.size(); ++i)
    if (!(twists_[i] == twists_[0])) return false;
  return true;
}

bool HomAlgebra::twists_identity() const {
  for (const auto& t : twists_)
    if (!t.is_identity()) return false;
  return true;
}

void hom_jacobian_acc(const HomAlgebra& L, Vector& out, const Rational& scale,
                      std::span<const Vector* const> args) {
  const int n = L.arity();
  if (static_cast<int>(args.size()) != 2 * n - 1)
    throw ShapeError("hom_jacobian: expected " + std::to_string(2 * n - 1) + " arguments, got " +
                     std::to_string(args.size()));
  const auto xs = args.subspan(0, static_cast<std::size_t>(n - 1));
  const auto ys = args.subspan(static_cast<std::size_t>(n - 1));
  const MultilinearMap& br = L.bracket();

  // Twisted arguments used by the terms: slot j before the insertion point
  // takes a_j(y_j), slot j after it takes a_{j-1}(y_j).
  std::vector<Vector> tx(static_cast<std::size_t>(n - 1));
  for (int j = 0; j < n - 1; ++j) tx[static_cast<std::size_t>(j)] = L.twist(j).apply(*xs[static_cast<std::size_t>(j)]);
  std::vector<Vector> same(static_cast<std::size_t>(n));  // a_j(y_j), j = 1..n-1 (1-based)
  std::vector<Vector> prev(static_cast<std::size_t>(n));  // a_{j-1}(y_j), j = 2..n
  for (int j = 1; j <= n - 1; ++j) same[static_cast<std::size_t>(j - 1)] = L.twist(j - 1).apply(*ys[static_cast<std::size_t>(j - 1)]);
  for (int j = 2; j <= n; ++j) prev[static_cast<std::size_t>(j - 1)] = L.twist(j - 2).apply(*ys[static_cast<std::size_t>(j - 1)]);

  std::vector<const Vector*> slot(static_cast<std::size_t>(n));

  // Outer term [a1(x1),...,a_{n-1}(x_{n-1}),[y_{1,n}]].
  Vector inner = br.eval(ys);
  for (int j = 0; j < n - 1; ++j) slot[static_cast<std::size_t>(j)] = &tx[static_cast<std::size_t>(j)];
  slot[static_cast<std::size_t>(n - 1)] = &inner;
  br.eval_acc(out, scale, slot);

  // Minus the n insertion terms.
  const Rational neg = -scale;
  std::vector<const Vector*> xargs(static_cast<std::size_t>(n));
  for (int j = 0; j < n - 1; ++j) xargs[static_cast<std::size_t>(j)] = xs[static_cast<std::size_t>(j)];
  for (int i = 1; i <= n; ++i) {
    xargs[static_cast<std::size_t>(n - 1)] = ys[static_cast<std::size_t>(i - 1)];
    Vector ui = br.eval(std::span<const Vector* const>(xargs));
    for (int j = 1; j < i; ++j) slot[static_cast<std::size_t>(j - 1)] = &same[static_cast<std::size_t>(j - 1)];
    slot[static_cast<std::size_t>(i - 1)] = &ui;
    for (int j = i + 1; j <= n; ++j) slot[static_cast<std::size_t>(j - 1)] = &prev[static_cast<std::size_t>(j - 1)];
    br.eval_acc(out, neg, slot);
  }
}

Vector hom_jacobian(const HomAlgebra& L, std::span<const Vector> xs, std::span<const Vector> ys) {
  const int n = L.arity();
  if (static_cast<int>(xs.size()) != n - 1)
    throw ShapeError("hom_jacobian: expected " + std::to_string(n - 1) + " x-arguments");
  if (static_cast<int>(ys.size()) != n)
    throw ShapeError("hom_jacobian: expected " + std::to_string(n) + " y-arguments");
  std::vector<const Vector*> args;
  args.reserve(static_cast<std::size_t>(2 * n - 1));
  for (const Vector& v : xs) args.push_back(&v);
  for (const Vector& v : ys) args.push_back(&v);
  Vector out(L.dim());
  hom_jacobian_acc(L, out, Rational(1), args);
  return out;
}

void hom_associator_acc(const HomAlgebra& A, Vector& out, const Rational& scale,
                        std::span<const Vector* const> xyz) {
  if (A.arity() != 2) throw ShapeError("hom_associator: arity must be 2");
  if (xyz.size() != 3) throw ShapeError("hom_associator: expected 3 arguments");
  const MultilinearMap& mu = A.bracket();
  const LinearMap& alpha = A.twist(0);
  Vector xy = mu.eval(std::span<const Vector* const>(xyz.data(), 2));
  Vector yz = mu.eval(std::span<const Vector* const>(xyz.data() + 1, 2));
  Vector az = alpha.apply(*xyz[2]);
  Vector ax = alpha.apply(*xyz[0]);
  const Vector* left[2] = {&xy, &az};
  const Vector* right[2] = {&ax, &yz};
  mu.eval_acc(out, scale, left);
  mu.eval_acc(out, -scale, right);
}

Vector hom_associator(const HomAlgebra& A, const Vector& x, const Vector& y, const Vector& z) {
  Vector out(A.dim());
  const Vector* args[3] = {&x, &y, &z};
  hom_associator_acc(A, out, Rational(1), args);
  return out;
}

namespace {

// Lexicographic enumeration of basis tuples; fn returns false to abort.
template <typename Fn>
bool for_each_tuple(int dim, int len, Fn&& fn) {
  std::vector<int> idx(static_cast<std::size_t>(len), 0);
  while (true) {
    if (!fn(std::span<const int>(idx))) return false;
    int slot = len - 1;
    while (slot >= 0 && ++idx[static_cast<std::size_t>(slot)] == dim) idx[static_cast<std::size_t>(slot--)] = 0;
    if (slot < 0) return true;
  }
}

}  // namespace

CheckReport is_multiplicative(const HomAlgebra& L) {
  CheckReport rep;
  rep.identity = "multiplicative";
  rep.mode = CheckMode::exhaustive;

  const int n = L.arity();
  const int d = L.dim();
  for (int i = 1; i < n - 1; ++i) {
    if (L.twist(i) == L.twist(0)) continue;
    rep.passed = false;
    rep.note = "twists unequal";
    Witness w;
    w.identity = "multiplicative: twists alpha_1 and alpha_" + std::to_string(i + 1) + " differ";
    for (int j = 0; j < d; ++j) {
      if (L.twist(0).column(j) == L.twist(i).column(j)) continue;
      w.basis_tuple = {j};
      w.args = {Vector::unit(d, j)};
      w.lhs = L.twist(0).column(j);
      w.rhs = L.twist(i).column(j);
      break;
    }
    rep.witness = std::move(w);
    return rep;
  }

  const LinearMap& alpha = L.twist(0);
  const MultilinearMap& br = L.bracket();
  std::vector<Vector> cols;
  cols.reserve(static_cast<std::size_t>(d));
  for (int j = 0; j < d; ++j) cols.push_back(alpha.column(j));

  rep.passed = for_each_tuple(d, n, [&](std::span<const int> idx) {
    ++rep.tuples_checked;
    Vector lhs(d);
    if (const Vector* v = br.basis_value(idx)) lhs = alpha.apply(*v);
    std::vector<const Vector*> args;
    args.reserve(idx.size());
    for (int i : idx) args.push_back(&cols[static_cast<std::size_t>(i)]);
    Vector rhs = br.eval(std::span<const Vector* const>(args));
    if (lhs == rhs) return true;
    Witness w;
    w.identity = "multiplicative: alpha o bracket = bracket o alpha^n";
    w.basis_tuple.assign(idx.begin(), idx.end());
    for (int i : idx) w.args.push_back(Vector::unit(d, i));
    w.lhs = std::move(lhs);
    w.rhs = std::move(rhs);
    rep.witness = std::move(w);
    rep.note = "twist not compatible with bracket";
    return false;
  });
  return rep;
}

namespace {

CheckReport morphism_check(const LinearMap& f, const HomAlgebra& src, const HomAlgebra& dst,
                           bool with_twists) {
  if (f.dim() != src.dim() || src.dim() != dst.dim())
    throw ShapeError("morphism check: dimension mismatch");
  if (src.arity() != dst.arity()) throw ShapeError("morphism check: arity mismatch");

  CheckReport rep;
  rep.identity = with_twists ? "morphism" : "weak-morphism";
  rep.mode = CheckMode::exhaustive;

  const int d = src.dim();
  const int n = src.arity();
  std::vector<Vector> fcols;
  fcols.reserve(static_cast<std::size_t>(d));
  for (int j = 0; j < d; ++j) fcols.push_back(f.column(j));

  rep.passed = for_each_tuple(d, n, [&](std::span<const int> idx) {
    ++rep.tuples_checked;
    Vector lhs(d);
    if (const Vector* v = src.bracket().basis_value(idx)) lhs = f.apply(*v);
    std::vector<const Vector*> args;
    args.reserve(idx.size());
    for (int i : idx) args.push_back(&fcols[static_cast<std::size_t>(i)]);
    Vector rhs = dst.bracket().eval(std::span<const Vector* const>(args));
    if (lhs == rhs) return true;
    Witness w;
    w.identity = rep.identity + ": f o bracket = bracket o f^n";
    w.basis_tuple.assign(idx.begin(), idx.end());
    for (int i : idx) w.args.push_back(Vector::unit(d, i));
    w.lhs = std::move(lhs);
    w.rhs = std::move(rhs);
    rep.witness = std::move(w);
    rep.note = "bracket condition failed";
    return false;
  });
  if (!rep.passed || !with_twists) return rep;

  for (int i = 0; i < n - 1; ++i) {
    const LinearMap lhs = f.compose(src.twist(i));
    const LinearMap rhs = dst.twist(i).compose(f);
    if (lhs == rhs) continue;
    rep.passed = false;
    rep.note = "twist-intertwining condition failed for alpha_" + std::to_string(i + 1);
    for (int j = 0; j < d; ++j) {
      if (lhs.column(j) == rhs.column(j)) continue;
      Witness w;
      w.identity = "morphism: f o alpha_" + std::to_string(i + 1) + " = alpha_" +
                   std::to_string(i + 1) + " o f";
      w.basis_tuple = {j};
      w.args = {Vector::unit(d, j)};
      w.lhs = lhs.column(j);
      w.rhs = rhs.column(j);
      rep.witness = std::move(w);
      break;
    }
    return rep;
  }
  return rep;
}

}  // namespace

CheckReport is_weak_morphism(const LinearMap& f, const HomAlgebra& src, const HomAlgebra& dst) {
  return morphism_check(f, src, dst, false);
}

CheckReport is_morphism(const LinearMap& f, const HomAlgebra& src, const HomAlgebra& dst) {
  return morphism_check(f, src, dst, true);
}

}  // namespace nambu
