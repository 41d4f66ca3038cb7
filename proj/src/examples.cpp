#include "nambu/examples.hpp"

#include <array>
#include <string>

namespace nambu {

namespace {

std::vector<Vector> basis_vectors(int dim) {
  std::vector<Vector> u;
  u.reserve(static_cast<std::size_t>(dim));
  for (int i = 0; i < dim; ++i) u.push_back(Vector::unit(dim, i));
  return u;
}

}  // namespace

Rational BilinearForm::apply(const Vector& x, const Vector& y) const {
  const int d = matrix.dim();
  if (x.dim() != d || y.dim() != d) throw ShapeError("bilinear form: dimension mismatch");
  Rational r = 0;
  for (int i = 0; i < d; ++i) {
    if (sgn(x[i]) == 0) continue;
    for (int j = 0; j < d; ++j) r += x[i] * matrix.at(i, j) * y[j];
  }
  return r;
}

BilinearForm BilinearForm::fermionic(int N) {
  if (N < 1) throw ShapeError("fermionic form: N must be positive");
  LinearMap m(2 * N);
  for (int j = 0; j < N; ++j) {
    m.at(j, N + j) = 1;
    m.at(N + j, j) = 1;
  }
  return BilinearForm{std::move(m)};
}

HomAlgebra bilinear_lts(const BilinearForm& form, const Rational& lambda) {
  const int d = form.matrix.dim();
  const auto u = basis_vectors(d);
  MultilinearMap t = MultilinearMap::from_fn(d, 3, [&](std::span<const int> i) {
    const Vector &x = u[static_cast<std::size_t>(i[0])], &y = u[static_cast<std::size_t>(i[1])],
                 &z = u[static_cast<std::size_t>(i[2])];
    Vector v(d);
    v.axpy(lambda * form.apply(y, z), x);
    v.axpy(-(lambda * form.apply(z, x)), y);
    return v;
  });
  return HomAlgebra(std::move(t), {LinearMap::identity(d), LinearMap::identity(d)});
}

HomAlgebra bilinear_jts(const BilinearForm& form, const Rational& lambda) {
  const int d = form.matrix.dim();
  const auto u = basis_vectors(d);
  MultilinearMap t = MultilinearMap::from_fn(d, 3, [&](std::span<const int> i) {
    const Vector &x = u[static_cast<std::size_t>(i[0])], &y = u[static_cast<std::size_t>(i[1])],
                 &z = u[static_cast<std::size_t>(i[2])];
    Vector v(d);
    v.axpy(lambda * form.apply(x, y), z);
    v.axpy(lambda * form.apply(y, z), x);
    v.axpy(-(lambda * form.apply(z, x)), y);
    return v;
  });
  return HomAlgebra(std::move(t), {LinearMap::identity(d), LinearMap::identity(d)});
}

FermionicSystem fermionic_system(int N, const Rational& lambda, std::span<const Rational> eta) {
  if (N < 2) throw ShapeError("fermionic_system: N must be at least 2");
  if (static_cast<int>(eta.size()) != N)
    throw ShapeError("fermionic_system: expected " + std::to_string(N) + " eta values");
  for (const Rational& e : eta)
    if (sgn(e) == 0) throw ShapeError("fermionic_system: eta values must be nonzero");

  const int d = 2 * N;
  LinearMap alpha(d);
  for (int j = 0; j < N; ++j) {
    alpha.at(j, j) = 1 / eta[static_cast<std::size_t>(j)];  // a_{-j}
    alpha.at(N + j, N + j) = eta[static_cast<std::size_t>(j)];
  }

  HomAlgebra base = bilinear_lts(BilinearForm::fermionic(N), lambda);
  HomAlgebra twisted = twist(base, alpha);

  // Direct table from the explicit product relations; basis index = sign
  // block (minus first) plus 0-based mode index.
  auto sign_of = [N](int b) { return b < N ? -1 : +1; };
  auto mode_of = [N](int b) { return b < N ? b : b - N; };
  auto eta_pow = [&](int mode, int s) {
    return s > 0 ? eta[static_cast<std::size_t>(mode)] : 1 / eta[static_cast<std::size_t>(mode)];
  };
  MultilinearMap direct = MultilinearMap::from_fn(d, 3, [&](std::span<const int> b) {
    const int s1 = sign_of(b[0]), s2 = sign_of(b[1]), s3 = sign_of(b[2]);
    const int i = mode_of(b[0]), j = mode_of(b[1]), k = mode_of(b[2]);
    Vector v(d);
    if (s1 == s2 && s2 == s3) return v;
    if (s1 == s2) {  // [a_{+-i}, a_{+-j}, a_{-+k}]
      if (j == k) v.axpy(lambda * eta_pow(i, s1), Vector::unit(d, b[0]));
      if (k == i) v.axpy(-(lambda * eta_pow(j, s1)), Vector::unit(d, b[1]));
    } else if (s1 == s3) {  // [a_{+-i}, a_{-+j}, a_{+-k}]
      if (j == k) v.axpy(lambda * eta_pow(i, s1), Vector::unit(d, b[0]));
    } else {  // [a_{-+i}, a_{+-j}, a_{+-k}]
      if (k == i) v.axpy(-(lambda * eta_pow(j, s2)), Vector::unit(d, b[1]));
    }
    return v;
  });
  if (!(direct == twisted.bracket()))
    throw std::logic_error("fermionic_system: explicit relations disagree with twist construction");
  return FermionicSystem{std::move(twisted), std::move(alpha)};
}

// ---------------------------------------------------------------------------
// Octonions
// ---------------------------------------------------------------------------

namespace {

// mul[i][j] = +-(index+1); sign encodes the sign of e_i e_j.
constexpr int kOctTable[8][8] = {
    {+1, +2, +3, +4, +5, +6, +7, +8},
    {+2, -1, +5, +8, -3, +7, -6, -4},
    {+3, -5, -1, +6, +2, -4, +8, -7},
    {+4, -8, -6, -1, +7, +3, -5, +2},
    {+5, +3, -2, -7, -1, +8, +4, -6},
    {+6, -7, +4, -3, -8, -1, +2, +5},
    {+7, +6, -8, +5, -4, -2, -1, +3},
    {+8, +4, +7, -2, +6, -5, -3, -1},
};

const MultilinearMap& octonion_product() {
  static const MultilinearMap mu = MultilinearMap::from_fn(8, 2, [](std::span<const int> i) {
    Vector v(8);
    const int e = kOctTable[i[0]][i[1]];
    v[std::abs(e) - 1] = e > 0 ? 1 : -1;
    return v;
  });
  return mu;
}

Vector oct_mul(const Vector& a, const Vector& b) {
  const Vector* p[2] = {&a, &b};
  return octonion_product().eval(std::span<const Vector* const>(p, 2));
}

Vector oct_conj(const Vector& a) {
  Vector v = a;
  for (int i = 1; i < 8; ++i) v[i] = -v[i];
  return v;
}

}  // namespace

HomAlgebra octonions() {
  return HomAlgebra(octonion_product(), {LinearMap::identity(8)});
}

LinearMap octonion_basic_triple_automorphism() {
  LinearMap a(8);
  const int image[8] = {0, 5, 6, 7, 1, 2, 3, 4};
  for (int i = 0; i < 8; ++i) a.at(image[i], i) = 1;
  return a;
}

LinearMap octonion_conjugate() {
  LinearMap c = LinearMap::identity(8);
  for (int i = 1; i < 8; ++i) c.at(i, i) = -1;
  return c;
}

// ---------------------------------------------------------------------------
// Exceptional Jordan algebra
// ---------------------------------------------------------------------------

namespace {

using OctMatrix = std::array<std::array<Vector, 3>, 3>;

OctMatrix hermitian_basis_element(int b) {
  OctMatrix m;
  for (auto& row : m)
    for (auto& e : row) e = Vector(8);
  if (b < 3) {
    m[static_cast<std::size_t>(b)][static_cast<std::size_t>(b)][0] = 1;
    return m;
  }
  static constexpr int kSlots[3][2] = {{0, 1}, {0, 2}, {1, 2}};
  const int block = (b - 3) / 8;
  const int coord = (b - 3) % 8;
  const int r = kSlots[block][0], c = kSlots[block][1];
  Vector e(8);
  e[coord] = 1;
  m[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = e;
  m[static_cast<std::size_t>(c)][static_cast<std::size_t>(r)] = oct_conj(e);
  return m;
}

Vector hermitian_coordinates(const OctMatrix& m) {
  Vector out(27);
  for (int i = 0; i < 3; ++i) {
    const Vector& diag = m[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)];
    out[i] = diag[0];
    for (int c = 1; c < 8; ++c)
      if (sgn(diag[c]) != 0)
        throw std::logic_error("exceptional_jordan: product is not Hermitian");
  }
  static constexpr int kSlots[3][2] = {{0, 1}, {0, 2}, {1, 2}};
  for (int block = 0; block < 3; ++block) {
    const int r = kSlots[block][0], c = kSlots[block][1];
    const Vector& e = m[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
    if (!(m[static_cast<std::size_t>(c)][static_cast<std::size_t>(r)] == oct_conj(e)))
      throw std::logic_error("exceptional_jordan: product is not Hermitian");
    for (int k = 0; k < 8; ++k) out[3 + 8 * block + k] = e[k];
  }
  return out;
}

OctMatrix oct_mat_mul(const OctMatrix& a, const OctMatrix& b) {
  OctMatrix out;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      Vector v(8);
      for (int k = 0; k < 3; ++k)
        v += oct_mul(a[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)],
                     b[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)]);
      out[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = v;
    }
  return out;
}

}  // namespace

HomAlgebra exceptional_jordan() {
  std::vector<OctMatrix> basis;
  basis.reserve(27);
  for (int b = 0; b < 27; ++b) basis.push_back(hermitian_basis_element(b));
  const Rational half(1, 2);
  MultilinearMap mu = MultilinearMap::from_fn(27, 2, [&](std::span<const int> i) {
    const OctMatrix &x = basis[static_cast<std::size_t>(i[0])], &y = basis[static_cast<std::size_t>(i[1])];
    const OctMatrix xy = oct_mat_mul(x, y);
    const OctMatrix yx = oct_mat_mul(y, x);
    OctMatrix sum;
    for (int r = 0; r < 3; ++r)
      for (int c = 0; c < 3; ++c) {
        Vector v = xy[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] +
                   yx[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
        v *= half;
        sum[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = v;
      }
    return hermitian_coordinates(sum);
  });
  return HomAlgebra(std::move(mu), {LinearMap::identity(27)});
}

LinearMap exceptional_jordan_lift(const LinearMap& alpha_oct) {
  if (alpha_oct.dim() != 8) throw ShapeError("exceptional_jordan_lift: expected a map on dim 8");
  const Vector e0 = Vector::unit(8, 0);
  if (!(alpha_oct.apply(e0) == e0)) {
    Witness w;
    w.identity = "exceptional_jordan_lift: alpha(e_0) = e_0";
    w.args = {e0};
    w.lhs = alpha_oct.apply(e0);
    w.rhs = e0;
    throw HypothesisError(w.identity, std::move(w));
  }
  const LinearMap conj = octonion_conjugate();
  if (!(alpha_oct.compose(conj) == conj.compose(alpha_oct)))
    throw HypothesisError("exceptional_jordan_lift: alpha preserves conjugation", std::nullopt);
  LinearMap lift(27);
  for (int i = 0; i < 3; ++i) lift.at(i, i) = 1;
  for (int block = 0; block < 3; ++block)
    for (int r = 0; r < 8; ++r)
      for (int c = 0; c < 8; ++c)
        lift.at(3 + 8 * block + r, 3 + 8 * block + c) = alpha_oct.at(r, c);
  return lift;
}

// ---------------------------------------------------------------------------
// Matrix triple systems
// ---------------------------------------------------------------------------

HomAlgebra matrix_jts(int p, int q) {
  if (p < 1 || q < 1) throw ShapeError("matrix_jts: dimensions must be positive");
  const int d = p * q;
  // Basis E_{ab} row-major; x y^t z = delta_{bd} delta_{ce} E_{af} for
  // x = E_{ab}, y = E_{cd}, z = E_{ef}.
  MultilinearMap t = MultilinearMap::from_fn(d, 3, [&](std::span<const int> i) {
    const int a = i[0] / q, b = i[0] % q;
    const int c = i[1] / q, dd = i[1] % q;
    const int e = i[2] / q, f = i[2] % q;
    Vector v(d);
    if (b == dd && c == e) v[a * q + f] += 1;
    if (f == dd && c == a) v[e * q + b] += 1;
    return v;
  });
  return HomAlgebra(std::move(t), {LinearMap::identity(d), LinearMap::identity(d)});
}

HomAlgebra involution_jts() {
  const int d = 4;  // 2x2 matrices, basis E11, E12, E21, E22 row-major
  auto mul = [](int a, int b) {  // E_a E_b as a basis index, -1 for zero
    const int ar = a / 2, ac = a % 2, br = b / 2, bc = b % 2;
    return ac == br ? ar * 2 + bc : -1;
  };
  auto tr = [](int a) { return (a % 2) * 2 + a / 2; };
  MultilinearMap t = MultilinearMap::from_fn(d, 3, [&](std::span<const int> i) {
    Vector v(d);
    const int ty = tr(i[1]);
    int m = mul(i[0], ty);
    if (m >= 0) {
      m = mul(m, i[2]);
      if (m >= 0) v[m] += 1;
    }
    m = mul(i[2], ty);
    if (m >= 0) {
      m = mul(m, i[0]);
      if (m >= 0) v[m] += 1;
    }
    return v;
  });
  return HomAlgebra(std::move(t), {LinearMap::identity(d), LinearMap::identity(d)});
}

// ---------------------------------------------------------------------------
// Hom(V,W) + Hom(W,V) ternary ring
// ---------------------------------------------------------------------------

namespace {

// Dense rectangular rational matrix, row-major.
struct RectMatrix {
  int rows = 0, cols = 0;
  std::vector<Rational> m;

  RectMatrix(int r, int c) : rows(r), cols(c), m(static_cast<std::size_t>(r) * c) {}
  Rational& at(int r, int c) { return m[static_cast<std::size_t>(r) * cols + c]; }
  const Rational& at(int r, int c) const { return m[static_cast<std::size_t>(r) * cols + c]; }

  RectMatrix mul(const RectMatrix& o) const {
    RectMatrix out(rows, o.cols);
    for (int i = 0; i < rows; ++i)
      for (int k = 0; k < cols; ++k) {
        if (sgn(at(i, k)) == 0) continue;
        for (int j = 0; j < o.cols; ++j) out.at(i, j) += at(i, k) * o.at(k, j);
      }
    return out;
  }
};

}  // namespace

HomPairTernary hom_pair_ternary_ring(int p, int q, const LinearMap& beta, const LinearMap& gamma) {
  if (p < 1 || q < 1) throw ShapeError("hom_pair_ternary_ring: dimensions must be positive");
  if (beta.dim() != p || gamma.dim() != q)
    throw ShapeError("hom_pair_ternary_ring: beta must be p x p and gamma q x q");
  const int fsize = q * p;  // f : V -> W
  const int gsize = p * q;  // g : W -> V
  const int d = fsize + gsize;

  auto f_part = [&](int b, RectMatrix& f) {
    if (b < fsize) f.at(b / p, b % p) = 1;
  };
  auto g_part = [&](int b, RectMatrix& g) {
    if (b >= fsize) g.at((b - fsize) / q, (b - fsize) % q) = 1;
  };

  MultilinearMap t = MultilinearMap::from_fn(d, 3, [&](std::span<const int> i) {
    RectMatrix f1(q, p), f2(q, p), f3(q, p), g1(p, q), g2(p, q), g3(p, q);
    f_part(i[0], f1);
    g_part(i[0], g1);
    f_part(i[1], f2);
    g_part(i[1], g2);
    f_part(i[2], f3);
    g_part(i[2], g3);
    const RectMatrix fo = f3.mul(g2).mul(f1);  // q x p
    const RectMatrix go = g3.mul(f2).mul(g1);  // p x q
    Vector v(d);
    for (int r = 0; r < q; ++r)
      for (int c = 0; c < p; ++c) v[r * p + c] = fo.at(r, c);
    for (int r = 0; r < p; ++r)
      for (int c = 0; c < q; ++c) v[fsize + r * q + c] = go.at(r, c);
    return v;
  });

  const auto betainv = beta.inverse();
  const auto gammainv = gamma.inverse();
  if (!betainv || !gammainv)
    throw HypothesisError("hom_pair_ternary_ring: beta and gamma must be invertible", std::nullopt);

  // alpha(f + g) = (gamma^{-1} f beta) + (beta^{-1} g gamma), entry by entry
  // on the coordinate basis.
  LinearMap alpha(d);
  for (int b = 0; b < d; ++b) {
    RectMatrix f(q, p), g(p, q);
    f_part(b, f);
    g_part(b, g);
    if (b < fsize) {
      // gamma^{-1} f beta
      RectMatrix gm(q, q);
      for (int r = 0; r < q; ++r)
        for (int c = 0; c < q; ++c) gm.at(r, c) = gammainv->at(r, c);
      RectMatrix bm(p, p);
      for (int r = 0; r < p; ++r)
        for (int c = 0; c < p; ++c) bm.at(r, c) = beta.at(r, c);
      const RectMatrix out = gm.mul(f).mul(bm);
      for (int r = 0; r < q; ++r)
        for (int c = 0; c < p; ++c) alpha.at(r * p + c, b) = out.at(r, c);
    } else {
      // beta^{-1} g gamma
      RectMatrix bm(p, p);
      for (int r = 0; r < p; ++r)
        for (int c = 0; c < p; ++c) bm.at(r, c) = betainv->at(r, c);
      RectMatrix gm(q, q);
      for (int r = 0; r < q; ++r)
        for (int c = 0; c < q; ++c) gm.at(r, c) = gamma.at(r, c);
      const RectMatrix out = bm.mul(g).mul(gm);
      for (int r = 0; r < p; ++r)
        for (int c = 0; c < q; ++c) alpha.at(fsize + r * q + c, b) = out.at(r, c);
    }
  }

  HomAlgebra algebra(std::move(t), {LinearMap::identity(d), LinearMap::identity(d)});
  return HomPairTernary{std::move(algebra), std::move(alpha)};
}

// ---------------------------------------------------------------------------
// Desk-scale inputs
// ---------------------------------------------------------------------------

HomAlgebra quaternion_cross_3lie() {
  MultilinearMap t = MultilinearMap::from_fn(4, 3, [](std::span<const int> i) {
    Vector v(4);
    const int a = i[0], b = i[1], c = i[2];
    if (a == b || b == c || a == c) return v;
    const int l = 0 + 1 + 2 + 3 - a - b - c;
    // Parity of the permutation (a, b, c, l) relative to (0, 1, 2, 3).
    int perm[4] = {a, b, c, l};
    int sign = 1;
    for (int x = 0; x < 4; ++x)
      for (int y = x + 1; y < 4; ++y)
        if (perm[x] > perm[y]) sign = -sign;
    v[l] = sign;
    return v;
  });
  return HomAlgebra(std::move(t), {LinearMap::identity(4), LinearMap::identity(4)});
}

HomAlgebra sl2() {
  // Basis (h, e, f).
  std::map<std::uint64_t, Vector> table;
  auto set = [&](int i, int j, Vector v) {
    const int idx[2] = {i, j};
    table.emplace(pack_indices(idx, 3), std::move(v));
  };
  set(0, 1, Vector({0, 2, 0}));   // [h,e] = 2e
  set(1, 0, Vector({0, -2, 0}));
  set(0, 2, Vector({0, 0, -2}));  // [h,f] = -2f
  set(2, 0, Vector({0, 0, 2}));
  set(1, 2, Vector({1, 0, 0}));   // [e,f] = h
  set(2, 1, Vector({-1, 0, 0}));
  return HomAlgebra(MultilinearMap(3, 2, std::move(table)), {LinearMap::identity(3)});
}

LinearMap sl2_scaling_automorphism(const Rational& t) {
  if (sgn(t) == 0) throw ShapeError("sl2_scaling_automorphism: t must be nonzero");
  const Rational diag[3] = {Rational(1), t, 1 / t};
  return LinearMap::diagonal(diag);
}

HomAlgebra affine2() {
  std::map<std::uint64_t, Vector> table;
  const int ab[2] = {0, 1}, ba[2] = {1, 0};
  table.emplace(pack_indices(ab, 2), Vector({0, 1}));
  table.emplace(pack_indices(ba, 2), Vector({0, -1}));
  return HomAlgebra(MultilinearMap(2, 2, std::move(table)), {LinearMap::identity(2)});
}

TraceFunctional affine2_trace() {
  return TraceFunctional{Vector({1, 0})};
}

}  // namespace nambu
