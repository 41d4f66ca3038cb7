#include "nambu/constructions.hpp"

#include <string>

namespace nambu {

namespace {

void refuse_if_failed(const CheckReport& rep, const std::string& hypothesis) {
  if (!rep.passed) throw HypothesisError(hypothesis, rep.witness);
}

void require_equal_twists(const HomAlgebra& A, const char* who) {
  if (!A.twists_equal())
    throw HypothesisError(std::string(who) + ": twisting maps must all be equal", std::nullopt);
}

void require_identity_twists(const HomAlgebra& A, const char* who) {
  if (!A.twists_identity())
    throw HypothesisError(std::string(who) + ": requires identity twist", std::nullopt);
}

Vector ev2(const MultilinearMap& m, const Vector& a, const Vector& b) {
  const Vector* p[2] = {&a, &b};
  return m.eval(std::span<const Vector* const>(p, 2));
}

Vector ev3(const MultilinearMap& m, const Vector& a, const Vector& b, const Vector& c) {
  const Vector* p[3] = {&a, &b, &c};
  return m.eval(std::span<const Vector* const>(p, 3));
}

std::vector<Vector> basis_vectors(int dim) {
  std::vector<Vector> u;
  u.reserve(static_cast<std::size_t>(dim));
  for (int i = 0; i < dim; ++i) u.push_back(Vector::unit(dim, i));
  return u;
}

}  // namespace

Rational TraceFunctional::apply(const Vector& v) const {
  if (v.dim() != coeffs.dim())
    throw ShapeError("trace functional: dimension " + std::to_string(coeffs.dim()) +
                     " applied to vector of dimension " + std::to_string(v.dim()));
  Rational r = 0;
  for (int i = 0; i < v.dim(); ++i) r += coeffs[i] * v[i];
  return r;
}

HomAlgebra twist(const HomAlgebra& V, const LinearMap& beta, Verify verify) {
  if (beta.dim() != V.dim()) throw ShapeError("twist: map dimension does not match algebra");
  if (verify == Verify::on)
    refuse_if_failed(is_weak_morphism(beta, V, V), "twist: beta is a weak self-morphism");
  std::vector<LinearMap> twists;
  twists.reserve(V.twists().size());
  for (const LinearMap& a : V.twists()) twists.push_back(beta.compose(a));
  return HomAlgebra(V.bracket().twist_product(beta), std::move(twists));
}

HomAlgebra derived(const HomAlgebra& V, unsigned k, Verify verify) {
  if (verify == Verify::on)
    refuse_if_failed(is_multiplicative(V), "derived: V is multiplicative");
  if (k == 0) return V;
  const LinearMap& alpha = V.twist(0);
  const LinearMap outer = alpha.power((1u << k) - 1);
  const LinearMap tw = alpha.power(1u << k);
  std::vector<LinearMap> twists(V.twists().size(), tw);
  return HomAlgebra(V.bracket().twist_product(outer), std::move(twists));
}

HomAlgebra ternary_twist(const HomAlgebra& V, const LinearMap& beta, Verify verify) {
  if (V.arity() != 3) throw ShapeError("ternary_twist: requires arity 3");
  return twist(V, beta, verify);
}

HomAlgebra jts_from_ternary_assoc(const HomAlgebra& A, Verify verify) {
  if (A.arity() != 3) throw ShapeError("jts_from_ternary_assoc: requires arity 3");
  if (verify == Verify::on) require_equal_twists(A, "jts_from_ternary_assoc");
  const auto u = basis_vectors(A.dim());
  const MultilinearMap& t = A.bracket();
  MultilinearMap jt = MultilinearMap::from_fn(A.dim(), 3, [&](std::span<const int> i) {
    return ev3(t, u[static_cast<std::size_t>(i[0])], u[static_cast<std::size_t>(i[1])],
               u[static_cast<std::size_t>(i[2])]) +
           ev3(t, u[static_cast<std::size_t>(i[2])], u[static_cast<std::size_t>(i[1])],
               u[static_cast<std::size_t>(i[0])]);
  });
  return HomAlgebra(std::move(jt), A.twists());
}

HomAlgebra lts_from_jts(const HomAlgebra& J, Verify verify) {
  if (J.arity() != 3) throw ShapeError("lts_from_jts: requires arity 3");
  if (verify == Verify::on) require_equal_twists(J, "lts_from_jts");
  const auto u = basis_vectors(J.dim());
  const MultilinearMap& t = J.bracket();
  MultilinearMap lt = MultilinearMap::from_fn(J.dim(), 3, [&](std::span<const int> i) {
    return ev3(t, u[static_cast<std::size_t>(i[0])], u[static_cast<std::size_t>(i[1])],
               u[static_cast<std::size_t>(i[2])]) -
           ev3(t, u[static_cast<std::size_t>(i[1])], u[static_cast<std::size_t>(i[0])],
               u[static_cast<std::size_t>(i[2])]);
  });
  return HomAlgebra(std::move(lt), J.twists());
}

HomAlgebra lts_from_ternary_assoc(const HomAlgebra& A, Verify verify) {
  if (A.arity() != 3) throw ShapeError("lts_from_ternary_assoc: requires arity 3");
  if (verify == Verify::on) require_equal_twists(A, "lts_from_ternary_assoc");
  const auto u = basis_vectors(A.dim());
  const MultilinearMap& t = A.bracket();
  MultilinearMap lt = MultilinearMap::from_fn(A.dim(), 3, [&](std::span<const int> i) {
    const Vector &x = u[static_cast<std::size_t>(i[0])], &y = u[static_cast<std::size_t>(i[1])],
                 &z = u[static_cast<std::size_t>(i[2])];
    return ev3(t, x, y, z) - ev3(t, y, x, z) - ev3(t, z, x, y) + ev3(t, z, y, x);
  });
  HomAlgebra out(std::move(lt), A.twists());
  const HomAlgebra via = lts_from_jts(jts_from_ternary_assoc(A, Verify::off), Verify::off);
  if (!(out == via))
    throw std::logic_error("lts_from_ternary_assoc: closed form disagrees with composition");
  return out;
}

HomAlgebra ternary_assoc_from_hom_assoc(const HomAlgebra& A, Verify verify) {
  if (A.arity() != 2) throw ShapeError("ternary_assoc_from_hom_assoc: requires arity 2");
  if (verify == Verify::on)
    refuse_if_failed(check_hom_associative(A), "ternary_assoc_from_hom_assoc: A is Hom-associative");
  const auto u = basis_vectors(A.dim());
  const MultilinearMap& mu = A.bracket();
  const LinearMap& alpha = A.twist(0);
  MultilinearMap t = MultilinearMap::from_fn(A.dim(), 3, [&](std::span<const int> i) {
    return ev2(mu, ev2(mu, u[static_cast<std::size_t>(i[0])], u[static_cast<std::size_t>(i[1])]),
               alpha.column(i[2]));
  });
  const LinearMap a2 = alpha.compose(alpha);
  return HomAlgebra(std::move(t), {a2, a2});
}

HomAlgebra lts_from_hom_lie(const HomAlgebra& L, Verify verify) {
  if (L.arity() != 2) throw ShapeError("lts_from_hom_lie: requires arity 2");
  if (verify == Verify::on) {
    refuse_if_failed(check_hom_lie(L), "lts_from_hom_lie: L is a Hom-Lie algebra");
    refuse_if_failed(is_multiplicative(L), "lts_from_hom_lie: L is multiplicative");
  }
  const auto u = basis_vectors(L.dim());
  const MultilinearMap& br = L.bracket();
  const LinearMap& alpha = L.twist(0);
  MultilinearMap t = MultilinearMap::from_fn(L.dim(), 3, [&](std::span<const int> i) {
    return ev2(br, ev2(br, u[static_cast<std::size_t>(i[0])], u[static_cast<std::size_t>(i[1])]),
               alpha.column(i[2]));
  });
  const LinearMap a2 = alpha.compose(alpha);
  return HomAlgebra(std::move(t), {a2, a2});
}

HomAlgebra lts_from_hom_assoc(const HomAlgebra& A, Verify verify) {
  if (A.arity() != 2) throw ShapeError("lts_from_hom_assoc: requires arity 2");
  if (verify == Verify::on)
    refuse_if_failed(check_hom_associative(A), "lts_from_hom_assoc: A is Hom-associative");
  const auto u = basis_vectors(A.dim());
  const MultilinearMap& mu = A.bracket();
  const LinearMap& alpha = A.twist(0);
  MultilinearMap t = MultilinearMap::from_fn(A.dim(), 3, [&](std::span<const int> i) {
    const Vector &x = u[static_cast<std::size_t>(i[0])], &y = u[static_cast<std::size_t>(i[1])],
                 &z = u[static_cast<std::size_t>(i[2])];
    const Vector ax = alpha.apply(x), ay = alpha.apply(y), az = alpha.apply(z);
    return ev2(mu, ev2(mu, x, y), az) - ev2(mu, ev2(mu, y, x), az) -
           ev2(mu, ev2(mu, z, x), ay) + ev2(mu, ev2(mu, z, y), ax);
  });
  const LinearMap a2 = alpha.compose(alpha);
  HomAlgebra out(std::move(t), {a2, a2});
  const HomAlgebra via =
      lts_from_ternary_assoc(ternary_assoc_from_hom_assoc(A, Verify::off), Verify::off);
  if (!(out == via))
    throw std::logic_error("lts_from_hom_assoc: closed form disagrees with composition");
  return out;
}

HomAlgebra plus_algebra(const HomAlgebra& A, Verify verify) {
  if (A.arity() != 2) throw ShapeError("plus_algebra: requires arity 2");
  if (verify == Verify::on) require_identity_twists(A, "plus_algebra");
  const auto u = basis_vectors(A.dim());
  const MultilinearMap& mu = A.bracket();
  const Rational half(1, 2);
  MultilinearMap t = MultilinearMap::from_fn(A.dim(), 2, [&](std::span<const int> i) {
    Vector v = ev2(mu, u[static_cast<std::size_t>(i[0])], u[static_cast<std::size_t>(i[1])]) +
               ev2(mu, u[static_cast<std::size_t>(i[1])], u[static_cast<std::size_t>(i[0])]);
    v *= half;
    return v;
  });
  return HomAlgebra::untwisted(std::move(t));
}

HomAlgebra minus_algebra(const HomAlgebra& A, Verify verify) {
  if (A.arity() != 2) throw ShapeError("minus_algebra: requires arity 2");
  if (verify == Verify::on) require_identity_twists(A, "minus_algebra");
  const auto u = basis_vectors(A.dim());
  const MultilinearMap& mu = A.bracket();
  MultilinearMap t = MultilinearMap::from_fn(A.dim(), 2, [&](std::span<const int> i) {
    return ev2(mu, u[static_cast<std::size_t>(i[0])], u[static_cast<std::size_t>(i[1])]) -
           ev2(mu, u[static_cast<std::size_t>(i[1])], u[static_cast<std::size_t>(i[0])]);
  });
  return HomAlgebra::untwisted(std::move(t));
}

HomAlgebra jts_from_jordan(const HomAlgebra& A, Verify verify) {
  if (A.arity() != 2) throw ShapeError("jts_from_jordan: requires arity 2");
  if (verify == Verify::on) {
    require_identity_twists(A, "jts_from_jordan");
    refuse_if_failed(check_jordan(A), "jts_from_jordan: A is a Jordan algebra");
  }
  const auto u = basis_vectors(A.dim());
  const MultilinearMap& mu = A.bracket();
  MultilinearMap t = MultilinearMap::from_fn(A.dim(), 3, [&](std::span<const int> i) {
    const Vector &x = u[static_cast<std::size_t>(i[0])], &y = u[static_cast<std::size_t>(i[1])],
                 &z = u[static_cast<std::size_t>(i[2])];
    return ev2(mu, x, ev2(mu, y, z)) + ev2(mu, ev2(mu, x, y), z) - ev2(mu, y, ev2(mu, x, z));
  });
  return HomAlgebra(std::move(t), {LinearMap::identity(A.dim()), LinearMap::identity(A.dim())});
}

HomAlgebra lts_from_maltsev(const HomAlgebra& A, Verify verify) {
  if (A.arity() != 2) throw ShapeError("lts_from_maltsev: requires arity 2");
  if (verify == Verify::on)
    refuse_if_failed(check_maltsev(A), "lts_from_maltsev: A is a Maltsev algebra");
  const auto u = basis_vectors(A.dim());
  const MultilinearMap& mu = A.bracket();
  const Rational two(2);
  MultilinearMap t = MultilinearMap::from_fn(A.dim(), 3, [&](std::span<const int> i) {
    const Vector &x = u[static_cast<std::size_t>(i[0])], &y = u[static_cast<std::size_t>(i[1])],
                 &z = u[static_cast<std::size_t>(i[2])];
    return two * ev2(mu, ev2(mu, x, y), z) - ev2(mu, ev2(mu, z, x), y) -
           ev2(mu, ev2(mu, y, z), x);
  });
  return HomAlgebra(std::move(t), {LinearMap::identity(A.dim()), LinearMap::identity(A.dim())});
}

HomAlgebra raise_arity(const HomAlgebra& L, Verify verify, const CheckConfig& cfg) {
  const int n = L.arity();
  const int d = L.dim();
  if (verify == Verify::on) {
    refuse_if_failed(is_multiplicative(L), "raise_arity: L is multiplicative");
    refuse_if_failed(check_hom_nambu(L, cfg), "raise_arity: L is Hom-Nambu");
  }
  const int m = 2 * n - 1;
  std::uint64_t entries = 1;
  for (int i = 0; i < m; ++i) {
    if (entries > cfg.budget / static_cast<std::uint64_t>(d))
      throw BudgetExceeded("raise_arity: output table would exceed budget");
    entries *= static_cast<std::uint64_t>(d);
  }
  const MultilinearMap& br = L.bracket();
  const LinearMap& alpha = L.twist(0);
  std::vector<Vector> acols;
  for (int i = 0; i < d; ++i) acols.push_back(alpha.column(i));
  Vector out(d);
  MultilinearMap t = MultilinearMap::from_fn(d, m, [&](std::span<const int> i) {
    const Vector* inner = br.basis_value(i.subspan(0, static_cast<std::size_t>(n)));
    if (!inner) return Vector(d);
    std::vector<const Vector*> args(static_cast<std::size_t>(n));
    args[0] = inner;
    for (int j = 1; j < n; ++j)
      args[static_cast<std::size_t>(j)] =
          &acols[static_cast<std::size_t>(i[static_cast<std::size_t>(n - 1 + j)])];
    out.set_zero();
    br.eval_acc(out, Rational(1), args);
    return out;
  });
  const LinearMap a2 = alpha.compose(alpha);
  return HomAlgebra(std::move(t), std::vector<LinearMap>(static_cast<std::size_t>(m - 1), a2));
}

HomAlgebra iterate_raise(const HomAlgebra& L, unsigned k, Verify verify, const CheckConfig& cfg) {
  if (k == 0) {
    if (verify == Verify::on) {
      refuse_if_failed(is_multiplicative(L), "iterate_raise: L is multiplicative");
      refuse_if_failed(check_hom_nambu(L, cfg), "iterate_raise: L is Hom-Nambu");
    }
    return L;
  }
  HomAlgebra cur = raise_arity(L, verify, cfg);
  // The raised algebra is multiplicative Hom-Nambu by construction; later
  // stages skip re-verification.
  for (unsigned i = 1; i < k; ++i) cur = raise_arity(cur, Verify::off, cfg);
  return cur;
}

namespace {

HomAlgebra lower_arity_impl(const HomAlgebra& L, const Vector& a, Verify verify,
                            const char* who) {
  const int n = L.arity();
  const int d = L.dim();
  if (n < 3) throw ShapeError(std::string(who) + ": requires arity >= 3");
  if (a.dim() != d) throw ShapeError(std::string(who) + ": element dimension mismatch");
  const MultilinearMap& br = L.bracket();
  if (verify == Verify::on) {
    if (!(L.twist(0).apply(a) == a)) {
      Witness w;
      w.identity = std::string(who) + ": a1(a) = a";
      w.args = {a};
      w.lhs = L.twist(0).apply(a);
      w.rhs = a;
      throw HypothesisError(w.identity, std::move(w));
    }
    // [a, x_2..x_{n-1}, a] = 0 for all x; automatic for anti-symmetric
    // brackets, which are detected first to skip the enumeration.
    if (!check_antisymmetry(L, CheckConfig{}).passed) {
      const auto u = basis_vectors(d);
      std::vector<int> idx(static_cast<std::size_t>(n - 2), 0);
      std::vector<const Vector*> args(static_cast<std::size_t>(n));
      args.front() = &a;
      args.back() = &a;
      while (true) {
        for (int j = 0; j < n - 2; ++j)
          args[static_cast<std::size_t>(j + 1)] = &u[static_cast<std::size_t>(idx[static_cast<std::size_t>(j)])];
        Vector v = br.eval(std::span<const Vector* const>(args));
        if (!v.is_zero()) {
          Witness w;
          w.identity = std::string(who) + ": [a, x, a] = 0";
          w.basis_tuple = idx;
          for (int j : idx) w.args.push_back(u[static_cast<std::size_t>(j)]);
          w.lhs = v;
          w.rhs = Vector(d);
          throw HypothesisError(w.identity, std::move(w));
        }
        int slot = n - 3;
        while (slot >= 0 && ++idx[static_cast<std::size_t>(slot)] == d)
          idx[static_cast<std::size_t>(slot--)] = 0;
        if (slot < 0) break;
      }
    }
  }
  std::vector<const Vector*> args(static_cast<std::size_t>(n));
  args.front() = &a;
  const auto u = basis_vectors(d);
  Vector out(d);
  MultilinearMap t = MultilinearMap::from_fn(d, n - 1, [&](std::span<const int> i) {
    for (int j = 0; j < n - 1; ++j)
      args[static_cast<std::size_t>(j + 1)] = &u[static_cast<std::size_t>(i[static_cast<std::size_t>(j)])];
    out.set_zero();
    br.eval_acc(out, Rational(1), args);
    return out;
  });
  std::vector<LinearMap> twists(L.twists().begin() + 1, L.twists().end());
  return HomAlgebra(std::move(t), std::move(twists));
}

}  // namespace

HomAlgebra lower_arity(const HomAlgebra& L, const Vector& a, Verify verify) {
  return lower_arity_impl(L, a, verify, "lower_arity");
}

HomAlgebra lower_arity_k(const HomAlgebra& L, std::span<const Vector> as, Verify verify) {
  if (as.size() + 2 > static_cast<std::size_t>(L.arity()))
    throw ShapeError("lower_arity_k: too many elements for the arity");
  HomAlgebra cur = L;
  for (const Vector& a : as) cur = lower_arity_impl(cur, a, verify, "lower_arity_k");
  return cur;
}

namespace {

void check_trace_hypotheses(const HomAlgebra& L, const TraceFunctional& tau, const LinearMap& beta,
                            const char* who) {
  const int d = L.dim();
  if (tau.coeffs.dim() != d || beta.dim() != d)
    throw ShapeError(std::string(who) + ": trace/map dimension mismatch");
  refuse_if_failed(check_hom_lie(L), std::string(who) + ": L is a Hom-Lie algebra");
  const MultilinearMap& br = L.bracket();
  const LinearMap& alpha = L.twist(0);
  const auto u = basis_vectors(d);

  auto scalar_witness = [&](const char* hyp, int i, int j, const Rational& l, const Rational& r) {
    Witness w;
    w.identity = std::string(who) + ": " + hyp;
    w.basis_tuple = {i, j};
    w.args = {u[static_cast<std::size_t>(i)], u[static_cast<std::size_t>(j)]};
    w.lhs = Vector({l});
    w.rhs = Vector({r});
    throw HypothesisError(w.identity, std::move(w));
  };

  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      const Vector bij = ev2(br, u[static_cast<std::size_t>(i)], u[static_cast<std::size_t>(j)]);
      const Rational tb = tau.apply(bij);
      if (sgn(tb) != 0) scalar_witness("tau([x,y]) = 0 (trace function)", i, j, tb, Rational(0));
    }

  std::vector<Rational> t(static_cast<std::size_t>(d)), ta(static_cast<std::size_t>(d)),
      tbv(static_cast<std::size_t>(d));
  for (int i = 0; i < d; ++i) {
    t[static_cast<std::size_t>(i)] = tau.apply(u[static_cast<std::size_t>(i)]);
    ta[static_cast<std::size_t>(i)] = tau.apply(alpha.column(i));
    tbv[static_cast<std::size_t>(i)] = tau.apply(beta.column(i));
  }
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      Rational l = ta[static_cast<std::size_t>(i)] * t[static_cast<std::size_t>(j)];
      Rational r = t[static_cast<std::size_t>(i)] * ta[static_cast<std::size_t>(j)];
      if (l != r) scalar_witness("tau(a(x))tau(y) = tau(x)tau(a(y))", i, j, l, r);
      l = tbv[static_cast<std::size_t>(i)] * t[static_cast<std::size_t>(j)];
      r = t[static_cast<std::size_t>(i)] * tbv[static_cast<std::size_t>(j)];
      if (l != r) scalar_witness("tau(b(x))tau(y) = tau(x)tau(b(y))", i, j, l, r);
      Vector lv = beta.column(j);
      lv *= ta[static_cast<std::size_t>(i)];
      Vector rv = alpha.column(j);
      rv *= tbv[static_cast<std::size_t>(i)];
      if (!(lv == rv)) {
        Witness w;
        w.identity = std::string(who) + ": tau(a(x))b(y) = tau(b(x))a(y)";
        w.basis_tuple = {i, j};
        w.args = {u[static_cast<std::size_t>(i)], u[static_cast<std::size_t>(j)]};
        w.lhs = lv;
        w.rhs = rv;
        throw HypothesisError(w.identity, std::move(w));
      }
    }
}

}  // namespace

HomAlgebra ternary_from_trace(const HomAlgebra& L, const TraceFunctional& tau,
                              const LinearMap& beta, Verify verify) {
  if (L.arity() != 2) throw ShapeError("ternary_from_trace: requires arity 2");
  if (verify == Verify::on) check_trace_hypotheses(L, tau, beta, "ternary_from_trace");
  const int d = L.dim();
  const MultilinearMap& br = L.bracket();
  const auto u = basis_vectors(d);
  std::vector<Rational> t(static_cast<std::size_t>(d));
  for (int i = 0; i < d; ++i) t[static_cast<std::size_t>(i)] = tau.apply(u[static_cast<std::size_t>(i)]);
  MultilinearMap tb = MultilinearMap::from_fn(d, 3, [&](std::span<const int> i) {
    const Vector &x = u[static_cast<std::size_t>(i[0])], &y = u[static_cast<std::size_t>(i[1])],
                 &z = u[static_cast<std::size_t>(i[2])];
    Vector v(d);
    v.axpy(t[static_cast<std::size_t>(i[0])], ev2(br, y, z));
    v.axpy(t[static_cast<std::size_t>(i[1])], ev2(br, z, x));
    v.axpy(t[static_cast<std::size_t>(i[2])], ev2(br, x, y));
    return v;
  });
  return HomAlgebra(std::move(tb), {L.twist(0), beta});
}

HomAlgebra reduce_trace_bracket(const HomAlgebra& L, const TraceFunctional& tau,
                                const LinearMap& beta, const Vector& a, Verify verify) {
  if (L.arity() != 2) throw ShapeError("reduce_trace_bracket: requires arity 2");
  if (a.dim() != L.dim()) throw ShapeError("reduce_trace_bracket: element dimension mismatch");
  if (verify == Verify::on) {
    check_trace_hypotheses(L, tau, beta, "reduce_trace_bracket");
    if (!(L.twist(0).apply(a) == a)) {
      Witness w;
      w.identity = "reduce_trace_bracket: a(a) = a";
      w.args = {a};
      w.lhs = L.twist(0).apply(a);
      w.rhs = a;
      throw HypothesisError(w.identity, std::move(w));
    }
  }
  const int d = L.dim();
  const MultilinearMap& br = L.bracket();
  const auto u = basis_vectors(d);
  const Rational ta = tau.apply(a);
  MultilinearMap nb = MultilinearMap::from_fn(d, 2, [&](std::span<const int> i) {
    const Vector &x = u[static_cast<std::size_t>(i[0])], &y = u[static_cast<std::size_t>(i[1])];
    Vector arg = x;
    arg *= tau.apply(y);
    arg.axpy(-tau.apply(x), y);
    Vector v = ev2(br, a, arg);
    v.axpy(ta, ev2(br, x, y));
    return v;
  });
  HomAlgebra out(std::move(nb), {beta});
  const HomAlgebra via = lower_arity(ternary_from_trace(L, tau, beta, Verify::off), a, Verify::off);
  if (!(out == via))
    throw std::logic_error("reduce_trace_bracket: closed form disagrees with reduction route");
  return out;
}

}  // namespace nambu
