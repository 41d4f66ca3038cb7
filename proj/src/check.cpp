#include "nambu/check.hpp"

#include <algorithm>
#include <array>
#include <random>

namespace nambu {

namespace {

constexpr std::uint64_t kSaturated = ~std::uint64_t(0);
// Above this many tuples, the exhaustive Hom-Nambu check switches from plain
// enumeration to the span-reduced tensor path.
constexpr std::uint64_t kPlainNambuLimit = 1'000'000;

std::uint64_t pow_saturating(std::uint64_t base, int exp) {
  std::uint64_t r = 1;
  for (int i = 0; i < exp; ++i) {
    if (r > kSaturated / base) return kSaturated;
    r *= base;
  }
  return r;
}

// Number of basis tuples enumerated for a condition: non-decreasing prefixes
// of length sym_prefix, free slots for the rest.
std::uint64_t tuple_count(int dim, int len, int sym_prefix) {
  // C(dim + sym_prefix - 1, sym_prefix)
  std::uint64_t sym = 1;
  for (int i = 0; i < sym_prefix; ++i) {
    if (sym > kSaturated / static_cast<std::uint64_t>(dim + i)) return kSaturated;
    sym = sym * static_cast<std::uint64_t>(dim + i) / static_cast<std::uint64_t>(i + 1);
  }
  const std::uint64_t rest = pow_saturating(static_cast<std::uint64_t>(dim), len - sym_prefix);
  if (rest != 0 && sym > kSaturated / rest) return kSaturated;
  return sym * rest;
}

// Lexicographic tuples with a non-decreasing prefix; fn returns false to stop.
template <typename Fn>
bool enumerate_tuples(int dim, int len, int sym_prefix, Fn&& fn) {
  std::vector<int> idx(static_cast<std::size_t>(len), 0);
  while (true) {
    if (!fn(std::span<const int>(idx))) return false;
    int slot = len - 1;
    while (slot >= 0 && idx[static_cast<std::size_t>(slot)] == dim - 1) --slot;
    if (slot < 0) return true;
    ++idx[static_cast<std::size_t>(slot)];
    for (int t = slot + 1; t < len; ++t)
      idx[static_cast<std::size_t>(t)] = (t < sym_prefix) ? idx[static_cast<std::size_t>(t - 1)] : 0;
  }
}

Vector random_vector(int dim, std::mt19937_64& rng, const CheckConfig& cfg) {
  std::uniform_int_distribution<int> dist(cfg.coord_min, cfg.coord_max);
  Vector v(dim);
  for (int i = 0; i < dim; ++i) v[i] = dist(rng);
  return v;
}

}  // namespace

CheckReport run_conditions(const std::string& identity, int dim, std::vector<Condition> conditions,
                           const CheckConfig& cfg) {
  CheckReport rep;
  rep.identity = identity;

  std::uint64_t total = 0;
  for (const auto& c : conditions) {
    const std::uint64_t n = tuple_count(dim, c.exhaustive_len, c.sym_prefix);
    total = (total > kSaturated - n) ? kSaturated : total + n;
  }

  bool exhaustive;
  switch (cfg.mode) {
    case CheckConfig::Mode::exhaustive:
      if (total > cfg.budget)
        throw BudgetExceeded("budget exceeded: " + identity + " needs " +
                             (total == kSaturated ? std::string("too many") : std::to_string(total)) +
                             " tuples, budget is " + std::to_string(cfg.budget));
      exhaustive = true;
      break;
    case CheckConfig::Mode::randomized:
      exhaustive = false;
      break;
    case CheckConfig::Mode::automatic:
    default:
      exhaustive = total <= cfg.budget;
      break;
  }

  rep.mode = exhaustive ? CheckMode::exhaustive : CheckMode::randomized;
  if (!exhaustive) {
    rep.samples = cfg.samples;
    rep.seed = cfg.seed;
  }
  rep.passed = true;

  std::vector<Vector> units;
  units.reserve(static_cast<std::size_t>(dim));
  for (int i = 0; i < dim; ++i) units.push_back(Vector::unit(dim, i));

  Vector lhs(dim), rhs(dim);
  std::mt19937_64 rng(cfg.seed);

  for (const auto& cond : conditions) {
    if (exhaustive) {
      const bool ok = enumerate_tuples(dim, cond.exhaustive_len, cond.sym_prefix,
                                       [&](std::span<const int> idx) {
        ++rep.tuples_checked;
        std::vector<const Vector*> args;
        args.reserve(idx.size());
        for (int i : idx) args.push_back(&units[static_cast<std::size_t>(i)]);
        lhs.set_zero();
        rhs.set_zero();
        cond.eval_exhaustive(std::span<const Vector* const>(args), lhs, rhs);
        if (lhs == rhs) return true;
        Witness w;
        w.identity = identity + ": " + cond.label;
        w.basis_tuple.assign(idx.begin(), idx.end());
        for (int i : idx) w.args.push_back(units[static_cast<std::size_t>(i)]);
        w.lhs = lhs;
        w.rhs = rhs;
        rep.witness = std::move(w);
        return false;
      });
      if (!ok) {
        rep.passed = false;
        rep.note = cond.label;
        return rep;
      }
    } else {
      const auto& eval = cond.eval_randomized ? cond.eval_randomized : cond.eval_exhaustive;
      for (std::uint64_t s = 0; s < cfg.samples; ++s) {
        ++rep.tuples_checked;
        std::vector<Vector> vecs;
        vecs.reserve(static_cast<std::size_t>(cond.randomized_len));
        for (int i = 0; i < cond.randomized_len; ++i) vecs.push_back(random_vector(dim, rng, cfg));
        std::vector<const Vector*> args;
        args.reserve(vecs.size());
        for (const Vector& v : vecs) args.push_back(&v);
        lhs.set_zero();
        rhs.set_zero();
        eval(std::span<const Vector* const>(args), lhs, rhs);
        if (lhs == rhs) continue;
        Witness w;
        w.identity = identity + ": " + cond.label;
        w.args = std::move(vecs);
        w.lhs = lhs;
        w.rhs = rhs;
        rep.witness = std::move(w);
        rep.passed = false;
        rep.note = cond.label;
        return rep;
      }
    }
  }
  return rep;
}

// ---------------------------------------------------------------------------
// check_hom_nambu
// ---------------------------------------------------------------------------

namespace {

using Table = std::map<std::uint64_t, Vector>;

void table_accumulate(Table& acc, std::uint64_t key, const Rational& scale, const Vector& v, int dim) {
  auto [it, inserted] = acc.try_emplace(key, Vector(dim));
  it->second.axpy(scale, v);
}

void table_prune(Table& t) {
  for (auto it = t.begin(); it != t.end();)
    it = it->second.is_zero() ? t.erase(it) : std::next(it);
}

// T' with slot precomposed by M: T'(..., e_m, ...) = sum_l M(l,m) T(..., e_l, ...).
Table compose_slot(const Table& t, int dim, int arity, int slot, const LinearMap& m) {
  std::vector<std::vector<std::pair<int, Rational>>> rows(static_cast<std::size_t>(dim));
  for (int l = 0; l < dim; ++l)
    for (int col = 0; col < dim; ++col)
      if (sgn(m.at(l, col)) != 0) rows[static_cast<std::size_t>(l)].emplace_back(col, m.at(l, col));
  const std::uint64_t place = pow_saturating(static_cast<std::uint64_t>(dim), arity - 1 - slot);
  Table out;
  for (const auto& [key, v] : t) {
    const int l = static_cast<int>((key / place) % static_cast<std::uint64_t>(dim));
    for (const auto& [col, coeff] : rows[static_cast<std::size_t>(l)]) {
      const std::uint64_t nk = key + (static_cast<std::uint64_t>(col) - static_cast<std::uint64_t>(l)) * place;
      table_accumulate(out, nk, coeff, v, dim);
    }
  }
  table_prune(out);
  return out;
}

struct SlotMapPair {
  LinearMap outer;  // U' = [alpha_1(x_1),...,alpha_{n-1}(x_{n-1}), .]
  LinearMap inner;  // U  = [x_1,...,x_{n-1}, .]
  bool zero = true;
};

SlotMapPair slot_maps_for_prefix(const HomAlgebra& L, std::uint64_t xkey,
                                 const std::vector<std::vector<Vector>>& tcols, bool id_twists) {
  const int d = L.dim();
  const int n = L.arity();
  const MultilinearMap& br = L.bracket();
  SlotMapPair p{LinearMap(d), LinearMap(d), true};
  const std::vector<int> xs = unpack_indices(xkey, d, n - 1);
  for (int l = 0; l < d; ++l) {
    if (const Vector* v = br.basis_value_packed(xkey * static_cast<std::uint64_t>(d) +
                                                static_cast<std::uint64_t>(l))) {
      p.zero = false;
      for (int i = 0; i < d; ++i) p.inner.at(i, l) = (*v)[i];
    }
  }
  if (id_twists) {
    p.outer = p.inner;
    return p;
  }
  std::vector<const Vector*> args(static_cast<std::size_t>(n));
  for (int j = 0; j < n - 1; ++j)
    args[static_cast<std::size_t>(j)] = &tcols[static_cast<std::size_t>(j)][static_cast<std::size_t>(xs[static_cast<std::size_t>(j)])];
  Vector out(d);
  for (int l = 0; l < d; ++l) {
    const Vector el = Vector::unit(d, l);
    args[static_cast<std::size_t>(n - 1)] = &el;
    out.set_zero();
    br.eval_acc(out, Rational(1), args);
    if (!out.is_zero()) p.zero = false;
    for (int i = 0; i < d; ++i) p.outer.at(i, l) = out[i];
  }
  return p;
}

// J_x as a tensor in the y arguments, given the pair of slot maps for x.
// termbases[i-1] is the bracket with every slot except i precomposed by the
// appropriate twist.
Table nambu_fixed_x_tensor(const HomAlgebra& L, const SlotMapPair& p,
                           const std::vector<const Table*>& termbases) {
  const int d = L.dim();
  const int n = L.arity();
  Table acc;
  for (const auto& [key, v] : L.bracket().table()) {
    Vector w = p.outer.apply(v);
    if (!w.is_zero()) table_accumulate(acc, key, Rational(1), w, d);
  }
  const Rational minus(-1);
  for (int i = 1; i <= n; ++i) {
    Table ti = compose_slot(*termbases[static_cast<std::size_t>(i - 1)], d, n, i - 1, p.inner);
    for (const auto& [key, v] : ti) table_accumulate(acc, key, minus, v, d);
  }
  table_prune(acc);
  return acc;
}

// Exhaustive Hom-Nambu check for large tuple spaces. J_x depends on the
// x-prefix only through the pair (U'_x, U_x) and is linear in that pair, so
// verifying J on a spanning set of pairs covers every basis tuple exactly.
CheckReport check_hom_nambu_span(const HomAlgebra& L, std::uint64_t total) {
  const int d = L.dim();
  const int n = L.arity();
  const MultilinearMap& br = L.bracket();

  CheckReport rep;
  rep.identity = "hom_nambu";
  rep.mode = CheckMode::exhaustive;

  const bool id_twists = L.twists_identity();
  std::vector<std::vector<Vector>> tcols(static_cast<std::size_t>(n - 1));
  for (int j = 0; j < n - 1; ++j) {
    tcols[static_cast<std::size_t>(j)].reserve(static_cast<std::size_t>(d));
    for (int i = 0; i < d; ++i) tcols[static_cast<std::size_t>(j)].push_back(L.twist(j).column(i));
  }

  // Per-term bracket tensors: slot j < i twisted by alpha_j, slot j > i by
  // alpha_{j-1} (1-based), insertion slot i left alone.
  std::vector<Table> termbase_storage;
  std::vector<const Table*> termbases(static_cast<std::size_t>(n), &br.table());
  if (!id_twists) {
    termbase_storage.reserve(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) {
      Table t = br.table();
      for (int j = 1; j <= n; ++j) {
        if (j == i) continue;
        const LinearMap& a = (j < i) ? L.twist(j - 1) : L.twist(j - 2);
        if (!a.is_identity()) t = compose_slot(t, d, n, j - 1, a);
      }
      termbase_storage.push_back(std::move(t));
    }
    for (int i = 0; i < n; ++i) termbases[static_cast<std::size_t>(i)] = &termbase_storage[static_cast<std::size_t>(i)];
  }

  // Gaussian reduction of the vectorized pairs; keep one representative pair
  // per independent direction.
  const int veclen = 2 * d * d;
  std::vector<std::vector<Rational>> basis;
  std::vector<int> pivots;
  std::vector<SlotMapPair> reps;
  const std::uint64_t xcount = pow_saturating(static_cast<std::uint64_t>(d), n - 1);
  for (std::uint64_t xkey = 0; xkey < xcount; ++xkey) {
    SlotMapPair p = slot_maps_for_prefix(L, xkey, tcols, id_twists);
    if (p.zero) continue;
    std::vector<Rational> vec(static_cast<std::size_t>(veclen));
    for (int c = 0; c < d; ++c)
      for (int r = 0; r < d; ++r) {
        vec[static_cast<std::size_t>(c * d + r)] = p.outer.at(r, c);
        vec[static_cast<std::size_t>(d * d + c * d + r)] = p.inner.at(r, c);
      }
    for (std::size_t b = 0; b < basis.size(); ++b) {
      const Rational& lead = vec[static_cast<std::size_t>(pivots[b])];
      if (sgn(lead) != 0)
        for (int k = 0; k < veclen; ++k)
          if (sgn(basis[b][static_cast<std::size_t>(k)]) != 0)
            vec[static_cast<std::size_t>(k)] -= lead * basis[b][static_cast<std::size_t>(k)];
    }
    int pivot = -1;
    for (int k = 0; k < veclen; ++k)
      if (sgn(vec[static_cast<std::size_t>(k)]) != 0) {
        pivot = k;
        break;
      }
    if (pivot < 0) continue;
    const Rational inv = 1 / vec[static_cast<std::size_t>(pivot)];
    for (auto& x : vec) x *= inv;
    basis.push_back(std::move(vec));
    pivots.push_back(pivot);
    reps.push_back(std::move(p));
  }

  bool failed = false;
  for (const auto& p : reps)
    if (!nambu_fixed_x_tensor(L, p, termbases).empty()) {
      failed = true;
      break;
    }

  if (!failed) {
    rep.passed = true;
    rep.tuples_checked = total;
    return rep;
  }

  // Locate the lexicographically least failing basis tuple for the witness.
  for (std::uint64_t xkey = 0; xkey < xcount; ++xkey) {
    SlotMapPair p = slot_maps_for_prefix(L, xkey, tcols, id_twists);
    if (p.zero) continue;
    Table diff = nambu_fixed_x_tensor(L, p, termbases);
    if (diff.empty()) continue;
    const std::uint64_t ykey = diff.begin()->first;
    Witness w;
    w.identity = "hom_nambu: J != 0";
    const std::vector<int> xs = unpack_indices(xkey, d, n - 1);
    const std::vector<int> ys = unpack_indices(ykey, d, n);
    w.basis_tuple = xs;
    w.basis_tuple.insert(w.basis_tuple.end(), ys.begin(), ys.end());
    for (int i : w.basis_tuple) w.args.push_back(Vector::unit(d, i));
    std::vector<Vector> xv, yv;
    for (int i : xs) xv.push_back(Vector::unit(d, i));
    for (int i : ys) yv.push_back(Vector::unit(d, i));
    w.lhs = hom_jacobian(L, xv, yv);
    w.rhs = Vector(d);
    rep.witness = std::move(w);
    rep.passed = false;
    rep.note = "J != 0";
    rep.tuples_checked = xkey * pow_saturating(static_cast<std::uint64_t>(d), n) + ykey + 1;
    return rep;
  }
  throw std::logic_error("hom_nambu: span check failed but no witness found");
}

CheckReport check_hom_nambu_plain(const HomAlgebra& L) {
  const int d = L.dim();
  const int n = L.arity();
  const int len = 2 * n - 1;
  const MultilinearMap& br = L.bracket();

  CheckReport rep;
  rep.identity = "hom_nambu";
  rep.mode = CheckMode::exhaustive;

  std::vector<std::vector<Vector>> tcols(static_cast<std::size_t>(n - 1));
  for (int j = 0; j < n - 1; ++j)
    for (int i = 0; i < d; ++i) tcols[static_cast<std::size_t>(j)].push_back(L.twist(j).column(i));

  Vector out(d);
  std::vector<const Vector*> slot(static_cast<std::size_t>(n));
  std::vector<int> xy(static_cast<std::size_t>(n));

  const bool ok = enumerate_tuples(d, len, 0, [&](std::span<const int> idx) {
    ++rep.tuples_checked;
    const auto xs = idx.subspan(0, static_cast<std::size_t>(n - 1));
    const auto ys = idx.subspan(static_cast<std::size_t>(n - 1));
    out.set_zero();
    bool touched = false;

    if (const Vector* inner = br.basis_value(ys)) {
      for (int j = 0; j < n - 1; ++j)
        slot[static_cast<std::size_t>(j)] =
            &tcols[static_cast<std::size_t>(j)][static_cast<std::size_t>(xs[static_cast<std::size_t>(j)])];
      slot[static_cast<std::size_t>(n - 1)] = inner;
      br.eval_acc(out, Rational(1), slot);
      touched = true;
    }

    std::copy(xs.begin(), xs.end(), xy.begin());
    const Rational minus(-1);
    for (int i = 1; i <= n; ++i) {
      xy[static_cast<std::size_t>(n - 1)] = ys[static_cast<std::size_t>(i - 1)];
      const Vector* ui = br.basis_value(xy);
      if (!ui) continue;
      for (int j = 1; j < i; ++j)
        slot[static_cast<std::size_t>(j - 1)] =
            &tcols[static_cast<std::size_t>(j - 1)][static_cast<std::size_t>(ys[static_cast<std::size_t>(j - 1)])];
      slot[static_cast<std::size_t>(i - 1)] = ui;
      for (int j = i + 1; j <= n; ++j)
        slot[static_cast<std::size_t>(j - 1)] =
            &tcols[static_cast<std::size_t>(j - 2)][static_cast<std::size_t>(ys[static_cast<std::size_t>(j - 1)])];
      br.eval_acc(out, minus, slot);
      touched = true;
    }

    if (!touched || out.is_zero()) return true;
    Witness w;
    w.identity = "hom_nambu: J != 0";
    w.basis_tuple.assign(idx.begin(), idx.end());
    for (int i : idx) w.args.push_back(Vector::unit(d, i));
    w.lhs = out;
    w.rhs = Vector(d);
    rep.witness = std::move(w);
    return false;
  });
  rep.passed = ok;
  if (!ok) rep.note = "J != 0";
  return rep;
}

}  // namespace

CheckReport check_hom_nambu(const HomAlgebra& L, const CheckConfig& cfg) {
  const int len = 2 * L.arity() - 1;
  const std::uint64_t total = pow_saturating(static_cast<std::uint64_t>(L.dim()), len);

  bool exhaustive;
  switch (cfg.mode) {
    case CheckConfig::Mode::exhaustive:
      if (total > cfg.budget)
        throw BudgetExceeded("budget exceeded: hom_nambu needs " + std::to_string(total) +
                             " tuples, budget is " + std::to_string(cfg.budget));
      exhaustive = true;
      break;
    case CheckConfig::Mode::randomized:
      exhaustive = false;
      break;
    case CheckConfig::Mode::automatic:
    default:
      exhaustive = total <= cfg.budget;
      break;
  }

  if (!exhaustive) {
    const int n = L.arity();
    Condition c;
    c.label = "J != 0";
    c.exhaustive_len = c.randomized_len = len;
    c.eval_exhaustive = [&L, n](std::span<const Vector* const> args, Vector& lhs, Vector&) {
      hom_jacobian_acc(L, lhs, Rational(1), args);
    };
    CheckConfig forced = cfg;
    forced.mode = CheckConfig::Mode::randomized;
    return run_conditions("hom_nambu", L.dim(), {std::move(c)}, forced);
  }
  if (total <= kPlainNambuLimit) return check_hom_nambu_plain(L);
  return check_hom_nambu_span(L, total);
}

// ---------------------------------------------------------------------------
// Remaining checkers (condition driver)
// ---------------------------------------------------------------------------

namespace {

Vector eval2(const MultilinearMap& m, const Vector& a, const Vector& b) {
  const Vector* p[2] = {&a, &b};
  return m.eval(std::span<const Vector* const>(p, 2));
}

Vector eval3(const MultilinearMap& m, const Vector& a, const Vector& b, const Vector& c) {
  const Vector* p[3] = {&a, &b, &c};
  return m.eval(std::span<const Vector* const>(p, 3));
}

void require_arity(const HomAlgebra& L, int n, const char* who) {
  if (L.arity() != n)
    throw ShapeError(std::string(who) + ": requires arity " + std::to_string(n) + ", got " +
                     std::to_string(L.arity()));
}

}  // namespace

CheckReport check_antisymmetry(const HomAlgebra& L, const CheckConfig& cfg) {
  const int n = L.arity();
  const MultilinearMap& br = L.bracket();
  std::vector<Condition> conds;
  for (int s = 0; s + 1 < n; ++s) {
    Condition c;
    c.label = "swap of slots " + std::to_string(s + 1) + "," + std::to_string(s + 2) +
              " negates the bracket";
    c.exhaustive_len = c.randomized_len = n;
    c.eval_exhaustive = [&br, s](std::span<const Vector* const> args, Vector& lhs, Vector& rhs) {
      br.eval_acc(lhs, Rational(1), args);
      std::vector<const Vector*> swapped(args.begin(), args.end());
      std::swap(swapped[static_cast<std::size_t>(s)], swapped[static_cast<std::size_t>(s + 1)]);
      br.eval_acc(rhs, Rational(-1), swapped);
    };
    conds.push_back(std::move(c));
  }
  return run_conditions("antisymmetry", L.dim(), std::move(conds), cfg);
}

CheckReport check_ternary_total_hom_assoc(const HomAlgebra& A, const CheckConfig& cfg) {
  require_arity(A, 3, "check_ternary_total_hom_assoc");
  const MultilinearMap& t = A.bracket();
  const LinearMap& a1 = A.twist(0);
  const LinearMap& a2 = A.twist(1);

  auto left = [&](std::span<const Vector* const> v) {
    return eval3(t, eval3(t, *v[0], *v[1], *v[2]), a1.apply(*v[3]), a2.apply(*v[4]));
  };
  Condition c1;
  c1.label = "((uvw)a1(x)a2(y)) = (a1(u)(vwx)a2(y))";
  c1.exhaustive_len = c1.randomized_len = 5;
  c1.eval_exhaustive = [&, left](std::span<const Vector* const> v, Vector& lhs, Vector& rhs) {
    lhs = left(v);
    rhs = eval3(t, a1.apply(*v[0]), eval3(t, *v[1], *v[2], *v[3]), a2.apply(*v[4]));
  };
  Condition c2;
  c2.label = "((uvw)a1(x)a2(y)) = (a1(u)a2(v)(wxy))";
  c2.exhaustive_len = c2.randomized_len = 5;
  c2.eval_exhaustive = [&, left](std::span<const Vector* const> v, Vector& lhs, Vector& rhs) {
    lhs = left(v);
    rhs = eval3(t, a1.apply(*v[0]), a2.apply(*v[1]), eval3(t, *v[2], *v[3], *v[4]));
  };
  return run_conditions("ternary_total_hom_assoc", A.dim(), {std::move(c1), std::move(c2)}, cfg);
}

CheckReport check_hom_jordan_ts(const HomAlgebra& J, const CheckConfig& cfg) {
  require_arity(J, 3, "check_hom_jordan_ts");
  const MultilinearMap& t = J.bracket();
  const LinearMap& a1 = J.twist(0);
  const LinearMap& a2 = J.twist(1);

  Condition c1;
  c1.label = "outer-symmetry {xyz} = {zyx}";
  c1.exhaustive_len = c1.randomized_len = 3;
  c1.eval_exhaustive = [&t](std::span<const Vector* const> v, Vector& lhs, Vector& rhs) {
    lhs = eval3(t, *v[0], *v[1], *v[2]);
    rhs = eval3(t, *v[2], *v[1], *v[0]);
  };
  Condition c2;
  c2.label = "Hom-Jordan triple identity";
  c2.exhaustive_len = c2.randomized_len = 5;
  c2.eval_exhaustive = [&](std::span<const Vector* const> v, Vector& lhs, Vector& rhs) {
    const Vector &x = *v[0], &y = *v[1], &u = *v[2], &vv = *v[3], &w = *v[4];
    lhs = eval3(t, a1.apply(x), a2.apply(y), eval3(t, u, vv, w)) -
          eval3(t, a1.apply(u), a2.apply(vv), eval3(t, x, y, w));
    rhs = eval3(t, eval3(t, x, y, u), a1.apply(vv), a2.apply(w)) -
          eval3(t, a1.apply(u), eval3(t, y, x, vv), a2.apply(w));
  };
  return run_conditions("hom_jordan_ts", J.dim(), {std::move(c1), std::move(c2)}, cfg);
}

CheckReport check_hom_lie_ts(const HomAlgebra& T, const CheckConfig& cfg) {
  require_arity(T, 3, "check_hom_lie_ts");
  const MultilinearMap& t = T.bracket();

  Condition c1;
  c1.label = "left anti-symmetry [uvw] = -[vuw]";
  c1.exhaustive_len = c1.randomized_len = 3;
  c1.eval_exhaustive = [&t](std::span<const Vector* const> v, Vector& lhs, Vector& rhs) {
    lhs = eval3(t, *v[0], *v[1], *v[2]);
    rhs = -eval3(t, *v[1], *v[0], *v[2]);
  };
  Condition c2;
  c2.label = "ternary Jacobi identity [uvw] + [wuv] + [vwu] = 0";
  c2.exhaustive_len = c2.randomized_len = 3;
  c2.eval_exhaustive = [&t](std::span<const Vector* const> v, Vector& lhs, Vector&) {
    lhs = eval3(t, *v[0], *v[1], *v[2]) + eval3(t, *v[2], *v[0], *v[1]) +
          eval3(t, *v[1], *v[2], *v[0]);
  };
  Condition c3;
  c3.label = "ternary Hom-Nambu identity";
  c3.exhaustive_len = c3.randomized_len = 5;
  c3.eval_exhaustive = [&T](std::span<const Vector* const> v, Vector& lhs, Vector&) {
    hom_jacobian_acc(T, lhs, Rational(1), v);
  };
  return run_conditions("hom_lie_ts", T.dim(), {std::move(c1), std::move(c2), std::move(c3)}, cfg);
}

CheckReport check_hom_associative(const HomAlgebra& A, const CheckConfig& cfg) {
  require_arity(A, 2, "check_hom_associative");
  Condition c;
  c.label = "Hom-associator vanishes";
  c.exhaustive_len = c.randomized_len = 3;
  c.eval_exhaustive = [&A](std::span<const Vector* const> v, Vector& lhs, Vector&) {
    hom_associator_acc(A, lhs, Rational(1), v);
  };
  return run_conditions("hom_associative", A.dim(), {std::move(c)}, cfg);
}

CheckReport check_hom_lie(const HomAlgebra& L, const CheckConfig& cfg) {
  require_arity(L, 2, "check_hom_lie");
  const MultilinearMap& br = L.bracket();
  const LinearMap& alpha = L.twist(0);

  Condition c1;
  c1.label = "anti-symmetry [x,y] = -[y,x]";
  c1.exhaustive_len = c1.randomized_len = 2;
  c1.eval_exhaustive = [&br](std::span<const Vector* const> v, Vector& lhs, Vector& rhs) {
    lhs = eval2(br, *v[0], *v[1]);
    rhs = -eval2(br, *v[1], *v[0]);
  };
  Condition c2;
  c2.label = "Hom-Jacobi identity";
  c2.exhaustive_len = c2.randomized_len = 3;
  c2.eval_exhaustive = [&br, &alpha](std::span<const Vector* const> v, Vector& lhs, Vector&) {
    const Vector &x = *v[0], &y = *v[1], &z = *v[2];
    lhs = eval2(br, eval2(br, x, y), alpha.apply(z)) +
          eval2(br, eval2(br, z, x), alpha.apply(y)) +
          eval2(br, eval2(br, y, z), alpha.apply(x));
  };
  return run_conditions("hom_lie", L.dim(), {std::move(c1), std::move(c2)}, cfg);
}

CheckReport check_maltsev(const HomAlgebra& A, const CheckConfig& cfg) {
  require_arity(A, 2, "check_maltsev");
  if (!A.twists_identity())
    throw ShapeError("check_maltsev: only supported for identity twist");
  const MultilinearMap& mu = A.bracket();

  auto jac = [&mu](const Vector& x, const Vector& y, const Vector& z) {
    return eval2(mu, eval2(mu, x, y), z) + eval2(mu, eval2(mu, z, x), y) +
           eval2(mu, eval2(mu, y, z), x);
  };

  Condition c1;
  c1.label = "anti-symmetry of the product";
  c1.exhaustive_len = c1.randomized_len = 2;
  c1.eval_exhaustive = [&mu](std::span<const Vector* const> v, Vector& lhs, Vector& rhs) {
    lhs = eval2(mu, *v[0], *v[1]);
    rhs = -eval2(mu, *v[1], *v[0]);
  };
  // The Maltsev identity is quadratic in x; exhaustive mode checks its
  // polarization in (x1, x2), which is multilinear and equivalent over a
  // characteristic-0 field.
  Condition c2;
  c2.label = "Maltsev identity J'(x,y,xz) = J'(x,y,z)x";
  c2.exhaustive_len = 4;
  c2.randomized_len = 3;
  c2.sym_prefix = 2;
  c2.eval_exhaustive = [&mu, jac](std::span<const Vector* const> v, Vector& lhs, Vector& rhs) {
    const Vector &x1 = *v[0], &x2 = *v[1], &y = *v[2], &z = *v[3];
    lhs = jac(x1, y, eval2(mu, x2, z)) + jac(x2, y, eval2(mu, x1, z));
    rhs = eval2(mu, jac(x1, y, z), x2) + eval2(mu, jac(x2, y, z), x1);
  };
  c2.eval_randomized = [&mu, jac](std::span<const Vector* const> v, Vector& lhs, Vector& rhs) {
    const Vector &x = *v[0], &y = *v[1], &z = *v[2];
    lhs = jac(x, y, eval2(mu, x, z));
    rhs = eval2(mu, jac(x, y, z), x);
  };
  return run_conditions("maltsev", A.dim(), {std::move(c1), std::move(c2)}, cfg);
}

CheckReport check_alternative(const HomAlgebra& A, const CheckConfig& cfg) {
  require_arity(A, 2, "check_alternative");
  const MultilinearMap& mu = A.bracket();
  auto as = [&mu](const Vector& x, const Vector& y, const Vector& z) {
    return eval2(mu, eval2(mu, x, y), z) - eval2(mu, x, eval2(mu, y, z));
  };
  Condition c1;
  c1.label = "associator negates under swap of first two arguments";
  c1.exhaustive_len = c1.randomized_len = 3;
  c1.eval_exhaustive = [as](std::span<const Vector* const> v, Vector& lhs, Vector& rhs) {
    lhs = as(*v[0], *v[1], *v[2]);
    rhs = -as(*v[1], *v[0], *v[2]);
  };
  Condition c2;
  c2.label = "associator negates under swap of last two arguments";
  c2.exhaustive_len = c2.randomized_len = 3;
  c2.eval_exhaustive = [as](std::span<const Vector* const> v, Vector& lhs, Vector& rhs) {
    lhs = as(*v[0], *v[1], *v[2]);
    rhs = -as(*v[0], *v[2], *v[1]);
  };
  return run_conditions("alternative", A.dim(), {std::move(c1), std::move(c2)}, cfg);
}

CheckReport check_jordan(const HomAlgebra& A, const CheckConfig& cfg) {
  require_arity(A, 2, "check_jordan");
  const MultilinearMap& mu = A.bracket();

  Condition c1;
  c1.label = "commutativity";
  c1.exhaustive_len = c1.randomized_len = 2;
  c1.eval_exhaustive = [&mu](std::span<const Vector* const> v, Vector& lhs, Vector& rhs) {
    lhs = eval2(mu, *v[0], *v[1]);
    rhs = eval2(mu, *v[1], *v[0]);
  };
  // (x^2 y) x = x^2 (y x) is cubic in x; exhaustive mode checks the full
  // trilinearization over (x1, x2, x3).
  Condition c2;
  c2.label = "Jordan identity (x^2 y)x = x^2(yx)";
  c2.exhaustive_len = 4;
  c2.randomized_len = 2;
  c2.sym_prefix = 3;
  c2.eval_exhaustive = [&mu](std::span<const Vector* const> v, Vector& lhs, Vector& rhs) {
    const Vector& y = *v[3];
    const int perms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
    for (const auto& p : perms) {
      const Vector sq = eval2(mu, *v[p[0]], *v[p[1]]);
      lhs += eval2(mu, eval2(mu, sq, y), *v[p[2]]);
      rhs += eval2(mu, sq, eval2(mu, y, *v[p[2]]));
    }
  };
  c2.eval_randomized = [&mu](std::span<const Vector* const> v, Vector& lhs, Vector& rhs) {
    const Vector &x = *v[0], &y = *v[1];
    const Vector sq = eval2(mu, x, x);
    lhs = eval2(mu, eval2(mu, sq, y), x);
    rhs = eval2(mu, sq, eval2(mu, y, x));
  };
  return run_conditions("jordan", A.dim(), {std::move(c1), std::move(c2)}, cfg);
}

CheckReport check_identity_by_name(const std::string& name, const HomAlgebra& L,
                                   const CheckConfig& cfg) {
  if (name == "hom_nambu") return check_hom_nambu(L, cfg);
  if (name == "antisymmetry") return check_antisymmetry(L, cfg);
  if (name == "ternary_total_hom_assoc") return check_ternary_total_hom_assoc(L, cfg);
  if (name == "hom_jordan_ts") return check_hom_jordan_ts(L, cfg);
  if (name == "hom_lie_ts") return check_hom_lie_ts(L, cfg);
  if (name == "hom_associative") return check_hom_associative(L, cfg);
  if (name == "hom_lie") return check_hom_lie(L, cfg);
  if (name == "maltsev") return check_maltsev(L, cfg);
  if (name == "alternative") return check_alternative(L, cfg);
  if (name == "jordan") return check_jordan(L, cfg);
  if (name == "multiplicative") return is_multiplicative(L);
  throw std::invalid_argument("unknown identity checker: " + name);
}

std::vector<std::string> checker_names() {
  return {"hom_nambu",  "antisymmetry", "ternary_total_hom_assoc", "hom_jordan_ts",
          "hom_lie_ts", "hom_associative", "hom_lie", "maltsev",
          "alternative", "jordan", "multiplicative"};
}

}  // namespace nambu
