#include "parinv/sampling.hpp"

#include "parinv/linalg.hpp"

#include <functional>
#include <string>

namespace parinv {

namespace {

Rational draw(CounterRng& rng, int bound) { return Rational(static_cast<long>(rng.uniform_int(-bound, bound))); }

Rational draw_nonzero(CounterRng& rng, int bound) {
  const auto magnitude = rng.uniform_int(1, bound);
  return Rational(static_cast<long>(rng.uniform_int(0, 1) == 0 ? magnitude : -magnitude));
}

void check_bound(int bound) {
  if (bound < 1) throw std::invalid_argument("sampling bound must be at least 1");
}

using PositionFilter = std::function<bool(IndexPair)>;

// Basis of {A : AᵗF + FA = 0, A supported on allowed positions}.
std::vector<RationalMatrix> form_lie_basis(const RationalMatrix& form, const PositionFilter& allowed) {
  const std::size_t n = form.rows();
  std::vector<IndexPair> vars;
  for (int p = 1; p <= static_cast<int>(n); ++p)
    for (int q = 1; q <= static_cast<int>(n); ++q)
      if (allowed({p, q})) vars.push_back({p, q});

  RationalMatrix constraints(n * n, vars.size());
  for (std::size_t v = 0; v < vars.size(); ++v) {
    const auto p = static_cast<std::size_t>(vars[v].i - 1);
    const auto q = static_cast<std::size_t>(vars[v].j - 1);
    // (AᵗF)_{qc} picks up F_{pc}; (FA)_{rq} picks up F_{rp}.
    for (std::size_t c = 0; c < n; ++c) constraints(q * n + c, v) += form(p, c);
    for (std::size_t r = 0; r < n; ++r) constraints(r * n + q, v) += form(r, p);
  }
  std::vector<RationalMatrix> basis;
  for (const auto& kernel : nullspace_basis(constraints)) {
    RationalMatrix a(n, n);
    for (std::size_t v = 0; v < vars.size(); ++v) a.at(vars[v]) = kernel(v, 0);
    basis.push_back(std::move(a));
  }
  return basis;
}

RationalMatrix cayley(const RationalMatrix& a) {
  const auto e = RationalMatrix::identity(a.rows());
  return (e - a) * inverse(e + a);
}

RationalMatrix random_combination(const std::vector<RationalMatrix>& basis, std::size_t n, CounterRng& rng, int bound) {
  RationalMatrix a(n, n);
  for (const auto& b : basis) a += draw(rng, bound) * b;
  return a;
}

RationalMatrix random_matrix(std::size_t rows, std::size_t cols, CounterRng& rng, int bound) {
  RationalMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = draw(rng, bound);
  return m;
}

// B with B^σ = -B (orthogonal) or B^σ = B (symplectic).
RationalMatrix random_constrained_b(GroupKind kind, std::size_t size, CounterRng& rng, int bound) {
  const RationalMatrix r = random_matrix(size, size, rng, bound);
  return kind == GroupKind::O ? r - r.anti_transpose() : r + r.anti_transpose();
}

// Leading ℓ₀ blocks of the composition, as a GL(N₀) shape.
FlagShape top_shape(const FlagShape& shape) {
  std::vector<int> parts(shape.parts().begin(), shape.parts().begin() + shape.half_blocks());
  return make_shape(GroupKind::GL, shape.half_size(), parts);
}

RationalMatrix scale_first_row_to_unit_det(RationalMatrix m) {
  const Rational d = det(m);
  const Rational inv = Rational(1) / d;
  for (std::size_t c = 0; c < m.cols(); ++c) m(0, c) *= inv;
  return m;
}

RationalMatrix scaled(const RationalMatrix& m, const Rational& s) { return m * s; }

}  // namespace

RationalMatrix form_matrix(GroupKind kind, int size) {
  const auto n = static_cast<std::size_t>(size);
  RationalMatrix f(n, n);
  if (kind == GroupKind::SP) {
    if (size % 2 != 0) throw std::invalid_argument("symplectic form needs even size");
    for (std::size_t r = 0; r < n; ++r) f(r, n - 1 - r) = Rational(r < n / 2 ? -1 : 1);
  } else {
    for (std::size_t r = 0; r < n; ++r) f(r, n - 1 - r) = Rational(1);
  }
  return f;
}

bool in_group(const FlagShape& shape, const RationalMatrix& m) {
  const auto n = static_cast<std::size_t>(shape.n());
  if (m.rows() != n || m.cols() != n) return false;
  switch (shape.kind()) {
    case GroupKind::GL: return !det(m).is_zero();
    case GroupKind::SL: return det(m) == Rational(1);
    case GroupKind::O:
    case GroupKind::SP: {
      const auto f = form_matrix(shape.kind(), shape.n());
      return m.transpose() * f * m == f;
    }
  }
  return false;
}

GroupPoint GroupPoint::make(FlagShape shape, RationalMatrix m) {
  if (!in_group(shape, m)) {
    throw std::invalid_argument("matrix does not satisfy the defining equations of " + to_string(shape.kind()) +
                                "(" + std::to_string(shape.n()) + ")");
  }
  return GroupPoint(std::move(shape), std::move(m));
}

RationalMatrix coupling_block(const FlagShape& shape, const RationalMatrix& v) {
  const auto j0 = form_matrix(shape.kind(), shape.center_size());
  const auto i0 = form_matrix(GroupKind::O, shape.half_size());
  return -(j0 * v.transpose() * i0);
}

RationalMatrix assemble_parabolic(const FlagShape& shape, const ParabolicParts& parts) {
  const auto big = static_cast<std::size_t>(shape.n());
  const auto half = static_cast<std::size_t>(shape.half_size());
  const auto mid = static_cast<std::size_t>(shape.center_size());
  const RationalMatrix& a = parts.levi_top;
  const RationalMatrix a_tail = inverse(a.anti_transpose());
  RationalMatrix g(big, big);
  g.place(0, 0, a);
  g.place(half + mid, half + mid, a_tail);
  if (shape.has_center()) {
    const RationalMatrix w = coupling_block(shape, parts.v);
    const RationalMatrix c = parts.b + scaled(parts.v * w, Rational(mpz_class(1), mpz_class(2)));
    g.place(0, half, a * parts.v);
    g.place(0, half + mid, a * c);
    g.place(half, half, parts.center);
    g.place(half, half + mid, parts.center * w);
  } else {
    g.place(0, half, a * parts.b);
  }
  return g;
}

RationalMatrix assemble_slice_circ(const FlagShape& shape, const ParabolicParts& parts, int sign) {
  const auto big = static_cast<std::size_t>(shape.n());
  const auto half = static_cast<std::size_t>(shape.half_size());
  const auto mid = static_cast<std::size_t>(shape.center_size());
  const RationalMatrix& a = parts.levi_top;
  const auto i0 = form_matrix(GroupKind::O, shape.half_size());
  const RationalMatrix i0a = i0 * a;
  RationalMatrix s(big, big);
  s.place(0, half + mid, scaled(i0 * inverse(a.anti_transpose()), Rational(sign)));
  s.place(half + mid, 0, i0a);
  if (shape.has_center()) {
    const auto j0 = form_matrix(shape.kind(), shape.center_size());
    const RationalMatrix w = coupling_block(shape, parts.v);
    const RationalMatrix c = parts.b + scaled(parts.v * w, Rational(mpz_class(1), mpz_class(2)));
    s.place(half, half, j0 * parts.center);
    s.place(half, half + mid, j0 * parts.center * w);
    s.place(half + mid, half, i0a * parts.v);
    s.place(half + mid, half + mid, i0a * c);
  } else {
    s.place(half, half, i0a * parts.b);
  }
  return s;
}

RationalMatrix sample_unitriangular(int n, CounterRng& rng, int bound) {
  check_bound(bound);
  auto g = RationalMatrix::identity(static_cast<std::size_t>(n));
  for (std::size_t r = 0; r < g.rows(); ++r)
    for (std::size_t c = r + 1; c < g.cols(); ++c) g(r, c) = draw(rng, bound);
  return g;
}

RationalMatrix sample_invertible(int n, CounterRng& rng, int bound) {
  check_bound(bound);
  const auto size = static_cast<std::size_t>(n);
  for (int attempt = 0; attempt < kResampleBudget; ++attempt) {
    RationalMatrix m = random_matrix(size, size, rng, bound);
    if (!det(m).is_zero()) return m;
  }
  throw SamplingError("no invertible matrix within the resample budget");
}

GroupPoint sample_unipotent_radical(const FlagShape& shape, CounterRng& rng, int bound) {
  check_bound(bound);
  const auto n = static_cast<std::size_t>(shape.n());
  if (!shape.orthosymplectic()) {
    auto g = RationalMatrix::identity(n);
    for (int i = 1; i <= shape.n(); ++i)
      for (int j = 1; j <= shape.n(); ++j)
        if (in_radical_support(shape, {i, j})) g.at({i, j}) = draw(rng, bound);
    return GroupPoint::make(shape, std::move(g));
  }

  const auto half = static_cast<std::size_t>(shape.half_size());
  const auto mid = static_cast<std::size_t>(shape.center_size());
  const FlagShape top = top_shape(shape);
  ParabolicParts parts;
  parts.levi_top = RationalMatrix::identity(half);
  for (int i = 1; i <= top.n(); ++i)
    for (int j = 1; j <= top.n(); ++j)
      if (in_radical_support(top, {i, j})) parts.levi_top.at({i, j}) = draw(rng, bound);
  parts.center = RationalMatrix::identity(mid);
  parts.v = random_matrix(half, mid, rng, bound);
  parts.b = random_constrained_b(shape.kind(), half, rng, bound);
  RationalMatrix g = assemble_parabolic(shape, parts);
  if (!in_group(shape, g)) throw InternalConsistencyError("assembled radical element violates the form equation");
  for (int i = 1; i <= shape.n(); ++i)
    for (int j = 1; j <= shape.n(); ++j) {
      const Rational expected_diag = i == j ? Rational(1) : Rational(0);
      if (!in_radical_support(shape, {i, j}) && g.at({i, j}) != expected_diag)
        throw InternalConsistencyError("assembled radical element leaves the radical support");
    }
  return GroupPoint::make(shape, std::move(g));
}

GroupPoint sample_unipotent_radical(const FlagShape& shape, Seed seed, int bound) {
  CounterRng rng(seed);
  return sample_unipotent_radical(shape, rng, bound);
}

RationalMatrix orthogonal_swap(int size) {
  const auto n = static_cast<std::size_t>(size);
  auto p = RationalMatrix::identity(n);
  if (n < 2) return p;
  p(0, 0) = Rational(0);
  p(n - 1, n - 1) = Rational(0);
  p(0, n - 1) = Rational(1);
  p(n - 1, 0) = Rational(1);
  return p;
}

RationalMatrix sample_form_group(GroupKind kind, int size, CounterRng& rng, int bound) {
  check_bound(bound);
  if (size == 0) return RationalMatrix(0, 0);
  const auto form = form_matrix(kind, size);
  const auto basis = form_lie_basis(form, [](IndexPair) { return true; });
  const auto e = RationalMatrix::identity(static_cast<std::size_t>(size));
  for (int attempt = 0; attempt < kResampleBudget; ++attempt) {
    const RationalMatrix a = random_combination(basis, static_cast<std::size_t>(size), rng, bound);
    if (det(e + a).is_zero()) continue;
    return cayley(a);
  }
  throw SamplingError("Cayley transform stayed singular within the resample budget");
}

GroupPoint sample_group_point(const FlagShape& shape, CounterRng& rng, int bound, bool second_component) {
  check_bound(bound);
  switch (shape.kind()) {
    case GroupKind::GL: return GroupPoint::make(shape, sample_invertible(shape.n(), rng, bound));
    case GroupKind::SL:
      return GroupPoint::make(shape, scale_first_row_to_unit_det(sample_invertible(shape.n(), rng, bound)));
    case GroupKind::O:
    case GroupKind::SP: {
      RationalMatrix g = sample_form_group(shape.kind(), shape.n(), rng, bound);
      if (second_component && shape.kind() == GroupKind::O) g = g * orthogonal_swap(shape.n());
      return GroupPoint::make(shape, std::move(g));
    }
  }
  throw std::logic_error("unreachable group kind");
}

GroupPoint sample_group_point(const FlagShape& shape, Seed seed, int bound, bool second_component) {
  CounterRng rng(seed);
  return sample_group_point(shape, rng, bound, second_component);
}

int slice_component_det(const FlagShape& shape) {
  if (shape.kind() != GroupKind::O || shape.n() % 2 != 0) return 1;
  return det(sample_slice(shape, Seed{0, 0}, 2, SliceVariant::SCirc).point.matrix()).sign();
}

GroupPoint sample_generic_point(const FlagShape& shape, CounterRng& rng, int bound) {
  return sample_group_point(shape, rng, bound, slice_component_det(shape) < 0);
}

std::vector<RationalMatrix> lie_algebra_basis(const FlagShape& shape, LieScope scope) {
  const int n = shape.n();
  const auto size = static_cast<std::size_t>(n);
  const auto allowed = [&](IndexPair p) { return scope == LieScope::Full || in_radical_support(shape, p); };
  if (shape.orthosymplectic()) return form_lie_basis(form_matrix(shape.kind(), n), allowed);

  std::vector<RationalMatrix> basis;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      if (!allowed({i, j})) continue;
      if (shape.kind() == GroupKind::SL && scope == LieScope::Full && i == j) continue;
      RationalMatrix e(size, size);
      e.at({i, j}) = Rational(1);
      basis.push_back(std::move(e));
    }
  if (shape.kind() == GroupKind::SL && scope == LieScope::Full) {
    for (int i = 1; i < n; ++i) {
      RationalMatrix e(size, size);
      e.at({i, i}) = Rational(1);
      e.at({n, n}) = Rational(-1);
      basis.push_back(std::move(e));
    }
  }
  return basis;
}

SlicePoint sample_slice(const FlagShape& shape, CounterRng& rng, int bound, SliceVariant variant) {
  check_bound(bound);
  const int n = shape.n();
  const auto size = static_cast<std::size_t>(n);
  if (variant != SliceVariant::SCirc) {
    if (shape.orthosymplectic()) throw std::invalid_argument("slice variants S and S0 apply to GL/SL shapes");
    for (int attempt = 0; attempt < kResampleBudget; ++attempt) {
      RationalMatrix s(size, size);
      for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
          const IndexPair p{i, j};
          if (!in_gl_pattern(shape, p)) continue;
          if (variant == SliceVariant::S) {
            s.at(p) = draw(rng, bound);
          } else if (i + j == n + 1) {
            s.at(p) = draw_nonzero(rng, bound);
          } else if (on_or_above_antidiagonal(n, p)) {
            s.at(p) = draw(rng, bound);
          }
        }
      if (det(s).is_zero()) continue;
      if (shape.kind() == GroupKind::SL) s = scale_first_row_to_unit_det(std::move(s));
      return {GroupPoint::make(shape, std::move(s)), 0};
    }
    throw SamplingError("no invertible slice point within the resample budget");
  }

  if (!shape.orthosymplectic()) throw std::invalid_argument("slice variant S_circ applies to O/SP shapes");
  const auto half = static_cast<std::size_t>(shape.half_size());
  const auto mid = static_cast<std::size_t>(shape.center_size());
  const FlagShape top = top_shape(shape);
  ParabolicParts parts;
  bool have_a = false;
  for (int attempt = 0; attempt < kResampleBudget && !have_a; ++attempt) {
    parts.levi_top = RationalMatrix(half, half);
    for (int i = 1; i <= top.n(); ++i)
      for (int j = 1; j <= top.n(); ++j)
        if (top.block_of(i) <= top.block_of(j)) parts.levi_top.at({i, j}) = draw(rng, bound);
    have_a = !det(parts.levi_top).is_zero();
  }
  if (!have_a) throw SamplingError("no invertible Levi block within the resample budget");
  parts.center = sample_form_group(shape.kind(), shape.center_size(), rng, bound);
  parts.v = random_matrix(half, mid, rng, bound);
  parts.b = random_constrained_b(shape.kind(), half, rng, bound);
  for (int sign : {1, -1}) {
    RationalMatrix s = assemble_slice_circ(shape, parts, sign);
    if (in_group(shape, s)) return {GroupPoint::make(shape, std::move(s)), sign};
  }
  throw InternalConsistencyError("slice block matrix violates the form equation for both signs");
}

SlicePoint sample_slice(const FlagShape& shape, Seed seed, int bound, SliceVariant variant) {
  CounterRng rng(seed);
  return sample_slice(shape, rng, bound, variant);
}

RationalMatrix sample_bruhat_product(const FlagShape& shape, CounterRng& rng, int bound) {
  check_bound(bound);
  const int n = shape.n();
  const auto size = static_cast<std::size_t>(n);
  auto levi_unipotent = RationalMatrix::identity(size);
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      if (shape.block_of(i) == shape.block_of(j)) levi_unipotent.at({i, j}) = draw(rng, bound);
  const auto w0 = form_matrix(GroupKind::O, n);
  RationalMatrix b(size, size);
  for (std::size_t r = 0; r < size; ++r) {
    b(r, r) = draw_nonzero(rng, bound);
    for (std::size_t c = r + 1; c < size; ++c) b(r, c) = draw(rng, bound);
  }
  return levi_unipotent * w0 * b;
}

}  // namespace parinv
