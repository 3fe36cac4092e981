#include "parinv/generators.hpp"

#include <algorithm>
#include <numeric>

namespace parinv {

namespace {

std::vector<int> range_inclusive(int lo, int hi) {
  std::vector<int> out;
  for (int v = lo; v <= hi; ++v) out.push_back(v);
  return out;
}

bool contains(const std::vector<int>& v, int x) { return std::find(v.begin(), v.end(), x) != v.end(); }

void check_list(const std::vector<int>& list, int n) {
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  for (int v : list) {
    if (v < 1 || v > n) throw std::invalid_argument("descriptor index " + std::to_string(v) + " outside [1,n]");
    if (seen[static_cast<std::size_t>(v)]) throw std::invalid_argument("duplicate descriptor index " + std::to_string(v));
    seen[static_cast<std::size_t>(v)] = true;
  }
}

void check_minor(const MinorRecipe& m, int n) {
  if (m.rows.size() != m.cols.size()) throw std::invalid_argument("minor recipe needs |rows| = |cols|");
  check_list(m.rows, n);
  check_list(m.cols, n);
}

std::vector<int>* leading_rows(Recipe& r) {
  if (auto* m = std::get_if<MinorRecipe>(&r)) return &m->rows;
  if (auto* s = std::get_if<StackedRecipe>(&r)) return s->x_rows.empty() ? &s->adj_rows : &s->x_rows;
  return &std::get<RatioRecipe>(r).numerator.rows;
}

std::vector<int>* columns(Recipe& r) {
  if (auto* m = std::get_if<MinorRecipe>(&r)) return &m->cols;
  if (auto* s = std::get_if<StackedRecipe>(&r)) return &s->cols;
  return &std::get<RatioRecipe>(r).numerator.cols;
}

}  // namespace

std::string GeneratorDescriptor::label() const {
  const std::string where = pair ? pair->str() : "";
  switch (role) {
    case Role::J: return "J" + where;
    case Role::M0: return "M0";
    case Role::M: return "M" + where;
    case Role::P: return "P" + where;
  }
  return where;
}

void validate(const GeneratorDescriptor& desc, int n) {
  if (const auto* m = std::get_if<MinorRecipe>(&desc.recipe)) {
    check_minor(*m, n);
  } else if (const auto* s = std::get_if<StackedRecipe>(&desc.recipe)) {
    if (s->x_rows.size() + s->adj_rows.size() != s->cols.size())
      throw std::invalid_argument("stacked recipe needs |x_rows| + |adj_rows| = |cols|");
    check_list(s->x_rows, n);
    check_list(s->adj_rows, n);
    check_list(s->cols, n);
  } else {
    const auto& r = std::get<RatioRecipe>(desc.recipe);
    check_minor(r.numerator, n);
    check_minor(r.denominator, n);
  }
}

GeneratorDescriptor gl_descriptor(int n, IndexPair p) {
  const int i = p.i, j = p.j;
  const int i_mirror = n + 1 - i;
  const int j_mirror = n + 1 - j;
  GeneratorDescriptor d;
  d.pair = p;
  if (i + j <= n + 1) {
    // Row i first, then the trailing segment [j'+1, n]; columns [1, j].
    MinorRecipe m;
    m.rows.push_back(i);
    for (int r = j_mirror + 1; r <= n; ++r) m.rows.push_back(r);
    m.cols = range_inclusive(1, j);
    d.recipe = std::move(m);
  } else {
    // Last i' rows of X over the last j - i' rows of X*; columns [1, j].
    StackedRecipe s;
    s.x_rows = range_inclusive(n - i_mirror + 1, n);
    s.adj_rows = range_inclusive(n - (j - i_mirror) + 1, n);
    s.cols = range_inclusive(1, j);
    d.recipe = std::move(s);
  }
  return d;
}

std::vector<GeneratorDescriptor> build_generators(const FlagShape& shape) {
  if (shape.orthosymplectic()) throw ShapeError("build_generators expects a GL or SL shape");
  std::vector<GeneratorDescriptor> out;
  for (const auto& p : index_set(shape).all) out.push_back(gl_descriptor(shape.n(), p));
  return out;
}

Rational eval_generator(const GeneratorDescriptor& desc, const RationalMatrix& point) {
  return PointEvaluator<Rational>(point)(desc);
}

std::vector<Rational> eval_all(const FlagShape& shape, const RationalMatrix& point) {
  if (point.rows() != static_cast<std::size_t>(shape.n()) || !point.square())
    throw DimensionError("point size does not match the shape");
  return eval_descriptors(build_generators(shape), point);
}

RationalMatrix nonvanishing_witness(int n, IndexPair p) {
  const auto size = static_cast<std::size_t>(n);
  RationalMatrix a(size, size);
  for (int s = 1; s <= n; ++s) a.at({s, n + 1 - s}) = Rational(1);
  for (int k = 0; k <= n - p.i; ++k) {
    const IndexPair q{p.i + k, p.j - k};
    if (q.j >= 1) a.at(q) = Rational(1);
  }
  return a;
}

Rational slice_monomial(const RationalMatrix& s0_point, IndexPair p) {
  const int n = static_cast<int>(s0_point.rows());
  Rational value = s0_point.at(p);
  for (int t = 1; t <= p.j - 1; ++t) value *= s0_point.at({n + 1 - t, t});
  // Expanding along the first row puts s_ij at column j; the remaining block is a
  // reversal of size j-1.
  const long exponent = (p.j - 1) + static_cast<long>(p.j - 1) * (p.j - 2) / 2;
  return exponent % 2 == 0 ? value : -value;
}

std::string to_string(Mutation m) {
  switch (m) {
    case Mutation::ShiftLeadingRow: return "shift-leading-row";
    case Mutation::ShiftLastColumn: return "shift-last-column";
    case Mutation::TrailingColumns: return "trailing-columns";
  }
  return "?";
}

std::optional<GeneratorDescriptor> mutate(const GeneratorDescriptor& desc, int n, Mutation m) {
  GeneratorDescriptor out = desc;
  switch (m) {
    case Mutation::ShiftLeadingRow: {
      auto& rows = *leading_rows(out.recipe);
      if (rows.empty()) return std::nullopt;
      const int r = rows.front();
      int replacement = 0;
      for (int candidate : {r + 1, r - 1})
        if (candidate >= 1 && candidate <= n && !contains(rows, candidate)) {
          replacement = candidate;
          break;
        }
      if (replacement == 0) return std::nullopt;
      rows.front() = replacement;
      break;
    }
    case Mutation::ShiftLastColumn: {
      auto& cols = *columns(out.recipe);
      if (cols.empty()) return std::nullopt;
      const int c = cols.back() + 1;
      if (c > n || contains(cols, c)) return std::nullopt;
      cols.back() = c;
      break;
    }
    case Mutation::TrailingColumns: {
      auto& cols = *columns(out.recipe);
      const auto trailing = range_inclusive(n - static_cast<int>(cols.size()) + 1, n);
      if (cols == trailing) return std::nullopt;
      cols = trailing;
      break;
    }
  }
  return out;
}

}  // namespace parinv
