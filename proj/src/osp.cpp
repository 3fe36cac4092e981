#include "parinv/osp.hpp"

#include <numeric>

namespace parinv {

OspGeneratorSystem build_osp_system(const FlagShape& shape) {
  if (!shape.orthosymplectic()) throw ShapeError("build_osp_system expects an O or SP shape");
  const int n = shape.n();
  const int half = shape.half_size();
  const auto indices = index_set(shape);

  OspGeneratorSystem sys{shape, {}, {}, {}, {}};
  for (const auto& p : indices.all) sys.j_circ.push_back(gl_descriptor(n, p));

  MinorRecipe base;
  for (int r = n - half + 1; r <= n; ++r) base.rows.push_back(r);
  for (int c = 1; c <= half; ++c) base.cols.push_back(c);
  sys.m0.recipe = base;
  sys.m0.role = Role::M0;

  for (const auto& p : indices.gamma0) {
    // i ∈ I₀ precedes every trailing row and j ∈ I₀ follows every leading column.
    MinorRecipe m;
    m.rows.push_back(p.i);
    m.rows.insert(m.rows.end(), base.rows.begin(), base.rows.end());
    m.cols = base.cols;
    m.cols.push_back(p.j);
    sys.m_minors.push_back({p, m, Role::M});
    sys.p_ratios.push_back({p, RatioRecipe{m, base}, Role::P});
  }
  return sys;
}

OspValues eval_osp(const OspGeneratorSystem& system, const GroupPoint& point) {
  if (!(point.shape() == system.shape)) throw std::invalid_argument("point belongs to a different shape");
  return eval_osp(system, point.matrix());
}

OspValues eval_osp(const OspGeneratorSystem& system, const RationalMatrix& point) {
  if (point.rows() != static_cast<std::size_t>(system.shape.n()) || !point.square())
    throw DimensionError("point size does not match the shape");
  PointEvaluator<Rational> evaluator(point);
  OspValues out;
  for (const auto& d : system.j_circ) out.j_values.push_back(evaluator(d));
  out.m0 = evaluator(system.m0);
  for (const auto& d : system.m_minors) out.m_values.push_back(evaluator(d));
  if (!out.m0.is_zero()) {
    std::vector<Rational> p;
    for (const auto& m : out.m_values) p.push_back(m / out.m0);
    out.p_values = std::move(p);
  }
  return out;
}

std::vector<GeneratorDescriptor> polynomial_invariants(const OspGeneratorSystem& system) {
  std::vector<GeneratorDescriptor> out = system.j_circ;
  out.push_back(system.m0);
  out.insert(out.end(), system.m_minors.begin(), system.m_minors.end());
  return out;
}

}  // namespace parinv
