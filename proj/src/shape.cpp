#include "parinv/shape.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

namespace parinv {

std::string to_string(GroupKind kind) {
  switch (kind) {
    case GroupKind::GL: return "gl";
    case GroupKind::SL: return "sl";
    case GroupKind::O: return "o";
    case GroupKind::SP: return "sp";
  }
  return "?";
}

GroupKind parse_group_kind(std::string_view text) {
  std::string s(text);
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
  if (s == "gl") return GroupKind::GL;
  if (s == "sl") return GroupKind::SL;
  if (s == "o") return GroupKind::O;
  if (s == "sp") return GroupKind::SP;
  throw ShapeError("unknown group kind \"" + std::string(text) + "\" (expected gl|sl|o|sp)");
}

FlagShape FlagShape::make(GroupKind kind, int n, std::vector<int> parts) {
  if (n < 1) throw ShapeError("matrix size must be positive");
  if (parts.empty()) throw ShapeError("composition is empty");
  for (int p : parts)
    if (p < 1) throw ShapeError("composition parts must be positive");
  if (std::accumulate(parts.begin(), parts.end(), 0) != n) throw ShapeError("composition does not sum to n");
  if (kind == GroupKind::O || kind == GroupKind::SP) {
    if (!std::equal(parts.begin(), parts.end(), parts.rbegin()))
      throw ShapeError("orthogonal/symplectic compositions must be palindromic");
  }
  if (kind == GroupKind::SP && n % 2 != 0) throw ShapeError("symplectic groups need even size");
  FlagShape s(kind, n, std::move(parts));
  s.starts_.resize(s.parts_.size());
  int start = 1;
  for (std::size_t k = 0; k < s.parts_.size(); ++k) {
    s.starts_[k] = start;
    start += s.parts_[k];
  }
  return s;
}

FlagShape make_shape(GroupKind kind, int n, std::vector<int> parts) {
  return FlagShape::make(kind, n, std::move(parts));
}

int FlagShape::block_of(int i) const {
  if (i < 1 || i > n_) throw std::out_of_range("index " + std::to_string(i) + " outside [1,n]");
  const auto it = std::upper_bound(starts_.begin(), starts_.end(), i);
  return static_cast<int>(it - starts_.begin());
}

int FlagShape::segment_begin(int k) const { return starts_.at(static_cast<std::size_t>(k - 1)); }
int FlagShape::segment_end(int k) const { return segment_begin(k) + parts_.at(static_cast<std::size_t>(k - 1)) - 1; }

std::vector<int> FlagShape::segment(int k) const {
  std::vector<int> out(static_cast<std::size_t>(parts_.at(static_cast<std::size_t>(k - 1))));
  std::iota(out.begin(), out.end(), segment_begin(k));
  return out;
}

int FlagShape::mirror(int i) const {
  if (i < 1 || i > n_) throw std::out_of_range("index " + std::to_string(i) + " outside [1,n]");
  return n_ + 1 - i;
}

int FlagShape::half_size() const {
  return std::accumulate(parts_.begin(), parts_.begin() + half_blocks(), 0);
}

int FlagShape::center_size() const { return has_center() ? parts_[static_cast<std::size_t>(half_blocks())] : 0; }

std::vector<int> FlagShape::center_segment() const {
  return has_center() ? segment(half_blocks() + 1) : std::vector<int>{};
}

FlagShape FlagShape::as_gl() const { return make(GroupKind::GL, n_, parts_); }

int mirror(const FlagShape& shape, int i) { return shape.mirror(i); }

bool precedes(IndexPair a, IndexPair b) { return a.j < b.j || (a.j == b.j && a.i > b.i); }

bool in_gl_pattern(const FlagShape& shape, IndexPair p) {
  return shape.block_of(p.i) >= shape.block_of(shape.mirror(p.j));
}

bool GeneratorIndexSet::contains(IndexPair p) const {
  return std::find(all.begin(), all.end(), p) != all.end();
}

GeneratorIndexSet index_set(const FlagShape& shape) {
  const int n = shape.n();
  GeneratorIndexSet set;
  const int first_row = shape.orthosymplectic() ? n - shape.half_size() + 1 : 1;
  for (int i = first_row; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      const IndexPair p{i, j};
      if (!in_gl_pattern(shape, p)) continue;
      if (shape.kind() == GroupKind::SL && p == IndexPair{1, n}) continue;
      if (shape.kind() == GroupKind::O && !(i > j)) continue;
      if (shape.kind() == GroupKind::SP && !(i >= j)) continue;
      set.all.push_back(p);
    }
  }
  std::sort(set.all.begin(), set.all.end(), precedes);
  for (const auto& p : set.all) set.sigma0.push_back(on_or_above_antidiagonal(n, p));
  if (shape.orthosymplectic())
    for (int i : shape.center_segment())
      for (int j : shape.center_segment()) set.gamma0.push_back({i, j});
  return set;
}

std::size_t dim_group(const FlagShape& shape) {
  const auto n = static_cast<std::size_t>(shape.n());
  switch (shape.kind()) {
    case GroupKind::GL: return n * n;
    case GroupKind::SL: return n * n - 1;
    case GroupKind::O: return n * (n - 1) / 2;
    case GroupKind::SP: return n * (n + 1) / 2;
  }
  return 0;
}

std::size_t dim_g0(const FlagShape& shape) {
  const auto n0 = static_cast<std::size_t>(shape.center_size());
  switch (shape.kind()) {
    case GroupKind::O: return n0 * (n0 - (n0 > 0 ? 1 : 0)) / 2;
    case GroupKind::SP: return n0 * (n0 + 1) / 2;
    default: return 0;
  }
}

std::size_t dim_levi(const FlagShape& shape) {
  std::size_t sum = 0;
  if (!shape.orthosymplectic()) {
    for (int p : shape.parts()) sum += static_cast<std::size_t>(p * p);
    return shape.kind() == GroupKind::SL ? sum - 1 : sum;
  }
  for (int k = 0; k < shape.half_blocks(); ++k) sum += static_cast<std::size_t>(shape.parts()[k] * shape.parts()[k]);
  return sum + dim_g0(shape);
}

std::size_t dim_unipotent_radical(const FlagShape& shape) {
  if (!shape.orthosymplectic()) {
    std::size_t sum = 0;
    const auto& p = shape.parts();
    for (std::size_t k = 0; k < p.size(); ++k)
      for (std::size_t m = k + 1; m < p.size(); ++m) sum += static_cast<std::size_t>(p[k] * p[m]);
    return sum;
  }
  return (dim_group(shape) - dim_levi(shape)) / 2;
}

bool in_radical_support(const FlagShape& shape, IndexPair p) { return shape.block_of(p.i) < shape.block_of(p.j); }

}  // namespace parinv
