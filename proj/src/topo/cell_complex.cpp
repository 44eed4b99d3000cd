#include <limits>
#include <stdexcept>

#include "symvar/grid.hpp"

namespace symvar {

namespace {

std::uint64_t checked_cell_count(unsigned n, unsigned res) {
  std::uint64_t cells = 1;
  for (unsigned i = 0; i < n; ++i) {
    if (cells > std::numeric_limits<std::uint32_t>::max() / res)
      throw std::length_error("grid has too many cells");
    cells *= res;
  }
  return cells;
}

constexpr std::uint32_t kUnmarked = std::numeric_limits<std::uint32_t>::max();

}  // namespace

CellComplex::CellComplex(Box box, unsigned res, std::vector<std::int8_t> labels)
    : box_(std::move(box)), res_(res), labels_(std::move(labels)) {
  if (res_ < 1) throw std::invalid_argument("resolution must be positive");
  const unsigned n = dim();
  if (labels_.size() != checked_cell_count(n, res_)) throw std::invalid_argument("label count differs from res^n");

  ids_.assign(labels_.size(), kUnmarked);
  std::uint32_t next = 0;
  for (std::uint64_t c = 0; c < labels_.size(); ++c)
    if (labels_[c] != 0) ids_[c] = next++;
  marked_ = next;
  sets_ = DisjointSets(next);

  std::vector<std::uint64_t> stride(n, 1);
  for (unsigned a = 1; a < n; ++a) stride[a] = stride[a - 1] * res_;
  std::vector<unsigned> coord(n, 0);
  for (std::uint64_t c = 0; c < labels_.size(); ++c) {
    if (labels_[c] != 0) {
      for (unsigned a = 0; a < n; ++a) {
        if (coord[a] + 1 >= res_) continue;
        const std::uint64_t nb = c + stride[a];
        if (labels_[nb] == labels_[c]) sets_.unite(ids_[c], ids_[nb]);
      }
    }
    for (unsigned a = 0; a < n; ++a) {
      if (++coord[a] < res_) break;
      coord[a] = 0;
    }
  }
}

std::uint32_t CellComplex::component(std::uint64_t cell) const {
  if (labels_.at(cell) == 0) throw std::invalid_argument("cell is not marked");
  return sets_.root(ids_[cell]);
}

std::vector<unsigned> CellComplex::coords(std::uint64_t cell) const {
  std::vector<unsigned> c(dim());
  for (auto& x : c) {
    x = static_cast<unsigned>(cell % res_);
    cell /= res_;
  }
  return c;
}

std::uint64_t CellComplex::index(std::span<const unsigned> coords) const {
  if (coords.size() != dim()) throw std::invalid_argument("coordinate count differs from dimension");
  std::uint64_t idx = 0;
  for (std::size_t a = coords.size(); a-- > 0;) {
    if (coords[a] >= res_) throw std::out_of_range("cell coordinate out of range");
    idx = idx * res_ + coords[a];
  }
  return idx;
}

Interval CellComplex::extent(std::uint64_t cell, unsigned axis) const {
  const auto c = coords(cell);
  const Interval& full = box_.axis(axis);
  const Rational step = full.width() / res_;
  return {full.lo + step * c[axis], full.lo + step * (c[axis] + 1)};
}

Box CellComplex::cell_box(std::uint64_t cell) const {
  std::vector<Interval> axes;
  for (unsigned a = 0; a < dim(); ++a) axes.push_back(extent(cell, a));
  return Box(std::move(axes));
}

}  // namespace symvar
