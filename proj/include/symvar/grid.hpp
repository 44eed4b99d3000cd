#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "symvar/box.hpp"
#include "symvar/multi_affine.hpp"
#include "symvar/report.hpp"
#include "symvar/sparse_poly.hpp"
#include "symvar/union_find.hpp"

namespace symvar {

/// Cell budget from SYMVAR_CELL_BUDGET, else 2^24.
std::uint64_t default_cell_budget();

struct GridOptions {
  unsigned threads = 1;
  std::uint64_t cell_budget = default_cell_budget();
};

/// Uniform grid of res^n closed cells over a box.  A cell carries a nonzero
/// label when marked; face-adjacent marked cells with the same label are joined.
class CellComplex {
 public:
  CellComplex(Box box, unsigned res, std::vector<std::int8_t> labels);

  const Box& box() const { return box_; }
  unsigned resolution() const { return res_; }
  unsigned dim() const { return static_cast<unsigned>(box_.dim()); }
  std::uint64_t cell_count() const { return labels_.size(); }
  std::uint64_t marked_count() const { return marked_; }
  std::uint32_t component_count() const { return sets_.set_count(); }

  bool marked(std::uint64_t cell) const { return labels_[cell] != 0; }
  std::int8_t label(std::uint64_t cell) const { return labels_[cell]; }
  /// Union-find root of a marked cell.
  std::uint32_t component(std::uint64_t cell) const;

  std::vector<unsigned> coords(std::uint64_t cell) const;
  std::uint64_t index(std::span<const unsigned> coords) const;
  /// Closed extent of a cell along one axis.
  Interval extent(std::uint64_t cell, unsigned axis) const;
  Box cell_box(std::uint64_t cell) const;

 private:
  Box box_;
  unsigned res_;
  std::vector<std::int8_t> labels_;
  std::vector<std::uint32_t> ids_;
  std::uint64_t marked_ = 0;
  DisjointSets sets_;
};

/// Cells whose exact vertex range brackets zero (min <= 0 <= max).
CellComplex zero_cells(const MultiAffinePoly& p, const Box& box, unsigned res, const GridOptions& opts = {});
/// Strictly sign-definite cells, labelled +1 / -1.
CellComplex sign_cells(const MultiAffinePoly& p, const Box& box, unsigned res, const GridOptions& opts = {});
/// Cells where every polynomial's vertex range brackets zero.
CellComplex system_cells(std::span<const MultiAffinePoly> ps, const Box& box, unsigned res,
                         const GridOptions& opts = {});
/// Cells where a rational interval enclosure of p contains zero.
CellComplex interval_cells(const SparsePoly& p, const Box& box, unsigned res, const GridOptions& opts = {});

/// Components of Z(P) inside the box.  Starts at res and doubles until two
/// consecutive counts agree or the cell budget is hit.  Throws
/// InvariantViolation if the count exceeds 2^(d-1).
ComponentReport grid_components(const MultiAffinePoly& p, const Box& box, unsigned res, const GridOptions& opts = {});

/// Same schedule with interval enclosures; never reports exact-empty.
ComponentReport grid_components_general(const SparsePoly& p, const Box& box, unsigned res,
                                        const GridOptions& opts = {});

/// Components of the complement of Z(P) inside the box, counted from below.
/// Throws InvariantViolation if the count exceeds 2^d.
ComponentReport complement_components(const MultiAffinePoly& p, const Box& box, unsigned res,
                                      const GridOptions& opts = {});

/// Clusters of cells that may hold a common zero; always upper-structure-only.
ComponentReport grid_components_system(std::span<const MultiAffinePoly> ps, const Box& box, unsigned res,
                                       const GridOptions& opts = {});

/// The C(n,k) points of {0,1}^n with k ones, each checked to be an exact common
/// zero of the example-3 family; throws std::logic_error if any other point of
/// {0,1}^n is a common zero or a listed point is not.
std::vector<std::vector<Rational>> boolean_slice_points(unsigned k, unsigned n);

}  // namespace symvar
