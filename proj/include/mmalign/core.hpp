#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace mmalign {

// One alignment column: N non-negative entries, not all zero.
using StepVector = std::vector<unsigned>;

/// Target sequence lengths (l_1, ..., l_N).
class LengthTuple {
 public:
  LengthTuple() = default;
  explicit LengthTuple(std::vector<unsigned> lengths) : lengths_(std::move(lengths)) {}
  LengthTuple(std::initializer_list<unsigned> lengths) : lengths_(lengths) {}

  static LengthTuple zero(std::size_t dimension) { return LengthTuple(std::vector<unsigned>(dimension, 0)); }
  static LengthTuple diagonal(std::size_t dimension, unsigned length) {
    return LengthTuple(std::vector<unsigned>(dimension, length));
  }

  std::size_t dimension() const { return lengths_.size(); }
  unsigned operator[](std::size_t i) const { return lengths_[i]; }
  const std::vector<unsigned>& values() const { return lengths_; }

  unsigned total() const;
  unsigned max() const;
  bool is_zero() const;
  bool is_diagonal() const;
  // componentwise >=
  bool dominates(const LengthTuple& other) const;
  bool fits(const StepVector& step) const;

  std::string to_string() const;

  friend auto operator<=>(const LengthTuple&, const LengthTuple&) = default;

 private:
  std::vector<unsigned> lengths_;
};

/// A set of allowed entries for one coordinate of a product step set.
class BaseSet {
 public:
  enum class Kind { finite, at_least, odd };

  static BaseSet finite(std::vector<unsigned> values);
  static BaseSet nat() { return at_least(0); }
  static BaseSet natpos() { return at_least(1); }
  static BaseSet at_least(unsigned threshold);
  // positive odd integers
  static BaseSet odd();

  Kind kind() const { return kind_; }
  bool is_finite() const { return kind_ == Kind::finite; }
  bool contains(unsigned v) const;
  bool contains_zero() const { return contains(0); }
  // smallest member, nullopt for the empty finite set
  std::optional<unsigned> min_element() const;
  std::vector<unsigned> members_upto(unsigned bound) const;

  const std::vector<unsigned>& values() const { return values_; }
  unsigned threshold() const { return threshold_; }

  std::string to_string() const;

  friend bool operator==(const BaseSet&, const BaseSet&) = default;

 private:
  BaseSet(Kind kind, std::vector<unsigned> values, unsigned threshold)
      : kind_(kind), values_(std::move(values)), threshold_(threshold) {}

  Kind kind_;
  std::vector<unsigned> values_;
  unsigned threshold_;
};

/// The set S of allowable alignment columns.
///
/// Either an explicit, sorted and deduplicated list of steps, or one of the
/// intensional families. Families may be infinite; they are only ever
/// enumerated after clipping to a length box (see materialize). Every
/// constructor validates: the zero vector is rejected and all steps share
/// one dimension N >= 1.
class StepSet {
 public:
  enum class Family { explicit_list, unit_cube, box, all_positive, half_open, product };

  static StepSet explicit_steps(std::size_t dimension, std::vector<StepVector> steps);
  // dimension taken from the first step; throws DomainError on an empty list
  static StepSet explicit_steps(std::vector<StepVector> steps);
  // {0,1}^N minus zero
  static StepSet unit_cube(std::size_t dimension);
  // {lo..hi}^N, 1 <= lo <= hi
  static StepSet box(unsigned lo, unsigned hi, std::size_t dimension);
  // N^N minus zero
  static StepSet all_positive(std::size_t dimension);
  // {(x, y) | x >= 1, y >= 0}
  static StepSet half_open();
  static StepSet product(std::vector<BaseSet> bases);

  Family family() const { return family_; }
  std::size_t dimension() const { return dimension_; }
  bool is_finite() const;
  bool contains(const StepVector& step) const;

  // Members s with s <= box componentwise, in lexicographic order.
  std::vector<StepVector> materialize(const LengthTuple& box) const;
  // All members, lexicographic. Throws InfiniteStepSet for infinite families.
  std::vector<StepVector> members() const;
  std::size_t size() const { return members().size(); }

  // Explicit form when finite, otherwise the family itself.
  StepSet canonical() const;

  const std::vector<StepVector>& explicit_list() const { return steps_; }
  unsigned box_lo() const { return lo_; }
  unsigned box_hi() const { return hi_; }
  const std::vector<BaseSet>& bases() const { return bases_; }

  // Step-set expression in the DSL accepted by parse_step_set.
  std::string to_string() const;

  friend bool operator==(const StepSet&, const StepSet&) = default;

 private:
  StepSet(Family family, std::size_t dimension) : family_(family), dimension_(dimension) {}

  Family family_;
  std::size_t dimension_;
  std::vector<StepVector> steps_;
  unsigned lo_ = 0;
  unsigned hi_ = 0;
  std::vector<BaseSet> bases_;
};

/// An N x k matrix of non-negative integers, stored row-major.
class AlignmentMatrix {
 public:
  AlignmentMatrix(std::size_t rows, std::size_t cols, std::vector<unsigned> entries);
  static AlignmentMatrix from_rows(const std::vector<std::vector<unsigned>>& rows);
  static AlignmentMatrix from_columns(std::size_t rows, const std::vector<StepVector>& columns);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  unsigned at(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
  StepVector column(std::size_t c) const;
  std::vector<StepVector> columns() const;
  unsigned row_sum(std::size_t r) const;

  // [[a,b,...],[c,d,...],...], one bracketed list per row
  std::string to_string() const;

  friend auto operator<=>(const AlignmentMatrix&, const AlignmentMatrix&) = default;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<unsigned> entries_;
};

// Canonical form of s: explicit when finite. Validation itself happens when
// a StepSet is constructed.
StepSet validate_step_set(const StepSet& s);

// Row sums equal l and every column lies in s. The empty matrix is an
// alignment of the zero tuple only.
bool is_alignment(const AlignmentMatrix& a, const StepSet& s, const LengthTuple& l);

// New coordinate i takes old coordinate perm[i].
StepVector permute_coordinates(const StepVector& v, std::span<const std::size_t> perm);
LengthTuple permute_coordinates(const LengthTuple& l, std::span<const std::size_t> perm);
StepSet permute_coordinates(const StepSet& s, std::span<const std::size_t> perm);

std::string to_string(const StepVector& step);

}  // namespace mmalign
