#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "mmalign/bigint.hpp"
#include "mmalign/box_index.hpp"
#include "mmalign/core.hpp"

namespace mmalign {

/// a_S(m) for every multi-index 0 <= m <= box.
///
/// Filled in lexicographic order from a(0) = 1 with
/// a(m) = sum over steps s <= m of a(m - s). Immutable once built.
class CountTable {
 public:
  static CountTable compute(const StepSet& s, const LengthTuple& box);

  const LengthTuple& box() const { return index_.box(); }
  const BoxIndex& index() const { return index_; }
  // steps of S that fit inside the box, lexicographic
  const std::vector<StepVector>& steps() const { return steps_; }

  const Count& at(const LengthTuple& m) const;
  const Count& at_flat(std::size_t flat) const { return values_[flat]; }

 private:
  BoxIndex index_;
  std::vector<StepVector> steps_;
  std::vector<Count> values_;
};

/// Thread-safe memo of count tables keyed by step set.
///
/// A table for box B answers every query l <= B, so a diagonal sweep that
/// asks for the largest point first computes a single table.
class TableCache {
 public:
  std::shared_ptr<const CountTable> get(const StepSet& s, const LengthTuple& l);
  void clear();
  std::size_t size() const;

 private:
  mutable std::mutex mutex_;
  std::map<std::string, std::vector<std::shared_ptr<const CountTable>>> tables_;
};

TableCache& default_table_cache();

// a_S(l).
Count count(const StepSet& s, const LengthTuple& l);

/// a_S(m; k) for every m <= box and 0 <= k <= max_parts.
class PartsTable {
 public:
  static PartsTable compute(const StepSet& s, const LengthTuple& box, unsigned max_parts);

  const LengthTuple& box() const { return index_.box(); }
  unsigned max_parts() const { return static_cast<unsigned>(layers_.size() - 1); }
  const Count& at(const LengthTuple& m, unsigned k) const;

 private:
  BoxIndex index_;
  std::vector<std::vector<Count>> layers_;
};

// a_S(l; k), alignments with exactly k columns.
Count count_with_parts(const StepSet& s, const LengthTuple& l, unsigned k);
// [a_S(l; 0), ..., a_S(l; l_1 + ... + l_N)]
std::vector<Count> parts_distribution(const StepSet& s, const LengthTuple& l);

inline constexpr unsigned long kDefaultEnumerationCap = 1'000'000;

// Every S-alignment of l exactly once, ordered lexicographically by column
// sequence. Throws EnumerationCapExceeded when count(s, l) > cap.
std::vector<AlignmentMatrix> enumerate(const StepSet& s, const LengthTuple& l,
                                       unsigned long cap = kDefaultEnumerationCap);

/// A member of B_S(k, l): multiplicities r_i of the steps of S inside the box.
struct MultiplicityVector {
  std::vector<StepVector> steps;
  std::vector<unsigned> multiplicities;

  unsigned parts() const;
  Count multinomial() const;
};

// All of B_S(k, l), by depth-first search over the steps with partial-sum
// pruning. Intended for small inputs; the set grows very quickly.
std::vector<MultiplicityVector> multiplicity_vectors(const StepSet& s, const LengthTuple& l, unsigned k);

/// Sum of multinomial coefficients over B_S(k, m), for every m <= box and k.
///
/// Steps are folded in one at a time. Multiplicity vectors that agree on the
/// steps seen so far are merged by their partial sum (cell, k), and choosing
/// r copies of the next step multiplies the weight by C(k + r, r), so the
/// multinomial k!/(r_1!...r_t!) is built as a product of binomials.
class MultinomialTable {
 public:
  static MultinomialTable compute(const StepSet& s, const LengthTuple& box);

  const LengthTuple& box() const { return index_.box(); }
  unsigned max_parts() const { return max_parts_; }
  const Count& at(const LengthTuple& m, unsigned k) const;
  Count total(const LengthTuple& m) const;

 private:
  BoxIndex index_;
  unsigned max_parts_ = 0;
  std::vector<Count> values_;  // cell-major, (max_parts_ + 1) per cell
};

// a_S(l) as the sum over k of the multinomial sums over B_S(k, l).
Count count_multinomial(const StepSet& s, const LengthTuple& l);

/// Exactly uniform sampling from the alignments of l.
///
/// Columns are drawn back to front: at residual m the last column is s with
/// probability a(m - s) / a(m).
class Sampler {
 public:
  Sampler(const StepSet& s, const LengthTuple& l, std::uint64_t seed);

  AlignmentMatrix next();

 private:
  std::shared_ptr<const CountTable> table_;
  LengthTuple lengths_;
  gmp_randclass rng_;
};

AlignmentMatrix sample_uniform(const StepSet& s, const LengthTuple& l, std::uint64_t seed);

// c_base(l; k): compositions of l into exactly k parts drawn from base.
Count compositions_with_parts(const BaseSet& base, unsigned l, unsigned k);

// Sum over k of prod_i c_{bases_i}(l_i; k). Throws UnboundedParts when every
// base contains 0.
Count count_independent(const std::vector<BaseSet>& bases, const LengthTuple& l);

// Matrix compositions of n with the given number of rows: non-negative
// integer matrices with no zero column whose entries sum to n.
Count matrix_compositions(std::size_t rows, unsigned n);

// P[X_1 + ... + X_k = l] for X_i i.i.d. uniform on a finite S.
Rational prob_sum(const StepSet& s, unsigned k, const LengthTuple& l);

}  // namespace mmalign
