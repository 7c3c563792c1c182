#include "mmalign/core.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "mmalign/errors.hpp"

namespace mmalign {

namespace {

std::string join(const std::vector<unsigned>& values) {
  std::ostringstream out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out << ',';
    out << values[i];
  }
  return out.str();
}

// Cartesian product of per-coordinate candidate lists, last coordinate
// fastest (lexicographic), skipping the zero vector.
std::vector<StepVector> nonzero_product(const std::vector<std::vector<unsigned>>& axes) {
  std::vector<StepVector> out;
  if (axes.empty() || std::any_of(axes.begin(), axes.end(), [](const auto& a) { return a.empty(); })) {
    return out;
  }
  std::vector<std::size_t> pos(axes.size(), 0);
  StepVector step(axes.size());
  while (true) {
    bool zero = true;
    for (std::size_t i = 0; i < axes.size(); ++i) {
      step[i] = axes[i][pos[i]];
      zero = zero && step[i] == 0;
    }
    if (!zero) out.push_back(step);
    std::size_t i = axes.size();
    while (i > 0) {
      --i;
      if (++pos[i] < axes[i].size()) break;
      pos[i] = 0;
      if (i == 0) return out;
    }
  }
}

std::vector<unsigned> range_inclusive(unsigned lo, unsigned hi) {
  std::vector<unsigned> out;
  for (unsigned v = lo; v <= hi; ++v) out.push_back(v);
  return out;
}

void check_dimension(std::size_t n) {
  if (n == 0) throw DomainError("step set dimension must be at least 1");
}

void check_permutation(std::span<const std::size_t> perm, std::size_t n) {
  if (perm.size() != n) {
    throw DimensionMismatch("permutation of size " + std::to_string(perm.size()) + " applied to dimension " +
                            std::to_string(n));
  }
  std::vector<bool> seen(n, false);
  for (auto p : perm) {
    if (p >= n || seen[p]) throw DomainError("not a permutation of the coordinates");
    seen[p] = true;
  }
}

}  // namespace

// --- LengthTuple -----------------------------------------------------------

unsigned LengthTuple::total() const { return std::accumulate(lengths_.begin(), lengths_.end(), 0u); }

unsigned LengthTuple::max() const {
  return lengths_.empty() ? 0u : *std::max_element(lengths_.begin(), lengths_.end());
}

bool LengthTuple::is_zero() const {
  return std::all_of(lengths_.begin(), lengths_.end(), [](unsigned v) { return v == 0; });
}

bool LengthTuple::is_diagonal() const {
  return std::adjacent_find(lengths_.begin(), lengths_.end(), std::not_equal_to<>()) == lengths_.end();
}

bool LengthTuple::dominates(const LengthTuple& other) const {
  if (other.dimension() != dimension()) return false;
  for (std::size_t i = 0; i < lengths_.size(); ++i) {
    if (other.lengths_[i] > lengths_[i]) return false;
  }
  return true;
}

bool LengthTuple::fits(const StepVector& step) const {
  if (step.size() != dimension()) return false;
  for (std::size_t i = 0; i < lengths_.size(); ++i) {
    if (step[i] > lengths_[i]) return false;
  }
  return true;
}

std::string LengthTuple::to_string() const { return join(lengths_); }

// --- BaseSet ---------------------------------------------------------------

BaseSet BaseSet::finite(std::vector<unsigned> values) {
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  return BaseSet(Kind::finite, std::move(values), 0);
}

BaseSet BaseSet::at_least(unsigned threshold) { return BaseSet(Kind::at_least, {}, threshold); }

BaseSet BaseSet::odd() { return BaseSet(Kind::odd, {}, 1); }

bool BaseSet::contains(unsigned v) const {
  switch (kind_) {
    case Kind::finite:
      return std::binary_search(values_.begin(), values_.end(), v);
    case Kind::at_least:
      return v >= threshold_;
    case Kind::odd:
      return v % 2 == 1;
  }
  return false;
}

std::optional<unsigned> BaseSet::min_element() const {
  switch (kind_) {
    case Kind::finite:
      if (values_.empty()) return std::nullopt;
      return values_.front();
    case Kind::at_least:
      return threshold_;
    case Kind::odd:
      return 1u;
  }
  return std::nullopt;
}

std::vector<unsigned> BaseSet::members_upto(unsigned bound) const {
  std::vector<unsigned> out;
  if (kind_ == Kind::finite) {
    for (auto v : values_) {
      if (v <= bound) out.push_back(v);
    }
    return out;
  }
  for (unsigned v = 0; v <= bound; ++v) {
    if (contains(v)) out.push_back(v);
  }
  return out;
}

std::string BaseSet::to_string() const {
  switch (kind_) {
    case Kind::finite:
      return "[" + join(values_) + "]";
    case Kind::at_least:
      if (threshold_ == 0) return "nat";
      if (threshold_ == 1) return "natpos";
      return "ge(" + std::to_string(threshold_) + ")";
    case Kind::odd:
      return "odd";
  }
  return {};
}

// --- StepSet ---------------------------------------------------------------

StepSet StepSet::explicit_steps(std::size_t dimension, std::vector<StepVector> steps) {
  check_dimension(dimension);
  for (const auto& s : steps) {
    if (s.size() != dimension) {
      throw DimensionMismatch("step " + mmalign::to_string(s) + " has dimension " + std::to_string(s.size()) +
                              ", expected " + std::to_string(dimension));
    }
    if (std::all_of(s.begin(), s.end(), [](unsigned v) { return v == 0; })) {
      throw ZeroStepError("the zero vector " + mmalign::to_string(s) + " is not an admissible step");
    }
  }
  std::sort(steps.begin(), steps.end());
  steps.erase(std::unique(steps.begin(), steps.end()), steps.end());
  StepSet out(Family::explicit_list, dimension);
  out.steps_ = std::move(steps);
  return out;
}

StepSet StepSet::explicit_steps(std::vector<StepVector> steps) {
  if (steps.empty()) throw DomainError("cannot infer the dimension of an empty step list");
  const auto n = steps.front().size();
  return explicit_steps(n, std::move(steps));
}

StepSet StepSet::unit_cube(std::size_t dimension) {
  check_dimension(dimension);
  return StepSet(Family::unit_cube, dimension);
}

StepSet StepSet::box(unsigned lo, unsigned hi, std::size_t dimension) {
  check_dimension(dimension);
  if (lo == 0) throw ZeroStepError("box(0.." + std::to_string(hi) + ") contains the zero vector");
  if (lo > hi) throw DomainError("box bounds must satisfy lo <= hi");
  StepSet out(Family::box, dimension);
  out.lo_ = lo;
  out.hi_ = hi;
  return out;
}

StepSet StepSet::all_positive(std::size_t dimension) {
  check_dimension(dimension);
  return StepSet(Family::all_positive, dimension);
}

StepSet StepSet::half_open() { return StepSet(Family::half_open, 2); }

StepSet StepSet::product(std::vector<BaseSet> bases) {
  check_dimension(bases.size());
  if (std::all_of(bases.begin(), bases.end(), [](const BaseSet& b) { return b.contains_zero(); })) {
    throw ZeroStepError("every base set contains 0, so the product contains the zero vector");
  }
  StepSet out(Family::product, bases.size());
  out.bases_ = std::move(bases);
  return out;
}

bool StepSet::is_finite() const {
  switch (family_) {
    case Family::explicit_list:
    case Family::unit_cube:
    case Family::box:
      return true;
    case Family::all_positive:
    case Family::half_open:
      return false;
    case Family::product:
      // an empty factor makes the whole product empty
      return std::all_of(bases_.begin(), bases_.end(), [](const BaseSet& b) { return b.is_finite(); }) ||
             std::any_of(bases_.begin(), bases_.end(),
                         [](const BaseSet& b) { return b.is_finite() && b.values().empty(); });
  }
  return false;
}

bool StepSet::contains(const StepVector& step) const {
  if (step.size() != dimension_) return false;
  const bool zero = std::all_of(step.begin(), step.end(), [](unsigned v) { return v == 0; });
  if (zero) return false;
  switch (family_) {
    case Family::explicit_list:
      return std::binary_search(steps_.begin(), steps_.end(), step);
    case Family::unit_cube:
      return std::all_of(step.begin(), step.end(), [](unsigned v) { return v <= 1; });
    case Family::box:
      return std::all_of(step.begin(), step.end(), [&](unsigned v) { return lo_ <= v && v <= hi_; });
    case Family::all_positive:
      return true;
    case Family::half_open:
      return step[0] >= 1;
    case Family::product:
      for (std::size_t i = 0; i < dimension_; ++i) {
        if (!bases_[i].contains(step[i])) return false;
      }
      return true;
  }
  return false;
}

std::vector<StepVector> StepSet::materialize(const LengthTuple& box) const {
  if (box.dimension() != dimension_) {
    throw DimensionMismatch("length tuple of dimension " + std::to_string(box.dimension()) +
                            " used with a step set of dimension " + std::to_string(dimension_));
  }
  std::vector<std::vector<unsigned>> axes(dimension_);
  switch (family_) {
    case Family::explicit_list: {
      std::vector<StepVector> out;
      for (const auto& s : steps_) {
        if (box.fits(s)) out.push_back(s);
      }
      return out;
    }
    case Family::unit_cube:
      for (std::size_t i = 0; i < dimension_; ++i) axes[i] = range_inclusive(0, std::min(1u, box[i]));
      break;
    case Family::box:
      for (std::size_t i = 0; i < dimension_; ++i) {
        if (box[i] < lo_) return {};
        axes[i] = range_inclusive(lo_, std::min(hi_, box[i]));
      }
      break;
    case Family::all_positive:
      for (std::size_t i = 0; i < dimension_; ++i) axes[i] = range_inclusive(0, box[i]);
      break;
    case Family::half_open:
      if (box[0] < 1) return {};
      axes[0] = range_inclusive(1, box[0]);
      axes[1] = range_inclusive(0, box[1]);
      break;
    case Family::product:
      for (std::size_t i = 0; i < dimension_; ++i) axes[i] = bases_[i].members_upto(box[i]);
      break;
  }
  return nonzero_product(axes);
}

std::vector<StepVector> StepSet::members() const {
  if (!is_finite()) throw InfiniteStepSet("step set " + to_string() + " is infinite");
  std::vector<unsigned> bound(dimension_, 0);
  switch (family_) {
    case Family::explicit_list:
      return steps_;
    case Family::unit_cube:
      std::fill(bound.begin(), bound.end(), 1u);
      break;
    case Family::box:
      std::fill(bound.begin(), bound.end(), hi_);
      break;
    case Family::product:
      for (std::size_t i = 0; i < dimension_; ++i) {
        if (!bases_[i].is_finite()) return {};  // finite only because another factor is empty
        bound[i] = bases_[i].values().empty() ? 0u : bases_[i].values().back();
      }
      break;
    default:
      break;
  }
  return materialize(LengthTuple(bound));
}

StepSet StepSet::canonical() const {
  if (family_ == Family::explicit_list || !is_finite()) return *this;
  return explicit_steps(dimension_, members());
}

std::string StepSet::to_string() const {
  switch (family_) {
    case Family::explicit_list: {
      std::string out = "{";
      for (std::size_t i = 0; i < steps_.size(); ++i) {
        if (i) out += ',';
        out += mmalign::to_string(steps_[i]);
      }
      return out + "}";
    }
    case Family::unit_cube:
      return "unit(" + std::to_string(dimension_) + ")";
    case Family::box:
      return "box(" + std::to_string(lo_) + ".." + std::to_string(hi_) + "," + std::to_string(dimension_) + ")";
    case Family::all_positive:
      return "natpos(" + std::to_string(dimension_) + ")";
    case Family::half_open:
      return "halfopen2";
    case Family::product: {
      std::string out = "prod(";
      for (std::size_t i = 0; i < bases_.size(); ++i) {
        if (i) out += ',';
        out += bases_[i].to_string();
      }
      return out + ")";
    }
  }
  return {};
}

// --- AlignmentMatrix -------------------------------------------------------

AlignmentMatrix::AlignmentMatrix(std::size_t rows, std::size_t cols, std::vector<unsigned> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows_ * cols_) {
    throw DimensionMismatch("matrix entry count does not match its shape");
  }
}

AlignmentMatrix AlignmentMatrix::from_rows(const std::vector<std::vector<unsigned>>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  std::vector<unsigned> entries;
  entries.reserve(rows.size() * cols);
  for (const auto& r : rows) {
    if (r.size() != cols) throw DimensionMismatch("ragged matrix rows");
    entries.insert(entries.end(), r.begin(), r.end());
  }
  return AlignmentMatrix(rows.size(), cols, std::move(entries));
}

AlignmentMatrix AlignmentMatrix::from_columns(std::size_t rows, const std::vector<StepVector>& columns) {
  std::vector<unsigned> entries(rows * columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (columns[c].size() != rows) throw DimensionMismatch("column of wrong height");
    for (std::size_t r = 0; r < rows; ++r) entries[r * columns.size() + c] = columns[c][r];
  }
  return AlignmentMatrix(rows, columns.size(), std::move(entries));
}

StepVector AlignmentMatrix::column(std::size_t c) const {
  StepVector out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out[r] = at(r, c);
  return out;
}

std::vector<StepVector> AlignmentMatrix::columns() const {
  std::vector<StepVector> out;
  out.reserve(cols_);
  for (std::size_t c = 0; c < cols_; ++c) out.push_back(column(c));
  return out;
}

unsigned AlignmentMatrix::row_sum(std::size_t r) const {
  unsigned sum = 0;
  for (std::size_t c = 0; c < cols_; ++c) sum += at(r, c);
  return sum;
}

std::string AlignmentMatrix::to_string() const {
  std::string out = "[";
  for (std::size_t r = 0; r < rows_; ++r) {
    if (r) out += ',';
    out += '[';
    for (std::size_t c = 0; c < cols_; ++c) {
      if (c) out += ',';
      out += std::to_string(at(r, c));
    }
    out += ']';
  }
  return out + "]";
}

// --- free functions --------------------------------------------------------

StepSet validate_step_set(const StepSet& s) { return s.canonical(); }

bool is_alignment(const AlignmentMatrix& a, const StepSet& s, const LengthTuple& l) {
  if (a.rows() != s.dimension() || l.dimension() != s.dimension()) {
    throw DimensionMismatch("matrix has " + std::to_string(a.rows()) + " rows, step set dimension " +
                            std::to_string(s.dimension()) + ", lengths dimension " + std::to_string(l.dimension()));
  }
  if (a.cols() == 0) return l.is_zero();
  for (std::size_t r = 0; r < a.rows(); ++r) {
    if (a.row_sum(r) != l[r]) return false;
  }
  for (std::size_t c = 0; c < a.cols(); ++c) {
    if (!s.contains(a.column(c))) return false;
  }
  return true;
}

StepVector permute_coordinates(const StepVector& v, std::span<const std::size_t> perm) {
  check_permutation(perm, v.size());
  StepVector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[perm[i]];
  return out;
}

LengthTuple permute_coordinates(const LengthTuple& l, std::span<const std::size_t> perm) {
  return LengthTuple(permute_coordinates(l.values(), perm));
}

StepSet permute_coordinates(const StepSet& s, std::span<const std::size_t> perm) {
  check_permutation(perm, s.dimension());
  switch (s.family()) {
    case StepSet::Family::explicit_list: {
      std::vector<StepVector> steps;
      steps.reserve(s.explicit_list().size());
      for (const auto& step : s.explicit_list()) steps.push_back(permute_coordinates(step, perm));
      return StepSet::explicit_steps(s.dimension(), std::move(steps));
    }
    case StepSet::Family::unit_cube:
    case StepSet::Family::box:
    case StepSet::Family::all_positive:
      return s;
    case StepSet::Family::half_open:
      if (perm[0] == 0) return s;
      return StepSet::product({BaseSet::nat(), BaseSet::natpos()});
    case StepSet::Family::product: {
      std::vector<BaseSet> bases;
      bases.reserve(s.dimension());
      for (std::size_t i = 0; i < s.dimension(); ++i) bases.push_back(s.bases()[perm[i]]);
      if (bases.size() == 2 && bases[0] == BaseSet::natpos() && bases[1] == BaseSet::nat()) {
        return StepSet::half_open();
      }
      return StepSet::product(std::move(bases));
    }
  }
  return s;
}

std::string to_string(const StepVector& step) { return "(" + join(step) + ")"; }

}  // namespace mmalign
