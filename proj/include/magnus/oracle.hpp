#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "magnus/certifier.hpp"
#include "magnus/poly.hpp"

namespace magnus {

/// Sorted (coordinate, nonzero value) pairs.
using SparseVector = std::vector<std::pair<std::size_t, Scalar>>;

/// Coordinates on the words of degree 1..max_degree, numbered in deg-lex
/// order.
class WordIndex {
 public:
  WordIndex(std::size_t num_vars, std::size_t max_degree);

  std::size_t num_vars() const noexcept { return num_vars_; }
  std::size_t max_degree() const noexcept { return max_degree_; }
  std::size_t dimension() const noexcept { return offsets_.back(); }
  /// First coordinate of degree d (d in 1..max_degree+1).
  std::size_t offset(std::size_t degree) const { return offsets_[degree - 1]; }

  std::size_t index_of(const Word& w) const;
  Word word_at(std::size_t index) const;

 private:
  std::size_t num_vars_;
  std::size_t max_degree_;
  std::vector<std::size_t> offsets_;
};

/// Incremental sparse echelon basis over a field. Pivots sit at the lowest
/// coordinate of each row and are normalized to 1. With tracking on, every
/// row also records its expression in the inserted vectors, addressed by the
/// labels given to insert().
class SparseEchelon {
 public:
  SparseEchelon(Field field, std::size_t dimension, bool track);

  struct Reduction {
    SparseVector remainder;   // no entry on a pivot coordinate
    SparseVector subtracted;  // v = remainder + sum subtracted[l] * input_l
  };

  Reduction reduce(const SparseVector& v) const;
  /// Returns the reduction of v; an empty remainder means v depended on the
  /// earlier inputs, and nothing is stored.
  Reduction insert(const SparseVector& v, std::size_t label);
  /// Brings the basis to reduced row-echelon form.
  void make_reduced();

  std::size_t rank() const noexcept { return rows_.size(); }
  bool tracking() const noexcept { return track_; }
  std::size_t dimension() const noexcept { return pivot_row_.size(); }

  struct Row {
    SparseVector values;       // values.front() is the pivot, equal to 1
    SparseVector combination;  // over input labels
  };
  /// Rows in order of increasing pivot.
  std::vector<const Row*> rows_by_pivot() const;

 private:
  Field field_;
  bool track_;
  std::vector<Row> rows_;
  std::vector<long> pivot_row_;
};

/// A generator p * h_j * q of the truncated ideal.
struct IdealGenerator {
  Word left;
  std::size_t relation;
  Word right;
};

struct OracleOptions {
  /// Largest admissible number of coordinates, for words and slot words.
  std::size_t max_coordinates = 200000;
  /// Keeps the (p, j, q) provenance of every basis row.
  bool track_presentations = false;
};

/// The span of all truncations of p * h_j * q inside the words of degree
/// <= D.
class TruncatedSpace {
 public:
  TruncatedSpace(Field field, std::size_t num_vars, std::size_t max_degree,
                 bool track);

  Field field() const noexcept { return field_; }
  std::size_t num_vars() const noexcept { return index_.num_vars(); }
  std::size_t max_degree() const noexcept { return index_.max_degree(); }
  const WordIndex& coordinates() const noexcept { return index_; }
  std::size_t ambient_dimension() const noexcept { return index_.dimension(); }
  std::size_t ideal_dimension() const noexcept { return ideal_.rank(); }
  const SparseEchelon& ideal() const noexcept { return ideal_; }
  const std::vector<IdealGenerator>& generators() const noexcept {
    return generators_;
  }

  /// Coordinates of truncate(p, D).
  SparseVector vector_of(const NcPoly& p) const;
  NcPoly poly_of(const SparseVector& v) const;
  /// Reduced row-echelon basis, pivots ascending.
  std::vector<NcPoly> basis() const;

 private:
  friend TruncatedSpace ideal_span_up_to(const AlgebraPresentation&,
                                         std::size_t, const OracleOptions&);

  Field field_;
  WordIndex index_;
  SparseEchelon ideal_;
  std::vector<IdealGenerator> generators_;
};

/// Throws DomainError for D = 0 and ResourceLimit past the coordinate cap.
TruncatedSpace ideal_span_up_to(const AlgebraPresentation& algebra,
                                std::size_t max_degree,
                                const OracleOptions& options = {});

struct DependencyResult {
  std::size_t max_degree = 0;
  /// Nonzero Phi of degree <= D with Phi(g) in the truncated ideal span,
  /// scaled so that the coefficient of m(Phi) is 1.
  std::optional<NcPoly> phi;
  /// Phi(g) is exactly a combination of untruncated p * h_j * q.
  bool exact = false;

  bool found() const noexcept { return phi.has_value(); }
};

DependencyResult dependency_search_bounded(const AlgebraPresentation& algebra,
                                           const CandidateSystem& candidates,
                                           std::size_t max_degree,
                                           const OracleOptions& options = {});

/// A witness of degree <= D that passed verify_generation_witness, or
/// nullopt (inconclusive).
std::optional<GenerationWitness> generation_search_bounded(
    const AlgebraPresentation& algebra, const CandidateSystem& candidates,
    std::size_t max_degree, const OracleOptions& options = {});

}  // namespace magnus
