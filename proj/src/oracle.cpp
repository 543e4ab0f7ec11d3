#include "magnus/oracle.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "magnus/errors.hpp"

namespace magnus {

// ---------------------------------------------------------------- WordIndex

WordIndex::WordIndex(std::size_t num_vars, std::size_t max_degree)
    : num_vars_(num_vars), max_degree_(max_degree), offsets_{0} {
  std::size_t layer = 1;
  for (std::size_t d = 1; d <= max_degree; ++d) {
    layer *= num_vars;
    offsets_.push_back(offsets_.back() + layer);
  }
}

std::size_t WordIndex::index_of(const Word& w) const {
  std::size_t rank = 0;
  for (Letter x : w) rank = rank * num_vars_ + (x - 1);
  return offsets_[w.degree() - 1] + rank;
}

Word WordIndex::word_at(std::size_t index) const {
  std::size_t degree = 1;
  while (offsets_[degree] <= index) ++degree;
  std::size_t rank = index - offsets_[degree - 1];
  std::vector<Letter> letters(degree);
  for (std::size_t i = degree; i > 0; --i) {
    letters[i - 1] = static_cast<Letter>(rank % num_vars_ + 1);
    rank /= num_vars_;
  }
  return Word(std::move(letters));
}

// ------------------------------------------------------------ SparseEchelon

namespace {

using WorkMap = std::map<std::size_t, Scalar>;

void axpy(WorkMap& target, const Scalar& factor, const SparseVector& v) {
  for (const auto& [i, c] : v) {
    auto [it, inserted] = target.try_emplace(i, factor * c);
    if (!inserted) {
      it->second += factor * c;
      if (it->second.is_zero()) target.erase(it);
    }
  }
}

SparseVector to_sparse(const WorkMap& m) {
  return SparseVector(m.begin(), m.end());
}

}  // namespace

SparseEchelon::SparseEchelon(Field field, std::size_t dimension, bool track)
    : field_(field), track_(track), pivot_row_(dimension, -1) {}

SparseEchelon::Reduction SparseEchelon::reduce(const SparseVector& v) const {
  WorkMap work(v.begin(), v.end());
  WorkMap subtracted;
  auto it = work.begin();
  while (it != work.end()) {
    const long r = pivot_row_[it->first];
    if (r < 0) {
      ++it;
      continue;
    }
    const Row& row = rows_[static_cast<std::size_t>(r)];
    const std::size_t at = it->first;
    const Scalar factor = it->second;
    // Entries of the row lie at coordinates >= its pivot, so the walk only
    // has to continue to the right of `at`.
    axpy(work, -factor, row.values);
    if (track_) axpy(subtracted, factor, row.combination);
    it = work.upper_bound(at);
  }
  return Reduction{to_sparse(work), to_sparse(subtracted)};
}

SparseEchelon::Reduction SparseEchelon::insert(const SparseVector& v,
                                               std::size_t label) {
  Reduction red = reduce(v);
  if (red.remainder.empty()) return red;

  Row row;
  const Scalar scale = red.remainder.front().second.inverse();
  row.values = red.remainder;
  for (auto& [i, c] : row.values) c *= scale;
  if (track_) {
    WorkMap comb;
    comb.emplace(label, scale);
    axpy(comb, -scale, red.subtracted);
    row.combination = to_sparse(comb);
  }
  pivot_row_[row.values.front().first] = static_cast<long>(rows_.size());
  rows_.push_back(std::move(row));
  return red;
}

void SparseEchelon::make_reduced() {
  std::vector<std::size_t> order(rows_.size());
  for (std::size_t i = 0; i < rows_.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return rows_[a].values.front().first > rows_[b].values.front().first;
  });
  // Highest pivot first: each row is reduced against rows that are already
  // fully reduced, so one pass per row suffices.
  for (std::size_t r : order) {
    Row& row = rows_[r];
    const std::size_t pivot = row.values.front().first;
    WorkMap work(row.values.begin(), row.values.end());
    WorkMap comb(row.combination.begin(), row.combination.end());
    auto it = work.upper_bound(pivot);
    while (it != work.end()) {
      const long other = pivot_row_[it->first];
      if (other < 0) {
        ++it;
        continue;
      }
      const std::size_t at = it->first;
      const Scalar factor = it->second;
      const Row& o = rows_[static_cast<std::size_t>(other)];
      axpy(work, -factor, o.values);
      if (track_) axpy(comb, -factor, o.combination);
      it = work.upper_bound(at);
    }
    row.values = to_sparse(work);
    if (track_) row.combination = to_sparse(comb);
  }
}

std::vector<const SparseEchelon::Row*> SparseEchelon::rows_by_pivot() const {
  std::vector<const Row*> out;
  for (long r : pivot_row_) {
    if (r >= 0) out.push_back(&rows_[static_cast<std::size_t>(r)]);
  }
  return out;
}

// ----------------------------------------------------------- TruncatedSpace

TruncatedSpace::TruncatedSpace(Field field, std::size_t num_vars,
                               std::size_t max_degree, bool track)
    : field_(field),
      index_(num_vars, max_degree),
      ideal_(field, index_.dimension(), track) {}

SparseVector TruncatedSpace::vector_of(const NcPoly& p) const {
  SparseVector out;
  for (const auto& [word, c] : p.terms()) {
    if (word.degree() > max_degree()) break;
    out.emplace_back(index_.index_of(word), c);
  }
  return out;
}

NcPoly TruncatedSpace::poly_of(const SparseVector& v) const {
  NcPoly out(field_, num_vars());
  for (const auto& [i, c] : v) out.add_term(index_.word_at(i), c);
  return out;
}

std::vector<NcPoly> TruncatedSpace::basis() const {
  std::vector<NcPoly> out;
  for (const auto* row : ideal_.rows_by_pivot()) {
    out.push_back(poly_of(row->values));
  }
  return out;
}

namespace {

void check_coordinates(std::size_t nvars, std::size_t degree,
                       const OracleOptions& options, const char* what) {
  const std::size_t count = word_count_up_to(nvars, degree);
  if (count > options.max_coordinates) {
    throw ResourceLimit(std::string(what) + ": " + std::to_string(nvars) +
                        " letters up to degree " + std::to_string(degree) +
                        " exceed the cap of " +
                        std::to_string(options.max_coordinates) +
                        " coordinates");
  }
}

void check_degree(std::size_t max_degree) {
  if (max_degree < 1) throw DomainError("degree bound must be at least 1");
}

}  // namespace

TruncatedSpace ideal_span_up_to(const AlgebraPresentation& algebra,
                                std::size_t max_degree,
                                const OracleOptions& options) {
  check_degree(max_degree);
  check_coordinates(algebra.num_vars, max_degree, options, "ambient space");
  TruncatedSpace space(algebra.field, algebra.num_vars, max_degree,
                       options.track_presentations);
  const std::size_t nvars = algebra.num_vars;

  for (std::size_t j = 1; j <= algebra.relations.size(); ++j) {
    const NcPoly& h = algebra.relations[j - 1];
    if (h.is_zero()) continue;
    const std::size_t low = h.min_degree();
    if (low > max_degree) continue;
    const std::size_t slack = max_degree - low;
    for (std::size_t lp = 0; lp <= slack; ++lp) {
      const auto lefts = lp == 0 ? std::vector<Word>{Word{}}
                                 : words_of_degree(nvars, lp);
      for (std::size_t lq = 0; lp + lq <= slack; ++lq) {
        const auto rights = lq == 0 ? std::vector<Word>{Word{}}
                                    : words_of_degree(nvars, lq);
        const std::size_t cap = max_degree - lp - lq;
        for (const Word& p : lefts) {
          for (const Word& q : rights) {
            SparseVector v;
            for (const auto& [u, c] : h.terms()) {
              if (u.degree() > cap) break;
              v.emplace_back(space.index_.index_of(p * u * q), c);
            }
            std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) {
              return a.first < b.first;
            });
            const std::size_t label = space.generators_.size();
            if (options.track_presentations) {
              space.generators_.push_back(IdealGenerator{p, j, q});
            } else {
              space.generators_.push_back(IdealGenerator{{}, j, {}});
            }
            space.ideal_.insert(v, label);
          }
        }
      }
    }
  }
  space.ideal_.make_reduced();
  return space;
}

// ------------------------------------------------------------ the searches

namespace {

void check_candidates(const AlgebraPresentation& algebra,
                      const CandidateSystem& candidates) {
  if (candidates.size() == 0) {
    throw DomainError("at least one candidate generator is required");
  }
  for (const NcPoly& g : candidates.generators) {
    if (g.field() != algebra.field || g.num_vars() != algebra.num_vars) {
      throw FieldMismatch("candidate is over a different field or alphabet");
    }
  }
}

// Truncated images g_w of every slot word w, indexed by the slot WordIndex.
std::vector<NcPoly> slot_images(const CandidateSystem& candidates,
                                const WordIndex& slots) {
  std::vector<NcPoly> images;
  images.reserve(slots.dimension());
  const std::size_t n = candidates.size();
  for (std::size_t i = 0; i < n; ++i) {
    images.push_back(truncate(candidates.generators[i], slots.max_degree()));
  }
  for (std::size_t index = n; index < slots.dimension(); ++index) {
    const Word w = slots.word_at(index);
    const Word prefix = w.subword(0, w.size() - 1);
    images.push_back(multiply_truncated(images[slots.index_of(prefix)],
                                        candidates.generators[w[w.size() - 1] - 1],
                                        slots.max_degree()));
  }
  return images;
}

NcPoly slot_poly(Field field, const WordIndex& slots,
                 const SparseVector& combination) {
  NcPoly phi(field, slots.num_vars());
  for (const auto& [i, c] : combination) phi.add_term(slots.word_at(i), c);
  return phi;
}

NcPoly value_of_generators(const AlgebraPresentation& algebra,
                           const TruncatedSpace& space,
                           const SparseVector& combination) {
  NcPoly out(algebra.field, algebra.num_vars);
  for (const auto& [label, c] : combination) {
    const IdealGenerator& g = space.generators()[label];
    const NcPoly& h = algebra.relations[g.relation - 1];
    for (const auto& [u, cu] : h.terms()) {
      out.add_term(g.left * u * g.right, c * cu);
    }
  }
  return out;
}

Presentation presentation_of(const AlgebraPresentation& algebra,
                             const TruncatedSpace& space,
                             const SparseVector& combination) {
  Presentation out(algebra.relation_system());
  for (const auto& [label, c] : combination) {
    const IdealGenerator& g = space.generators()[label];
    out.add(c, g.left, g.relation, g.right);
  }
  return out;
}

}  // namespace

DependencyResult dependency_search_bounded(const AlgebraPresentation& algebra,
                                           const CandidateSystem& candidates,
                                           std::size_t max_degree,
                                           const OracleOptions& options) {
  check_degree(max_degree);
  check_candidates(algebra, candidates);
  check_coordinates(candidates.size(), max_degree, options, "slot space");
  const TruncatedSpace space = ideal_span_up_to(algebra, max_degree, options);
  const WordIndex slots(candidates.size(), max_degree);
  const auto images = slot_images(candidates, slots);

  DependencyResult result;
  result.max_degree = max_degree;
  SparseEchelon relations_among(algebra.field, space.ambient_dimension(), true);
  for (std::size_t w = 0; w < slots.dimension(); ++w) {
    const auto remainder = space.ideal().reduce(space.vector_of(images[w])).remainder;
    const auto red = relations_among.insert(remainder, w);
    if (!red.remainder.empty()) continue;

    WorkMap comb;
    comb.emplace(w, Scalar::one(algebra.field));
    axpy(comb, -Scalar::one(algebra.field), red.subtracted);
    NcPoly phi = slot_poly(algebra.field, slots, to_sparse(comb));
    phi *= phi.terms().begin()->second.inverse();
    result.phi = std::move(phi);
    break;
  }
  if (!result.phi) return result;

  // Lift: Phi(g), untruncated, must equal an exact combination of p h_j q.
  const NcPoly value = substitute(*result.phi, candidates.generators);
  OracleOptions tracked = options;
  tracked.track_presentations = true;
  const TruncatedSpace traced = options.track_presentations
                                    ? space
                                    : ideal_span_up_to(algebra, max_degree, tracked);
  const auto red = traced.ideal().reduce(traced.vector_of(value));
  if (red.remainder.empty()) {
    result.exact = value_of_generators(algebra, traced, red.subtracted) == value;
  }
  return result;
}

std::optional<GenerationWitness> generation_search_bounded(
    const AlgebraPresentation& algebra, const CandidateSystem& candidates,
    std::size_t max_degree, const OracleOptions& options) {
  check_degree(max_degree);
  check_candidates(algebra, candidates);
  check_coordinates(candidates.size(), max_degree, options, "slot space");
  OracleOptions tracked = options;
  tracked.track_presentations = true;
  const TruncatedSpace space = ideal_span_up_to(algebra, max_degree, tracked);
  const WordIndex slots(candidates.size(), max_degree);
  const auto images = slot_images(candidates, slots);

  SparseEchelon image_span(algebra.field, space.ambient_dimension(), true);
  for (std::size_t w = 0; w < slots.dimension(); ++w) {
    image_span.insert(space.ideal().reduce(space.vector_of(images[w])).remainder,
                      w);
  }

  GenerationWitness witness;
  for (std::size_t i = 1; i <= algebra.num_vars; ++i) {
    const NcPoly x = NcPoly::variable(algebra.field, algebra.num_vars,
                                      static_cast<Letter>(i));
    const auto target = space.ideal().reduce(space.vector_of(x)).remainder;
    const auto solved = image_span.reduce(target);
    if (!solved.remainder.empty()) return std::nullopt;
    NcPoly phi = slot_poly(algebra.field, slots, solved.subtracted);

    NcPoly gap = x - truncate(substitute_truncated(phi, candidates.generators,
                                                   max_degree),
                              max_degree);
    const auto membership = space.ideal().reduce(space.vector_of(gap));
    if (!membership.remainder.empty()) {
      throw InternalError("generation search lost track of ideal membership");
    }
    witness.entries.push_back(WitnessEntry{
        std::move(phi), presentation_of(algebra, space, membership.subtracted)});
  }

  if (!verify_generation_witness(witness, algebra, candidates)) {
    return std::nullopt;
  }
  return witness;
}

}  // namespace magnus
