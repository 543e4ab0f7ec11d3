#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <tuple>
#include <vector>

#include "magnus/poly.hpp"

namespace magnus {

/// Relations f_1..f_k of a two-sided ideal in the free algebra on N letters.
/// The system is normalized when the linear part of f_i is exactly x_i for
/// every i <= k.
class RelationSystem {
 public:
  RelationSystem(Field field, std::size_t num_vars,
                 std::vector<NcPoly> relations);

  Field field() const noexcept { return field_; }
  std::size_t num_vars() const noexcept { return num_vars_; }
  std::size_t size() const noexcept { return relations_.size(); }
  /// 1-based.
  const NcPoly& relation(std::size_t i) const { return relations_.at(i - 1); }
  const std::vector<NcPoly>& relations() const noexcept { return relations_; }
  bool normalized() const noexcept { return normalized_; }

  /// f_i - x_i for a normalized system: every word has degree >= 2.
  const NcPoly& tail(std::size_t i) const { return tails_.at(i - 1); }

 private:
  Field field_;
  std::size_t num_vars_;
  std::vector<NcPoly> relations_;
  std::vector<NcPoly> tails_;
  bool normalized_ = false;
};

/// c * p * f_rel * q. Empty p or q are absent factors.
struct PresentationTerm {
  Scalar coefficient;
  Word left;
  std::size_t relation = 1;
  Word right;

  friend bool operator==(const PresentationTerm&,
                         const PresentationTerm&) = default;
};

/// An element of id(f_1..f_k) written as sum c*p*f_i*q. Terms with equal
/// (p, i, q) are merged on insertion and zero coefficients dropped, so the
/// term list is canonical.
class Presentation {
 public:
  explicit Presentation(std::shared_ptr<const RelationSystem> system);
  Presentation(std::shared_ptr<const RelationSystem> system,
               const std::vector<PresentationTerm>& terms);

  const RelationSystem& system() const noexcept { return *system_; }
  const std::shared_ptr<const RelationSystem>& system_ptr() const noexcept {
    return system_;
  }

  /// Throws DomainError on an out-of-range relation or letter, or a
  /// coefficient over another field.
  void add(const PresentationTerm& term);
  void add(const Scalar& c, const Word& left, std::size_t relation,
           const Word& right);

  std::vector<PresentationTerm> terms() const;
  std::size_t size() const noexcept { return terms_.size(); }
  bool empty() const noexcept { return terms_.empty(); }

 private:
  using Key = std::tuple<Word, std::size_t, Word>;

  std::shared_ptr<const RelationSystem> system_;
  std::map<Key, Scalar> terms_;
};

/// sum c * p * f_i * q.
NcPoly evaluate(const Presentation& presentation);

/// Deg-lex least word p*u*q over all terms and all words u of f_i.
/// DomainError on an empty presentation.
Word parameter_tau(const Presentation& presentation);

struct TauAchiever {
  std::size_t term_index;  // into Presentation::terms()
  std::size_t position;    // 1-based position of the marked letter in tau
};

/// Terms with p * x_i * q = tau, ordered by marked position. Requires a
/// normalized system and a nonempty presentation.
std::vector<TauAchiever> tau_achievers(const Presentation& presentation);

/// One telescoping rewrite step. Requires a normalized system, a nonzero
/// value s and tau < m(s); the result presents the same s with a strictly
/// larger parameter. DomainError when a precondition fails.
Presentation improve_once(const Presentation& presentation);

struct RewriteLimits {
  std::size_t max_terms = 100000;
  /// Defaults to the number of words of degree <= deg m(s).
  std::optional<std::size_t> max_steps;

  /// max_terms taken from MAGNUS_TERM_CAP when that variable is set.
  static RewriteLimits from_environment();
};

struct MinimalMonomialProof {
  Presentation presentation;  // parameter equals min_monomial
  Word min_monomial;
  std::vector<Word> tau_trace;  // parameter before each step, then final
  std::size_t steps = 0;
  std::size_t step_bound = 0;
};

/// Observer called with (before, after) for every rewrite step.
using RewriteObserver =
    std::function<void(const Presentation&, const Presentation&)>;

/// Repeats improve_once until the parameter reaches m(s). The returned word
/// contains a letter of index <= k. Throws ResourceLimit past the term or
/// step cap and DomainError when s = 0 or the system is not normalized.
MinimalMonomialProof certify_min_monomial(const Presentation& presentation,
                                          const RewriteLimits& limits = {},
                                          const RewriteObserver& observer = {});

}  // namespace magnus
