#include "magnus/presentation.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <cstring>
#include <string>

#include "magnus/errors.hpp"

namespace magnus {

RelationSystem::RelationSystem(Field field, std::size_t num_vars,
                               std::vector<NcPoly> relations)
    : field_(field), num_vars_(num_vars), relations_(std::move(relations)) {
  normalized_ = relations_.size() <= num_vars_;
  for (std::size_t i = 0; i < relations_.size(); ++i) {
    const NcPoly& f = relations_[i];
    if (f.field() != field_ || f.num_vars() != num_vars_) {
      throw FieldMismatch("relation " + std::to_string(i + 1) +
                          " is not over the system's field and alphabet");
    }
    if (f.is_zero()) {
      throw DomainError("relation " + std::to_string(i + 1) + " is zero");
    }
    const NcPoly x = NcPoly::variable(field_, num_vars_,
                                      static_cast<Letter>(i + 1));
    if (i < num_vars_ && linear_part(f) == x) {
      tails_.push_back(f - x);
    } else {
      normalized_ = false;
      tails_.push_back(f - linear_part(f));
    }
  }
}

Presentation::Presentation(std::shared_ptr<const RelationSystem> system)
    : system_(std::move(system)) {
  if (!system_) throw DomainError("presentation requires a relation system");
}

Presentation::Presentation(std::shared_ptr<const RelationSystem> system,
                           const std::vector<PresentationTerm>& terms)
    : Presentation(std::move(system)) {
  for (const auto& t : terms) add(t);
}

void Presentation::add(const PresentationTerm& term) {
  add(term.coefficient, term.left, term.relation, term.right);
}

void Presentation::add(const Scalar& c, const Word& left,
                       std::size_t relation, const Word& right) {
  if (relation < 1 || relation > system_->size()) {
    throw DomainError("relation index " + std::to_string(relation) +
                      " outside 1.." + std::to_string(system_->size()));
  }
  if (left.max_letter() > system_->num_vars() ||
      right.max_letter() > system_->num_vars()) {
    throw DomainError("presentation word uses a letter outside the alphabet");
  }
  if (c.field() != system_->field()) {
    throw FieldMismatch("presentation coefficient over " + c.field().name() +
                        ", relations over " + system_->field().name());
  }
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(Key{left, relation, right}, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

std::vector<PresentationTerm> Presentation::terms() const {
  std::vector<PresentationTerm> out;
  out.reserve(terms_.size());
  for (const auto& [key, c] : terms_) {
    const auto& [left, rel, right] = key;
    out.push_back(PresentationTerm{c, left, rel, right});
  }
  return out;
}

NcPoly evaluate(const Presentation& presentation) {
  const RelationSystem& sys = presentation.system();
  NcPoly out(sys.field(), sys.num_vars());
  for (const auto& t : presentation.terms()) {
    for (const auto& [u, cu] : sys.relation(t.relation).terms()) {
      out.add_term(t.left * u * t.right, t.coefficient * cu);
    }
  }
  return out;
}

namespace {

// The order is multiplicative, so min_u p*u*q = p * m(f) * q.
Word term_parameter(const RelationSystem& sys, const PresentationTerm& t) {
  return t.left * min_monomial(sys.relation(t.relation)) * t.right;
}

Word tau_of(const std::vector<PresentationTerm>& terms,
            const RelationSystem& sys) {
  if (terms.empty()) {
    throw DomainError("parameter undefined for an empty presentation");
  }
  Word best = term_parameter(sys, terms.front());
  for (std::size_t i = 1; i < terms.size(); ++i) {
    Word w = term_parameter(sys, terms[i]);
    if (w < best) best = std::move(w);
  }
  return best;
}

std::vector<TauAchiever> achievers_of(const std::vector<PresentationTerm>& terms,
                                      const Word& tau) {
  std::vector<TauAchiever> out;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    const auto& t = terms[i];
    if (t.left.size() + 1 + t.right.size() != tau.size()) continue;
    if (t.left * Word{static_cast<Letter>(t.relation)} * t.right == tau) {
      out.push_back(TauAchiever{i, t.left.size() + 1});
    }
  }
  std::stable_sort(out.begin(), out.end(),
                   [&](const TauAchiever& a, const TauAchiever& b) {
                     if (a.position != b.position) return a.position < b.position;
                     return terms[a.term_index].relation <
                            terms[b.term_index].relation;
                   });
  return out;
}

void require_normalized(const RelationSystem& sys) {
  if (!sys.normalized()) {
    throw DomainError(
        "relation system is not normalized: the linear part of f_i must be "
        "exactly x_i");
  }
}

// Rewrites the achiever sum, whose coefficients add up to zero, as
// sum_j (c_1 + ... + c_j)(t_j - t_{j+1}) and expands each difference by
//   a f b x' c - a x b f' c = a (f - x) b f' c - a f b (f' - x') c.
Presentation rewrite_step(const Presentation& presentation, const Word& tau) {
  const RelationSystem& sys = presentation.system();
  const auto terms = presentation.terms();
  const auto achievers = achievers_of(terms, tau);

  Scalar total = Scalar::zero(sys.field());
  for (const auto& a : achievers) total += terms[a.term_index].coefficient;
  if (!total.is_zero()) {
    throw InternalError("coefficients of the tau-achievers do not cancel");
  }

  std::vector<bool> is_achiever(terms.size(), false);
  for (const auto& a : achievers) is_achiever[a.term_index] = true;

  Presentation out(presentation.system_ptr());
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (!is_achiever[i]) out.add(terms[i]);
  }

  Scalar partial = Scalar::zero(sys.field());
  for (std::size_t j = 0; j + 1 < achievers.size(); ++j) {
    const PresentationTerm& first = terms[achievers[j].term_index];
    const PresentationTerm& second = terms[achievers[j + 1].term_index];
    partial += first.coefficient;
    if (partial.is_zero()) continue;

    const std::size_t l1 = achievers[j].position;
    const std::size_t l2 = achievers[j + 1].position;
    const Word a = tau.subword(0, l1 - 1);
    const Word b = tau.subword(l1, l2 - l1 - 1);
    const Word c = tau.subword(l2);

    for (const auto& [u, cu] : sys.tail(first.relation).terms()) {
      out.add(partial * cu, a * u * b, second.relation, c);
    }
    for (const auto& [v, cv] : sys.tail(second.relation).terms()) {
      out.add(-(partial * cv), a, first.relation, b * v * c);
    }
  }
  return out;
}

}  // namespace

Word parameter_tau(const Presentation& presentation) {
  return tau_of(presentation.terms(), presentation.system());
}

std::vector<TauAchiever> tau_achievers(const Presentation& presentation) {
  require_normalized(presentation.system());
  const auto terms = presentation.terms();
  return achievers_of(terms, tau_of(terms, presentation.system()));
}

Presentation improve_once(const Presentation& presentation) {
  require_normalized(presentation.system());
  const NcPoly s = evaluate(presentation);
  if (s.is_zero()) {
    throw DomainError("presentation evaluates to 0; m(s) is undefined");
  }
  const Word tau = parameter_tau(presentation);
  const Word& m = min_monomial(s);
  if (!(tau < m)) {
    throw DomainError("parameter already equals m(s); nothing to improve");
  }
  return rewrite_step(presentation, tau);
}

RewriteLimits RewriteLimits::from_environment() {
  RewriteLimits limits;
  if (const char* cap = std::getenv("MAGNUS_TERM_CAP")) {
    std::size_t value = 0;
    const char* end = cap + std::strlen(cap);
    auto [ptr, ec] = std::from_chars(cap, end, value);
    if (ec != std::errc() || ptr != end || value == 0) {
      throw Error("MAGNUS_TERM_CAP must be a positive integer, got '" +
                  std::string(cap) + "'");
    }
    limits.max_terms = value;
  }
  return limits;
}

MinimalMonomialProof certify_min_monomial(const Presentation& presentation,
                                          const RewriteLimits& limits,
                                          const RewriteObserver& observer) {
  const RelationSystem& sys = presentation.system();
  require_normalized(sys);
  const NcPoly s = evaluate(presentation);
  if (s.is_zero()) throw DomainError("m undefined for 0");
  const Word m = min_monomial(s);

  MinimalMonomialProof proof{presentation, m, {}, 0, 0};
  proof.step_bound = limits.max_steps.value_or(
      word_count_up_to(sys.num_vars(), m.degree()));

  while (true) {
    Word tau = parameter_tau(proof.presentation);
    proof.tau_trace.push_back(tau);
    if (tau == m) break;
    if (m < tau) {
      throw InternalError("parameter exceeds the minimal monomial of s");
    }
    if (proof.steps >= proof.step_bound) {
      throw ResourceLimit("rewrite step cap of " +
                          std::to_string(proof.step_bound) + " exceeded");
    }
    Presentation next = rewrite_step(proof.presentation, tau);
    if (next.size() > limits.max_terms) {
      throw ResourceLimit("presentation grew to " +
                          std::to_string(next.size()) +
                          " terms, above the cap of " +
                          std::to_string(limits.max_terms));
    }
    if (observer) observer(proof.presentation, next);
    proof.presentation = std::move(next);
    ++proof.steps;
  }

  if (!m.contains_letter_at_most(static_cast<Letter>(sys.size()))) {
    throw InternalError("minimal monomial avoids every relation letter");
  }
  return proof;
}

}  // namespace magnus
