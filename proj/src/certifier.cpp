#include "magnus/certifier.hpp"

#include <string>

#include "magnus/errors.hpp"

namespace magnus {

void AlgebraPresentation::validate() const {
  const std::size_t k = relations.size();
  if (k < 1 || k >= num_vars) {
    throw DomainError("need 1 <= k < N, got k = " + std::to_string(k) +
                      " relations over N = " + std::to_string(num_vars) +
                      " variables");
  }
  for (std::size_t j = 0; j < k; ++j) {
    if (relations[j].field() != field ||
        relations[j].num_vars() != num_vars) {
      throw FieldMismatch("relation " + std::to_string(j + 1) +
                          " is over a different field or alphabet");
    }
    if (relations[j].is_zero()) {
      throw DomainError("relation " + std::to_string(j + 1) + " is zero");
    }
  }
}

std::shared_ptr<const RelationSystem> AlgebraPresentation::relation_system()
    const {
  return std::make_shared<const RelationSystem>(field, num_vars, relations);
}

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::FreeSubalgebraCertified:
      return "FREE_SUBALGEBRA_CERTIFIED";
    case Verdict::FullFreenessCertified:
      return "FULL_FREENESS_CERTIFIED";
    case Verdict::Rejected:
      return "REJECTED";
    case Verdict::Inconclusive:
      return "INCONCLUSIVE";
  }
  return "INCONCLUSIVE";
}

LinearParts linear_parts_matrix(const AlgebraPresentation& algebra,
                                const CandidateSystem& candidates) {
  const std::size_t n = candidates.size();
  const std::size_t rows = n + algebra.num_relations();
  LinearParts out{Matrix(algebra.field, rows, algebra.num_vars), {}};
  out.linear_parts.reserve(rows);
  for (std::size_t j = 0; j < rows; ++j) {
    const NcPoly& g =
        j < n ? candidates.generators[j] : algebra.relations[j - n];
    NcPoly y = linear_part(g);
    for (const auto& [word, c] : y.terms()) out.beta(j, word[0] - 1) = c;
    out.linear_parts.push_back(std::move(y));
  }
  return out;
}

std::string RankCheck::reason() const {
  if (passed()) return "";
  return "rank " + std::to_string(rank) + " < " + std::to_string(dimension);
}

RankCheck rank_and_invert(const Matrix& beta) {
  RankCheck out;
  out.dimension = beta.rows();
  out.rank = rank(beta);
  if (beta.is_square() && out.rank == out.dimension) {
    out.alpha = LinearMap(*inverse(beta));
  }
  return out;
}

TransformedInstance build_phi(const LinearMap& alpha,
                              const AlgebraPresentation& algebra,
                              const CandidateSystem& candidates) {
  if (!alpha.is_invertible()) {
    throw DomainError("build_phi requires an invertible change of variables");
  }
  TransformedInstance out{alpha, {}, {}};
  for (const NcPoly& g : candidates.generators) {
    out.candidates.push_back(apply_linear_map(alpha, g));
  }
  for (const NcPoly& h : algebra.relations) {
    out.relations.push_back(apply_linear_map(alpha, h));
  }
  return out;
}

bool verify_eq3(const TransformedInstance& t) {
  const std::size_t n = t.candidates.size();
  const std::size_t total = n + t.relations.size();
  const Field field = t.alpha.matrix().field();
  for (std::size_t j = 0; j < total; ++j) {
    const NcPoly& p = j < n ? t.candidates[j] : t.relations[j - n];
    if (p.num_vars() != total) return false;
    if (!(linear_part(p) ==
          NcPoly::variable(field, total, static_cast<Letter>(j + 1)))) {
      return false;
    }
  }
  return true;
}

bool verify_generation_witness(const GenerationWitness& witness,
                               const AlgebraPresentation& algebra,
                               const CandidateSystem& candidates) {
  const std::size_t nvars = algebra.num_vars;
  if (witness.entries.size() != nvars || candidates.size() == 0) return false;
  for (std::size_t i = 1; i <= nvars; ++i) {
    const NcPoly x = NcPoly::variable(algebra.field, nvars,
                                      static_cast<Letter>(i));
    const auto& entry = witness.entries[i - 1];
    if (!entry) {
      bool is_candidate = false;
      for (const NcPoly& g : candidates.generators) {
        if (g.field() == x.field() && g.num_vars() == nvars && g == x) {
          is_candidate = true;
        }
      }
      if (!is_candidate) return false;
      continue;
    }
    if (entry->phi.num_vars() != candidates.size()) {
      throw DomainError("witness for x" + std::to_string(i) + " uses " +
                        std::to_string(entry->phi.num_vars()) +
                        " slots, expected " +
                        std::to_string(candidates.size()));
    }
    NcPoly value = substitute(entry->phi, candidates.generators);
    if (!entry->remainder.empty()) value += evaluate(entry->remainder);
    if (!(value == x)) return false;
  }
  return true;
}

Certificate certify_freeness(const AlgebraPresentation& algebra,
                             const CandidateSystem& candidates,
                             const GenerationWitness* witness,
                             bool assume_generation) {
  algebra.validate();
  const std::size_t expected = algebra.num_vars - algebra.num_relations();
  if (candidates.size() != expected) {
    throw DomainError("expected n = N - k = " + std::to_string(expected) +
                      " candidates, got " + std::to_string(candidates.size()));
  }
  for (const NcPoly& g : candidates.generators) {
    if (g.field() != algebra.field || g.num_vars() != algebra.num_vars) {
      throw FieldMismatch("candidate is over a different field or alphabet");
    }
    if (g.is_zero()) throw DomainError("candidate generators must be nonzero");
  }
  Certificate cert;
  LinearParts parts = linear_parts_matrix(algebra, candidates);
  cert.beta = parts.beta;
  RankCheck check = rank_and_invert(parts.beta);
  cert.rank = check.rank;
  cert.dimension = check.dimension;
  if (!check.passed()) {
    cert.verdict = Verdict::Rejected;
    cert.reason = check.reason();
    return cert;
  }
  cert.alpha = check.alpha->matrix();

  TransformedInstance t = build_phi(*check.alpha, algebra, candidates);
  cert.eq3 = verify_eq3(t);
  if (!*cert.eq3) {
    throw InternalError("L(phi g_j) != y_j after a passing rank check");
  }
  cert.phi_candidates = std::move(t.candidates);
  cert.phi_relations = std::move(t.relations);
  cert.verdict = Verdict::FreeSubalgebraCertified;
  cert.assumptions.push_back(
      "linear parts of g_1..g_n, h_1..h_k are linearly independent");

  if (witness) {
    if (verify_generation_witness(*witness, algebra, candidates)) {
      cert.witness = WitnessStatus::Verified;
      cert.verdict = Verdict::FullFreenessCertified;
      cert.assumptions.push_back("generation witnessed");
    } else {
      cert.witness = WitnessStatus::Failed;
      cert.verdict = Verdict::Inconclusive;
      cert.reason = "supplied generation witness failed exact verification";
      cert.assumptions.push_back("generation witness rejected");
    }
  } else if (assume_generation) {
    cert.witness = WitnessStatus::Assumed;
    cert.verdict = Verdict::FullFreenessCertified;
    cert.assumptions.push_back("generation assumed");
  } else {
    cert.assumptions.push_back("generation not established");
  }
  return cert;
}

std::vector<Letter> normalizing_permutation(std::size_t n, std::size_t k) {
  std::vector<Letter> to(n + k);
  for (std::size_t i = 1; i <= n; ++i) to[i - 1] = static_cast<Letter>(k + i);
  for (std::size_t j = 1; j <= k; ++j) to[n + j - 1] = static_cast<Letter>(j);
  return to;
}

std::shared_ptr<const RelationSystem> normalized_system(
    const TransformedInstance& transformed, std::size_t n) {
  const std::size_t k = transformed.relations.size();
  const auto to = normalizing_permutation(n, k);
  std::vector<NcPoly> relabeled;
  for (const NcPoly& f : transformed.relations) {
    relabeled.push_back(permute_variables(f, to, n + k));
  }
  return std::make_shared<const RelationSystem>(
      transformed.alpha.matrix().field(), n + k, std::move(relabeled));
}

Presentation transport_presentation(
    const Presentation& presentation, const TransformedInstance& transformed,
    std::size_t n, std::shared_ptr<const RelationSystem> normalized) {
  const std::size_t nvars = transformed.alpha.dimension();
  const auto to = normalizing_permutation(n, nvars - n);
  const Field field = transformed.alpha.matrix().field();

  // phi(p) for a possibly empty word; the empty word stays an absent factor.
  auto image = [&](const Word& w) {
    std::vector<std::pair<Word, Scalar>> out;
    if (w.empty()) {
      out.emplace_back(Word{}, Scalar::one(field));
      return out;
    }
    NcPoly p = NcPoly::monomial(field, nvars, w, Scalar::one(field));
    const NcPoly mapped = apply_linear_map(transformed.alpha, p);
    for (const auto& [word, c] : mapped.terms()) {
      out.emplace_back(permute_word(word, to), c);
    }
    return out;
  };

  Presentation out(std::move(normalized));
  for (const auto& t : presentation.terms()) {
    const auto left = image(t.left);
    const auto right = image(t.right);
    for (const auto& [lw, lc] : left) {
      for (const auto& [rw, rc] : right) {
        out.add(t.coefficient * lc * rc, lw, t.relation, rw);
      }
    }
  }
  return out;
}

}  // namespace magnus
