#include "magnus/report.hpp"

#include <sstream>

namespace magnus {

using nlohmann::json;

namespace {

template <typename T>
json optional_json(const std::optional<T>& v) {
  return v ? json(*v) : json(nullptr);
}

template <typename T>
void read_optional(const json& j, const char* key, std::optional<T>& out) {
  out.reset();
  if (j.contains(key) && !j.at(key).is_null()) out = j.at(key).get<T>();
}

}  // namespace

void to_json(json& j, const WitnessReport& r) {
  j = json{{"variable", r.variable}, {"phi", r.phi}, {"remainder", r.remainder}};
}

void from_json(const json& j, WitnessReport& r) {
  j.at("variable").get_to(r.variable);
  j.at("phi").get_to(r.phi);
  j.at("remainder").get_to(r.remainder);
}

void to_json(json& j, const OracleReport& r) {
  j = json{{"search", r.search},
           {"max_degree", r.max_degree},
           {"outcome", r.outcome},
           {"phi", optional_json(r.phi)},
           {"exact", optional_json(r.exact)},
           {"predicted_none", optional_json(r.predicted_none)},
           {"witness", r.witness},
           {"note", r.note}};
}

void from_json(const json& j, OracleReport& r) {
  j.at("search").get_to(r.search);
  j.at("max_degree").get_to(r.max_degree);
  j.at("outcome").get_to(r.outcome);
  read_optional(j, "phi", r.phi);
  read_optional(j, "exact", r.exact);
  read_optional(j, "predicted_none", r.predicted_none);
  j.at("witness").get_to(r.witness);
  j.at("note").get_to(r.note);
}

void to_json(json& j, const MemberReport& r) {
  j = json{{"element", r.element},
           {"min_monomial", r.min_monomial},
           {"relation_letters", r.relation_letters},
           {"presentation", r.presentation},
           {"steps", r.steps},
           {"step_bound", r.step_bound},
           {"relabeled", r.relabeled}};
}

void from_json(const json& j, MemberReport& r) {
  j.at("element").get_to(r.element);
  j.at("min_monomial").get_to(r.min_monomial);
  j.at("relation_letters").get_to(r.relation_letters);
  j.at("presentation").get_to(r.presentation);
  j.at("steps").get_to(r.steps);
  j.at("step_bound").get_to(r.step_bound);
  j.at("relabeled").get_to(r.relabeled);
}

void to_json(json& j, const Report& r) {
  j = json{{"command", r.command},
           {"verdict", r.verdict},
           {"rank", optional_json(r.rank)},
           {"dimension", optional_json(r.dimension)},
           {"alpha", r.alpha},
           {"beta", r.beta},
           {"phi_candidates", r.phi_candidates},
           {"phi_relations", r.phi_relations},
           {"tau_trace", r.tau_trace},
           {"oracle", optional_json(r.oracle)},
           {"member", optional_json(r.member)},
           {"eq3", optional_json(r.eq3)},
           {"assumptions", r.assumptions},
           {"reason", r.reason},
           {"timings", r.timings},
           {"version", r.version},
           {"exit_code", r.exit_code}};
}

void from_json(const json& j, Report& r) {
  j.at("command").get_to(r.command);
  j.at("verdict").get_to(r.verdict);
  read_optional(j, "rank", r.rank);
  read_optional(j, "dimension", r.dimension);
  j.at("alpha").get_to(r.alpha);
  j.at("beta").get_to(r.beta);
  j.at("phi_candidates").get_to(r.phi_candidates);
  j.at("phi_relations").get_to(r.phi_relations);
  j.at("tau_trace").get_to(r.tau_trace);
  read_optional(j, "oracle", r.oracle);
  read_optional(j, "member", r.member);
  read_optional(j, "eq3", r.eq3);
  j.at("assumptions").get_to(r.assumptions);
  j.at("reason").get_to(r.reason);
  j.at("timings").get_to(r.timings);
  j.at("version").get_to(r.version);
  j.at("exit_code").get_to(r.exit_code);
}

namespace {

void render_matrix(std::ostringstream& out, const char* name,
                   const std::vector<std::vector<std::string>>& m) {
  if (m.empty()) return;
  out << name << ":\n";
  for (const auto& row : m) {
    out << "  [";
    for (std::size_t c = 0; c < row.size(); ++c) {
      out << (c ? ", " : "") << row[c];
    }
    out << "]\n";
  }
}

}  // namespace

std::string render_text(const Report& r) {
  std::ostringstream out;
  out << "verdict: " << r.verdict << '\n';
  if (!r.reason.empty()) out << "reason: " << r.reason << '\n';
  if (r.rank) {
    out << "rank: " << *r.rank;
    if (r.dimension) out << " / " << *r.dimension;
    out << '\n';
  }
  render_matrix(out, "beta", r.beta);
  render_matrix(out, "alpha", r.alpha);
  for (std::size_t i = 0; i < r.phi_candidates.size(); ++i) {
    out << "phi(g" << i + 1 << ") = " << r.phi_candidates[i] << '\n';
  }
  for (std::size_t i = 0; i < r.phi_relations.size(); ++i) {
    out << "phi(h" << i + 1 << ") = " << r.phi_relations[i] << '\n';
  }
  if (r.eq3) out << "eq3: " << (*r.eq3 ? "holds" : "FAILS") << '\n';
  for (const auto& a : r.assumptions) out << "assumption: " << a << '\n';

  if (r.member) {
    const MemberReport& m = *r.member;
    if (m.relabeled) out << "rewriting over the normalized relabeled system\n";
    out << "s = " << m.element << '\n';
    out << "m(s) = " << m.min_monomial << '\n';
    out << "relation letters:";
    for (const auto& x : m.relation_letters) out << ' ' << x;
    out << '\n';
    out << "steps: " << m.steps << " (bound " << m.step_bound << ")\n";
    out << "tau trace:";
    for (const auto& t : r.tau_trace) out << ' ' << t;
    out << '\n';
    out << "final presentation:\n";
    for (const auto& line : m.presentation) out << "  " << line << '\n';
  }

  if (r.oracle) {
    const OracleReport& o = *r.oracle;
    out << o.search << " search up to degree " << o.max_degree << ": "
        << o.outcome << '\n';
    if (o.phi) out << "phi: " << *o.phi << '\n';
    if (o.exact) {
      out << "exact: "
          << (*o.exact ? "yes (membership lifts to the full ideal)"
                       : "no (dependency holds only modulo degree > D)")
          << '\n';
    }
    for (const auto& w : o.witness) {
      out << "wit " << w.variable << " : " << w.phi;
      for (const auto& term : w.remainder) out << " ; " << term;
      out << '\n';
    }
    if (!o.note.empty()) out << "note: " << o.note << '\n';
  }
  return out.str();
}

}  // namespace magnus
