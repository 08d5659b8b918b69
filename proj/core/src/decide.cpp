#include "genuslab/decide.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "genuslab/bounds.hpp"
#include "genuslab/error.hpp"
#include "genuslab/graphs.hpp"

namespace genuslab {

namespace {

ClassMembership membership_of_minimal(const Dfa& a_min) {
  ClassMembership out;
  out.m = a_min.alphabet_size();
  out.girth = girth(underlying_multigraph(a_min));
  out.complete = a_min.is_complete();
  if (out.m >= 2 && out.complete) {
    const auto r = static_cast<std::size_t>(rho(static_cast<std::int64_t>(out.m)));
    out.in_class = !out.girth || *out.girth >= r;
  }
  return out;
}

Dfa trim_minimal(const Dfa& a) { return minimize(trim(a)); }

}  // namespace

ClassMembership class_membership(const Dfa& a) { return membership_of_minimal(trim_minimal(a)); }

bool two_letter_nonplanar_certificate(const Dfa& a) {
  if (a.alphabet_size() != 2)
    throw Error("two-letter certificate needs an alphabet of size 2, got " +
                std::to_string(a.alphabet_size()));
  const Dfa a_min = trim_minimal(a);
  if (!a_min.is_complete()) return false;
  auto g = girth(underlying_multigraph(a_min));
  return !g || *g >= 4;
}

std::int64_t finiteness_size_cap(std::int64_t m, std::int64_t g) {
  if (m < 2) throw Error("finiteness cap needs m >= 2");
  if (g < 2) throw Error("finiteness cap needs g >= 2: genus in this class is at least 2");
  const std::int64_t j = rho(m);
  return floor(Rational((g - 1) * 2 * j, (j - 2) * m - j));
}

DecisionReport decide_genus(const Dfa& a, const DecideOptions& options) {
  DecisionReport r;
  r.minimal = trim_minimal(a);
  const Dfa& a_min = r.minimal;
  const std::size_t n = a_min.num_states();
  const auto m = static_cast<std::int64_t>(a_min.alphabet_size());
  r.size_set = n;
  r.membership = membership_of_minimal(a_min);

  const Multigraph graph = underlying_multigraph(a_min);
  Budget cap_budget(options.budget_nodes);
  GenusInterval cap = genus_exact(graph, cap_budget);
  r.nodes += cap.nodes;
  r.genus_upper = cap.upper;
  r.witness = a_min;
  r.witness_embedding = *cap.witness;
  r.witness_projection.resize(n);
  std::iota(r.witness_projection.begin(), r.witness_projection.end(), StateId{0});
  r.top_size = n;

  std::size_t lower = 0;
  if (r.membership.in_class) {
    lower = static_cast<std::size_t>(ceil(genus_lower_bound(m, rho(m), static_cast<std::int64_t>(n))));
  } else if (m == 2 && two_letter_nonplanar_certificate(a_min)) {
    lower = 1;
  }
  r.genus_lower = std::min(lower, r.genus_upper);
  if (r.genus_lower == r.genus_upper) {
    // A_min already attains the lower bound, and nothing is smaller than A_min.
    r.genus_exact = r.top_exact = true;
    return r;
  }

  const SimpleDigraph base = simplify(graph);
  Budget search_budget(options.budget_nodes);
  std::size_t proven = r.genus_lower;
  for (std::size_t t = r.genus_lower; t < r.genus_upper; ++t) {
    std::size_t max_size = options.max_size.value_or(2 * n);
    if (r.membership.in_class) {
      auto sizes = size_set_E(m, rho(m), static_cast<std::int64_t>(n), static_cast<std::int64_t>(t));
      if (sizes.empty()) {
        // No automaton of size >= |L|_set reaches genus t in this class.
        r.searched.push_back({t, {}});
        if (proven == t) proven = t + 1;
        continue;
      }
      max_size = static_cast<std::size_t>(sizes.back());
    }
    EmulatorSearchResult res = search_min_genus_emulator(base, max_size, t, search_budget);
    r.searched.push_back({t, res.exhausted_sizes});

    if (res.status == SearchStatus::found) {
      LiftedAutomaton lifted = lift_with_projection(*res.emulator, a_min);
      if (!equivalent(lifted.dfa, a_min))
        throw Error("internal: lifted automaton does not recognize the language");
      const Multigraph lifted_graph = underlying_multigraph(lifted.dfa);
      if (t == 0) {
        r.witness_embedding = *planar(lifted_graph).embedding;
      } else {
        Budget witness_budget(options.budget_nodes);
        r.witness_embedding = *genus_exact(lifted_graph, witness_budget).witness;
      }
      r.genus_upper = t;
      r.witness = std::move(lifted.dfa);
      r.witness_projection = std::move(lifted.projection);
      r.top_size = r.witness.num_states();
      // Exact size when every smaller size was refuted at this genus.
      bool all_below = true;
      for (std::size_t s = n; s < r.top_size; ++s)
        all_below = all_below && std::count(res.exhausted_sizes.begin(), res.exhausted_sizes.end(), s);
      r.top_exact = proven == t && all_below;
      if (!r.top_exact) r.top_size = n;
      break;
    }
    if (res.status == SearchStatus::budget_exhausted) {
      r.budget_exhausted = true;
      break;
    }
    // Exhausted: a proof only when the size range is complete.
    if (r.membership.in_class && proven == t) proven = t + 1;
  }
  r.nodes += search_budget.used();
  r.genus_lower = std::min(proven, r.genus_upper);
  r.genus_exact = r.genus_lower == r.genus_upper;
  if (r.genus_exact && r.witness.num_states() == n) r.top_exact = true;
  r.budget_exhausted = r.budget_exhausted || (!cap.exact && !r.genus_exact);
  return r;
}

}  // namespace genuslab
