#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "dhg/hypergraph.hpp"

namespace dhg {

/// One Horn clause: an implication premises => conclusion, a fact (a bare
/// positive variable), or a goal (a disjunction of negated variables).
/// Variables are 1-based.
struct HornClause {
    enum class Kind { Implication, Fact, Goal };

    Kind kind = Kind::Fact;
    std::vector<std::uint32_t> premises; // sorted, non-empty for Implication/Goal
    std::uint32_t conclusion = 0;        // Implication/Fact only

    bool operator==(const HornClause&) const = default;
};

/// Conjunction of Horn clauses over variables 1..n_vars. Every variable must
/// occur in at least one clause; validate() enforces this together with the
/// range checks.
struct HornFormula {
    std::uint32_t n_vars = 0;
    std::vector<HornClause> clauses;

    static HornClause implication(std::vector<std::uint32_t> premises,
                                  std::uint32_t conclusion);
    static HornClause fact(std::uint32_t var);
    static HornClause goal(std::vector<std::uint32_t> premises);

    /// Throws UnusedVariable / VertexOutOfRange / InvalidArgument on a
    /// malformed formula.
    void validate() const;

    bool operator==(const HornFormula&) const = default;
};

/// The hypergraph encoding of a Horn formula. Variable i maps to vertex i-1;
/// the two special vertices take the highest ids: true_vertex = n and
/// false_vertex = n+1.
struct HornHypergraph {
    Hypergraph hypergraph;
    std::uint32_t n_vars = 0;

    VertexId variable_vertex(std::uint32_t var) const { return var - 1; }
    VertexId true_vertex() const { return n_vars; }
    VertexId false_vertex() const { return n_vars + 1; }
};

/// Builds the encoding: an arc (premises, conclusion) per implication,
/// ({t},{i}) per fact, (premises,{f}) per goal, plus ({f},{1..n}) and
/// ({i},{t}) for every variable. Size is linear in the formula size.
HornHypergraph build_horn_hypergraph(const HornFormula& f);

/// Does F entail X_i => X_j? Decided as reachability of j's vertex from i's
/// vertex in the hypergraph encoding.
bool entails_implication(const HornFormula& f, std::uint32_t i, std::uint32_t j);
bool entails_implication(const HornHypergraph& hg, std::uint32_t i, std::uint32_t j);

/// Model-enumeration oracle over all 2^n assignments. Throws
/// TooManyVariables beyond 20 variables.
bool entails_bruteforce(const HornFormula& f, std::uint32_t i, std::uint32_t j);

/// Smallest variable j with F |= X_i => X_j for every i, if one exists.
/// Fast path: a unique terminal component containing a variable vertex
/// settles the answer; otherwise falls back to the full entailment relation.
std::optional<std::uint32_t> variable_implied_by_all(const HornFormula& f);

/// True iff F |= X_i <=> X_j for all pairs.
bool all_variables_equivalent(const HornFormula& f);

} // namespace dhg
