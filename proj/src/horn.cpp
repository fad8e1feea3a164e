#include "dhg/horn.hpp"

#include <algorithm>
#include <string>

#include "dhg/error.hpp"
#include "dhg/reachability.hpp"
#include "dhg/terminal_scc.hpp"

namespace dhg {

namespace {

std::vector<std::uint32_t> canonical_vars(std::vector<std::uint32_t> vars) {
    std::sort(vars.begin(), vars.end());
    vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
    return vars;
}

} // namespace

HornClause HornFormula::implication(std::vector<std::uint32_t> premises,
                                    std::uint32_t conclusion) {
    HornClause c;
    c.kind = HornClause::Kind::Implication;
    c.premises = canonical_vars(std::move(premises));
    c.conclusion = conclusion;
    return c;
}

HornClause HornFormula::fact(std::uint32_t var) {
    HornClause c;
    c.kind = HornClause::Kind::Fact;
    c.conclusion = var;
    return c;
}

HornClause HornFormula::goal(std::vector<std::uint32_t> premises) {
    HornClause c;
    c.kind = HornClause::Kind::Goal;
    c.premises = canonical_vars(std::move(premises));
    return c;
}

void HornFormula::validate() const {
    if (n_vars == 0) {
        raise(ErrorCode::InvalidArgument, "formula needs at least one variable");
    }
    std::vector<char> occurs(n_vars + 1, 0);
    auto touch = [&](std::uint32_t var) {
        if (var == 0 || var > n_vars) {
            raise(ErrorCode::VertexOutOfRange,
                  "variable " + std::to_string(var) + " out of range 1.." +
                      std::to_string(n_vars));
        }
        occurs[var] = 1;
    };
    for (const HornClause& c : clauses) {
        switch (c.kind) {
        case HornClause::Kind::Implication:
            if (c.premises.empty()) {
                raise(ErrorCode::InvalidArgument, "implication needs premises");
            }
            for (std::uint32_t v : c.premises) touch(v);
            touch(c.conclusion);
            break;
        case HornClause::Kind::Fact:
            touch(c.conclusion);
            break;
        case HornClause::Kind::Goal:
            if (c.premises.empty()) {
                raise(ErrorCode::InvalidArgument, "goal needs premises");
            }
            for (std::uint32_t v : c.premises) touch(v);
            break;
        }
    }
    for (std::uint32_t v = 1; v <= n_vars; ++v) {
        if (!occurs[v]) {
            raise(ErrorCode::UnusedVariable,
                  "variable " + std::to_string(v) + " occurs in no clause");
        }
    }
}

HornHypergraph build_horn_hypergraph(const HornFormula& f) {
    f.validate();
    HornHypergraph out;
    out.n_vars = f.n_vars;
    Hypergraph h(f.n_vars + 2);
    const VertexId t = out.true_vertex();
    const VertexId fv = out.false_vertex();

    std::vector<VertexId> tmp;
    for (const HornClause& c : f.clauses) {
        tmp.clear();
        for (std::uint32_t v : c.premises) tmp.push_back(v - 1);
        switch (c.kind) {
        case HornClause::Kind::Implication:
            h.add_hyperarc(tmp, {static_cast<VertexId>(c.conclusion - 1)});
            break;
        case HornClause::Kind::Fact:
            h.add_hyperarc({t}, {static_cast<VertexId>(c.conclusion - 1)});
            break;
        case HornClause::Kind::Goal:
            h.add_hyperarc(tmp, {fv});
            break;
        }
    }
    tmp.clear();
    for (std::uint32_t v = 0; v < f.n_vars; ++v) tmp.push_back(v);
    h.add_hyperarc({fv}, tmp);
    for (std::uint32_t v = 0; v < f.n_vars; ++v) {
        h.add_hyperarc({static_cast<VertexId>(v)}, {t});
    }

    out.hypergraph = std::move(h);
    return out;
}

namespace {

void check_var(const std::uint32_t n_vars, std::uint32_t var) {
    if (var == 0 || var > n_vars) {
        raise(ErrorCode::VertexOutOfRange,
              "variable " + std::to_string(var) + " out of range");
    }
}

} // namespace

bool entails_implication(const HornHypergraph& hg, std::uint32_t i, std::uint32_t j) {
    check_var(hg.n_vars, i);
    check_var(hg.n_vars, j);
    return is_reachable(hg.hypergraph, hg.variable_vertex(i), hg.variable_vertex(j));
}

bool entails_implication(const HornFormula& f, std::uint32_t i, std::uint32_t j) {
    return entails_implication(build_horn_hypergraph(f), i, j);
}

bool entails_bruteforce(const HornFormula& f, std::uint32_t i, std::uint32_t j) {
    f.validate();
    check_var(f.n_vars, i);
    check_var(f.n_vars, j);
    if (f.n_vars > 20) {
        raise(ErrorCode::TooManyVariables,
              "model enumeration limited to 20 variables, got " +
                  std::to_string(f.n_vars));
    }

    const std::uint32_t n = f.n_vars;
    for (std::uint32_t assignment = 0; assignment < (1u << n); ++assignment) {
        auto holds = [&](std::uint32_t var) {
            return (assignment >> (var - 1)) & 1u;
        };
        bool model = true;
        for (const HornClause& c : f.clauses) {
            bool premises_hold = true;
            for (std::uint32_t v : c.premises) {
                if (!holds(v)) {
                    premises_hold = false;
                    break;
                }
            }
            switch (c.kind) {
            case HornClause::Kind::Implication:
                model = !premises_hold || holds(c.conclusion);
                break;
            case HornClause::Kind::Fact:
                model = holds(c.conclusion);
                break;
            case HornClause::Kind::Goal:
                model = !premises_hold;
                break;
            }
            if (!model) break;
        }
        if (model && holds(i) && !holds(j)) {
            return false;
        }
    }
    return true;
}

std::optional<std::uint32_t> variable_implied_by_all(const HornFormula& f) {
    const HornHypergraph hg = build_horn_hypergraph(f);

    // Fast path: with a unique terminal component that contains a variable
    // vertex, every vertex reaches it, and no qualifying variable can live
    // outside it (a variable inside reaches only the component).
    const auto comps = terminal_sccs(hg.hypergraph).terminal_components();
    if (comps.size() == 1) {
        for (VertexId v : comps.front().members) {
            if (v < hg.n_vars) {
                return v + 1;
            }
        }
    }

    // Authoritative: column scan of the variable-to-variable entailment
    // relation.
    const std::uint32_t n = hg.n_vars;
    std::vector<char> qualifies(n + 1, 1);
    ReachScratch scratch;
    for (std::uint32_t i = 1; i <= n; ++i) {
        const ReachSet row = reachable_set(hg.hypergraph, hg.variable_vertex(i), scratch);
        for (std::uint32_t j = 1; j <= n; ++j) {
            if (!row.contains(hg.variable_vertex(j))) {
                qualifies[j] = 0;
            }
        }
    }
    for (std::uint32_t j = 1; j <= n; ++j) {
        if (qualifies[j]) return j;
    }
    return std::nullopt;
}

bool all_variables_equivalent(const HornFormula& f) {
    const HornHypergraph hg = build_horn_hypergraph(f);
    const std::uint32_t n = hg.n_vars;
    ReachScratch scratch;
    for (std::uint32_t i = 1; i <= n; ++i) {
        const ReachSet row = reachable_set(hg.hypergraph, hg.variable_vertex(i), scratch);
        for (std::uint32_t j = 1; j <= n; ++j) {
            if (!row.contains(hg.variable_vertex(j))) {
                return false;
            }
        }
    }
    return true;
}

} // namespace dhg
