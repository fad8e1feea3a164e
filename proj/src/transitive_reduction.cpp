#include "dhg/transitive_reduction.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "dhg/error.hpp"
#include "dhg/set_family.hpp"

namespace dhg {

void Preorder::validate() const {
    if (!relation_.is_reflexive() || !relation_.is_transitive()) {
        raise(ErrorCode::NotTransitive, "relation is not a preorder");
    }
}

namespace {

struct Condensation {
    std::vector<std::vector<VertexId>> classes; // members ascending, ordered by rep
    std::vector<std::uint32_t> class_of;
};

Condensation condense(const Preorder& p) {
    const std::uint32_t n = p.vertex_count();
    Condensation out;
    out.class_of.assign(n, 0);
    std::vector<char> assigned(n, 0);
    for (VertexId u = 0; u < n; ++u) {
        if (assigned[u]) continue;
        std::vector<VertexId> members;
        for (VertexId v = u; v < n; ++v) {
            if (!assigned[v] && p.at(u, v) && p.at(v, u)) {
                assigned[v] = 1;
                out.class_of[v] = static_cast<std::uint32_t>(out.classes.size());
                members.push_back(v);
            }
        }
        out.classes.push_back(std::move(members));
    }
    return out;
}

} // namespace

TransitiveReduction transitive_reduction(const Preorder& p) {
#ifndef NDEBUG
    p.validate();
#endif
    const Condensation cond = condense(p);
    const std::uint32_t k = static_cast<std::uint32_t>(cond.classes.size());

    TransitiveReduction out;
    // ascending cycle inside every non-trivial class
    for (const auto& members : cond.classes) {
        if (members.size() < 2) continue;
        for (std::size_t i = 0; i + 1 < members.size(); ++i) {
            out.pairs.emplace_back(members[i], members[i + 1]);
        }
        out.pairs.emplace_back(members.back(), members.front());
    }

    // covering pairs of the condensation order, on class representatives
    std::vector<std::vector<char>> leq(k, std::vector<char>(k, 0));
    for (std::uint32_t a = 0; a < k; ++a) {
        for (std::uint32_t b = 0; b < k; ++b) {
            leq[a][b] = a != b && p.at(cond.classes[a].front(), cond.classes[b].front());
        }
    }
    for (std::uint32_t a = 0; a < k; ++a) {
        for (std::uint32_t b = 0; b < k; ++b) {
            if (!leq[a][b]) continue;
            bool covering = true;
            for (std::uint32_t mid = 0; mid < k; ++mid) {
                if (leq[a][mid] && leq[mid][b]) {
                    covering = false;
                    break;
                }
            }
            if (covering) {
                out.pairs.emplace_back(cond.classes[a].front(), cond.classes[b].front());
            }
        }
    }
    std::sort(out.pairs.begin(), out.pairs.end());
    return out;
}

std::uint64_t transitive_reduction_size(const Hypergraph& h) {
    return transitive_reduction(Preorder(reachability_relation(h))).pairs.size();
}

std::vector<VertexId> topological_sort(const Hypergraph& h) {
    const std::uint32_t n = h.vertex_count();
    const ReachRelation rel = reachability_relation(h);
    for (VertexId u = 0; u < n; ++u) {
        for (VertexId v = 0; v < n; ++v) {
            if (u != v && rel.at(u, v) && rel.at(v, u)) {
                raise(ErrorCode::CyclicHypergraph,
                      "vertices " + std::to_string(u) + " and " + std::to_string(v) +
                          " are mutually reachable");
            }
        }
    }

    // Kahn over the (transitively closed) predecessor counts, smallest ready
    // id first.
    std::vector<std::uint32_t> preds(n, 0);
    for (VertexId u = 0; u < n; ++u) {
        for (VertexId v = 0; v < n; ++v) {
            if (u != v && rel.at(u, v)) {
                ++preds[v];
            }
        }
    }
    std::set<VertexId> ready;
    for (VertexId v = 0; v < n; ++v) {
        if (preds[v] == 0) ready.insert(v);
    }
    std::vector<VertexId> order;
    order.reserve(n);
    while (!ready.empty()) {
        const VertexId u = *ready.begin();
        ready.erase(ready.begin());
        order.push_back(u);
        for (VertexId v = 0; v < n; ++v) {
            if (u != v && rel.at(u, v)) {
                if (--preds[v] == 0) ready.insert(v);
            }
        }
    }
    return order;
}

std::vector<GrowthRow> growth_experiment(const std::vector<std::uint32_t>& n_values) {
    std::vector<GrowthRow> rows;
    for (std::uint32_t n : n_values) {
        if (n > 16) {
            raise(ErrorCode::BadN,
                  "growth experiment capped at n = 16, got " + std::to_string(n));
        }
        const SetFamily family = lower_bound_family(n);
        const SubsetHypergraph built = build_subset_hypergraph(family);
        GrowthRow row;
        row.n = n;
        row.hypergraph_size = built.hypergraph.size();
        row.reduction_size = transitive_reduction_size(built.hypergraph);
        rows.push_back(row);
    }
    return rows;
}

} // namespace dhg
