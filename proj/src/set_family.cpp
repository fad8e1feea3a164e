#include "dhg/set_family.hpp"

#include <algorithm>
#include <string>

#include "dhg/error.hpp"
#include "dhg/reachability.hpp"
#include "dhg/transitive_reduction.hpp"

namespace dhg {

void SetFamily::normalize() {
    for (auto& s : sets) {
        std::sort(s.begin(), s.end());
        s.erase(std::unique(s.begin(), s.end()), s.end());
        if (!s.empty() && s.back() >= domain_size) {
            raise(ErrorCode::VertexOutOfRange,
                  "element " + std::to_string(s.back()) + " outside domain of size " +
                      std::to_string(domain_size));
        }
    }
    auto sorted = sets;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
        raise(ErrorCode::DuplicateSet, "family contains the same set twice");
    }
}

namespace {

// Copy of the family with two fresh elements appended to every set whenever
// some set has fewer than two elements. The inclusion order is unchanged.
SetFamily padded_copy(const SetFamily& f) {
    SetFamily out = f;
    out.normalize();
    bool needs_padding = false;
    for (const auto& s : out.sets) {
        if (s.size() <= 1) {
            needs_padding = true;
            break;
        }
    }
    if (needs_padding) {
        for (auto& s : out.sets) {
            s.push_back(out.domain_size);
            s.push_back(out.domain_size + 1);
        }
        out.domain_size += 2;
    }
    return out;
}

void add_pair_arcs(Hypergraph& h, const SubsetHypergraph& shape,
                   const SetFamily& padded) {
    std::vector<VertexId> elems;
    for (std::uint32_t k = 0; k < padded.sets.size(); ++k) {
        elems.clear();
        for (std::uint32_t x : padded.sets[k]) {
            elems.push_back(shape.element_vertex(x));
        }
        h.add_hyperarc({shape.set_vertex(k)}, elems);
        h.add_hyperarc(elems, {shape.set_vertex(k)});
    }
}

} // namespace

SubsetHypergraph build_subset_hypergraph(const SetFamily& f) {
    const SetFamily padded = padded_copy(f);
    SubsetHypergraph out;
    out.n_sets = static_cast<std::uint32_t>(padded.sets.size());
    out.padded_domain = padded.domain_size;
    out.hypergraph = Hypergraph(out.n_sets + out.padded_domain);
    add_pair_arcs(out.hypergraph, out, padded);
    return out;
}

SubsetHypergraph build_minimal_hypergraph(const SetFamily& f) {
    const SetFamily padded = padded_copy(f);
    SubsetHypergraph out;
    out.n_sets = static_cast<std::uint32_t>(padded.sets.size());
    out.padded_domain = padded.domain_size;
    out.minimal_extension = true;
    out.hypergraph = Hypergraph(2 * out.n_sets + 2 * out.padded_domain + 2);
    Hypergraph& h = out.hypergraph;

    add_pair_arcs(h, out, padded);

    // set vertex to the counter of its cardinality minus one
    for (std::uint32_t k = 0; k < out.n_sets; ++k) {
        const std::uint32_t card = static_cast<std::uint32_t>(padded.sets[k].size());
        h.add_hyperarc({out.set_vertex(k)}, {out.counter_vertex(card - 1)});
    }
    // counter i to the witnesses of all sets of cardinality i
    for (std::uint32_t i = 0; i <= out.padded_domain; ++i) {
        std::vector<VertexId> witnesses;
        for (std::uint32_t k = 0; k < out.n_sets; ++k) {
            if (padded.sets[k].size() == i) {
                witnesses.push_back(out.witness_vertex(k));
            }
        }
        if (!witnesses.empty()) {
            h.add_hyperarc({out.counter_vertex(i)}, witnesses);
        }
    }
    // descending counter chain
    for (std::uint32_t i = 1; i <= out.padded_domain; ++i) {
        h.add_hyperarc({out.counter_vertex(i)}, {out.counter_vertex(i - 1)});
    }
    // a set vertex together with its witness reaches the superset vertex
    for (std::uint32_t k = 0; k < out.n_sets; ++k) {
        h.add_hyperarc({out.set_vertex(k), out.witness_vertex(k)},
                       {out.superset_vertex()});
    }
    // and the superset vertex reaches every set vertex
    for (std::uint32_t k = 0; k < out.n_sets; ++k) {
        h.add_hyperarc({out.superset_vertex()}, {out.set_vertex(k)});
    }
    return out;
}

std::vector<std::uint32_t> minimal_sets(const SetFamily& f) {
    const SubsetHypergraph built = build_minimal_hypergraph(f);
    std::vector<std::uint32_t> out;
    ReachScratch scratch;
    for (std::uint32_t k = 0; k < built.n_sets; ++k) {
        const ReachSet reach =
            reachable_set(built.hypergraph, built.set_vertex(k), scratch);
        if (!reach.contains(built.superset_vertex())) {
            out.push_back(k);
        }
    }
    return out;
}

std::vector<std::uint32_t> minimal_sets_bruteforce(const SetFamily& f) {
    SetFamily norm = f;
    norm.normalize();
    std::vector<std::uint32_t> out;
    for (std::uint32_t k = 0; k < norm.sets.size(); ++k) {
        bool minimal = true;
        for (std::uint32_t other = 0; other < norm.sets.size(); ++other) {
            if (other == k) continue;
            if (std::includes(norm.sets[k].begin(), norm.sets[k].end(),
                              norm.sets[other].begin(), norm.sets[other].end())) {
                minimal = false;
                break;
            }
        }
        if (minimal) out.push_back(k);
    }
    return out;
}

bool is_sperner(const SetFamily& f) {
    return minimal_sets(f).size() == f.sets.size();
}

namespace {

// All k-subsets of {base, ..., base+width-1} in lexicographic order.
std::vector<std::vector<std::uint32_t>> combinations(std::uint32_t base,
                                                     std::uint32_t width,
                                                     std::uint32_t k) {
    std::vector<std::vector<std::uint32_t>> out;
    std::vector<std::uint32_t> cur(k);
    for (std::uint32_t i = 0; i < k; ++i) cur[i] = base + i;
    for (;;) {
        out.push_back(cur);
        std::int64_t pos = static_cast<std::int64_t>(k) - 1;
        while (pos >= 0 && cur[pos] == base + width - k + pos) --pos;
        if (pos < 0) break;
        ++cur[pos];
        for (std::uint32_t i = static_cast<std::uint32_t>(pos) + 1; i < k; ++i) {
            cur[i] = cur[i - 1] + 1;
        }
    }
    return out;
}

} // namespace

SetFamily lower_bound_family(std::uint32_t n) {
    if (n < 4 || n % 4 != 0) {
        raise(ErrorCode::BadN, "n must be a positive multiple of 4, got " +
                                   std::to_string(n));
    }
    SetFamily out;
    out.domain_size = n;
    const std::uint32_t half = n / 2;
    const std::uint32_t quarter = n / 4;

    for (auto& s : combinations(0, half, quarter)) {
        out.sets.push_back(std::move(s));
    }
    for (auto& tail_part : combinations(half, half, quarter)) {
        std::vector<std::uint32_t> s;
        for (std::uint32_t x = 0; x < half; ++x) s.push_back(x);
        s.insert(s.end(), tail_part.begin(), tail_part.end());
        out.sets.push_back(std::move(s));
    }
    out.normalize();
    return out;
}

std::vector<std::pair<std::uint32_t, std::uint32_t>>
subset_order_transitive_reduction(const SetFamily& f) {
    SetFamily norm = f;
    norm.normalize();
    const std::uint32_t count = static_cast<std::uint32_t>(norm.sets.size());
    auto proper_subset = [&](std::uint32_t a, std::uint32_t b) {
        return norm.sets[a].size() < norm.sets[b].size() &&
               std::includes(norm.sets[b].begin(), norm.sets[b].end(),
                             norm.sets[a].begin(), norm.sets[a].end());
    };

    std::vector<std::pair<std::uint32_t, std::uint32_t>> out;
    for (std::uint32_t a = 0; a < count; ++a) {
        for (std::uint32_t b = 0; b < count; ++b) {
            if (!proper_subset(a, b)) continue;
            bool covering = true;
            for (std::uint32_t mid = 0; mid < count; ++mid) {
                if (proper_subset(a, mid) && proper_subset(mid, b)) {
                    covering = false;
                    break;
                }
            }
            if (covering) out.emplace_back(a, b);
        }
    }
    return out;
}

std::vector<std::uint32_t> linear_extension(const SetFamily& f) {
    const SubsetHypergraph built = build_subset_hypergraph(f);
    const std::vector<VertexId> order = topological_sort(built.hypergraph);
    std::vector<std::uint32_t> out;
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        if (*it < built.n_sets) {
            out.push_back(*it);
        }
    }
    return out;
}

} // namespace dhg
