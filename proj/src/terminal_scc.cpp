#include "dhg/terminal_scc.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

#include "dhg/error.hpp"
#include "dhg/reachability.hpp"
#include "dhg/union_find.hpp"

namespace dhg {

std::vector<Component> TerminalSccResult::terminal_components() const {
    std::vector<Component> out;
    for (const Component& c : components) {
        if (c.terminal) out.push_back(c);
    }
    return out;
}

namespace {

constexpr std::int64_t kNil = -1;

void sort_components(std::vector<Component>& comps) {
    std::sort(comps.begin(), comps.end(), [](const Component& a, const Component& b) {
        return a.members.front() < b.members.front();
    });
}

// One traversal owns this state exclusively; the hypergraph is shared
// read-only.
class Traversal {
public:
    Traversal(const Hypergraph& h, const TerminalSccOptions& options)
        : h_(h),
          options_(options),
          uf_(h.vertex_count()),
          index_(h.vertex_count(), kNil),
          low_(h.vertex_count(), kNil),
          is_term_(h.vertex_count(), 0),
          on_stack_(h.vertex_count(), 0),
          finished_(h.vertex_count(), 0),
          pending_arcs_(h.vertex_count()),
          arc_root_(h.arc_count(), kNil),
          arc_counter_(h.arc_count(), 0) {
        if (options_.check_invariants) {
            f_push_count_.assign(h.arc_count(), 0);
            fu_push_count_.assign(h.arc_count(), 0);
        }
    }

    TerminalSccResult run() {
        const std::uint32_t n = h_.vertex_count();
        for (VertexId u = 0; u < n; ++u) {
            uf_.make_set(u);
        }
        if (options_.visit_order.empty()) {
            for (VertexId u = 0; u < n; ++u) {
                if (index_[u] == kNil) visit(u);
            }
        } else {
            check_visit_order();
            for (VertexId u : options_.visit_order) {
                if (index_[u] == kNil) visit(u);
            }
        }
        return gather();
    }

private:
    struct Frame {
        VertexId rep = 0;
        std::vector<ArcIndex> local_arcs; // arcs currently simple out of rep
        ArcIndex cur_arc = 0;
        std::uint32_t head_pos = 0;
        bool has_cur = false;
        bool awaiting_child = false;
    };

    void check_visit_order() {
        if (options_.visit_order.size() != h_.vertex_count()) {
            raise(ErrorCode::InvalidArgument, "visit order must list every vertex once");
        }
        std::vector<char> seen(h_.vertex_count(), 0);
        for (VertexId u : options_.visit_order) {
            if (u >= h_.vertex_count() || seen[u]) {
                raise(ErrorCode::InvalidArgument, "visit order is not a permutation");
            }
            seen[u] = 1;
        }
    }

    void push_stack(VertexId v) {
        stack_.push_back(v);
        on_stack_[v] = 1;
    }

    VertexId pop_stack() {
        const VertexId v = stack_.back();
        stack_.pop_back();
        on_stack_[v] = 0;
        return v;
    }

    // First visit of a vertex: assign visit number, push it, and scan its
    // incident arcs. Simple arcs go straight to the local stack; for the
    // others the arc root and counter are maintained, and an arc whose
    // counter reaches the tail size is parked on the root's pending stack.
    Frame enter(VertexId u) {
        const VertexId rep = uf_.find(u); // an unvisited class is a singleton
        index_[rep] = visit_counter_;
        low_[rep] = visit_counter_;
        ++visit_counter_;
        is_term_[rep] = 1;
        push_stack(rep);

        Frame frame;
        frame.rep = rep;
        for (ArcIndex a : h_.incident_arcs(u)) {
            const Hyperarc& arc = h_.arc(a);
            if (arc.is_simple()) {
                frame.local_arcs.push_back(a);
                note_f_push(a);
            } else {
                if (arc_root_[a] == kNil) {
                    arc_root_[a] = u;
                }
                const VertexId root_rep = uf_.find(static_cast<VertexId>(arc_root_[a]));
                if (on_stack_[root_rep]) {
                    if (++arc_counter_[a] == arc.tail.size()) {
                        pending_arcs_[root_rep].push_back(a);
                        note_fu_push(a);
                    }
                }
            }
        }
        if (options_.check_invariants) {
            validate_state();
        }
        return frame;
    }

    void link_head_class(Frame& frame, VertexId head_rep) {
        if (finished_[head_rep]) {
            is_term_[frame.rep] = 0;
        } else {
            low_[frame.rep] = std::min(low_[frame.rep], low_[head_rep]);
            is_term_[frame.rep] = is_term_[frame.rep] && is_term_[head_rep];
        }
    }

    void drain_pending(VertexId v, std::vector<ArcIndex>& local_arcs) {
        auto& pending = pending_arcs_[v];
        while (!pending.empty()) {
            local_arcs.push_back(pending.back());
            pending.pop_back();
            note_f_push(local_arcs.back());
        }
    }

    void note_f_push(ArcIndex a) {
        ++f_pushes_;
        if (options_.check_invariants && ++f_push_count_[a] > 1) {
            throw std::logic_error("arc pushed twice on a local stack");
        }
    }

    void note_fu_push(ArcIndex a) {
        ++fu_pushes_;
        if (options_.check_invariants && ++fu_push_count_[a] > 1) {
            throw std::logic_error("arc pushed twice on a pending stack");
        }
    }

    // Depth-first search from u over the digraph of currently-simple arcs,
    // with the recursion replaced by an explicit frame stack. A frame whose
    // local arc stack runs dry closes: if its class is the root of a terminal
    // digraph SCC, the SCC is merged into one vertex, which is re-entered as
    // if freshly visited whenever the merge released new simple arcs.
    void visit(VertexId u0) {
        std::vector<Frame> frames;
        frames.push_back(enter(u0));
        VertexId completed_rep = 0;

        while (!frames.empty()) {
            Frame& frame = frames.back();

            if (frame.awaiting_child) {
                frame.awaiting_child = false;
                link_head_class(frame, completed_rep);
            }

            bool spawned = false;
            for (;;) {
                if (!frame.has_cur) {
                    if (frame.local_arcs.empty()) break;
                    frame.cur_arc = frame.local_arcs.back();
                    frame.local_arcs.pop_back();
                    frame.has_cur = true;
                    frame.head_pos = 0;
                }
                const auto& heads = h_.arc(frame.cur_arc).head;
                if (frame.head_pos == heads.size()) {
                    frame.has_cur = false;
                    continue;
                }
                const VertexId w = heads[frame.head_pos++];
                ++inner_loop_iterations_;
                const VertexId head_rep = uf_.find(w);
                if (index_[head_rep] == kNil) {
                    frame.awaiting_child = true;
                    frames.push_back(enter(w));
                    spawned = true;
                    break;
                }
                link_head_class(frame, head_rep);
            }
            if (spawned) continue;

            if (low_[frame.rep] == index_[frame.rep]) {
                if (is_term_[frame.rep]) {
                    const std::int64_t scc_index = index_[frame.rep];
                    drain_pending(frame.rep, frame.local_arcs);
                    VertexId v = pop_stack();
                    while (index_[v] > scc_index) {
                        drain_pending(v, frame.local_arcs);
                        frame.rep = uf_.merge(frame.rep, v);
                        v = pop_stack();
                    }
                    // The merged vertex resumes as if freshly visited with
                    // number scc_index; the surviving slot may carry a stale
                    // low value from before the merge.
                    index_[frame.rep] = scc_index;
                    low_[frame.rep] = scc_index;
                    is_term_[frame.rep] = 1;
                    push_stack(frame.rep);
                    if (options_.check_invariants) {
                        validate_state();
                    }
                    if (!frame.local_arcs.empty()) {
                        continue;
                    }
                }
                // The popped classes form the digraph SCC rooted here;
                // terminality is decided by the root's flag, so a false root
                // overrides the members' provisional true.
                const bool root_terminal = is_term_[frame.rep] != 0;
                VertexId v;
                do {
                    v = pop_stack();
                    if (!root_terminal) is_term_[v] = 0;
                    finished_[v] = 1;
                } while (index_[v] != index_[frame.rep]);
                if (options_.check_invariants) {
                    validate_state();
                }
            }

            completed_rep = frame.rep;
            frames.pop_back();
        }
    }

    TerminalSccResult gather() {
        TerminalSccResult result;
        result.stats.makeset_calls = uf_.counters().makeset_calls;
        result.stats.find_calls = uf_.counters().find_calls;
        result.stats.merge_calls = uf_.counters().merge_calls;
        result.stats.fu_pushes = fu_pushes_;
        result.stats.f_pushes = f_pushes_;
        result.stats.inner_loop_iterations = inner_loop_iterations_;

        const std::uint32_t n = h_.vertex_count();
        std::vector<std::vector<VertexId>> members(n);
        for (VertexId v = 0; v < n; ++v) {
            members[uf_.representative(v)].push_back(v);
        }
        for (VertexId rep = 0; rep < n; ++rep) {
            if (members[rep].empty()) continue;
            Component comp;
            comp.members = std::move(members[rep]);
            comp.terminal = is_term_[rep] != 0;
            result.components.push_back(std::move(comp));
        }
        sort_components(result.components);

        if (options_.trace) {
            options_.trace->root = arc_root_;
            options_.trace->counter = arc_counter_;
        }
        return result;
    }

    // Re-derives, from scratch, the value each arc counter must hold: the
    // number of visited tail vertices whose class is reachable from the arc
    // root's class in the digraph of currently-simple arcs. Also checks the
    // stack/finished exclusivity and the counter range.
    void validate_state() {
        const std::uint32_t n = h_.vertex_count();
        std::vector<VertexId> rep(n);
        for (VertexId v = 0; v < n; ++v) {
            rep[v] = uf_.representative(v);
            if (on_stack_[v] && finished_[v]) {
                throw std::logic_error("class both on the stack and finished");
            }
        }

        std::vector<std::vector<VertexId>> adj(n);
        for (const Hyperarc& arc : h_.arcs()) {
            const VertexId tail_rep = rep[arc.tail.front()];
            bool simple_now = true;
            for (VertexId t : arc.tail) {
                if (rep[t] != tail_rep) {
                    simple_now = false;
                    break;
                }
            }
            if (!simple_now) continue;
            for (VertexId hd : arc.head) {
                adj[tail_rep].push_back(rep[hd]);
            }
        }

        std::vector<char> reach(n);
        std::vector<VertexId> queue;
        for (ArcIndex a = 0; a < h_.arc_count(); ++a) {
            const Hyperarc& arc = h_.arc(a);
            if (arc.is_simple()) continue;
            if (arc_counter_[a] > arc.tail.size()) {
                throw std::logic_error("arc counter above tail size");
            }
            if (arc_root_[a] == kNil) {
                if (arc_counter_[a] != 0) {
                    throw std::logic_error("counter set before arc root");
                }
                continue;
            }
            std::fill(reach.begin(), reach.end(), 0);
            queue.clear();
            const VertexId source = rep[static_cast<VertexId>(arc_root_[a])];
            reach[source] = 1;
            queue.push_back(source);
            while (!queue.empty()) {
                const VertexId v = queue.back();
                queue.pop_back();
                for (VertexId w : adj[v]) {
                    if (!reach[w]) {
                        reach[w] = 1;
                        queue.push_back(w);
                    }
                }
            }
            std::uint32_t expected = 0;
            for (VertexId t : arc.tail) {
                if (index_[t] != kNil && reach[rep[t]]) {
                    ++expected;
                }
            }
            if (arc_counter_[a] != expected) {
                throw std::logic_error("arc counter " + std::to_string(arc_counter_[a]) +
                                       " disagrees with recomputation " +
                                       std::to_string(expected));
            }
        }
    }

    const Hypergraph& h_;
    TerminalSccOptions options_;
    UnionFind uf_;
    std::vector<std::int64_t> index_;
    std::vector<std::int64_t> low_;
    std::vector<char> is_term_;
    std::vector<char> on_stack_;
    std::vector<char> finished_;
    std::vector<VertexId> stack_;
    std::vector<std::vector<ArcIndex>> pending_arcs_;
    std::vector<std::int64_t> arc_root_;
    std::vector<std::uint32_t> arc_counter_;
    std::int64_t visit_counter_ = 0;
    std::uint64_t fu_pushes_ = 0;
    std::uint64_t f_pushes_ = 0;
    std::uint64_t inner_loop_iterations_ = 0;
    std::vector<std::uint8_t> f_push_count_;
    std::vector<std::uint8_t> fu_push_count_;
};

} // namespace

TerminalSccResult terminal_sccs(const Hypergraph& h, const TerminalSccOptions& options) {
    Traversal traversal(h, options);
    return traversal.run();
}

std::vector<Component> tarjan_digraph_sccs(const Digraph& g) {
    const std::uint32_t n = g.vertex_count;
    std::vector<std::vector<VertexId>> adj(n);
    for (auto [u, v] : g.arcs) {
        adj[u].push_back(v);
    }

    constexpr std::int64_t nil = -1;
    std::vector<std::int64_t> index(n, nil), low(n, nil), comp_of(n, nil);
    std::vector<char> on_stack(n, 0);
    std::vector<VertexId> stack;
    std::int64_t counter = 0;
    std::int64_t comp_count = 0;

    struct DfsFrame {
        VertexId v;
        std::uint32_t next = 0;
    };
    std::vector<DfsFrame> frames;

    for (VertexId start = 0; start < n; ++start) {
        if (index[start] != nil) continue;
        frames.push_back({start});
        index[start] = low[start] = counter++;
        stack.push_back(start);
        on_stack[start] = 1;

        while (!frames.empty()) {
            DfsFrame& fr = frames.back();
            const VertexId v = fr.v;
            if (fr.next < adj[v].size()) {
                const VertexId w = adj[v][fr.next++];
                if (index[w] == nil) {
                    index[w] = low[w] = counter++;
                    stack.push_back(w);
                    on_stack[w] = 1;
                    frames.push_back({w});
                } else if (on_stack[w]) {
                    low[v] = std::min(low[v], index[w]);
                }
                continue;
            }
            if (low[v] == index[v]) {
                VertexId w;
                do {
                    w = stack.back();
                    stack.pop_back();
                    on_stack[w] = 0;
                    comp_of[w] = comp_count;
                } while (w != v);
                ++comp_count;
            }
            frames.pop_back();
            if (!frames.empty()) {
                const VertexId parent = frames.back().v;
                low[parent] = std::min(low[parent], low[v]);
            }
        }
    }

    std::vector<char> terminal(comp_count, 1);
    for (auto [u, v] : g.arcs) {
        if (comp_of[u] != comp_of[v]) {
            terminal[comp_of[u]] = 0;
        }
    }

    std::vector<Component> comps(comp_count);
    for (VertexId v = 0; v < n; ++v) {
        comps[comp_of[v]].members.push_back(v);
    }
    for (std::int64_t c = 0; c < comp_count; ++c) {
        comps[c].terminal = terminal[c] != 0;
    }
    sort_components(comps);
    return comps;
}

std::vector<Component> terminal_sccs_naive(const Hypergraph& h) {
    constexpr VertexId unassigned = static_cast<VertexId>(-1);
    const std::uint32_t n = h.vertex_count();

    // cur_of maps original vertices to vertices of the working quotient.
    std::vector<VertexId> cur_of(n);
    std::iota(cur_of.begin(), cur_of.end(), 0);
    Hypergraph cur = h;
    std::uint32_t m = n;

    for (;;) {
        const Digraph g = graph_projection(cur);
        const std::vector<Component> comps = tarjan_digraph_sccs(g);

        std::vector<VertexId> merge_to(m);
        std::iota(merge_to.begin(), merge_to.end(), 0);
        bool merged_any = false;
        for (const Component& c : comps) {
            if (c.terminal && c.members.size() > 1) {
                merged_any = true;
                for (VertexId v : c.members) {
                    merge_to[v] = c.members.front();
                }
            }
        }

        if (!merged_any) {
            std::vector<Component> out;
            for (const Component& c : comps) {
                if (!c.terminal) continue;
                Component back;
                back.terminal = true;
                for (VertexId v = 0; v < n; ++v) {
                    if (cur_of[v] == c.members.front()) {
                        back.members.push_back(v);
                    }
                }
                out.push_back(std::move(back));
            }
            sort_components(out);
            return out;
        }

        std::vector<VertexId> compact(m, unassigned);
        std::uint32_t next = 0;
        std::vector<VertexId> f(m);
        for (VertexId v = 0; v < m; ++v) {
            const VertexId target = merge_to[v];
            if (compact[target] == unassigned) {
                compact[target] = next++;
            }
            f[v] = compact[target];
        }
        cur = image(cur, f, next);
        for (VertexId v = 0; v < n; ++v) {
            cur_of[v] = f[cur_of[v]];
        }
        m = next;
    }
}

std::vector<Component> all_sccs_bruteforce(const Hypergraph& h) {
    const std::uint32_t n = h.vertex_count();
    const ReachRelation rel = reachability_relation(h);

    constexpr std::int64_t unassigned = -1;
    std::vector<std::int64_t> comp_of(n, unassigned);
    std::vector<Component> comps;
    for (VertexId u = 0; u < n; ++u) {
        if (comp_of[u] != unassigned) continue;
        Component c;
        for (VertexId v = u; v < n; ++v) {
            if (rel.at(u, v) && rel.at(v, u)) {
                comp_of[v] = static_cast<std::int64_t>(comps.size());
                c.members.push_back(v);
            }
        }
        c.terminal = true;
        for (VertexId v = 0; v < n; ++v) {
            if (rel.at(u, v) && comp_of[v] != static_cast<std::int64_t>(comps.size())) {
                c.terminal = false;
                break;
            }
        }
        comps.push_back(std::move(c));
    }
    sort_components(comps);
    return comps;
}

namespace {

std::size_t count_terminal(const std::vector<Component>& comps) {
    std::size_t k = 0;
    for (const Component& c : comps) {
        if (c.terminal) ++k;
    }
    return k;
}

} // namespace

bool has_sink(const Hypergraph& h) {
    if (h.vertex_count() == 0) {
        raise(ErrorCode::EmptyHypergraph, "sink query on empty hypergraph");
    }
    return count_terminal(terminal_sccs(h).components) == 1;
}

bool is_strongly_connected(const Hypergraph& h) {
    if (h.vertex_count() == 0) {
        raise(ErrorCode::EmptyHypergraph, "connectivity query on empty hypergraph");
    }
    const TerminalSccResult result = terminal_sccs(h);
    for (const Component& c : result.components) {
        if (c.terminal) {
            return c.members.size() == h.vertex_count();
        }
    }
    return false;
}

} // namespace dhg
