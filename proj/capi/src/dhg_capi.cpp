#include "dhg.h"

#include <cstring>
#include <string>
#include <vector>

#include "dhg/error.hpp"
#include "dhg/horn.hpp"
#include "dhg/hypergraph.hpp"
#include "dhg/reachability.hpp"
#include "dhg/set_family.hpp"
#include "dhg/terminal_scc.hpp"
#include "dhg/text_io.hpp"
#include "dhg/transitive_reduction.hpp"

struct dhg_hypergraph {
    dhg::Hypergraph impl;
};

struct dhg_components {
    std::vector<dhg::Component> impl;
};

struct dhg_horn {
    dhg::HornFormula impl;
};

struct dhg_family {
    dhg::SetFamily impl;
};

namespace {

thread_local std::string last_error;

dhg_status status_of(dhg::ErrorCode code) {
    using dhg::ErrorCode;
    switch (code) {
    case ErrorCode::EmptyTail: return DHG_ERR_EMPTY_TAIL;
    case ErrorCode::EmptyHead: return DHG_ERR_EMPTY_HEAD;
    case ErrorCode::VertexOutOfRange: return DHG_ERR_VERTEX_OUT_OF_RANGE;
    case ErrorCode::DoubleInit: return DHG_ERR_DOUBLE_INIT;
    case ErrorCode::MergeSameClass: return DHG_ERR_MERGE_SAME_CLASS;
    case ErrorCode::NotRepresentative: return DHG_ERR_NOT_REPRESENTATIVE;
    case ErrorCode::EmptyHypergraph: return DHG_ERR_EMPTY_HYPERGRAPH;
    case ErrorCode::CyclicHypergraph: return DHG_ERR_CYCLIC;
    case ErrorCode::NotTransitive: return DHG_ERR_NOT_TRANSITIVE;
    case ErrorCode::TooManyVariables: return DHG_ERR_TOO_MANY_VARIABLES;
    case ErrorCode::UnusedVariable: return DHG_ERR_UNUSED_VARIABLE;
    case ErrorCode::DuplicateSet: return DHG_ERR_DUPLICATE_SET;
    case ErrorCode::BadN: return DHG_ERR_BAD_N;
    case ErrorCode::ParseError: return DHG_ERR_PARSE;
    case ErrorCode::InvalidArgument: return DHG_ERR_INVALID_ARGUMENT;
    }
    return DHG_ERR_INTERNAL;
}

template <typename Fn>
dhg_status guarded(Fn&& fn) {
    try {
        fn();
        last_error.clear();
        return DHG_OK;
    } catch (const dhg::Error& e) {
        last_error = e.what();
        return status_of(e.code());
    } catch (const std::exception& e) {
        last_error = e.what();
        return DHG_ERR_INTERNAL;
    }
}

dhg_status require(bool condition, const char* message) {
    if (condition) return DHG_OK;
    last_error = message;
    return DHG_ERR_INVALID_ARGUMENT;
}

char* copy_string(const std::string& s) {
    char* out = new char[s.size() + 1];
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

} // namespace

extern "C" {

const char* dhg_status_name(dhg_status status) {
    switch (status) {
    case DHG_OK: return "ok";
    case DHG_ERR_EMPTY_TAIL: return "empty-tail";
    case DHG_ERR_EMPTY_HEAD: return "empty-head";
    case DHG_ERR_VERTEX_OUT_OF_RANGE: return "vertex-out-of-range";
    case DHG_ERR_DOUBLE_INIT: return "double-init";
    case DHG_ERR_MERGE_SAME_CLASS: return "merge-same-class";
    case DHG_ERR_NOT_REPRESENTATIVE: return "not-representative";
    case DHG_ERR_EMPTY_HYPERGRAPH: return "empty-hypergraph";
    case DHG_ERR_CYCLIC: return "cyclic-hypergraph";
    case DHG_ERR_NOT_TRANSITIVE: return "not-transitive";
    case DHG_ERR_TOO_MANY_VARIABLES: return "too-many-variables";
    case DHG_ERR_UNUSED_VARIABLE: return "unused-variable";
    case DHG_ERR_DUPLICATE_SET: return "duplicate-set";
    case DHG_ERR_BAD_N: return "bad-n";
    case DHG_ERR_PARSE: return "parse-error";
    case DHG_ERR_INVALID_ARGUMENT: return "invalid-argument";
    case DHG_ERR_INTERNAL: return "internal-error";
    }
    return "unknown";
}

const char* dhg_last_error_message(void) { return last_error.c_str(); }

dhg_status dhg_hypergraph_create(uint32_t vertex_count, dhg_hypergraph** out) {
    if (auto rc = require(out != nullptr, "null output handle")) return rc;
    return guarded([&] { *out = new dhg_hypergraph{dhg::Hypergraph(vertex_count)}; });
}

dhg_status dhg_hypergraph_add_arc(dhg_hypergraph* h, const uint32_t* tail,
                                  size_t tail_len, const uint32_t* head,
                                  size_t head_len, uint32_t* arc_index_out) {
    if (auto rc = require(h != nullptr, "null hypergraph")) return rc;
    return guarded([&] {
        const uint32_t index = h->impl.add_hyperarc(
            std::span<const uint32_t>(tail, tail_len),
            std::span<const uint32_t>(head, head_len));
        if (arc_index_out) *arc_index_out = index;
    });
}

dhg_status dhg_hypergraph_parse(const char* text, dhg_hypergraph** out) {
    if (auto rc = require(text != nullptr && out != nullptr, "null argument")) return rc;
    return guarded([&] { *out = new dhg_hypergraph{dhg::parse_hypergraph(text)}; });
}

void dhg_hypergraph_free(dhg_hypergraph* h) { delete h; }

uint32_t dhg_hypergraph_vertex_count(const dhg_hypergraph* h) {
    return h->impl.vertex_count();
}

uint32_t dhg_hypergraph_arc_count(const dhg_hypergraph* h) {
    return h->impl.arc_count();
}

uint64_t dhg_hypergraph_size(const dhg_hypergraph* h) { return h->impl.size(); }

dhg_status dhg_hypergraph_format(const dhg_hypergraph* h, char** out) {
    if (auto rc = require(h != nullptr && out != nullptr, "null argument")) return rc;
    return guarded([&] { *out = copy_string(dhg::format_hypergraph(h->impl)); });
}

void dhg_string_free(char* text) { delete[] text; }

dhg_status dhg_reachable_set(const dhg_hypergraph* h, uint32_t from,
                             uint32_t* members_out, size_t* count_out) {
    if (auto rc = require(h && members_out && count_out, "null argument")) return rc;
    return guarded([&] {
        const auto members = dhg::reachable_set(h->impl, from).to_sorted();
        for (size_t i = 0; i < members.size(); ++i) members_out[i] = members[i];
        *count_out = members.size();
    });
}

dhg_status dhg_is_reachable(const dhg_hypergraph* h, uint32_t from, uint32_t to,
                            int* out) {
    if (auto rc = require(h && out, "null argument")) return rc;
    return guarded([&] { *out = dhg::is_reachable(h->impl, from, to) ? 1 : 0; });
}

dhg_status dhg_terminal_sccs(const dhg_hypergraph* h, dhg_components** out,
                             dhg_run_stats* stats_out) {
    if (auto rc = require(h && out, "null argument")) return rc;
    return guarded([&] {
        dhg::TerminalSccResult result = dhg::terminal_sccs(h->impl);
        if (stats_out) {
            stats_out->makeset_calls = result.stats.makeset_calls;
            stats_out->find_calls = result.stats.find_calls;
            stats_out->merge_calls = result.stats.merge_calls;
            stats_out->fu_pushes = result.stats.fu_pushes;
            stats_out->f_pushes = result.stats.f_pushes;
            stats_out->inner_loop_iterations = result.stats.inner_loop_iterations;
        }
        *out = new dhg_components{std::move(result.components)};
    });
}

void dhg_components_free(dhg_components* c) { delete c; }

size_t dhg_components_count(const dhg_components* c) { return c->impl.size(); }

size_t dhg_components_size(const dhg_components* c, size_t index) {
    return c->impl[index].members.size();
}

const uint32_t* dhg_components_members(const dhg_components* c, size_t index) {
    return c->impl[index].members.data();
}

int dhg_components_is_terminal(const dhg_components* c, size_t index) {
    return c->impl[index].terminal ? 1 : 0;
}

dhg_status dhg_has_sink(const dhg_hypergraph* h, int* out) {
    if (auto rc = require(h && out, "null argument")) return rc;
    return guarded([&] { *out = dhg::has_sink(h->impl) ? 1 : 0; });
}

dhg_status dhg_is_strongly_connected(const dhg_hypergraph* h, int* out) {
    if (auto rc = require(h && out, "null argument")) return rc;
    return guarded([&] { *out = dhg::is_strongly_connected(h->impl) ? 1 : 0; });
}

dhg_status dhg_transitive_reduction_size(const dhg_hypergraph* h, uint64_t* out) {
    if (auto rc = require(h && out, "null argument")) return rc;
    return guarded([&] { *out = dhg::transitive_reduction_size(h->impl); });
}

dhg_status dhg_topological_sort(const dhg_hypergraph* h, uint32_t* order_out) {
    if (auto rc = require(h && order_out, "null argument")) return rc;
    return guarded([&] {
        const auto order = dhg::topological_sort(h->impl);
        for (size_t i = 0; i < order.size(); ++i) order_out[i] = order[i];
    });
}

dhg_status dhg_growth_experiment(const uint32_t* n_values, size_t count,
                                 dhg_growth_row* rows_out) {
    if (auto rc = require((n_values || count == 0) && rows_out, "null argument")) {
        return rc;
    }
    return guarded([&] {
        const auto rows = dhg::growth_experiment(
            std::vector<uint32_t>(n_values, n_values + count));
        for (size_t i = 0; i < rows.size(); ++i) {
            rows_out[i].n = rows[i].n;
            rows_out[i].hypergraph_size = rows[i].hypergraph_size;
            rows_out[i].reduction_size = rows[i].reduction_size;
        }
    });
}

dhg_status dhg_horn_parse(const char* text, dhg_horn** out) {
    if (auto rc = require(text && out, "null argument")) return rc;
    return guarded([&] { *out = new dhg_horn{dhg::parse_horn(text)}; });
}

void dhg_horn_free(dhg_horn* f) { delete f; }

uint32_t dhg_horn_var_count(const dhg_horn* f) { return f->impl.n_vars; }

dhg_status dhg_horn_entails(const dhg_horn* f, uint32_t from_var, uint32_t to_var,
                            int* out) {
    if (auto rc = require(f && out, "null argument")) return rc;
    return guarded([&] {
        *out = dhg::entails_implication(f->impl, from_var, to_var) ? 1 : 0;
    });
}

dhg_status dhg_horn_implied_by_all(const dhg_horn* f, uint32_t* var_out) {
    if (auto rc = require(f && var_out, "null argument")) return rc;
    return guarded([&] {
        const auto var = dhg::variable_implied_by_all(f->impl);
        *var_out = var.value_or(0);
    });
}

dhg_status dhg_horn_all_equivalent(const dhg_horn* f, int* out) {
    if (auto rc = require(f && out, "null argument")) return rc;
    return guarded([&] { *out = dhg::all_variables_equivalent(f->impl) ? 1 : 0; });
}

dhg_status dhg_family_parse(const char* text, dhg_family** out) {
    if (auto rc = require(text && out, "null argument")) return rc;
    return guarded([&] { *out = new dhg_family{dhg::parse_family(text)}; });
}

void dhg_family_free(dhg_family* f) { delete f; }

uint32_t dhg_family_set_count(const dhg_family* f) {
    return static_cast<uint32_t>(f->impl.sets.size());
}

uint32_t dhg_family_domain_size(const dhg_family* f) { return f->impl.domain_size; }

dhg_status dhg_family_format(const dhg_family* f, char** out) {
    if (auto rc = require(f && out, "null argument")) return rc;
    return guarded([&] { *out = copy_string(dhg::format_family(f->impl)); });
}

dhg_status dhg_lower_bound_family(uint32_t n, dhg_family** out) {
    if (auto rc = require(out != nullptr, "null output handle")) return rc;
    return guarded([&] { *out = new dhg_family{dhg::lower_bound_family(n)}; });
}

dhg_status dhg_family_hypergraph(const dhg_family* f, dhg_hypergraph** out) {
    if (auto rc = require(f && out, "null argument")) return rc;
    return guarded([&] {
        *out = new dhg_hypergraph{dhg::build_subset_hypergraph(f->impl).hypergraph};
    });
}

dhg_status dhg_minimal_sets(const dhg_family* f, uint32_t* indices_out,
                            size_t* count_out) {
    if (auto rc = require(f && indices_out && count_out, "null argument")) return rc;
    return guarded([&] {
        const auto indices = dhg::minimal_sets(f->impl);
        for (size_t i = 0; i < indices.size(); ++i) indices_out[i] = indices[i];
        *count_out = indices.size();
    });
}

dhg_status dhg_is_sperner(const dhg_family* f, int* out) {
    if (auto rc = require(f && out, "null argument")) return rc;
    return guarded([&] { *out = dhg::is_sperner(f->impl) ? 1 : 0; });
}

dhg_status dhg_linear_extension(const dhg_family* f, uint32_t* order_out) {
    if (auto rc = require(f && order_out, "null argument")) return rc;
    return guarded([&] {
        const auto order = dhg::linear_extension(f->impl);
        for (size_t i = 0; i < order.size(); ++i) order_out[i] = order[i];
    });
}

} // extern "C"
