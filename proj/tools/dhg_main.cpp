// Command-line front end over the shared-library C interface. Output is
// plain text with a stable line grammar, so runs on identical input are
// byte-identical.

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "dhg.h"

namespace {

constexpr int kExitDomainError = 1;
constexpr int kExitUsageError = 2;

struct CliFailure {
    int exit_code;
    std::string message;
};

[[noreturn]] void fail(int exit_code, const std::string& message) {
    throw CliFailure{exit_code, message};
}

void check(dhg_status status) {
    if (status == DHG_OK) return;
    const int code = status == DHG_ERR_PARSE ? kExitUsageError : kExitDomainError;
    fail(code, std::string(dhg_status_name(status)) + ": " + dhg_last_error_message());
}

// Reads the file contents, or stdin when the path is "-".
std::string slurp(const std::string& path) {
    std::ostringstream buffer;
    if (path == "-") {
        buffer << std::cin.rdbuf();
    } else {
        std::ifstream in(path, std::ios::binary);
        if (!in) {
            fail(kExitUsageError, "cannot open '" + path + "'");
        }
        buffer << in.rdbuf();
    }
    return buffer.str();
}

template <typename Handle, dhg_status (*ParseFn)(const char*, Handle**),
          void (*FreeFn)(Handle*)>
class Parsed {
public:
    explicit Parsed(const std::string& path) {
        const std::string text = slurp(path);
        check(ParseFn(text.c_str(), &handle_));
    }
    ~Parsed() { FreeFn(handle_); }
    Parsed(const Parsed&) = delete;
    Parsed& operator=(const Parsed&) = delete;

    Handle* get() const { return handle_; }

private:
    Handle* handle_ = nullptr;
};

using HypergraphFile = Parsed<dhg_hypergraph, dhg_hypergraph_parse, dhg_hypergraph_free>;
using HornFile = Parsed<dhg_horn, dhg_horn_parse, dhg_horn_free>;
using FamilyFile = Parsed<dhg_family, dhg_family_parse, dhg_family_free>;

void print_ids(const std::uint32_t* ids, std::size_t count) {
    for (std::size_t i = 0; i < count; ++i) {
        if (i) std::fputc(' ', stdout);
        std::printf("%u", ids[i]);
    }
    std::fputc('\n', stdout);
}

void print_yes_no(int value) { std::puts(value ? "yes" : "no"); }

void run_terminal_scc(const std::string& path, bool all_classes, bool stats) {
    const HypergraphFile file(path);
    dhg_components* comps = nullptr;
    dhg_run_stats run_stats{};
    check(dhg_terminal_sccs(file.get(), &comps, &run_stats));
    for (std::size_t i = 0; i < dhg_components_count(comps); ++i) {
        const bool terminal = dhg_components_is_terminal(comps, i) != 0;
        if (!terminal && !all_classes) continue;
        if (terminal) std::fputs("T ", stdout);
        print_ids(dhg_components_members(comps, i), dhg_components_size(comps, i));
    }
    dhg_components_free(comps);
    if (stats) {
        std::printf("makeset_calls=%llu\n", (unsigned long long)run_stats.makeset_calls);
        std::printf("find_calls=%llu\n", (unsigned long long)run_stats.find_calls);
        std::printf("merge_calls=%llu\n", (unsigned long long)run_stats.merge_calls);
        std::printf("fu_pushes=%llu\n", (unsigned long long)run_stats.fu_pushes);
        std::printf("f_pushes=%llu\n", (unsigned long long)run_stats.f_pushes);
        std::printf("inner_loop_iterations=%llu\n",
                    (unsigned long long)run_stats.inner_loop_iterations);
    }
}

void run_reach(const std::string& path, std::uint32_t from) {
    const HypergraphFile file(path);
    std::vector<std::uint32_t> members(dhg_hypergraph_vertex_count(file.get()) + 1);
    std::size_t count = 0;
    check(dhg_reachable_set(file.get(), from, members.data(), &count));
    print_ids(members.data(), count);
}

void run_growth(const std::string& n_list) {
    std::vector<std::uint32_t> ns;
    std::stringstream in(n_list);
    std::string item;
    while (std::getline(in, item, ',')) {
        try {
            ns.push_back(static_cast<std::uint32_t>(std::stoul(item)));
        } catch (const std::exception&) {
            fail(kExitUsageError, "bad n value '" + item + "'");
        }
    }
    if (ns.empty()) {
        fail(kExitUsageError, "--n needs at least one value");
    }
    std::vector<dhg_growth_row> rows(ns.size());
    check(dhg_growth_experiment(ns.data(), ns.size(), rows.data()));
    std::puts("n\tsize\treduction\tratio");
    for (const dhg_growth_row& row : rows) {
        std::printf("%u\t%llu\t%llu\t%.6f\n", row.n,
                    (unsigned long long)row.hypergraph_size,
                    (unsigned long long)row.reduction_size,
                    static_cast<double>(row.reduction_size) /
                        static_cast<double>(row.hypergraph_size));
    }
}

void run_gen_lower_bound(std::uint32_t n, const std::string& emit) {
    dhg_family* family = nullptr;
    check(dhg_lower_bound_family(n, &family));
    char* text = nullptr;
    if (emit == "fam") {
        check(dhg_family_format(family, &text));
    } else {
        dhg_hypergraph* h = nullptr;
        check(dhg_family_hypergraph(family, &h));
        const dhg_status rc = dhg_hypergraph_format(h, &text);
        dhg_hypergraph_free(h);
        check(rc);
    }
    std::fputs(text, stdout);
    dhg_string_free(text);
    dhg_family_free(family);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"directed hypergraph toolkit"};
    app.require_subcommand(1);

    std::string path;
    std::uint32_t from_vertex = 0, to_var = 0;
    bool all_classes = false, with_stats = false;

    auto* scc = app.add_subcommand("terminal-scc", "terminal strongly connected components");
    scc->add_option("file", path, "input .dhg file ('-' for stdin)")->required();
    scc->add_flag("--all-classes", all_classes, "also print the leftover classes");
    scc->add_flag("--stats", with_stats, "append the run counters");

    auto* reach = app.add_subcommand("reach", "vertices reachable from a source");
    reach->add_option("file", path)->required();
    reach->add_option("--from", from_vertex, "source vertex")->required();

    auto* sink = app.add_subcommand("sink", "is some vertex reachable from all?");
    sink->add_option("file", path)->required();

    auto* strong = app.add_subcommand("strongly-connected", "are all vertices mutually reachable?");
    strong->add_option("file", path)->required();

    auto* trred = app.add_subcommand("trred-size", "transitive reduction size of the reachability relation");
    trred->add_option("file", path)->required();

    auto* topo = app.add_subcommand("toposort", "topological order of an acyclic hypergraph");
    topo->add_option("file", path)->required();

    std::string growth_list;
    auto* growth = app.add_subcommand("growth", "reduction growth on the two-layer families");
    growth->add_option("--n", growth_list, "comma-separated list, e.g. 4,8,12")->required();

    auto* horn = app.add_subcommand("horn", "Horn formula queries");
    horn->require_subcommand(1);
    auto* entails = horn->add_subcommand("entails", "does X_from imply X_to?");
    entails->add_option("file", path)->required();
    entails->add_option("--from", from_vertex, "1-based variable")->required();
    entails->add_option("--to", to_var, "1-based variable")->required();
    auto* implied = horn->add_subcommand("implied-by-all", "variable implied by all others");
    implied->add_option("file", path)->required();
    auto* equivalent = horn->add_subcommand("all-equivalent", "are all variables equivalent?");
    equivalent->add_option("file", path)->required();

    auto* minsets = app.add_subcommand("minsets", "inclusion-minimal sets of a family");
    minsets->add_option("file", path)->required();

    auto* sperner = app.add_subcommand("sperner", "is the family an antichain?");
    sperner->add_option("file", path)->required();

    auto* linext = app.add_subcommand("linext", "linear extension of the inclusion order");
    linext->add_option("file", path)->required();

    std::uint32_t gen_n = 0;
    std::string emit_kind = "fam";
    auto* gen = app.add_subcommand("gen", "generators");
    gen->require_subcommand(1);
    auto* lower = gen->add_subcommand("lower-bound", "two-layer family over n elements");
    lower->add_option("--n", gen_n, "domain size (multiple of 4)")->required();
    lower->add_option("--emit", emit_kind, "fam or dhg")
        ->check(CLI::IsMember({"fam", "dhg"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : kExitUsageError;
    }

    try {
        if (scc->parsed()) {
            run_terminal_scc(path, all_classes, with_stats);
        } else if (reach->parsed()) {
            run_reach(path, from_vertex);
        } else if (sink->parsed()) {
            const HypergraphFile file(path);
            int answer = 0;
            check(dhg_has_sink(file.get(), &answer));
            print_yes_no(answer);
        } else if (strong->parsed()) {
            const HypergraphFile file(path);
            int answer = 0;
            check(dhg_is_strongly_connected(file.get(), &answer));
            print_yes_no(answer);
        } else if (trred->parsed()) {
            const HypergraphFile file(path);
            std::uint64_t size = 0;
            check(dhg_transitive_reduction_size(file.get(), &size));
            std::printf("%llu\n", (unsigned long long)size);
        } else if (topo->parsed()) {
            const HypergraphFile file(path);
            std::vector<std::uint32_t> order(dhg_hypergraph_vertex_count(file.get()) + 1);
            check(dhg_topological_sort(file.get(), order.data()));
            print_ids(order.data(), dhg_hypergraph_vertex_count(file.get()));
        } else if (growth->parsed()) {
            run_growth(growth_list);
        } else if (horn->parsed()) {
            const HornFile file(path);
            if (entails->parsed()) {
                int answer = 0;
                check(dhg_horn_entails(file.get(), from_vertex, to_var, &answer));
                print_yes_no(answer);
            } else if (implied->parsed()) {
                std::uint32_t var = 0;
                check(dhg_horn_implied_by_all(file.get(), &var));
                if (var == 0) {
                    std::puts("none");
                } else {
                    std::printf("%u\n", var);
                }
            } else {
                int answer = 0;
                check(dhg_horn_all_equivalent(file.get(), &answer));
                print_yes_no(answer);
            }
        } else if (minsets->parsed()) {
            const FamilyFile file(path);
            std::vector<std::uint32_t> indices(dhg_family_set_count(file.get()) + 1);
            std::size_t count = 0;
            check(dhg_minimal_sets(file.get(), indices.data(), &count));
            print_ids(indices.data(), count);
        } else if (sperner->parsed()) {
            const FamilyFile file(path);
            int answer = 0;
            check(dhg_is_sperner(file.get(), &answer));
            print_yes_no(answer);
        } else if (linext->parsed()) {
            const FamilyFile file(path);
            std::vector<std::uint32_t> order(dhg_family_set_count(file.get()) + 1);
            check(dhg_linear_extension(file.get(), order.data()));
            print_ids(order.data(), dhg_family_set_count(file.get()));
        } else if (gen->parsed()) {
            run_gen_lower_bound(gen_n, emit_kind);
        }
    } catch (const CliFailure& failure) {
        std::fprintf(stderr, "error: %s\n", failure.message.c_str());
        return failure.exit_code;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitDomainError;
    }
    return 0;
}
