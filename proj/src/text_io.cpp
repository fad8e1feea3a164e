#include "dhg/text_io.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>
#include <vector>

#include "dhg/error.hpp"

namespace dhg {

namespace {

[[noreturn]] void parse_fail(std::size_t line_no, const std::string& what) {
    raise(ErrorCode::ParseError, "line " + std::to_string(line_no) + ": " + what);
}

// Lines with comments stripped, keyed by their 1-based position; blank lines
// are dropped.
std::vector<std::pair<std::size_t, std::string>> content_lines(std::string_view text) {
    std::vector<std::pair<std::size_t, std::string>> out;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t end = text.find('\n', pos);
        std::string_view line = text.substr(
            pos, end == std::string_view::npos ? std::string_view::npos : end - pos);
        ++line_no;
        if (const std::size_t hash = line.find('#'); hash != std::string_view::npos) {
            line = line.substr(0, hash);
        }
        std::size_t first = line.find_first_not_of(" \t\r");
        if (first != std::string_view::npos) {
            const std::size_t last = line.find_last_not_of(" \t\r");
            out.emplace_back(line_no, std::string(line.substr(first, last - first + 1)));
        }
        if (end == std::string_view::npos) break;
        pos = end + 1;
    }
    return out;
}

std::vector<std::string> tokens_of(const std::string& line) {
    std::istringstream in(line);
    std::vector<std::string> out;
    std::string tok;
    while (in >> tok) out.push_back(tok);
    return out;
}

std::uint32_t parse_u32(const std::string& tok, std::size_t line_no) {
    std::uint32_t value = 0;
    const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc{} || ptr != tok.data() + tok.size()) {
        parse_fail(line_no, "expected a non-negative integer, got '" + tok + "'");
    }
    return value;
}

} // namespace

Hypergraph parse_hypergraph(std::string_view text) {
    const auto lines = content_lines(text);
    if (lines.empty()) {
        parse_fail(1, "missing 'vertices <n>' header");
    }
    const auto header = tokens_of(lines[0].second);
    if (header.size() != 2 || header[0] != "vertices") {
        parse_fail(lines[0].first, "expected 'vertices <n>'");
    }
    Hypergraph h(parse_u32(header[1], lines[0].first));

    for (std::size_t i = 1; i < lines.size(); ++i) {
        const auto [line_no, line] = lines[i];
        const auto toks = tokens_of(line);
        const auto arrow = std::find(toks.begin(), toks.end(), "->");
        if (arrow == toks.end()) {
            parse_fail(line_no, "arc line needs '->'");
        }
        std::vector<VertexId> tail, head;
        for (auto it = toks.begin(); it != arrow; ++it) {
            tail.push_back(parse_u32(*it, line_no));
        }
        for (auto it = arrow + 1; it != toks.end(); ++it) {
            head.push_back(parse_u32(*it, line_no));
        }
        try {
            h.add_hyperarc(tail, head);
        } catch (const Error& e) {
            parse_fail(line_no, e.what());
        }
    }
    return h;
}

std::string format_hypergraph(const Hypergraph& h) {
    std::ostringstream out;
    out << "vertices " << h.vertex_count() << "\n";
    for (ArcIndex a = 0; a < h.arc_count(); ++a) {
        const Hyperarc& arc = h.arc(a);
        for (VertexId t : arc.tail) out << t << ' ';
        out << "->";
        for (VertexId v : arc.head) out << ' ' << v;
        out << '\n';
    }
    return out.str();
}

HornFormula parse_horn(std::string_view text) {
    const auto lines = content_lines(text);
    if (lines.empty()) {
        parse_fail(1, "missing 'vars <n>' header");
    }
    const auto header = tokens_of(lines[0].second);
    if (header.size() != 2 || header[0] != "vars") {
        parse_fail(lines[0].first, "expected 'vars <n>'");
    }
    HornFormula f;
    f.n_vars = parse_u32(header[1], lines[0].first);

    for (std::size_t i = 1; i < lines.size(); ++i) {
        const auto [line_no, line] = lines[i];
        const auto toks = tokens_of(line);
        if (toks[0] == "fact") {
            if (toks.size() != 2) parse_fail(line_no, "expected 'fact <i>'");
            f.clauses.push_back(HornFormula::fact(parse_u32(toks[1], line_no)));
        } else if (toks[0] == "imp") {
            const auto arrow = std::find(toks.begin(), toks.end(), "->");
            if (arrow == toks.end() || arrow + 2 != toks.end()) {
                parse_fail(line_no, "expected 'imp <i1> ... <ip> -> <i>'");
            }
            std::vector<std::uint32_t> premises;
            for (auto it = toks.begin() + 1; it != arrow; ++it) {
                premises.push_back(parse_u32(*it, line_no));
            }
            if (premises.empty()) parse_fail(line_no, "implication needs premises");
            f.clauses.push_back(HornFormula::implication(std::move(premises),
                                                         parse_u32(*(arrow + 1), line_no)));
        } else if (toks[0] == "goal") {
            if (toks.size() < 2) parse_fail(line_no, "goal needs variables");
            std::vector<std::uint32_t> premises;
            for (std::size_t j = 1; j < toks.size(); ++j) {
                premises.push_back(parse_u32(toks[j], line_no));
            }
            f.clauses.push_back(HornFormula::goal(std::move(premises)));
        } else {
            parse_fail(line_no, "unknown clause kind '" + toks[0] + "'");
        }
    }
    try {
        f.validate();
    } catch (const Error& e) {
        raise(ErrorCode::ParseError, std::string("formula invalid: ") + e.what());
    }
    return f;
}

std::string format_horn(const HornFormula& f) {
    std::ostringstream out;
    out << "vars " << f.n_vars << "\n";
    for (const HornClause& c : f.clauses) {
        switch (c.kind) {
        case HornClause::Kind::Fact:
            out << "fact " << c.conclusion << '\n';
            break;
        case HornClause::Kind::Implication:
            out << "imp";
            for (std::uint32_t v : c.premises) out << ' ' << v;
            out << " -> " << c.conclusion << '\n';
            break;
        case HornClause::Kind::Goal:
            out << "goal";
            for (std::uint32_t v : c.premises) out << ' ' << v;
            out << '\n';
            break;
        }
    }
    return out.str();
}

SetFamily parse_family(std::string_view text) {
    const auto lines = content_lines(text);
    if (lines.empty()) {
        parse_fail(1, "missing 'domain <d>' header");
    }
    const auto header = tokens_of(lines[0].second);
    if (header.size() != 2 || header[0] != "domain") {
        parse_fail(lines[0].first, "expected 'domain <d>'");
    }
    SetFamily f;
    f.domain_size = parse_u32(header[1], lines[0].first);

    for (std::size_t i = 1; i < lines.size(); ++i) {
        const auto [line_no, line] = lines[i];
        const auto toks = tokens_of(line);
        if (toks[0] != "set") {
            parse_fail(line_no, "expected 'set <e1> ... <ek>'");
        }
        std::vector<std::uint32_t> s;
        for (std::size_t j = 1; j < toks.size(); ++j) {
            s.push_back(parse_u32(toks[j], line_no));
        }
        f.sets.push_back(std::move(s));
    }
    try {
        f.normalize();
    } catch (const Error& e) {
        raise(ErrorCode::ParseError, std::string("family invalid: ") + e.what());
    }
    return f;
}

std::string format_family(const SetFamily& f) {
    std::ostringstream out;
    out << "domain " << f.domain_size << "\n";
    for (const auto& s : f.sets) {
        out << "set";
        for (std::uint32_t x : s) out << ' ' << x;
        out << '\n';
    }
    return out.str();
}

} // namespace dhg
