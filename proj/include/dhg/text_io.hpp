#pragma once

#include <string>
#include <string_view>

#include "dhg/horn.hpp"
#include "dhg/hypergraph.hpp"
#include "dhg/set_family.hpp"

namespace dhg {

/// Hypergraph text format (.dhg), line oriented, '#' starts a comment:
///   vertices <n>
///   <t1> <t2> ... <tk> -> <h1> ... <hl>
/// Ids are 0-based. Parse errors carry the line number.
Hypergraph parse_hypergraph(std::string_view text);
std::string format_hypergraph(const Hypergraph& h);

/// Horn formula format (.horn), 1-based variable ids:
///   vars <n>
///   fact <i>
///   imp <i1> ... <ip> -> <i>
///   goal <i1> ... <ip>
HornFormula parse_horn(std::string_view text);
std::string format_horn(const HornFormula& f);

/// Set family format (.fam), 0-based elements:
///   domain <d>
///   set <e1> ... <ek>
SetFamily parse_family(std::string_view text);
std::string format_family(const SetFamily& f);

} // namespace dhg
