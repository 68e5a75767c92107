#pragma once

#include <string>

#include "json.hpp"
#include "mira/bimodule.hpp"
#include "mira/hecke.hpp"
#include "mira/laurent.hpp"
#include "mira/mrsk.hpp"
#include "mira/young.hpp"

namespace mira {

using nlohmann::json;

// cpp_int round-trips as a JSON integer when it fits in 64 bits, as a decimal
// string otherwise.
json int_to_json(const Int& x);
Int int_from_json(const json& j);

json partition_to_json(const Partition& p);
Partition partition_from_json(const json& j);

json tableau_to_json(const Tableau& t);
Tableau tableau_from_json(const json& j);

json triple_to_json(const CellTriple& t);
CellTriple triple_from_json(const json& j);

// {"exp": coeff, ...}
json laurent_to_json(const Laurent& x);
Laurent laurent_from_json(const json& j);

std::string perm_key(const Perm& w);
Perm perm_from_key(const std::string& s);

// {"basis": "H"|"T", "terms": {"2 1 3": {...}}}
json hecke_to_json(const HTerms& x, const std::string& basis);
HTerms hecke_from_json(const json& j);

// {"basis": ..., "terms": {"w=2 1 3; b=2": {...}}}
json bimodule_to_json(const RTerms& x, const std::string& basis);
RTerms bimodule_from_json(const json& j);

json mrsk_output_to_json(const MirabolicOutput& out);

json wgraph_to_json(const WGraph& g);

json rkl_table_to_json(const RKLTable& table);
RKLTable rkl_table_from_json(const json& j);

// Text rendering of mirabolic insertion states; entries above n print as "@".
std::string render_entry(int x, int n);
std::string render_tableau(const Tableau& t, int n);
std::string render_trace(const MirabolicTrace& trace, int n);

}  // namespace mira
