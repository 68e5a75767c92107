#include "mira/json_io.hpp"

#include <limits>
#include <sstream>
#include <stdexcept>

namespace mira {

json int_to_json(const Int& x) {
    if (x >= std::numeric_limits<long long>::min() && x <= std::numeric_limits<long long>::max())
        return static_cast<long long>(x);
    return x.str();
}

Int int_from_json(const json& j) {
    if (j.is_string()) return Int(j.get<std::string>());
    return Int(j.get<long long>());
}

json partition_to_json(const Partition& p) { return json(p.parts()); }

Partition partition_from_json(const json& j) { return Partition(j.get<std::vector<int>>()); }

json tableau_to_json(const Tableau& t) { return json(t.rows()); }

Tableau tableau_from_json(const json& j) {
    return Tableau(j.get<std::vector<std::vector<int>>>());
}

json triple_to_json(const CellTriple& t) {
    return json{{"nu", partition_to_json(t.nu)},
                {"theta", partition_to_json(t.theta)},
                {"nu_prime", partition_to_json(t.nu_prime)}};
}

CellTriple triple_from_json(const json& j) {
    return CellTriple{partition_from_json(j.at("nu")), partition_from_json(j.at("theta")),
                      partition_from_json(j.at("nu_prime"))};
}

json laurent_to_json(const Laurent& x) {
    json j = json::object();
    for (const auto& [e, c] : x.terms()) j[std::to_string(e)] = int_to_json(c);
    return j;
}

Laurent laurent_from_json(const json& j) {
    Laurent x;
    for (auto it = j.begin(); it != j.end(); ++it) x.set(std::stoi(it.key()), int_from_json(*it));
    return x;
}

std::string perm_key(const Perm& w) {
    std::string s;
    for (size_t i = 0; i < w.size(); ++i) {
        if (i) s += " ";
        s += std::to_string(w[i]);
    }
    return s;
}

Perm perm_from_key(const std::string& s) {
    Perm w;
    std::istringstream in(s);
    for (int x; in >> x;) w.push_back(x);
    if (!is_permutation(w)) throw std::invalid_argument("perm_from_key: not a permutation");
    return w;
}

json hecke_to_json(const HTerms& x, const std::string& basis) {
    json terms = json::object();
    for (const auto& [w, c] : x) terms[perm_key(w)] = laurent_to_json(c);
    return json{{"basis", basis}, {"terms", terms}};
}

HTerms hecke_from_json(const json& j) {
    HTerms x;
    const json& terms = j.at("terms");
    for (auto it = terms.begin(); it != terms.end(); ++it)
        x[perm_from_key(it.key())] = laurent_from_json(*it);
    return x;
}

json bimodule_to_json(const RTerms& x, const std::string& basis) {
    json terms = json::object();
    for (const auto& [tw, c] : x) terms[tw.to_string()] = laurent_to_json(c);
    return json{{"basis", basis}, {"terms", terms}};
}

RTerms bimodule_from_json(const json& j) {
    RTerms x;
    const json& terms = j.at("terms");
    for (auto it = terms.begin(); it != terms.end(); ++it)
        x[parse_colored_perm(it.key())] = laurent_from_json(*it);
    return x;
}

json mrsk_output_to_json(const MirabolicOutput& out) {
    return json{{"nu", partition_to_json(out.triple.nu)},
                {"theta", partition_to_json(out.triple.theta)},
                {"nu_prime", partition_to_json(out.triple.nu_prime)},
                {"t1", tableau_to_json(out.t1)},
                {"t2", tableau_to_json(out.t2)},
                {"theta_star", partition_to_json(out.theta_star)}};
}

json wgraph_to_json(const WGraph& g) {
    json vertices = json::array(), edges = json::array();
    for (const auto& v : g.vertices)
        vertices.push_back(json{{"tw", v.tw.to_string()}, {"labels", v.labels}});
    for (const auto& e : g.edges)
        edges.push_back(
            json{{"a", e.a.to_string()}, {"b", e.b.to_string()}, {"mu", int_to_json(e.mu)}});
    return json{{"vertices", vertices}, {"edges", edges}};
}

json rkl_table_to_json(const RKLTable& table) {
    json rows = json::object();
    for (const auto& [tw, terms] : table.table()) {
        json row = json::object();
        for (const auto& [y, c] : terms) row[y.to_string()] = laurent_to_json(c);
        rows[tw.to_string()] = row;
    }
    return json{{"n", table.n()}, {"table", rows}};
}

RKLTable rkl_table_from_json(const json& j) {
    int n = j.at("n").get<int>();
    std::map<ColoredPerm, RTerms> table;
    const json& rows = j.at("table");
    for (auto it = rows.begin(); it != rows.end(); ++it) {
        RTerms terms;
        for (auto jt = it->begin(); jt != it->end(); ++jt)
            terms[parse_colored_perm(jt.key())] = laurent_from_json(*jt);
        table[parse_colored_perm(it.key())] = std::move(terms);
    }
    return RKLTable(n, std::move(table));
}

std::string render_entry(int x, int n) { return x > n ? "@" : std::to_string(x); }

std::string render_tableau(const Tableau& t, int n) {
    std::string s;
    for (const auto& row : t.rows()) {
        for (size_t i = 0; i < row.size(); ++i) {
            if (i) s += " ";
            s += render_entry(row[i], n);
        }
        s += "\n";
    }
    return s;
}

// The displayed states follow the reference layout: one state per insertion
// step, then a single state showing every flush tableau, then the result pair.
std::string render_trace(const MirabolicTrace& trace, int n) {
    std::string s;
    for (const AtState& st : trace.steps) {
        s += "step " + std::to_string(st.step) + "\n";
        s += "T@:\n" + render_tableau(st.t_at, n);
        s += "r@:";
        for (int x : st.r_at) s += " " + render_entry(x, n);
        s += "\n\n";
    }
    s += "flush\n";
    for (const Tableau& t : trace.flush) s += render_tableau(t, n) + "\n";
    s += "result\nT1:\n" + render_tableau(trace.output.t1, n);
    s += "T2:\n" + render_tableau(trace.output.t2, n);
    s += "theta*: " + trace.output.theta_star.to_string() + "\n";
    return s;
}

}  // namespace mira
