#include "cobham/io_json.hpp"

#include <sstream>

namespace cobham {

namespace {

std::string dec(const mpz_class& z) { return z.get_str(); }

json names_of(const Automaton& a, const std::vector<int>& states) {
    json arr = json::array();
    for (int s : states) arr.push_back(a.states[s].name);
    return arr;
}

json poly_json(const ZPoly& p) {
    json arr = json::array();
    for (const auto& c : p) {
        if (c.fits_slong_p())
            arr.push_back(c.get_si());
        else
            arr.push_back(dec(c));
    }
    return arr;
}

}  // namespace

json support_sample_json(const SupportSample& s, size_t member_limit) {
    json j;
    j["N"] = dec(s.N);
    j["count"] = dec(mpz_class(s.members.size()));
    if (s.members.size() <= member_limit) {
        json arr = json::array();
        for (const auto& k : s.members) arr.push_back(dec(k));
        j["members"] = arr;
    }
    return j;
}

std::string support_sample_csv(const SupportSample& s) {
    std::ostringstream out;
    for (const auto& k : s.members) out << dec(k) << '\n';
    return out.str();
}

json structure_json(const Automaton& a, const StructureReport& r) {
    json j;
    j["verdict"] = to_string(r.verdict);
    json tied = json::array();
    for (int v : r.tied) tied.push_back(a.states[v].name);
    j["tied"] = tied;
    json sccs = json::array();
    for (int c = 0; c < r.scc.count(); ++c) {
        json entry;
        entry["members"] = names_of(a, r.scc.members[c]);
        entry["nontrivial"] = static_cast<bool>(r.scc.nontrivial[c]);
        sccs.push_back(entry);
    }
    j["sccs"] = sccs;
    if (r.tied.empty()) {
        json cases;
        for (int s = 0; s < a.size(); ++s)
            cases[a.states[s].name] = to_string(r.case_of[s]);
        j["cases"] = cases;
    }
    return j;
}

json perron_json(const PerronCertificate& c) {
    json j;
    j["ok"] = c.ok;
    j["p"] = c.p;
    j["poly"] = poly_json(c.poly);
    j["dominant"] = c.dominant;
    j["root_gaps"] = c.root_gaps;
    j["eigvec"] = c.eigvec;
    j["residual"] = c.residual;
    if (!c.note.empty()) j["note"] = c.note;
    return j;
}

json spectral_json(const Automaton& a, const SpectralReport& r) {
    json j;
    j["B"] = r.B;
    j["beta"] = r.beta;
    json sccs = json::array();
    for (const auto& s : r.sccs) {
        json entry;
        entry["members"] = names_of(a, s.members);
        entry["char_poly"] = poly_json(s.poly);
        entry["rho"] = {{"lo", s.rho.lo.get_d()}, {"hi", s.rho.hi.get_d()}};
        entry["perron"] = {{"p", s.perron.p}, {"poly", poly_json(s.perron.poly)},
                           {"ok", s.perron.ok}};
        sccs.push_back(entry);
    }
    j["sccs"] = sccs;
    return j;
}

json count_json(const CountResult& r) {
    json j;
    j["N"] = dec(r.N);
    j["count"] = dec(r.count);
    j["method"] = to_string(r.method);
    return j;
}

std::string growth_csv(const GrowthTable& t) {
    std::ostringstream out;
    out << "k,count,log_ratio\n";
    for (const auto& row : t)
        out << row.k << ',' << dec(row.count) << ',' << row.log_ratio << '\n';
    return out.str();
}

std::string table_csv(const std::vector<mpz_class>& values, int n0) {
    std::ostringstream out;
    out << "n,value\n";
    for (size_t i = 0; i < values.size(); ++i)
        out << n0 + static_cast<int>(i) << ',' << dec(values[i]) << '\n';
    return out.str();
}

json arborescence_json(const CycleArborescence& ca, const Automaton& original) {
    json j;
    json types, prov;
    for (int s = 0; s < ca.automaton.size(); ++s) {
        const auto& name = ca.automaton.states[s].name;
        types[name] = to_string(ca.vertex_type[s]);
        prov[name] = original.states[ca.provenance[s]].name;
    }
    j["vertex_type"] = types;
    j["provenance"] = prov;
    j["height"] = ca.height;
    j["root"] = ca.automaton.states[ca.root].name;
    return j;
}

json rank_json(const RankReport& r) {
    json j;
    j["height"] = r.height;
    j["rank"] = r.rank;
    j["live_cycle_chain"] = r.live_cycle_chain;
    return j;
}

json walk_json(const Automaton& a, const Walk& w) {
    json j;
    j["start"] = a.states[w.start].name;
    j["end"] = a.states[w.end()].name;
    j["digits"] = w.digits();
    j["size"] = dec(w.size(a.m));
    return j;
}

json witness_json(const Automaton& a, const WitnessFamily& f, size_t member_limit) {
    json j;
    j["vertex"] = a.states[f.vertex].name;
    j["w_start"] = walk_json(a, f.w_start);
    j["w_one"] = walk_json(a, f.w_one);
    j["w_two"] = walk_json(a, f.w_two);
    j["w_end"] = walk_json(a, f.w_end);
    j["z"] = f.z;
    j["x"] = f.x;
    j["y"] = f.y;
    j["k"] = f.k;
    j["count"] = dec(mpz_class(f.members.size()));
    if (f.members.size() <= member_limit) {
        json arr = json::array();
        for (const auto& m : f.members) arr.push_back(dec(m));
        j["members"] = arr;
    }
    return j;
}

}  // namespace cobham
