#ifndef COBHAM_IO_JSON_HPP
#define COBHAM_IO_JSON_HPP

#include <string>

#include "json.hpp"

#include "cobham/arborescence.hpp"
#include "cobham/counting.hpp"
#include "cobham/sequence.hpp"
#include "cobham/spectral.hpp"
#include "cobham/structure.hpp"

namespace cobham {

using nlohmann::json;

// Big integers serialize as decimal strings throughout.

// {"N":…, "count":…, "members":[…]}; members omitted above member_limit
json support_sample_json(const SupportSample& s, size_t member_limit = 4096);
std::string support_sample_csv(const SupportSample& s);

// {verdict, tied:[names], sccs:[{members, nontrivial}], cases:{name:case}}
json structure_json(const Automaton& a, const StructureReport& r);

// {B, beta, sccs:[{members, char_poly:[ints], rho:{lo,hi}, perron:{p, poly, ok}}]}
json spectral_json(const Automaton& a, const SpectralReport& r);

json perron_json(const PerronCertificate& c);

// {N:"<decimal>", count:"<decimal>", method}
json count_json(const CountResult& r);

// columns: k,count,log_ratio
std::string growth_csv(const GrowthTable& t);

// columns: n,value (decimal strings)
std::string table_csv(const std::vector<mpz_class>& values, int n0 = 0);

// sidecar: {vertex_type:{…}, provenance:{…}, height, root}
json arborescence_json(const CycleArborescence& ca, const Automaton& original);

json rank_json(const RankReport& r);

json walk_json(const Automaton& a, const Walk& w);

json witness_json(const Automaton& a, const WitnessFamily& f, size_t member_limit = 4096);

}  // namespace cobham

#endif
