#ifndef COBHAM_STRUCTURE_HPP
#define COBHAM_STRUCTURE_HPP

#include <set>
#include <string>
#include <vector>

#include "cobham/automaton.hpp"

namespace cobham {

struct SccDecomposition {
    std::vector<int> component_of;            // state -> component id
    std::vector<std::vector<int>> members;    // component id -> states
    std::vector<bool> nontrivial;             // component contains a cycle
    // condensation edges, deduplicated, (from component, to component)
    std::vector<std::pair<int, int>> dag_edges;

    int count() const { return static_cast<int>(members.size()); }
};

enum class VertexCase { CaseI, CaseII, CaseIII };
enum class Verdict { Sparse, NonSparse };

std::string to_string(VertexCase c);
std::string to_string(Verdict v);

struct StructureReport {
    SccDecomposition scc;
    std::vector<bool> reaches_nonzero;
    std::set<int> tied;
    std::vector<VertexCase> case_of;  // total only when tied is empty
    Verdict verdict = Verdict::Sparse;
};

// Components numbered by smallest member index; condensation is acyclic.
SccDecomposition scc_decomposition(const Automaton& a);

// States from which some nonzero-output state is reachable (empty walk counts).
std::vector<bool> reaches_nonzero(const Automaton& a);

// Structural criterion: v is tied iff it reaches nonzero, its SCC is
// nontrivial, and some state of the SCC has >= 2 intra-SCC outgoing edges
// (parallel digits counted separately).
std::set<int> tied_vertices(const Automaton& a);

// Walk-counting cross-check: v reaches nonzero and Omega_n(v) >= 2 for some
// n <= n_max. Sufficient bound: n_max = 2*m*|states|.
bool tied_oracle(const Automaton& a, int v, int n_max);

// Requires tied_vertices(a) empty.
std::vector<VertexCase> classify_cases(const Automaton& a);

StructureReport classify_sparse(const Automaton& a);

}  // namespace cobham

#endif
