#ifndef COBHAM_ARBORESCENCE_HPP
#define COBHAM_ARBORESCENCE_HPP

#include <string>
#include <vector>

#include "cobham/automaton.hpp"

namespace cobham {

enum class ArboType { TypeI, TypeII, TypeIII };

std::string to_string(ArboType t);

struct ArborescenceCheck {
    bool ok = false;
    std::vector<ArboType> typing;  // valid only when ok
    std::vector<std::string> violations;
};

// Tests whether the automaton is a cycle arborescence rooted at the start
// state (the root carries a virtual in-edge). On success returns the
// vertex typing.
ArborescenceCheck is_cycle_arborescence(const Automaton& a);

struct CycleArborescence {
    Automaton automaton;
    std::vector<ArboType> vertex_type;
    int root = 0;
    int height = 0;
    std::vector<int> provenance;  // state -> original state index
};

// Restructures a tied-free automaton into cycle-arborescence form while
// preserving its sequence: dead states are rewired to self-loops, then
// states and cycles with extra in-edges are unfolded into copies.
CycleArborescence arborize(const Automaton& a, int max_states = 10000, int verify_terms = 2000);

// Maximum number of live cycles (cycles that reach a nonzero output) on a
// directed walk through the arborescence.
int height_of(const CycleArborescence& ca);

// Independent height computation on the unrestructured automaton: longest
// condensation path counted by nontrivial, nonzero-reaching components.
int height_condensation_oracle(const Automaton& a);

// True iff some k >= 1 has a_k != 0 (structural, no term bound).
bool support_nonempty(const Automaton& a);

struct RankReport {
    int height = 0;
    int rank = 0;  // height - 1
    std::vector<std::string> live_cycle_chain;  // one member name per cycle
};

// Requires a sparse automaton with nonempty support.
RankReport rank_of_sparseness(const Automaton& a);

}  // namespace cobham

#endif
