#ifndef COBHAM_TEST_HELPERS_HPP
#define COBHAM_TEST_HELPERS_HPP

#include <cstdint>
#include <cstring>
#include <random>
#include <string>
#include <vector>

#include "cobham/automaton.hpp"
#include "cobham/structure.hpp"

namespace cobham::testing {

inline uint64_t g_seed = 20260824;  // overridable via --seed

inline void parse_seed(int argc, char** argv) {
    for (int i = 1; i < argc; ++i) {
        if (std::strncmp(argv[i], "--seed=", 7) == 0)
            g_seed = std::strtoull(argv[i] + 7, nullptr, 10);
        else if (std::strcmp(argv[i], "--seed") == 0 && i + 1 < argc)
            g_seed = std::strtoull(argv[i + 1], nullptr, 10);
    }
}

inline Automaton corpus(const std::string& id) {
    return load_automaton_file(std::string(CORPUS_DIR) + "/" + id + ".aut");
}

// Keeps only states reachable from start, renumbering in BFS order.
inline Automaton prune_reachable(const Automaton& a) {
    std::vector<int> map(a.size(), -1), order;
    map[a.start] = 0;
    order.push_back(a.start);
    for (size_t i = 0; i < order.size(); ++i)
        for (int d = 0; d < a.m; ++d) {
            int t = a.edge(order[i], d);
            if (map[t] < 0) {
                map[t] = static_cast<int>(order.size());
                order.push_back(t);
            }
        }
    Automaton b;
    b.m = a.m;
    b.start = 0;
    b.states.resize(order.size());
    b.transitions.assign(order.size() * a.m, -1);
    for (size_t i = 0; i < order.size(); ++i) {
        b.states[i] = a.states[order[i]];
        for (int d = 0; d < a.m; ++d) b.set_edge(static_cast<int>(i), d, map[a.edge(order[i], d)]);
    }
    return b;
}

// Outputs constant along digit-0 edges: each terminal cycle of the 0-edge
// functional graph draws a random output and every state inherits its
// cycle's choice, so leading-zero invariance holds by construction.
inline void assign_outputs_lzi(Automaton& a, std::mt19937_64& rng) {
    std::vector<int> cls(a.size(), -1);
    int next = 0;
    for (int s = 0; s < a.size(); ++s) {
        if (cls[s] >= 0) continue;
        std::vector<int> path;
        int cur = s;
        while (cls[cur] == -1) {
            cls[cur] = -2;  // on current path
            path.push_back(cur);
            cur = a.edge(cur, 0);
        }
        int id = cls[cur] >= 0 ? cls[cur] : next++;
        for (int p : path) cls[p] = id;
    }
    std::vector<std::string> out(next);
    std::uniform_int_distribution<int> coin(0, 2);
    for (auto& o : out) {
        int c = coin(rng);
        o = c == 0 ? "0" : (c == 1 ? "1" : "2");
    }
    for (int s = 0; s < a.size(); ++s) a.states[s].output = out[cls[s]];
}

inline Automaton random_valid_automaton(std::mt19937_64& rng, int max_states = 8) {
    std::uniform_int_distribution<int> nd(2, max_states), md(2, 3);
    int n = nd(rng), m = md(rng);
    Automaton a;
    a.m = m;
    a.start = 0;
    a.states.resize(n);
    for (int s = 0; s < n; ++s) a.states[s].name = "s" + std::to_string(s);
    a.transitions.resize(n * m);
    std::uniform_int_distribution<int> td(0, n - 1);
    for (auto& t : a.transitions) t = td(rng);
    assign_outputs_lzi(a, rng);
    return prune_reachable(a);
}

// DAG of simple-cycle blocks: every SCC is a simple cycle with exactly one
// intra-SCC out-edge per member, so no vertex is tied.
inline Automaton random_tied_free_automaton(std::mt19937_64& rng, int max_states = 10) {
    std::uniform_int_distribution<int> nd(2, max_states), md(2, 3);
    int n = nd(rng), m = md(rng);
    Automaton a;
    a.m = m;
    a.start = 0;
    a.states.resize(n + 1);  // last state is an absorbing sink
    for (int s = 0; s <= n; ++s) a.states[s].name = "s" + std::to_string(s);
    a.transitions.assign((n + 1) * m, -1);

    std::vector<std::pair<int, int>> blocks;  // [first, last] inclusive
    int pos = 0;
    while (pos < n) {
        std::uniform_int_distribution<int> len(1, std::min(3, n - pos));
        int l = len(rng);
        blocks.emplace_back(pos, pos + l - 1);
        pos += l;
    }
    std::uniform_int_distribution<int> digit(0, m - 1);
    for (auto [first, last] : blocks) {
        for (int s = first; s <= last; ++s) {
            int cycle_digit = digit(rng);
            int succ = s < last ? s + 1 : first;  // the one intra edge
            for (int d = 0; d < m; ++d) {
                if (d == cycle_digit) {
                    a.set_edge(s, d, succ);
                } else {
                    // strictly forward: a later block's first state or the sink
                    std::uniform_int_distribution<int> pick(last + 1, n);
                    a.set_edge(s, d, pick(rng));
                }
            }
        }
    }
    for (int d = 0; d < m; ++d) a.set_edge(n, d, n);
    assign_outputs_lzi(a, rng);
    // keep the sink dead: zero out its whole 0-edge class
    for (int s = 0; s <= n; ++s) {
        int cur = s;
        for (int i = 0; i <= n; ++i) cur = a.edge(cur, 0);
        if (cur == n) a.states[s].output = "0";
    }
    return prune_reachable(a);
}

}  // namespace cobham::testing

#endif
