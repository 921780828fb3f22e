#include "cobham/arborescence.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>

#include "cobham/sequence.hpp"
#include "cobham/structure.hpp"

namespace cobham {

std::string to_string(ArboType t) {
    switch (t) {
        case ArboType::TypeI: return "type-i";
        case ArboType::TypeII: return "type-ii";
        case ArboType::TypeIII: return "type-iii";
    }
    return "?";
}

namespace {

bool all_self_loops(const Automaton& a, int v) {
    for (int d = 0; d < a.m; ++d)
        if (a.edge(v, d) != v) return false;
    return true;
}

// non-self in-edges (source, digit) of v, sorted
std::vector<std::pair<int, int>> in_edges(const Automaton& a, int v, bool include_self) {
    std::vector<std::pair<int, int>> out;
    for (int s = 0; s < a.size(); ++s)
        for (int d = 0; d < a.m; ++d)
            if (a.edge(s, d) == v && (include_self || s != v)) out.push_back({s, d});
    return out;
}

}  // namespace

ArborescenceCheck is_cycle_arborescence(const Automaton& a) {
    ArborescenceCheck res;
    auto scc = scc_decomposition(a);
    res.typing.assign(a.size(), ArboType::TypeII);

    for (int v = 0; v < a.size(); ++v) {
        if (all_self_loops(a, v)) {
            if (a.nonzero(v)) {
                res.violations.push_back("all-self-loop state '" + a.states[v].name +
                                         "' has nonzero output");
                continue;
            }
            res.typing[v] = ArboType::TypeI;
            int in = static_cast<int>(in_edges(a, v, false).size()) + (v == a.start ? 1 : 0);
            if (in != 1)
                res.violations.push_back("type-i state '" + a.states[v].name + "' has " +
                                         std::to_string(in) + " non-self in-edges, expected 1");
        } else if (scc.nontrivial[scc.component_of[v]]) {
            res.typing[v] = ArboType::TypeIII;
        } else {
            res.typing[v] = ArboType::TypeII;
            int in = static_cast<int>(in_edges(a, v, true).size()) + (v == a.start ? 1 : 0);
            if (in != 1)
                res.violations.push_back("type-ii state '" + a.states[v].name + "' has " +
                                         std::to_string(in) + " in-edges, expected 1");
        }
    }

    // every nontrivial SCC that is not a lone type-i state must be a simple
    // cycle with exactly one external in-edge
    for (int c = 0; c < scc.count(); ++c) {
        if (!scc.nontrivial[c]) continue;
        const auto& members = scc.members[c];
        if (members.size() == 1 && res.typing[members[0]] == ArboType::TypeI) continue;
        for (int v : members) {
            int intra = 0;
            for (int d = 0; d < a.m; ++d)
                if (scc.component_of[a.edge(v, d)] == c) ++intra;
            if (intra != 1)
                res.violations.push_back("cycle state '" + a.states[v].name + "' has " +
                                         std::to_string(intra) +
                                         " intra-cycle out-edges, expected 1");
        }
        int external = 0;
        bool has_root = false;
        for (int v : members) {
            if (v == a.start) has_root = true;
            for (auto [s, d] : in_edges(a, v, true))
                if (scc.component_of[s] != c) ++external;
        }
        int total = external + (has_root ? 1 : 0);
        if (total != 1)
            res.violations.push_back("cycle of '" + a.states[members[0]].name + "' has " +
                                     std::to_string(total) + " external in-edges, expected 1");
    }

    res.ok = res.violations.empty();
    return res;
}

namespace {

struct Builder {
    Automaton work;
    std::vector<int> prov;
    std::vector<VertexCase> vcase;
    int max_states;
    int copy_counter = 0;

    std::string fresh_name(const std::string& base) {
        for (;;) {
            std::string cand = base + "_" + std::to_string(++copy_counter);
            if (work.index_of(cand) == -1) return cand;
        }
    }

    int add_state(const std::string& base, const std::string& output, int origin,
                  VertexCase c) {
        if (work.size() + 1 > max_states)
            throw domain_error("arborize: state blow-up cap exceeded");
        work.states.push_back({fresh_name(base), output});
        work.transitions.resize(work.transitions.size() + work.m, -1);
        prov.push_back(origin);
        vcase.push_back(c);
        return work.size() - 1;
    }

    std::vector<int> reachable_from(const std::vector<int>& seeds) {
        std::vector<bool> seen(work.size(), false);
        std::vector<int> stack = seeds, out;
        for (int s : seeds) seen[s] = true;
        while (!stack.empty()) {
            int s = stack.back();
            stack.pop_back();
            out.push_back(s);
            for (int d = 0; d < work.m; ++d) {
                int t = work.edge(s, d);
                if (!seen[t]) {
                    seen[t] = true;
                    stack.push_back(t);
                }
            }
        }
        std::sort(out.begin(), out.end());
        return out;
    }

    // deep copy of the subgraph reachable from `seeds`; returns old -> new map
    std::map<int, int> copy_reachable(const std::vector<int>& seeds) {
        auto region = reachable_from(seeds);
        std::map<int, int> to_copy;
        for (int s : region)
            to_copy[s] = add_state(work.states[s].name, work.states[s].output, prov[s], vcase[s]);
        for (int s : region)
            for (int d = 0; d < work.m; ++d) work.set_edge(to_copy[s], d, to_copy[work.edge(s, d)]);
        return to_copy;
    }
};

}  // namespace

CycleArborescence arborize(const Automaton& a, int max_states, int verify_terms) {
    Builder b;
    b.work = a;
    b.max_states = max_states;
    b.prov.resize(a.size());
    for (int i = 0; i < a.size(); ++i) b.prov[i] = i;
    b.vcase = classify_cases(a);  // throws on tied vertices

    // dead states lose their outgoing structure: everything self-loops
    for (int v = 0; v < b.work.size(); ++v)
        if (b.vcase[v] == VertexCase::CaseI)
            for (int d = 0; d < b.work.m; ++d) b.work.set_edge(v, d, v);

    // dead states: keep the lowest in-edge, give every other one a fresh copy
    for (int v = 0, n = b.work.size(); v < n; ++v) {
        if (b.vcase[v] != VertexCase::CaseI) continue;
        auto in = in_edges(b.work, v, false);
        size_t keep = (v == b.work.start) ? 0 : 1;  // the root keeps its virtual edge
        for (size_t i = keep; i < in.size(); ++i) {
            int copy = b.add_state(b.work.states[v].name, kZeroOutput, b.prov[v],
                                   VertexCase::CaseI);
            for (int d = 0; d < b.work.m; ++d) b.work.set_edge(copy, d, copy);
            b.work.set_edge(in[i].first, in[i].second, copy);
        }
    }

    // branch states: unfold until each has a single in-edge
    for (;;) {
        int v = -1;
        std::vector<std::pair<int, int>> in;
        for (int s = 0; s < b.work.size() && v == -1; ++s) {
            if (b.vcase[s] != VertexCase::CaseII) continue;
            in = in_edges(b.work, s, true);
            if (static_cast<int>(in.size()) + (s == b.work.start ? 1 : 0) >= 2) v = s;
        }
        if (v == -1) break;
        size_t keep = (v == b.work.start) ? 0 : 1;
        for (size_t i = keep; i < in.size(); ++i) {
            auto map = b.copy_reachable({v});
            b.work.set_edge(in[i].first, in[i].second, map[v]);
        }
    }

    // cycles: unfold until each has a single external in-edge
    for (;;) {
        auto scc = scc_decomposition(b.work);
        int target = -1;
        std::vector<std::pair<int, int>> external;
        bool has_root = false;
        for (int c = 0; c < scc.count() && target == -1; ++c) {
            if (!scc.nontrivial[c]) continue;
            if (b.vcase[scc.members[c][0]] != VertexCase::CaseIII) continue;
            external.clear();
            has_root = false;
            for (int v : scc.members[c]) {
                if (v == b.work.start) has_root = true;
                for (auto [s, d] : in_edges(b.work, v, true))
                    if (scc.component_of[s] != c) external.push_back({s, d});
            }
            std::sort(external.begin(), external.end());
            if (static_cast<int>(external.size()) + (has_root ? 1 : 0) >= 2) target = c;
        }
        if (target == -1) break;
        size_t keep = has_root ? 0 : 1;
        auto members = scc.members[target];
        for (size_t i = keep; i < external.size(); ++i) {
            auto map = b.copy_reachable(members);
            int old_target = b.work.edge(external[i].first, external[i].second);
            b.work.set_edge(external[i].first, external[i].second, map[old_target]);
        }
    }

    // drop states orphaned by redirections
    {
        std::vector<bool> seen(b.work.size(), false);
        std::vector<int> stack{b.work.start};
        seen[b.work.start] = true;
        while (!stack.empty()) {
            int s = stack.back();
            stack.pop_back();
            for (int d = 0; d < b.work.m; ++d) {
                int t = b.work.edge(s, d);
                if (!seen[t]) {
                    seen[t] = true;
                    stack.push_back(t);
                }
            }
        }
        std::vector<int> remap(b.work.size(), -1);
        Automaton pruned;
        pruned.m = b.work.m;
        std::vector<int> pruned_prov;
        for (int s = 0; s < b.work.size(); ++s)
            if (seen[s]) {
                remap[s] = pruned.size();
                pruned.states.push_back(b.work.states[s]);
                pruned_prov.push_back(b.prov[s]);
            }
        pruned.start = remap[b.work.start];
        pruned.transitions.assign(static_cast<size_t>(pruned.size()) * pruned.m, -1);
        for (int s = 0; s < b.work.size(); ++s)
            if (seen[s])
                for (int d = 0; d < b.work.m; ++d)
                    pruned.set_edge(remap[s], d, remap[b.work.edge(s, d)]);
        b.work = std::move(pruned);
        b.prov = std::move(pruned_prov);
    }

    auto check = is_cycle_arborescence(b.work);
    if (!check.ok)
        throw domain_error("arborize: result is not a cycle arborescence: " +
                           check.violations.front());

    CycleArborescence ca;
    ca.automaton = std::move(b.work);
    ca.vertex_type = std::move(check.typing);
    ca.root = ca.automaton.start;
    ca.provenance = std::move(b.prov);
    ca.height = height_of(ca);

    for (int k = 0; k <= verify_terms; ++k)
        if (eval_term(a, k) != eval_term(ca.automaton, k))
            throw domain_error("arborize: sequence mismatch at term " + std::to_string(k));
    return ca;
}

namespace {

// longest condensation path weighted by live cycles
int weighted_condensation_height(const Automaton& a, const std::vector<bool>& count_component) {
    auto scc = scc_decomposition(a);
    std::vector<std::vector<int>> succ(scc.count());
    for (auto [u, v] : scc.dag_edges) succ[u].push_back(v);
    std::vector<int> memo(scc.count(), -1);
    auto dp = [&](auto&& self, int c) -> int {
        if (memo[c] != -1) return memo[c];
        int best = 0;
        for (int s : succ[c]) best = std::max(best, self(self, s));
        return memo[c] = best + (count_component[c] ? 1 : 0);
    };
    int best = 0;
    for (int c = 0; c < scc.count(); ++c) best = std::max(best, dp(dp, c));
    return best;
}

std::vector<bool> live_cycle_components(const Automaton& a) {
    auto scc = scc_decomposition(a);
    auto reach = reaches_nonzero(a);
    std::vector<bool> live(scc.count(), false);
    for (int c = 0; c < scc.count(); ++c)
        live[c] = scc.nontrivial[c] && reach[scc.members[c][0]];
    return live;
}

}  // namespace

int height_of(const CycleArborescence& ca) {
    const Automaton& a = ca.automaton;
    auto scc = scc_decomposition(a);
    auto reach = reaches_nonzero(a);
    std::vector<bool> counted(scc.count(), false);
    for (int c = 0; c < scc.count(); ++c) {
        int rep = scc.members[c][0];
        counted[c] = scc.nontrivial[c] && ca.vertex_type[rep] == ArboType::TypeIII && reach[rep];
    }
    return weighted_condensation_height(a, counted);
}

int height_condensation_oracle(const Automaton& a) {
    if (!tied_vertices(a).empty())
        throw domain_error("height_condensation_oracle: automaton has tied vertices");
    return weighted_condensation_height(a, live_cycle_components(a));
}

bool support_nonempty(const Automaton& a) {
    // BFS over (state, saw-nonzero-digit); support member exists iff a
    // nonzero state is reachable with at least one nonzero digit consumed
    const int n = a.size();
    std::vector<bool> seen(2 * n, false);
    std::queue<int> q;
    seen[a.start] = true;
    q.push(a.start);
    while (!q.empty()) {
        int node = q.front();
        q.pop();
        int s = node % n;
        bool flag = node >= n;
        for (int d = 0; d < a.m; ++d) {
            int t = a.edge(s, d);
            bool nflag = flag || d > 0;
            if (nflag && a.nonzero(t)) return true;
            int next = t + (nflag ? n : 0);
            if (!seen[next]) {
                seen[next] = true;
                q.push(next);
            }
        }
    }
    return false;
}

RankReport rank_of_sparseness(const Automaton& a) {
    if (!tied_vertices(a).empty())
        throw domain_error("rank_of_sparseness: non-sparse automaton");
    if (!support_nonempty(a))
        throw domain_error("rank_of_sparseness: empty support, rank undefined");
    auto ca = arborize(a);
    RankReport r;
    r.height = ca.height;
    r.rank = ca.height - 1;

    // reconstruct one chain attaining the height
    const Automaton& arb = ca.automaton;
    auto scc = scc_decomposition(arb);
    auto reach = reaches_nonzero(arb);
    std::vector<bool> counted(scc.count(), false);
    for (int c = 0; c < scc.count(); ++c) {
        int rep = scc.members[c][0];
        counted[c] = scc.nontrivial[c] && ca.vertex_type[rep] == ArboType::TypeIII && reach[rep];
    }
    std::vector<std::vector<int>> succ(scc.count());
    for (auto [u, v] : scc.dag_edges) succ[u].push_back(v);
    std::vector<int> memo(scc.count(), -1);
    auto dp = [&](auto&& self, int c) -> int {
        if (memo[c] != -1) return memo[c];
        int best = 0;
        for (int s : succ[c]) best = std::max(best, self(self, s));
        return memo[c] = best + (counted[c] ? 1 : 0);
    };
    int best_c = 0;
    for (int c = 0; c < scc.count(); ++c)
        if (dp(dp, c) > dp(dp, best_c)) best_c = c;
    int c = best_c;
    for (;;) {
        if (counted[c]) r.live_cycle_chain.push_back(arb.states[scc.members[c][0]].name);
        int next = -1;
        for (int s : succ[c])
            if (next == -1 || memo[s] > memo[next]) next = s;
        if (next == -1 || memo[next] == 0) break;
        c = next;
    }
    return r;
}

}  // namespace cobham
