#include "cobham/structure.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <map>
#include <numeric>

namespace cobham {

std::string to_string(VertexCase c) {
    switch (c) {
        case VertexCase::CaseI: return "case-i";
        case VertexCase::CaseII: return "case-ii";
        case VertexCase::CaseIII: return "case-iii";
    }
    return "?";
}

std::string to_string(Verdict v) { return v == Verdict::Sparse ? "Sparse" : "NonSparse"; }

SccDecomposition scc_decomposition(const Automaton& a) {
    const int n = a.size();
    // iterative Tarjan
    std::vector<int> index(n, -1), low(n, 0), stack, comp(n, -1);
    std::vector<bool> on_stack(n, false);
    std::vector<std::vector<int>> raw_members;
    int next_index = 0;

    struct Frame { int v; int edge; };
    for (int root = 0; root < n; ++root) {
        if (index[root] != -1) continue;
        std::vector<Frame> frames{{root, 0}};
        while (!frames.empty()) {
            auto& [v, e] = frames.back();
            if (e == 0) {
                index[v] = low[v] = next_index++;
                stack.push_back(v);
                on_stack[v] = true;
            }
            if (e < a.m) {
                int w = a.edge(v, e);
                ++e;
                if (w < 0) continue;
                if (index[w] == -1)
                    frames.push_back({w, 0});
                else if (on_stack[w])
                    low[v] = std::min(low[v], index[w]);
            } else {
                if (low[v] == index[v]) {
                    std::vector<int> scc;
                    int w;
                    do {
                        w = stack.back();
                        stack.pop_back();
                        on_stack[w] = false;
                        comp[w] = static_cast<int>(raw_members.size());
                        scc.push_back(w);
                    } while (w != v);
                    raw_members.push_back(std::move(scc));
                }
                int finished = v;
                frames.pop_back();
                if (!frames.empty())
                    low[frames.back().v] = std::min(low[frames.back().v], low[finished]);
            }
        }
    }

    // renumber components by smallest member index
    const int c = static_cast<int>(raw_members.size());
    std::vector<int> order(c);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int x, int y) {
        return *std::min_element(raw_members[x].begin(), raw_members[x].end()) <
               *std::min_element(raw_members[y].begin(), raw_members[y].end());
    });
    std::vector<int> renum(c);
    for (int i = 0; i < c; ++i) renum[order[i]] = i;

    SccDecomposition d;
    d.component_of.assign(n, -1);
    d.members.resize(c);
    d.nontrivial.assign(c, false);
    for (int i = 0; i < c; ++i) {
        d.members[renum[i]] = raw_members[i];
        std::sort(d.members[renum[i]].begin(), d.members[renum[i]].end());
    }
    for (int v = 0; v < n; ++v) d.component_of[v] = renum[comp[v]];

    std::set<std::pair<int, int>> dag;
    for (int v = 0; v < n; ++v)
        for (int dg = 0; dg < a.m; ++dg) {
            int w = a.edge(v, dg);
            if (w < 0) continue;
            int cv = d.component_of[v], cw = d.component_of[w];
            if (cv == cw)
                d.nontrivial[cv] = true;
            else
                dag.insert({cv, cw});
        }
    d.dag_edges.assign(dag.begin(), dag.end());
    return d;
}

std::vector<bool> reaches_nonzero(const Automaton& a) {
    const int n = a.size();
    std::vector<std::vector<int>> rev(n);
    for (int v = 0; v < n; ++v)
        for (int d = 0; d < a.m; ++d) rev[a.edge(v, d)].push_back(v);
    std::vector<bool> reach(n, false);
    std::vector<int> work;
    for (int v = 0; v < n; ++v)
        if (a.nonzero(v)) {
            reach[v] = true;
            work.push_back(v);
        }
    while (!work.empty()) {
        int v = work.back();
        work.pop_back();
        for (int u : rev[v])
            if (!reach[u]) {
                reach[u] = true;
                work.push_back(u);
            }
    }
    return reach;
}

std::set<int> tied_vertices(const Automaton& a) {
    auto scc = scc_decomposition(a);
    auto reach = reaches_nonzero(a);
    std::set<int> tied;
    for (int c = 0; c < scc.count(); ++c) {
        if (!scc.nontrivial[c]) continue;
        bool branching = false;
        for (int v : scc.members[c]) {
            int intra = 0;
            for (int d = 0; d < a.m; ++d)
                if (scc.component_of[a.edge(v, d)] == c) ++intra;
            if (intra >= 2) branching = true;
        }
        if (!branching) continue;
        for (int v : scc.members[c])
            if (reach[v]) tied.insert(v);
    }
    return tied;
}

bool tied_oracle(const Automaton& a, int v, int n_max) {
    if (!reaches_nonzero(a)[v]) return false;
    const int n = a.size();
    // column v of A^k, exact
    std::vector<mpz_class> col(n, 0);
    col[v] = 1;
    for (int k = 1; k <= n_max; ++k) {
        std::vector<mpz_class> next(n, 0);
        for (int u = 0; u < n; ++u)
            for (int d = 0; d < a.m; ++d) next[u] += col[a.edge(u, d)];
        col = std::move(next);
        if (col[v] >= 2) return true;
    }
    return false;
}

std::vector<VertexCase> classify_cases(const Automaton& a) {
    if (!tied_vertices(a).empty())
        throw domain_error("classify_cases: automaton has tied vertices");
    auto scc = scc_decomposition(a);
    auto reach = reaches_nonzero(a);
    std::vector<VertexCase> out(a.size());
    for (int v = 0; v < a.size(); ++v) {
        if (!reach[v])
            out[v] = VertexCase::CaseI;
        else if (scc.nontrivial[scc.component_of[v]])
            out[v] = VertexCase::CaseIII;
        else
            out[v] = VertexCase::CaseII;
    }
    return out;
}

StructureReport classify_sparse(const Automaton& a) {
    StructureReport r;
    r.scc = scc_decomposition(a);
    r.reaches_nonzero = reaches_nonzero(a);
    r.tied = tied_vertices(a);
    r.verdict = r.tied.empty() ? Verdict::Sparse : Verdict::NonSparse;
    if (r.tied.empty()) r.case_of = classify_cases(a);
    return r;
}

}  // namespace cobham
