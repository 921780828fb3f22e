// cobham-lab: analyze finite m-automata for sparseness, rank, and growth.
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "cobham/arborescence.hpp"
#include "cobham/counting.hpp"
#include "cobham/io_json.hpp"
#include "cobham/sequence.hpp"
#include "cobham/spectral.hpp"
#include "cobham/structure.hpp"

using namespace cobham;

namespace {

struct Opts {
    bool json = false;
    std::string out;
    uint64_t seed = 0;
    std::optional<long> budget;
    std::string method = "dp";
};

long effective_budget(const Opts& o, long fallback) {
    if (o.budget) return *o.budget;
    if (const char* env = std::getenv("COBHAM_LAB_BUDGET")) return std::atol(env);
    return fallback;
}

void emit(const Opts& o, const std::string& text) {
    if (o.out.empty()) {
        std::cout << text;
        if (!text.empty() && text.back() != '\n') std::cout << '\n';
    } else {
        std::ofstream f(o.out);
        if (!f) throw std::runtime_error("cannot write " + o.out);
        f << text;
        if (!text.empty() && text.back() != '\n') f << '\n';
    }
}

void emit(const Opts& o, const json& j) { emit(o, j.dump(2)); }

int state_index(const Automaton& a, const std::string& name) {
    int v = a.index_of(name);
    if (v < 0) throw domain_error("unknown state: " + name);
    return v;
}

void add_common(CLI::App* cmd, Opts& o) {
    cmd->add_flag("--json", o.json, "emit JSON instead of text");
    cmd->add_option("-o", o.out, "write output to a file");
    cmd->add_option("--seed", o.seed, "seed for randomized operations");
    cmd->add_option("--budget", o.budget, "work budget override");
}

std::string human_structure(const Automaton& a, const StructureReport& r) {
    std::string s = "verdict: " + to_string(r.verdict) + "\ntied:";
    for (int v : r.tied) s += " " + a.states[v].name;
    s += "\nsccs:";
    for (int c = 0; c < r.scc.count(); ++c) {
        s += " {";
        for (size_t i = 0; i < r.scc.members[c].size(); ++i)
            s += (i ? "," : "") + a.states[r.scc.members[c][i]].name;
        s += r.scc.nontrivial[c] ? "}*" : "}";
    }
    return s + "\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"cobham-lab: sparseness, rank, and growth of m-automatic sequences"};
    app.require_subcommand(1);

    Opts o;
    std::string file, vertex, method = "dp";
    std::string k_str, n_str;
    int k_int = 0, n_int = 0, k_max = 40;
    bool cumulative = false;

    auto* c_validate = app.add_subcommand("validate", "check the automaton rules");
    c_validate->add_option("file", file)->required();
    add_common(c_validate, o);

    auto* c_eval = app.add_subcommand("eval", "evaluate a_k");
    c_eval->add_option("file", file)->required();
    c_eval->add_option("k", k_str)->required();
    add_common(c_eval, o);

    auto* c_classify = app.add_subcommand("classify", "sparse / non-sparse with tied set");
    c_classify->add_option("file", file)->required();
    add_common(c_classify, o);

    auto* c_rank = app.add_subcommand("rank", "rank of sparseness");
    c_rank->add_option("file", file)->required();
    add_common(c_rank, o);

    auto* c_arborize = app.add_subcommand("arborize", "cycle-arborescence form");
    c_arborize->add_option("file", file)->required();
    add_common(c_arborize, o);

    auto* c_exponent = app.add_subcommand("exponent", "growth exponent B");
    c_exponent->add_option("file", file)->required();
    add_common(c_exponent, o);

    auto* c_perron = app.add_subcommand("perron", "Perron certificate for a tied SCC");
    c_perron->add_option("file", file)->required();
    c_perron->add_option("vertex", vertex, "anchor state (default: SCC achieving beta)");
    add_common(c_perron, o);

    auto* c_count = app.add_subcommand("count", "exact #E_N");
    c_count->add_option("file", file)->required();
    c_count->add_option("N", n_str)->required();
    c_count->add_option("--method", method)->check(CLI::IsMember({"dp", "brute", "matrix"}));
    add_common(c_count, o);

    auto* c_table = app.add_subcommand("table", "counts at N = m^k - 1");
    c_table->add_option("file", file)->required();
    c_table->add_option("--kmax", k_max);
    add_common(c_table, o);

    auto* c_walks = app.add_subcommand("walks", "closed-walk table Omega_n(v)");
    c_walks->add_option("file", file)->required();
    c_walks->add_option("vertex", vertex)->required();
    c_walks->add_option("n", n_int)->required();
    c_walks->add_flag("--cumulative", cumulative);
    add_common(c_walks, o);

    auto* c_witness = app.add_subcommand("witness", "2^k support witness family");
    c_witness->add_option("file", file)->required();
    c_witness->add_option("vertex", vertex)->required();
    c_witness->add_option("k", k_int)->required();
    add_common(c_witness, o);

    auto* c_wk = app.add_subcommand("wk", "W_k diagnostic over the tied set");
    c_wk->add_option("file", file)->required();
    c_wk->add_option("k", k_int)->required();
    add_common(c_wk, o);

    auto* c_report = app.add_subcommand("report", "full analysis");
    c_report->add_option("file", file)->required();
    add_common(c_report, o);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        Automaton a = load_automaton_file(file);

        if (*c_validate) {
            auto r = validate(a);
            if (o.json) {
                json j;
                j["ok"] = r.ok;
                json vs = json::array();
                for (const auto& v : r.violations)
                    vs.push_back({{"rule", v.rule}, {"where", v.where}, {"message", v.message}});
                j["violations"] = vs;
                emit(o, j);
            } else {
                std::string text = r.ok ? "ok\n" : "";
                for (const auto& v : r.violations)
                    text += v.rule + " at " + v.where + ": " + v.message + "\n";
                emit(o, text);
            }
            return r.ok ? 0 : 1;
        }

        if (auto r = validate(a); !r.ok)
            throw domain_error("invalid automaton: " + r.violations.front().rule + " at " +
                               r.violations.front().where);

        if (*c_eval) {
            emit(o, eval_term(a, mpz_class(k_str)));
        } else if (*c_classify) {
            auto r = classify_sparse(a);
            if (o.json)
                emit(o, structure_json(a, r));
            else
                emit(o, human_structure(a, r));
        } else if (*c_rank) {
            auto r = rank_of_sparseness(a);
            if (o.json) {
                emit(o, rank_json(r));
            } else {
                std::string chain;
                for (const auto& c : r.live_cycle_chain) chain += " " + c;
                emit(o, "height: " + std::to_string(r.height) +
                            "\nrank: " + std::to_string(r.rank) + "\nlive cycles:" + chain + "\n");
            }
        } else if (*c_arborize) {
            auto ca = arborize(a, static_cast<int>(effective_budget(o, 10000)));
            if (o.json) {
                emit(o, arborescence_json(ca, a));
            } else {
                emit(o, serialize_automaton(ca.automaton));
                if (!o.out.empty()) {
                    std::ofstream side(o.out + ".json");
                    side << arborescence_json(ca, a).dump(2) << '\n';
                }
            }
        } else if (*c_exponent) {
            auto r = growth_exponent(a);
            if (o.json) {
                emit(o, spectral_json(a, r));
            } else {
                std::string text = "B = " + std::to_string(r.B) +
                                   "\nbeta = " + std::to_string(r.beta) + "\n";
                for (const auto& s : r.sccs) {
                    text += "scc {";
                    for (size_t i = 0; i < s.members.size(); ++i)
                        text += (i ? "," : "") + a.states[s.members[i]].name;
                    text += "}: rho in [" + s.rho.lo.get_str() + ", " + s.rho.hi.get_str() +
                            "], char poly " + poly_to_string(s.poly) + "\n";
                }
                emit(o, text);
            }
        } else if (*c_perron) {
            int v;
            if (!vertex.empty()) {
                v = state_index(a, vertex);
            } else {
                auto r = growth_exponent(a);
                double best = -1;
                v = -1;
                for (const auto& s : r.sccs)
                    if (s.rho_float > best) best = s.rho_float, v = s.members.front();
            }
            auto sub = strongly_connected_subdigraph(a, v);
            auto cert = perron_certificate(sub, effective_budget(o, 64));
            if (o.json)
                emit(o, perron_json(cert));
            else
                emit(o, std::string(cert.ok ? "certified" : "not certified") +
                            ", p = " + std::to_string(cert.p) + ", poly " +
                            poly_to_string(cert.poly) + "\n");
            return cert.ok ? 0 : 1;
        } else if (*c_count) {
            CountMethod cm = method == "dp"      ? CountMethod::Dp
                             : method == "brute" ? CountMethod::Brute
                                                 : CountMethod::Matrix;
            auto r = count_support_exact(a, mpz_class(n_str), cm);
            if (o.json)
                emit(o, count_json(r));
            else
                emit(o, r.count.get_str());
        } else if (*c_table) {
            auto t = count_power_table(a, k_max, effective_budget(o, 256));
            if (o.json) {
                json rows = json::array();
                for (const auto& row : t)
                    rows.push_back({{"k", row.k},
                                    {"count", row.count.get_str()},
                                    {"log_ratio", row.log_ratio}});
                emit(o, rows);
            } else {
                emit(o, growth_csv(t));
            }
        } else if (*c_walks) {
            int v = state_index(a, vertex);
            std::vector<mpz_class> table;
            if (cumulative) {
                for (int n = 0; n <= n_int; ++n)
                    table.push_back(count_walks(a, v, v, n, true,
                                                static_cast<int>(effective_budget(o, 4096))));
            } else {
                table = closed_walk_table(a, v, n_int);
            }
            if (o.json) {
                json arr = json::array();
                for (const auto& x : table) arr.push_back(x.get_str());
                emit(o, arr);
            } else {
                emit(o, table_csv(table));
            }
        } else if (*c_witness) {
            int v = state_index(a, vertex);
            auto f = witness_family(a, v, k_int, effective_budget(o, 1 << 20));
            if (o.json)
                emit(o, witness_json(a, f));
            else
                emit(o, "vertex " + a.states[f.vertex].name + ": z=" + std::to_string(f.z) +
                            " x=" + std::to_string(f.x) + " y=" + std::to_string(f.y) + ", " +
                            std::to_string(f.members.size()) + " members\n");
        } else if (*c_wk) {
            auto tied_set = tied_vertices(a);
            std::vector<int> tied(tied_set.begin(), tied_set.end());
            auto r = wk_diagnostic(a, tied, k_int, static_cast<int>(effective_budget(o, 4096)));
            if (o.json)
                emit(o, json{{"k", k_int},
                             {"value", r.value.get_str()},
                             {"bound_ok", r.bound_ok}});
            else
                emit(o, r.value.get_str() + (r.bound_ok ? " (within envelope)\n" : " (!)\n"));
        } else if (*c_report) {
            auto sr = classify_sparse(a);
            json j;
            j["structure"] = structure_json(a, sr);
            if (sr.verdict == Verdict::Sparse) {
                if (support_nonempty(a)) j["rank"] = rank_json(rank_of_sparseness(a));
            } else {
                j["spectral"] = spectral_json(a, growth_exponent(a));
            }
            int kt = static_cast<int>(effective_budget(o, 20));
            json rows = json::array();
            for (const auto& row : count_power_table(a, kt))
                rows.push_back({{"k", row.k},
                                {"count", row.count.get_str()},
                                {"log_ratio", row.log_ratio}});
            j["table"] = rows;
            if (o.json) {
                emit(o, j);
            } else {
                std::string text = human_structure(a, sr);
                if (j.contains("rank"))
                    text += "rank: " + std::to_string(j["rank"]["rank"].get<int>()) + "\n";
                if (j.contains("spectral"))
                    text += "B = " + std::to_string(j["spectral"]["B"].get<double>()) + "\n";
                emit(o, text);
            }
        }
        return 0;
    } catch (const parse_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const domain_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
