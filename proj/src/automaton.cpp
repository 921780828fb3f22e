#include "cobham/automaton.hpp"

#include <cctype>
#include <fstream>
#include <map>
#include <queue>
#include <sstream>

namespace cobham {

int Automaton::index_of(const std::string& name) const {
    for (int i = 0; i < size(); ++i)
        if (states[i].name == name) return i;
    return -1;
}

namespace {

bool valid_token(const std::string& t) {
    if (t.empty()) return false;
    for (char c : t)
        if (std::isspace(static_cast<unsigned char>(c))) return false;
    return true;
}

std::vector<std::string> tokenize(const std::string& line) {
    std::string stripped = line.substr(0, line.find('#'));
    std::istringstream ss(stripped);
    std::vector<std::string> out;
    std::string tok;
    while (ss >> tok) out.push_back(tok);
    return out;
}

}  // namespace

Automaton parse_automaton(const std::string& text) {
    Automaton a;
    a.m = -1;
    a.start = -1;
    std::string start_name;
    // trans lines as (state, digit, target-name), resolved after all states seen
    struct RawTrans { int line; std::string src; int digit; std::string dst; };
    std::vector<RawTrans> raw;

    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        auto toks = tokenize(line);
        if (toks.empty()) continue;
        const std::string& kw = toks[0];
        if (kw == "m") {
            if (toks.size() != 2) throw parse_error("expected: m <int>", line_no);
            if (a.m != -1) throw parse_error("duplicate 'm' line", line_no);
            try {
                a.m = std::stoi(toks[1]);
            } catch (const std::exception&) {
                throw parse_error("bad integer '" + toks[1] + "'", line_no);
            }
            if (a.m < 2) throw parse_error("m must be at least 2", line_no);
        } else if (kw == "start") {
            if (toks.size() != 2) throw parse_error("expected: start <name>", line_no);
            if (!start_name.empty()) throw parse_error("duplicate 'start' line", line_no);
            start_name = toks[1];
        } else if (kw == "state") {
            if (toks.size() != 3) throw parse_error("expected: state <name> <output>", line_no);
            if (a.index_of(toks[1]) != -1)
                throw parse_error("duplicate state '" + toks[1] + "'", line_no);
            if (!valid_token(toks[2])) throw parse_error("bad output token", line_no);
            a.states.push_back({toks[1], toks[2]});
        } else if (kw == "trans") {
            if (toks.size() != 4) throw parse_error("expected: trans <name> <digit> <name>", line_no);
            int digit;
            try {
                digit = std::stoi(toks[2]);
            } catch (const std::exception&) {
                throw parse_error("bad digit '" + toks[2] + "'", line_no);
            }
            if (a.index_of(toks[1]) == -1)
                throw parse_error("unknown state '" + toks[1] + "'", line_no);
            raw.push_back({line_no, toks[1], digit, toks[3]});
        } else {
            throw parse_error("unknown keyword '" + kw + "'", line_no);
        }
    }

    if (a.m == -1) throw parse_error("missing 'm' line");
    if (start_name.empty()) throw parse_error("missing 'start' line");
    if (a.states.empty()) throw parse_error("no states declared");
    a.start = a.index_of(start_name);
    if (a.start == -1) throw parse_error("unknown start state '" + start_name + "'");

    a.transitions.assign(static_cast<size_t>(a.size()) * a.m, -1);
    for (const auto& t : raw) {
        if (t.digit < 0 || t.digit >= a.m)
            throw parse_error("digit out of range 0.." + std::to_string(a.m - 1), t.line);
        int src = a.index_of(t.src);
        int dst = a.index_of(t.dst);
        if (dst == -1) throw parse_error("unknown state '" + t.dst + "'", t.line);
        if (a.edge(src, t.digit) != -1)
            throw parse_error("duplicate transition (" + t.src + ", " + std::to_string(t.digit) + ")",
                              t.line);
        a.set_edge(src, t.digit, dst);
    }
    for (int s = 0; s < a.size(); ++s)
        for (int d = 0; d < a.m; ++d)
            if (a.edge(s, d) == -1)
                throw parse_error("missing transition (" + a.states[s].name + ", " +
                                  std::to_string(d) + ")");
    return a;
}

std::string serialize_automaton(const Automaton& a) {
    std::ostringstream out;
    out << "m " << a.m << "\n";
    out << "start " << a.states[a.start].name << "\n";
    for (const auto& s : a.states) out << "state " << s.name << " " << s.output << "\n";
    for (int s = 0; s < a.size(); ++s)
        for (int d = 0; d < a.m; ++d)
            out << "trans " << a.states[s].name << " " << d << " "
                << a.states[a.edge(s, d)].name << "\n";
    return out.str();
}

ValidationReport validate(const Automaton& a) {
    ValidationReport r;
    auto flag = [&r](const std::string& rule, const std::string& where, const std::string& msg) {
        r.violations.push_back({rule, where, msg});
    };

    for (int i = 0; i < a.size(); ++i) {
        if (!valid_token(a.states[i].output))
            flag("output-label", a.states[i].name, "output token empty or contains whitespace");
        for (int j = i + 1; j < a.size(); ++j)
            if (a.states[i].name == a.states[j].name)
                flag("unique-names", a.states[i].name, "duplicate state name");
    }
    if (a.m < 2) flag("base", "m", "base must be at least 2");
    if (a.start < 0 || a.start >= a.size()) flag("start", "start", "start index out of range");

    bool complete = true;
    for (int s = 0; s < a.size(); ++s)
        for (int d = 0; d < a.m; ++d) {
            int t = a.edge(s, d);
            if (t < 0 || t >= a.size()) {
                complete = false;
                flag("m-completeness", a.states[s].name + "/" + std::to_string(d),
                     "missing or dangling transition");
            }
        }
    // LZI and accessibility need a structurally usable automaton
    if (!complete || a.start < 0 || a.start >= a.size()) {
        r.ok = false;
        return r;
    }

    for (int s = 0; s < a.size(); ++s) {
        int t = a.edge(s, 0);
        if (a.states[s].output != a.states[t].output)
            flag("leading-zero-invariance", a.states[s].name + " -0-> " + a.states[t].name,
                 "digit-0 edge joins outputs '" + a.states[s].output + "' and '" +
                     a.states[t].output + "'");
    }

    std::vector<bool> seen(a.size(), false);
    std::queue<int> q;
    seen[a.start] = true;
    q.push(a.start);
    while (!q.empty()) {
        int s = q.front();
        q.pop();
        for (int d = 0; d < a.m; ++d) {
            int t = a.edge(s, d);
            if (!seen[t]) {
                seen[t] = true;
                q.push(t);
            }
        }
    }
    for (int s = 0; s < a.size(); ++s)
        if (!seen[s]) flag("accessibility", a.states[s].name, "state unreachable from start");

    r.ok = r.violations.empty();
    return r;
}

bool same_automaton(const Automaton& a, const Automaton& b) {
    if (a.m != b.m || a.size() != b.size()) return false;
    std::vector<int> map(a.size(), -1);
    for (int i = 0; i < a.size(); ++i) {
        int j = b.index_of(a.states[i].name);
        if (j == -1 || a.states[i].output != b.states[j].output) return false;
        map[i] = j;
    }
    if (map[a.start] != b.start) return false;
    for (int s = 0; s < a.size(); ++s)
        for (int d = 0; d < a.m; ++d) {
            int ta = a.edge(s, d);
            int tb = b.edge(map[s], d);
            if (ta == -1 || tb == -1) {
                if (ta != tb) return false;
            } else if (map[ta] != tb) {
                return false;
            }
        }
    return true;
}

Automaton load_automaton_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw parse_error("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << f.rdbuf();
    return parse_automaton(ss.str());
}

}  // namespace cobham
