#ifndef COBHAM_AUTOMATON_HPP
#define COBHAM_AUTOMATON_HPP

#include <stdexcept>
#include <string>
#include <vector>

namespace cobham {

// Thrown on malformed AUT input. `line` is 1-based, 0 if not tied to a line.
struct parse_error : std::runtime_error {
    int line;
    parse_error(const std::string& msg, int line_no = 0)
        : std::runtime_error(line_no ? "line " + std::to_string(line_no) + ": " + msg : msg),
          line(line_no) {}
};

// Thrown when an operation's domain precondition fails (e.g. rank of a
// non-sparse automaton). Maps to CLI exit code 1.
struct domain_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// The distinguished zero output token.
inline const std::string kZeroOutput = "0";

struct State {
    std::string name;
    std::string output;

    bool operator==(const State&) const = default;
};

// A finite m-automaton (DFAO). States are indexed densely; files refer to
// them by name. edge(s, d) == -1 marks a missing transition, which is legal
// only for deliberately invalid automata built in code (validate flags it).
struct Automaton {
    int m = 2;
    std::vector<State> states;
    int start = 0;
    // row-major: transitions[s * m + d]
    std::vector<int> transitions;

    int size() const { return static_cast<int>(states.size()); }

    int edge(int state, int digit) const { return transitions[state * m + digit]; }
    void set_edge(int state, int digit, int target) { transitions[state * m + digit] = target; }

    bool nonzero(int state) const { return states[state].output != kZeroOutput; }

    int index_of(const std::string& name) const;

    bool operator==(const Automaton& other) const = default;
};

struct Violation {
    std::string rule;     // rule id, e.g. "leading-zero-invariance"
    std::string where;    // state or edge reference
    std::string message;
};

struct ValidationReport {
    bool ok = true;
    std::vector<Violation> violations;
};

Automaton parse_automaton(const std::string& text);
std::string serialize_automaton(const Automaton& a);
ValidationReport validate(const Automaton& a);

// Name-based isomorphism modulo state declaration order.
bool same_automaton(const Automaton& a, const Automaton& b);

Automaton load_automaton_file(const std::string& path);

}  // namespace cobham

#endif
