#include "topt/circuit.hpp"

#include "topt/errors.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

namespace topt {

std::size_t arity(GateKind kind) {
    switch (kind) {
    case GateKind::CZ:
    case GateKind::CS:
    case GateKind::CNOT:
        return 2;
    case GateKind::CCZ:
        return 3;
    case GateKind::IfX:
        return 0;
    default:
        return 1;
    }
}

std::string_view gate_name(GateKind kind) {
    switch (kind) {
    case GateKind::H: return "H";
    case GateKind::X: return "X";
    case GateKind::Y: return "Y";
    case GateKind::Z: return "Z";
    case GateKind::S: return "S";
    case GateKind::Sdg: return "SDG";
    case GateKind::T: return "T";
    case GateKind::Tdg: return "TDG";
    case GateKind::CZ: return "CZ";
    case GateKind::CS: return "CS";
    case GateKind::CCZ: return "CCZ";
    case GateKind::CNOT: return "CNOT";
    case GateKind::MeasureX: return "measx";
    case GateKind::IfX: return "ifx";
    }
    return "?";
}

bool is_diagonal(GateKind kind) {
    switch (kind) {
    case GateKind::Z:
    case GateKind::S:
    case GateKind::Sdg:
    case GateKind::T:
    case GateKind::Tdg:
    case GateKind::CZ:
    case GateKind::CS:
    case GateKind::CCZ:
        return true;
    default:
        return false;
    }
}

Gate Gate::make(GateKind kind, std::initializer_list<std::size_t> qubits) {
    if (kind == GateKind::MeasureX || kind == GateKind::IfX) {
        throw std::invalid_argument("use Gate::measure_x / Gate::if_x");
    }
    if (qubits.size() != arity(kind)) throw std::invalid_argument("wrong operand count for " + std::string(gate_name(kind)));
    Gate g;
    g.kind = kind;
    g.qubits.assign(qubits.begin(), qubits.end());
    return g;
}

Gate Gate::measure_x(std::size_t qubit, std::size_t outcome) {
    Gate g;
    g.kind = GateKind::MeasureX;
    g.qubits = {qubit};
    g.outcome = outcome;
    return g;
}

Gate Gate::if_x(std::size_t outcome, std::vector<Gate> body) {
    Gate g;
    g.kind = GateKind::IfX;
    g.outcome = outcome;
    g.body = std::move(body);
    return g;
}

Circuit& Circuit::add(GateKind kind, std::initializer_list<std::size_t> qubits) {
    return add(Gate::make(kind, qubits));
}

Circuit& Circuit::add(Gate gate) {
    gates.push_back(std::move(gate));
    return *this;
}

void Circuit::append(const std::vector<Gate>& more) { gates.insert(gates.end(), more.begin(), more.end()); }

bool Circuit::has_measurements() const {
    return std::any_of(gates.begin(), gates.end(),
                       [](const Gate& g) { return g.kind == GateKind::MeasureX || g.kind == GateKind::IfX; });
}

namespace {

void validate_operands(const Gate& g, std::size_t total) {
    if (g.qubits.size() != arity(g.kind)) throw std::invalid_argument("operand count mismatch");
    for (std::size_t i = 0; i < g.qubits.size(); ++i) {
        if (g.qubits[i] >= total) throw std::invalid_argument("qubit index out of range");
        for (std::size_t j = 0; j < i; ++j) {
            if (g.qubits[i] == g.qubits[j]) throw std::invalid_argument("repeated operand");
        }
    }
}

}  // namespace

void Circuit::validate() const {
    std::set<std::size_t> outcomes;
    for (const auto& g : gates) {
        if (g.kind == GateKind::IfX) {
            if (!outcomes.count(g.outcome)) throw std::invalid_argument("block reads an outcome not yet measured");
            for (const auto& inner : g.body) {
                if (inner.kind == GateKind::IfX || inner.kind == GateKind::MeasureX) {
                    throw std::invalid_argument("blocks may only contain unitary gates");
                }
                validate_operands(inner, qubits());
            }
            continue;
        }
        validate_operands(g, qubits());
        if (g.kind == GateKind::MeasureX && !outcomes.insert(g.outcome).second) {
            throw std::invalid_argument("outcome id measured twice");
        }
    }
}

// ---------------------------------------------------------------- parsing

namespace {

enum class Tok { Word, LBrace, RBrace, Semi, Arrow, Newline, End };

struct Token {
    Tok type;
    std::string text;
    std::size_t line;
    std::size_t column;
};

std::vector<Token> tokenize(std::string_view text) {
    std::vector<Token> out;
    std::size_t line = 1, col = 1;
    std::size_t i = 0;
    auto advance = [&](std::size_t k) {
        for (std::size_t j = 0; j < k; ++j, ++i) {
            if (text[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
    };
    while (i < text.size()) {
        const char ch = text[i];
        if (ch == '#') {
            while (i < text.size() && text[i] != '\n') advance(1);
        } else if (ch == '\n') {
            out.push_back({Tok::Newline, "\n", line, col});
            advance(1);
        } else if (std::isspace(static_cast<unsigned char>(ch))) {
            advance(1);
        } else if (ch == '{') {
            out.push_back({Tok::LBrace, "{", line, col});
            advance(1);
        } else if (ch == '}') {
            out.push_back({Tok::RBrace, "}", line, col});
            advance(1);
        } else if (ch == ';') {
            out.push_back({Tok::Semi, ";", line, col});
            advance(1);
        } else if (ch == '-' && i + 1 < text.size() && text[i + 1] == '>') {
            out.push_back({Tok::Arrow, "->", line, col});
            advance(2);
        } else {
            const std::size_t l0 = line, c0 = col, start = i;
            while (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i])) && text[i] != '{' &&
                   text[i] != '}' && text[i] != ';' && text[i] != '#' &&
                   !(text[i] == '-' && i + 1 < text.size() && text[i + 1] == '>')) {
                advance(1);
            }
            out.push_back({Tok::Word, std::string(text.substr(start, i - start)), l0, c0});
        }
    }
    out.push_back({Tok::End, "", line, col});
    return out;
}

std::string lower(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return s;
}

bool lookup_gate(const std::string& name, GateKind& kind) {
    static const std::pair<const char*, GateKind> table[] = {
        {"h", GateKind::H},     {"x", GateKind::X},     {"y", GateKind::Y},   {"z", GateKind::Z},
        {"s", GateKind::S},     {"sdg", GateKind::Sdg}, {"t", GateKind::T},   {"tdg", GateKind::Tdg},
        {"cz", GateKind::CZ},   {"cs", GateKind::CS},   {"ccz", GateKind::CCZ}, {"cnot", GateKind::CNOT},
    };
    const std::string key = lower(name);
    for (const auto& [n, k] : table) {
        if (key == n) {
            kind = k;
            return true;
        }
    }
    return false;
}

class Parser {
public:
    explicit Parser(std::string_view text) : toks_(tokenize(text)) {}

    Circuit run() {
        skip_separators();
        const Token& head = next();
        if (head.type != Tok::Word || lower(head.text) != "qubits") fail(head, "expected 'qubits <n>' header");
        Circuit c;
        c.n = parse_count(next());
        if (peek().type == Tok::Word && lower(peek().text) == "ancillas") {
            next();
            c.h = parse_count(next());
        }
        total_ = c.n + c.h;
        end_statement();
        while (true) {
            skip_separators();
            if (peek().type == Tok::End) break;
            c.gates.push_back(statement(true));
            end_statement();
        }
        return c;
    }

private:
    [[noreturn]] static void fail(const Token& t, const std::string& message) {
        throw ParseError(message, t.line, t.column);
    }

    const Token& peek() const { return toks_[pos_]; }
    const Token& next() { return toks_[pos_ == toks_.size() - 1 ? pos_ : pos_++]; }

    void skip_separators() {
        while (peek().type == Tok::Newline || peek().type == Tok::Semi) next();
    }

    void end_statement() {
        const Token& t = peek();
        if (t.type != Tok::Newline && t.type != Tok::Semi && t.type != Tok::End) fail(t, "unexpected '" + t.text + "'");
    }

    static std::size_t parse_number(const Token& t, std::size_t offset, const std::string& what) {
        if (t.type != Tok::Word || t.text.size() <= offset) fail(t, "expected " + what);
        std::size_t value = 0;
        for (std::size_t i = offset; i < t.text.size(); ++i) {
            if (!std::isdigit(static_cast<unsigned char>(t.text[i]))) fail(t, "expected " + what + ", got '" + t.text + "'");
            value = value * 10 + static_cast<std::size_t>(t.text[i] - '0');
            if (value > (std::size_t{1} << 40)) fail(t, "number too large");
        }
        return value;
    }

    static std::size_t parse_count(const Token& t) { return parse_number(t, 0, "a count"); }

    std::size_t qubit(const Token& t) const {
        if (t.type != Tok::Word || (t.text[0] != 'q' && t.text[0] != 'Q')) fail(t, "expected qubit reference q<i>");
        const std::size_t q = parse_number(t, 1, "qubit reference q<i>");
        if (q >= total_) fail(t, "undeclared qubit '" + t.text + "'");
        return q;
    }

    static std::size_t outcome(const Token& t) {
        if (t.type != Tok::Word || (t.text[0] != 'm' && t.text[0] != 'M')) fail(t, "expected outcome reference m<t>");
        return parse_number(t, 1, "outcome reference m<t>");
    }

    Gate statement(bool top) {
        const Token& head = next();
        if (head.type != Tok::Word) fail(head, "expected a gate name");
        const std::string name = lower(head.text);
        if (name == "measx") {
            if (!top) fail(head, "measx is not allowed inside a block");
            const std::size_t q = qubit(next());
            if (next().type != Tok::Arrow) fail(toks_[pos_ - 1], "expected '->'");
            const Token& m = next();
            const std::size_t id = outcome(m);
            if (!outcomes_.insert(id).second) fail(m, "outcome m" + std::to_string(id) + " already defined");
            return Gate::measure_x(q, id);
        }
        if (name == "ifx") {
            if (!top) fail(head, "nested blocks are not allowed");
            const Token& m = next();
            const std::size_t id = outcome(m);
            if (!outcomes_.count(id)) fail(m, "outcome m" + std::to_string(id) + " is not defined yet");
            if (next().type != Tok::LBrace) fail(toks_[pos_ - 1], "expected '{'");
            std::vector<Gate> body;
            while (true) {
                skip_separators();
                if (peek().type == Tok::RBrace) {
                    next();
                    break;
                }
                if (peek().type == Tok::End) fail(peek(), "unterminated block");
                body.push_back(statement(false));
                const Token& t = peek();
                if (t.type != Tok::Newline && t.type != Tok::Semi && t.type != Tok::RBrace) {
                    fail(t, "unexpected '" + t.text + "'");
                }
            }
            return Gate::if_x(id, std::move(body));
        }
        GateKind kind;
        if (!lookup_gate(name, kind)) fail(head, "unknown gate '" + head.text + "'");
        Gate g;
        g.kind = kind;
        for (std::size_t k = 0; k < arity(kind); ++k) {
            const Token& t = peek();
            if (t.type != Tok::Word) fail(t, std::string(gate_name(kind)) + " expects " + std::to_string(arity(kind)) + " operand(s)");
            next();
            const std::size_t q = qubit(t);
            if (std::find(g.qubits.begin(), g.qubits.end(), q) != g.qubits.end()) fail(t, "repeated operand");
            g.qubits.push_back(q);
        }
        if (peek().type == Tok::Word) {
            fail(peek(), std::string(gate_name(kind)) + " expects " + std::to_string(arity(kind)) + " operand(s)");
        }
        return g;
    }

    std::vector<Token> toks_;
    std::size_t pos_ = 0;
    std::size_t total_ = 0;
    std::set<std::size_t> outcomes_;
};

void emit_gate(std::ostringstream& out, const Gate& g) {
    out << gate_name(g.kind);
    for (auto q : g.qubits) out << " q" << q;
}

}  // namespace

Circuit parse(std::string_view text) { return Parser(text).run(); }

std::string emit(const Circuit& c) {
    std::ostringstream out;
    out << "qubits " << c.n;
    if (c.h > 0) out << " ancillas " << c.h;
    out << '\n';
    for (const auto& g : c.gates) {
        if (g.kind == GateKind::MeasureX) {
            out << "measx q" << g.qubits[0] << " -> m" << g.outcome;
        } else if (g.kind == GateKind::IfX) {
            out << "ifx m" << g.outcome << " {";
            for (std::size_t i = 0; i < g.body.size(); ++i) {
                out << (i == 0 ? " " : "; ");
                emit_gate(out, g.body[i]);
            }
            out << " }";
        } else {
            emit_gate(out, g);
        }
        out << '\n';
    }
    return out.str();
}

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

bool ends_with(const std::string& s, const std::string& suffix) {
    return s.size() >= suffix.size() && lower(s.substr(s.size() - suffix.size())) == suffix;
}

}  // namespace

Circuit load_circuit(const std::string& path) {
    const std::string text = read_file(path);
    return ends_with(path, ".qc") ? parse_qc(text) : parse(text);
}

void save_circuit(const Circuit& c, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write '" + path + "'");
    out << emit(c);
}

std::size_t t_count(const Circuit& c) {
    std::size_t count = 0;
    for (const auto& g : c.gates) {
        if (g.kind == GateKind::T || g.kind == GateKind::Tdg) ++count;
        for (const auto& inner : g.body) {
            if (inner.kind == GateKind::T || inner.kind == GateKind::Tdg) ++count;
        }
    }
    return count;
}

std::size_t h_count(const Circuit& c) {
    std::size_t count = 0;
    for (const auto& g : c.gates) {
        if (g.kind == GateKind::H) ++count;
        for (const auto& inner : g.body) {
            if (inner.kind == GateKind::H) ++count;
        }
    }
    return count;
}

std::vector<Gate> ccz_gates(std::size_t a, std::size_t b, std::size_t c) {
    using K = GateKind;
    return {
        Gate::make(K::CNOT, {b, c}), Gate::make(K::Tdg, {c}),     Gate::make(K::CNOT, {a, c}),
        Gate::make(K::T, {c}),       Gate::make(K::CNOT, {b, c}), Gate::make(K::Tdg, {c}),
        Gate::make(K::CNOT, {a, c}), Gate::make(K::T, {b}),       Gate::make(K::T, {c}),
        Gate::make(K::CNOT, {a, b}), Gate::make(K::T, {a}),       Gate::make(K::Tdg, {b}),
        Gate::make(K::CNOT, {a, b}),
    };
}

std::vector<Gate> cs_gates(std::size_t a, std::size_t b) {
    using K = GateKind;
    return {
        Gate::make(K::T, {a}),    Gate::make(K::T, {b}), Gate::make(K::CNOT, {a, b}),
        Gate::make(K::Tdg, {b}), Gate::make(K::CNOT, {a, b}),
    };
}

namespace {

void expand_into(std::vector<Gate>& out, const Gate& g) {
    if (g.kind == GateKind::CCZ) {
        auto seq = ccz_gates(g.qubits[0], g.qubits[1], g.qubits[2]);
        out.insert(out.end(), seq.begin(), seq.end());
    } else if (g.kind == GateKind::CS) {
        auto seq = cs_gates(g.qubits[0], g.qubits[1]);
        out.insert(out.end(), seq.begin(), seq.end());
    } else if (g.kind == GateKind::IfX) {
        std::vector<Gate> body;
        for (const auto& inner : g.body) expand_into(body, inner);
        out.push_back(Gate::if_x(g.outcome, std::move(body)));
    } else {
        out.push_back(g);
    }
}

}  // namespace

Circuit expand_to_clifford_t(const Circuit& c) {
    Circuit out(c.n, c.h);
    for (const auto& g : c.gates) expand_into(out.gates, g);
    return out;
}

}  // namespace topt
