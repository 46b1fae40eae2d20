#include "topt/circuit.hpp"

#include "topt/errors.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <string>
#include <vector>

namespace topt {

namespace {

struct Word {
    std::string text;
    std::size_t column;
};

std::vector<Word> split_words(const std::string& line) {
    std::vector<Word> out;
    std::size_t i = 0;
    while (i < line.size()) {
        if (std::isspace(static_cast<unsigned char>(line[i])) || line[i] == ',') {
            ++i;
            continue;
        }
        const std::size_t start = i;
        while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i])) && line[i] != ',') ++i;
        out.push_back({line.substr(start, i - start), start + 1});
    }
    return out;
}

std::string upper(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
    return s;
}

}  // namespace

Circuit parse_qc(std::string_view text) {
    std::vector<std::string> names;
    std::map<std::string, std::size_t> index;
    Circuit c;
    bool in_body = false;
    bool seen_end = false;
    std::size_t line_no = 0;
    std::size_t pos = 0;

    while (pos <= text.size()) {
        std::size_t eol = text.find('\n', pos);
        if (eol == std::string_view::npos) eol = text.size();
        std::string raw(text.substr(pos, eol - pos));
        pos = eol + 1;
        ++line_no;
        if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);

        // ';' separates several gates on one line.
        std::size_t seg_start = 0;
        while (seg_start <= raw.size()) {
            std::size_t seg_end = raw.find(';', seg_start);
            if (seg_end == std::string::npos) seg_end = raw.size();
            std::string segment = raw.substr(seg_start, seg_end - seg_start);
            std::vector<Word> words = split_words(segment);
            for (auto& w : words) w.column += seg_start;
            seg_start = seg_end + 1;
            if (words.empty()) continue;

            const std::string head = words[0].text;
            const std::string key = upper(head);
            if (seen_end) throw ParseError("content after END", line_no, words[0].column);
            if (!in_body) {
                if (key == ".V") {
                    for (std::size_t k = 1; k < words.size(); ++k) {
                        if (index.count(words[k].text)) {
                            throw ParseError("duplicate qubit name '" + words[k].text + "'", line_no, words[k].column);
                        }
                        index[words[k].text] = names.size();
                        names.push_back(words[k].text);
                    }
                } else if (key == "BEGIN") {
                    if (names.empty()) throw ParseError("BEGIN before any .v declaration", line_no, words[0].column);
                    c.n = names.size();
                    in_body = true;
                } else if (!key.empty() && key[0] == '.') {
                    // .i/.o/.c carry no information the circuit model uses.
                } else {
                    throw ParseError("expected a header directive or BEGIN", line_no, words[0].column);
                }
                continue;
            }
            if (key == "END") {
                seen_end = true;
                continue;
            }

            std::vector<std::size_t> ops;
            for (std::size_t k = 1; k < words.size(); ++k) {
                auto it = index.find(words[k].text);
                if (it == index.end()) {
                    throw ParseError("undeclared qubit '" + words[k].text + "'", line_no, words[k].column);
                }
                if (std::find(ops.begin(), ops.end(), it->second) != ops.end()) {
                    throw ParseError("repeated operand '" + words[k].text + "'", line_no, words[k].column);
                }
                ops.push_back(it->second);
            }
            auto need = [&](std::size_t lo, std::size_t hi) {
                if (ops.size() < lo || ops.size() > hi) {
                    throw ParseError("wrong operand count for '" + head + "'", line_no, words[0].column);
                }
            };
            using K = GateKind;
            if (key == "TOF" || key == "CNOT") {
                need(key == "CNOT" ? 2 : 1, 3);
                if (ops.size() == 1) {
                    c.add(K::X, {ops[0]});
                } else if (ops.size() == 2) {
                    c.add(K::CNOT, {ops[0], ops[1]});
                } else {
                    c.add(K::H, {ops[2]});
                    c.append(ccz_gates(ops[0], ops[1], ops[2]));
                    c.add(K::H, {ops[2]});
                }
            } else if (key == "Z") {
                need(1, 3);
                if (ops.size() == 1) {
                    c.add(K::Z, {ops[0]});
                } else if (ops.size() == 2) {
                    c.add(K::CZ, {ops[0], ops[1]});
                } else {
                    c.append(ccz_gates(ops[0], ops[1], ops[2]));
                }
            } else {
                static const std::map<std::string, GateKind> single = {
                    {"H", K::H},     {"X", K::X},     {"Y", K::Y},    {"S", K::S},     {"P", K::S},
                    {"S*", K::Sdg},  {"P*", K::Sdg},  {"T", K::T},    {"T*", K::Tdg},  {"SDG", K::Sdg},
                    {"TDG", K::Tdg},
                };
                auto it = single.find(key);
                if (it == single.end()) throw ParseError("unknown gate '" + head + "'", line_no, words[0].column);
                need(1, 1);
                c.add(it->second, {ops[0]});
            }
        }
        if (eol == text.size()) break;
    }
    if (!in_body) throw ParseError("missing BEGIN", line_no, 1);
    if (!seen_end) throw ParseError("missing END", line_no, 1);
    return c;
}

}  // namespace topt
