// io.cpp

#include "adfa/io.hpp"

#include <stdexcept>

#include "json.hpp"

namespace adfa {

std::string format_canonical(const CanonicalString& cs) {
    std::string out;
    out.reserve(cs.cells.size() * 3);
    out += '[';
    const int w = cs.width();
    for (int i = 0; i <= cs.n; ++i) {
        if (i > 0) out += ',';
        out += '[';
        for (int j = 0; j < w; ++j) {
            if (j > 0) out += ',';
            out += std::to_string(cs.cell(i, j));
        }
        out += ']';
    }
    out += ']';
    return out;
}

CanonicalString parse_canonical(const std::string& line, Mode mode) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(line);
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("malformed canonical string: ") + e.what());
    }
    if (!doc.is_array() || doc.size() < 2)
        throw std::invalid_argument("canonical string needs at least two rows");
    const int n = static_cast<int>(doc.size()) - 1;

    CanonicalString cs;
    cs.n = n;
    cs.mode = mode;
    for (int i = 0; i <= n; ++i) {
        const auto& row = doc[i];
        if (!row.is_array() || row.size() < 2)
            throw std::invalid_argument("row " + std::to_string(i) +
                                        " is not a list of at least two cells");
        if (i == 0)
            cs.k = static_cast<int>(row.size()) - 1;
        else if (static_cast<int>(row.size()) != cs.k + 1)
            throw std::invalid_argument("rows have differing widths");
        for (const auto& cell : row) {
            if (!cell.is_number_integer())
                throw std::invalid_argument("cells must be integers");
            int v = cell.get<int>();
            if (v < 0 || v > n)
                throw std::invalid_argument("cell value " + std::to_string(v) +
                                            " outside [0, " + std::to_string(n) + "]");
            cs.cells.push_back(v);
        }
    }
    return cs;
}

AutomatonDoc automaton_from_json(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("malformed JSON: ") + e.what());
    }
    auto require = [&](const char* key) -> const nlohmann::json& {
        if (!doc.is_object() || !doc.contains(key))
            throw std::invalid_argument(std::string("missing field \"") + key + '"');
        return doc[key];
    };

    AutomatonDoc out;
    Automaton& aut = out.automaton;
    try {
        aut.n = require("n").get<int>();
        aut.k = require("k").get<int>();
        aut.initial = require("initial").get<int>();
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("malformed field: ") + e.what());
    }
    if (aut.n < 1 || aut.k < 1)
        throw std::invalid_argument("automaton needs n >= 1 and k >= 1");

    const auto& delta = require("delta");
    if (!delta.is_array() || static_cast<int>(delta.size()) != aut.n + 1)
        throw std::invalid_argument("delta needs n+1 rows");
    aut.delta.assign(static_cast<size_t>(aut.n + 1) * aut.k, 0);
    for (int s = 0; s <= aut.n; ++s) {
        const auto& row = delta[s];
        if (!row.is_array() || static_cast<int>(row.size()) != aut.k)
            throw std::invalid_argument("delta row " + std::to_string(s) +
                                        " needs k entries");
        for (int a = 0; a < aut.k; ++a) {
            if (!row[a].is_number_integer())
                throw std::invalid_argument("delta entries must be integers");
            aut.delta[s * aut.k + a] = row[a].get<int>();
        }
    }

    const auto& finals = require("finals");
    if (!finals.is_array())
        throw std::invalid_argument("finals must be a list of states");
    aut.finals.assign(aut.n + 1, 0);
    for (const auto& f : finals) {
        if (!f.is_number_integer())
            throw std::invalid_argument("finals entries must be integers");
        int s = f.get<int>();
        if (s < 1 || s > aut.n)
            throw std::invalid_argument("final state " + std::to_string(s) +
                                        " out of range");
        aut.finals[s] = 1;
    }

    if (doc.contains("alphabet")) {
        const auto& alpha = doc["alphabet"];
        if (!alpha.is_array() || static_cast<int>(alpha.size()) != aut.k)
            throw std::invalid_argument("alphabet must list k symbol names");
        for (const auto& sym : alpha) {
            if (!sym.is_string())
                throw std::invalid_argument("alphabet entries must be strings");
            out.alphabet.push_back(sym.get<std::string>());
        }
    }

    check_structure(aut);
    return out;
}

std::string automaton_to_json(const AutomatonDoc& doc) {
    const Automaton& aut = doc.automaton;
    nlohmann::json j;
    j["n"] = aut.n;
    j["k"] = aut.k;
    if (!doc.alphabet.empty()) j["alphabet"] = doc.alphabet;
    j["initial"] = aut.initial;
    std::vector<int> finals;
    for (int s = 1; s <= aut.n; ++s)
        if (aut.is_final(s)) finals.push_back(s);
    j["finals"] = finals;
    std::vector<std::vector<int>> delta(aut.n + 1, std::vector<int>(aut.k));
    for (int s = 0; s <= aut.n; ++s)
        for (int a = 0; a < aut.k; ++a) delta[s][a] = aut.next(s, a);
    j["delta"] = delta;
    return j.dump();
}

std::string display(const CharWord& word) {
    std::string out;
    for (const CharToken& t : word.tokens) {
        out += std::to_string(t.rank);
        if (t.symbol < 26)
            out += static_cast<char>('a' + t.symbol);
        else
            out += "<" + std::to_string(t.symbol) + ">";
        out += std::to_string(t.finality);
    }
    return out;
}

} // namespace adfa
