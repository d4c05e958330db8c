// adfa_main.cpp -- command-line front end.
//
// Exit codes: 0 success, 1 malformed input or usage error, 2 semantic
// rejection (invalid string, rejected word, formula outside its range).

#include <cstdint>
#include <fstream>
#include <future>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "adfa/automaton.hpp"
#include "adfa/canonical.hpp"
#include "adfa/closed_forms.hpp"
#include "adfa/generator.hpp"
#include "adfa/io.hpp"
#include "adfa/oracle.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitRejected = 2;

std::string read_all(std::istream& in) {
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

struct GenerateArgs {
    int states = 1;
    int alphabet = 1;
    bool minimal = false;
    std::int64_t limit = -1;
    int partitions = 1;
    std::string output;
};

int run_generate(const GenerateArgs& args) {
    adfa::Mode mode = args.minimal ? adfa::Mode::madfa : adfa::Mode::adfa;
    std::ofstream file;
    std::ostream* out = &std::cout;
    if (!args.output.empty()) {
        file.open(args.output);
        if (!file) {
            std::cerr << "cannot open output file: " << args.output << "\n";
            return kExitUsage;
        }
        out = &file;
    }

    std::int64_t remaining = args.limit;
    if (args.partitions <= 1) {
        adfa::generate(args.states, args.alphabet, mode,
                       [&](const adfa::CanonicalString& cs) {
                           if (remaining == 0) return false;
                           *out << adfa::format_canonical(cs) << '\n';
                           return remaining < 0 || --remaining > 0;
                       });
        return kExitOk;
    }

    // Contiguous blocks of the first free tuple's candidates generate
    // disjoint consecutive intervals of the stream, so emitting the
    // blocks in order preserves the global order.
    const long branches = adfa::count_top_branches(args.states, args.alphabet, mode);
    const int parts =
        static_cast<int>(std::min<long>(args.partitions, std::max(branches, 1L)));
    std::vector<std::future<std::string>> futures;
    for (int p = 0; p < parts; ++p) {
        adfa::GenOptions opt;
        opt.first_branch_lo = branches * p / parts;
        opt.first_branch_hi = branches * (p + 1) / parts;
        futures.push_back(std::async(std::launch::async, [=] {
            std::string chunk;
            adfa::generate(args.states, args.alphabet, mode,
                           [&](const adfa::CanonicalString& cs) {
                               chunk += adfa::format_canonical(cs);
                               chunk += '\n';
                               return true;
                           },
                           opt);
            return chunk;
        }));
    }
    for (auto& f : futures) {
        std::string chunk = f.get();
        if (remaining < 0) {
            *out << chunk;
            continue;
        }
        size_t pos = 0;
        while (remaining > 0 && pos < chunk.size()) {
            size_t nl = chunk.find('\n', pos);
            *out << chunk.substr(pos, nl - pos + 1);
            pos = nl + 1;
            --remaining;
        }
        if (remaining == 0) break;
    }
    return kExitOk;
}

int run_count(int states, int alphabet, bool minimal, const std::string& method) {
    adfa::Mode mode = minimal ? adfa::Mode::madfa : adfa::Mode::adfa;
    if (method == "generate") {
        std::cout << adfa::count(states, alphabet, mode) << "\n";
        return kExitOk;
    }
    if (method == "oracle") {
        std::cout << adfa::oracle_count(states, alphabet, mode) << "\n";
        return kExitOk;
    }
    try {
        adfa::BigInt value = minimal ? adfa::madfa_formula(states, alphabet)
                                     : adfa::adfa_formula(states, alphabet);
        std::cout << value << "\n";
        return kExitOk;
    } catch (const adfa::UnsupportedNError& e) {
        std::cerr << e.what() << "\n";
        return kExitRejected;
    }
}

int run_validate(bool minimal_mode) {
    adfa::Mode mode = minimal_mode ? adfa::Mode::madfa : adfa::Mode::adfa;
    std::string line;
    bool any_violation = false;
    bool saw_input = false;
    while (std::getline(std::cin, line)) {
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        saw_input = true;
        adfa::CanonicalString cs = adfa::parse_canonical(line, mode);
        adfa::ValidationResult vr = adfa::validate(cs, mode);
        if (vr.ok) {
            std::cout << "ok\n";
        } else {
            std::cout << "violation " << adfa::cond_name(vr.condition) << " "
                      << vr.position << "\n";
            any_violation = true;
        }
    }
    if (!saw_input) {
        std::cerr << "no canonical string on standard input\n";
        return kExitUsage;
    }
    return any_violation ? kExitRejected : kExitOk;
}

std::vector<int> parse_word(const std::string& word,
                            const std::vector<std::string>& alphabet) {
    std::vector<int> symbols;
    if (alphabet.empty()) {
        // Comma-separated symbol indices.
        std::stringstream ss(word);
        std::string item;
        while (std::getline(ss, item, ','))
            if (!item.empty()) symbols.push_back(std::stoi(item));
        return symbols;
    }
    auto find_symbol = [&](const std::string& name) {
        for (size_t i = 0; i < alphabet.size(); ++i)
            if (alphabet[i] == name) return static_cast<int>(i);
        throw std::invalid_argument("unknown symbol \"" + name + "\"");
    };
    bool single_char = true;
    for (const std::string& s : alphabet) single_char = single_char && s.size() == 1;
    if (single_char) {
        for (char c : word) symbols.push_back(find_symbol(std::string(1, c)));
    } else {
        std::stringstream ss(word);
        std::string item;
        while (std::getline(ss, item, ','))
            if (!item.empty()) symbols.push_back(find_symbol(item));
    }
    return symbols;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"canonical forms, exact generation and counting of trim acyclic automata"};
    app.require_subcommand(1);

    GenerateArgs gen_args;
    CLI::App* gen = app.add_subcommand("generate", "stream canonical strings, one per line");
    gen->add_option("--states", gen_args.states, "number of useful states")->required();
    gen->add_option("--alphabet", gen_args.alphabet, "alphabet size")->required();
    gen->add_flag("--minimal", gen_args.minimal, "minimal automata only");
    gen->add_option("--limit", gen_args.limit, "stop after this many strings");
    gen->add_option("--partitions", gen_args.partitions, "concurrent search partitions");
    gen->add_option("--output", gen_args.output, "write to a file instead of stdout");

    int count_states = 1, count_alphabet = 1;
    bool count_minimal = false;
    std::string method = "generate";
    CLI::App* cnt = app.add_subcommand("count", "print the exact number of automata");
    cnt->add_option("--states", count_states, "number of useful states")->required();
    cnt->add_option("--alphabet", count_alphabet, "alphabet size")->required();
    cnt->add_flag("--minimal", count_minimal, "minimal automata only");
    cnt->add_option("--method", method, "generate | formula | oracle")
        ->required()
        ->check(CLI::IsMember({"generate", "formula", "oracle"}));

    bool canon_minimal = false;
    CLI::App* canon =
        app.add_subcommand("canonicalize", "automaton JSON on stdin -> canonical string");
    canon->add_flag("--minimal-mode", canon_minimal, "use the minimal normal form");

    bool validate_minimal = false;
    CLI::App* val =
        app.add_subcommand("validate", "canonical string lines on stdin -> ok / violation");
    val->add_flag("--minimal-mode", validate_minimal, "check the minimal normal form");

    CLI::App* min = app.add_subcommand("minimize", "automaton JSON on stdin -> minimal JSON");

    std::string word;
    CLI::App* acc =
        app.add_subcommand("accepts", "test a word against automaton JSON on stdin");
    acc->add_option("--word", word,
                    "word over the display alphabet, or comma-separated symbol indices");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (gen->parsed()) {
            if (gen_args.states < 1 || gen_args.alphabet < 1 || gen_args.partitions < 1) {
                std::cerr << "states, alphabet and partitions must be positive\n";
                return kExitUsage;
            }
            return run_generate(gen_args);
        }
        if (cnt->parsed()) {
            if (count_states < 1 || count_alphabet < 1) {
                std::cerr << "states and alphabet must be positive\n";
                return kExitUsage;
            }
            return run_count(count_states, count_alphabet, count_minimal, method);
        }
        if (canon->parsed()) {
            adfa::AutomatonDoc doc = adfa::automaton_from_json(read_all(std::cin));
            adfa::Mode mode = canon_minimal ? adfa::Mode::madfa : adfa::Mode::adfa;
            try {
                std::cout << adfa::format_canonical(adfa::encode(doc.automaton, mode))
                          << "\n";
            } catch (const adfa::NotMinimalError& e) {
                std::cerr << e.what() << "\n";
                return kExitRejected;
            }
            return kExitOk;
        }
        if (val->parsed()) return run_validate(validate_minimal);
        if (min->parsed()) {
            adfa::AutomatonDoc doc = adfa::automaton_from_json(read_all(std::cin));
            doc.automaton = adfa::minimize(doc.automaton);
            std::cout << adfa::automaton_to_json(doc) << "\n";
            return kExitOk;
        }
        if (acc->parsed()) {
            adfa::AutomatonDoc doc = adfa::automaton_from_json(read_all(std::cin));
            std::vector<int> symbols;
            try {
                symbols = parse_word(word, doc.alphabet);
            } catch (const std::exception& e) {
                std::cerr << e.what() << "\n";
                return kExitUsage;
            }
            bool accepted = adfa::accepts(doc.automaton, symbols);
            std::cout << (accepted ? "accept" : "reject") << "\n";
            return accepted ? kExitOk : kExitRejected;
        }
    } catch (const adfa::BadSymbolError& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    } catch (const adfa::Error& e) {
        std::cerr << e.what() << "\n";
        return kExitRejected;
    } catch (const std::invalid_argument& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    }
    return kExitOk;
}
