// automaton.cpp

#include "adfa/automaton.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>

#include "adfa/canonical.hpp"

namespace adfa {

Automaton make_automaton(int n, int k, int initial,
                         const std::vector<int>& final_states,
                         const std::vector<std::vector<int>>& rows) {
    if (n < 1 || k < 1)
        throw std::invalid_argument("automaton needs n >= 1 and k >= 1");
    if (static_cast<int>(rows.size()) != n)
        throw std::invalid_argument("expected one transition row per useful state");

    Automaton aut;
    aut.n = n;
    aut.k = k;
    aut.initial = initial;
    aut.delta.assign(static_cast<size_t>(n + 1) * k, 0);
    aut.finals.assign(n + 1, 0);
    for (int s = 1; s <= n; ++s) {
        if (static_cast<int>(rows[s - 1].size()) != k)
            throw std::invalid_argument("transition row " + std::to_string(s) +
                                        " does not have k entries");
        for (int a = 0; a < k; ++a) aut.delta[s * k + a] = rows[s - 1][a];
    }
    for (int f : final_states) {
        if (f < 0 || f > n)
            throw std::invalid_argument("final state out of range");
        aut.finals[f] = 1;
    }
    check_structure(aut);
    return aut;
}

void check_structure(const Automaton& aut) {
    if (aut.n < 1 || aut.k < 1)
        throw std::invalid_argument("automaton needs n >= 1 and k >= 1");
    if (aut.delta.size() != static_cast<size_t>(aut.n + 1) * aut.k)
        throw std::invalid_argument("transition table has the wrong size");
    if (aut.finals.size() != static_cast<size_t>(aut.n + 1))
        throw std::invalid_argument("finality vector has the wrong size");
    if (aut.initial < 1 || aut.initial > aut.n)
        throw std::invalid_argument("initial state out of range");
    for (int a = 0; a < aut.k; ++a)
        if (aut.next(0, a) != 0)
            throw std::invalid_argument("dead-state row must be all zeros");
    for (int s = 0; s <= aut.n; ++s)
        for (int a = 0; a < aut.k; ++a) {
            int t = aut.next(s, a);
            if (t < 0 || t > aut.n)
                throw std::invalid_argument("transition target out of range");
        }
    if (aut.finals[0])
        throw std::invalid_argument("dead state cannot be final");
    bool any_final = false;
    for (int s = 1; s <= aut.n; ++s) any_final = any_final || aut.is_final(s);
    if (!any_final)
        throw std::invalid_argument("final set is empty");
}

namespace detail {

RankStatus try_compute_ranks(const Automaton& aut) {
    RankStatus st;
    const int n = aut.n;
    // Iterative DFS; meeting a state that is still on the stack means a
    // cycle. rank stays -1 for states that reach no final state.
    std::vector<int> rank(n + 1, -1);
    std::vector<char> color(n + 1, 0); // 0 unvisited, 1 on stack, 2 done
    std::vector<std::pair<int, int>> stack; // (state, next symbol to expand)
    for (int root = 1; root <= n; ++root) {
        if (color[root] != 0) continue;
        stack.push_back({root, 0});
        color[root] = 1;
        while (!stack.empty()) {
            auto& [s, a] = stack.back();
            if (a < aut.k) {
                int t = aut.next(s, a);
                ++a;
                if (t == 0) continue;
                if (color[t] == 1) {
                    st.kind = RankStatus::Kind::cyclic;
                    st.bad_state = t;
                    return st;
                }
                if (color[t] == 0) {
                    color[t] = 1;
                    stack.push_back({t, 0});
                }
            } else {
                int r = aut.is_final(s) ? 0 : -1;
                for (int b = 0; b < aut.k; ++b) {
                    int t = aut.next(s, b);
                    if (t != 0 && rank[t] >= 0) r = std::max(r, 1 + rank[t]);
                }
                rank[s] = r;
                color[s] = 2;
                stack.pop_back();
            }
        }
    }
    for (int s = 1; s <= n; ++s)
        if (rank[s] < 0) {
            st.kind = RankStatus::Kind::useless;
            st.bad_state = s;
            return st;
        }
    st.rank = std::move(rank);
    st.diameter = *std::max_element(st.rank.begin() + 1, st.rank.end());
    return st;
}

} // namespace detail

RankTable compute_ranks(const Automaton& aut) {
    detail::RankStatus st = detail::try_compute_ranks(aut);
    if (st.kind == detail::RankStatus::Kind::cyclic)
        throw CyclicError("cycle through state " + std::to_string(st.bad_state));
    if (st.kind == detail::RankStatus::Kind::useless)
        throw NotTrimError("state " + std::to_string(st.bad_state) +
                           " cannot reach a final state");
    RankTable rt;
    rt.rank = std::move(st.rank);
    rt.rank[0] = -1;
    rt.diameter = st.diameter;
    rt.classes.assign(rt.diameter + 1, {});
    for (int s = 1; s <= aut.n; ++s) rt.classes[rt.rank[s]].push_back(s);
    for (int s = 1; s <= aut.n; ++s) {
        bool dead_row = true;
        for (int a = 0; a < aut.k; ++a) dead_row = dead_row && aut.next(s, a) == 0;
        if (dead_row) rt.predead.push_back(s);
    }
    return rt;
}

bool is_acyclic(const Automaton& aut) {
    return detail::try_compute_ranks(aut).kind != detail::RankStatus::Kind::cyclic;
}

bool is_initially_connected(const Automaton& aut) {
    std::vector<char> seen(aut.n + 1, 0);
    std::vector<int> queue{aut.initial};
    seen[aut.initial] = 1;
    while (!queue.empty()) {
        int s = queue.back();
        queue.pop_back();
        for (int a = 0; a < aut.k; ++a) {
            int t = aut.next(s, a);
            if (t != 0 && !seen[t]) {
                seen[t] = 1;
                queue.push_back(t);
            }
        }
    }
    for (int s = 1; s <= aut.n; ++s)
        if (!seen[s]) return false;
    return true;
}

bool is_trim(const Automaton& aut) {
    if (!is_initially_connected(aut)) return false;
    detail::RankStatus st = detail::try_compute_ranks(aut);
    return st.kind != detail::RankStatus::Kind::useless;
}

bool accepts(const Automaton& aut, const std::vector<int>& word) {
    int s = aut.initial;
    for (int a : word) {
        if (a < 0 || a >= aut.k)
            throw BadSymbolError("symbol index " + std::to_string(a) +
                                 " outside alphabet of size " + std::to_string(aut.k));
        s = aut.next(s, a);
    }
    return aut.is_final(s);
}

namespace {

void collect_words(const Automaton& aut, int s, std::vector<int>& prefix,
                   std::set<std::vector<int>>& out) {
    if (aut.is_final(s)) out.insert(prefix);
    for (int a = 0; a < aut.k; ++a) {
        int t = aut.next(s, a);
        if (t == 0) continue;
        prefix.push_back(a);
        collect_words(aut, t, prefix, out);
        prefix.pop_back();
    }
}

} // namespace

std::set<std::vector<int>> language(const Automaton& aut) {
    std::set<std::vector<int>> words;
    std::vector<int> prefix;
    collect_words(aut, aut.initial, prefix, words);
    return words;
}

bool mergeable(const Automaton& aut, int s, int t) {
    if (aut.is_final(s) != aut.is_final(t)) return false;
    for (int a = 0; a < aut.k; ++a)
        if (aut.next(s, a) != aut.next(t, a)) return false;
    return true;
}

bool is_minimal(const Automaton& aut) {
    for (int s = 1; s <= aut.n; ++s)
        for (int t = s + 1; t <= aut.n; ++t)
            if (mergeable(aut, s, t)) return false;
    return true;
}

Automaton minimize(const Automaton& aut) {
    if (!is_initially_connected(aut))
        throw NotTrimError("automaton has an unreachable state");
    RankTable rt = compute_ranks(aut);

    // Merge by increasing rank: states of equal rank with identical
    // (already-merged) rows and finality collapse to one representative.
    std::vector<int> rep(aut.n + 1);
    for (int s = 0; s <= aut.n; ++s) rep[s] = s;
    for (int l = 0; l <= rt.diameter; ++l) {
        std::map<std::pair<std::vector<int>, int>, int> groups;
        for (int s : rt.classes[l]) {
            std::vector<int> row(aut.k);
            for (int a = 0; a < aut.k; ++a) row[a] = rep[aut.next(s, a)];
            auto key = std::make_pair(std::move(row), static_cast<int>(aut.is_final(s)));
            auto [it, inserted] = groups.try_emplace(std::move(key), s);
            if (!inserted) rep[s] = it->second;
        }
    }

    std::vector<int> new_id(aut.n + 1, 0);
    int next_id = 0;
    for (int s = 1; s <= aut.n; ++s)
        if (rep[s] == s) new_id[s] = ++next_id;

    Automaton out;
    out.n = next_id;
    out.k = aut.k;
    out.initial = new_id[rep[aut.initial]];
    out.delta.assign(static_cast<size_t>(out.n + 1) * out.k, 0);
    out.finals.assign(out.n + 1, 0);
    for (int s = 1; s <= aut.n; ++s) {
        if (rep[s] != s) continue;
        int id = new_id[s];
        for (int a = 0; a < aut.k; ++a)
            out.delta[id * out.k + a] = new_id[rep[aut.next(s, a)]];
        out.finals[id] = aut.finals[s];
    }
    return out;
}

bool isomorphic(const Automaton& a, const Automaton& b) {
    if (a.n != b.n || a.k != b.k) return false;
    return encode(a, Mode::adfa) == encode(b, Mode::adfa);
}

} // namespace adfa
