// canonical.cpp

#include "adfa/canonical.hpp"

#include <algorithm>
#include <cassert>
#include <string>

namespace adfa {

const char* cond_name(Cond c) {
    switch (c) {
        case Cond::N0: return "N0";
        case Cond::N1: return "N1";
        case Cond::N2: return "N2";
        case Cond::N3: return "N3";
        case Cond::N4: return "N4";
        case Cond::N5: return "N5";
        case Cond::N6: return "N6";
        case Cond::N6e: return "N6'";
    }
    return "?";
}

InvalidStringError::InvalidStringError(Cond c, int pos)
    : Error(std::string("invalid canonical string: ") + cond_name(c) +
            " violated at position " + std::to_string(pos)),
      condition(c),
      position(pos) {}

StateTuple CanonicalString::tuple(int state) const {
    StateTuple t;
    t.targets.assign(cells.begin() + state * (k + 1),
                     cells.begin() + state * (k + 1) + k);
    t.finality = cell(state, k);
    return t;
}

std::vector<CharWord> characteristic_words(const Automaton& aut, const RankTable& ranks) {
    const int n = aut.n;
    // Incoming edges of each useful state.
    std::vector<std::vector<std::pair<int, int>>> preds(n + 1); // (source, symbol)
    for (int s = 1; s <= n; ++s)
        for (int a = 0; a < aut.k; ++a) {
            int t = aut.next(s, a);
            if (t != 0) preds[t].push_back({s, a});
        }

    // Every predecessor of a state has a strictly higher rank, so walking
    // the states by decreasing rank sees all words of the sources first.
    std::vector<int> order;
    for (int l = ranks.diameter; l >= 0; --l)
        for (int s : ranks.classes[l]) order.push_back(s);

    std::vector<CharWord> psi(n + 1);
    std::vector<char> done(n + 1, 0);
    done[aut.initial] = 1; // empty word
    for (int s : order) {
        if (s == aut.initial) continue;
        if (preds[s].empty())
            throw NotTrimError("state " + std::to_string(s) +
                               " is unreachable from the initial state");
        bool first = true;
        CharWord best;
        for (auto [p, a] : preds[s]) {
            assert(done[p]);
            CharWord cand;
            cand.tokens.reserve(psi[p].tokens.size() + 1);
            cand.tokens.push_back({ranks.rank[p], a, aut.is_final(p) ? 1 : 0});
            cand.tokens.insert(cand.tokens.end(), psi[p].tokens.begin(),
                               psi[p].tokens.end());
            if (first || cand < best) {
                best = std::move(cand);
                first = false;
            }
        }
        psi[s] = std::move(best);
        done[s] = 1;
    }
    return psi;
}

CharWord characteristic_word(const Automaton& aut, const RankTable& ranks, int state) {
    return characteristic_words(aut, ranks)[state];
}

namespace {

// Tuple of `state` with targets rewritten through a (partial) numbering.
std::vector<int> numbered_tuple(const Automaton& aut, const std::vector<int>& phi,
                                int state) {
    std::vector<int> t(aut.k + 1);
    for (int a = 0; a < aut.k; ++a) t[a] = phi[aut.next(state, a)];
    t[aut.k] = aut.is_final(state) ? 1 : 0;
    return t;
}

} // namespace

std::strong_ordering compare_states(const Automaton& aut, const Numbering& partial,
                                    int s, int t) {
    if (s == t) return std::strong_ordering::equal;
    std::vector<int> ds = numbered_tuple(aut, partial.phi, s);
    std::vector<int> dt = numbered_tuple(aut, partial.phi, t);
    if (auto c = ds <=> dt; c != 0) return c;
    RankTable ranks = compute_ranks(aut);
    std::vector<CharWord> psi = characteristic_words(aut, ranks);
    if (auto c = psi[s] <=> psi[t]; c != 0) return c;
    throw IncomparableError("states " + std::to_string(s) + " and " +
                            std::to_string(t) + " have equal tuples and equal "
                            "characteristic words");
}

namespace {

Numbering numbering_impl(const Automaton& aut, const RankTable& ranks, Mode mode) {
    Numbering num;
    num.phi.assign(aut.n + 1, -1);
    num.phi[0] = 0;
    int next = 1;

    std::vector<CharWord> psi;
    if (mode == Mode::adfa) psi = characteristic_words(aut, ranks);

    int start_rank = 0;
    if (mode == Mode::madfa) {
        // The unique pre-dead state is always number 1.
        if (ranks.classes[0].size() != 1)
            throw NotMinimalError("several pre-dead states");
        num.phi[ranks.classes[0][0]] = next++;
        start_rank = 1;
    }

    for (int l = start_rank; l <= ranks.diameter; ++l) {
        std::vector<std::pair<std::vector<int>, int>> keyed;
        keyed.reserve(ranks.classes[l].size());
        for (int s : ranks.classes[l])
            keyed.push_back({numbered_tuple(aut, num.phi, s), s});
        std::sort(keyed.begin(), keyed.end(),
                  [&](const auto& x, const auto& y) {
                      if (x.first != y.first) return x.first < y.first;
                      if (mode == Mode::adfa) return psi[x.second] < psi[y.second];
                      return false;
                  });
        for (size_t i = 1; i < keyed.size(); ++i) {
            if (keyed[i - 1].first != keyed[i].first) continue;
            if (mode == Mode::madfa)
                throw NotMinimalError("states " + std::to_string(keyed[i - 1].second) +
                                      " and " + std::to_string(keyed[i].second) +
                                      " are mergeable");
            if (psi[keyed[i - 1].second] == psi[keyed[i].second])
                throw IncomparableError("states " + std::to_string(keyed[i - 1].second) +
                                        " and " + std::to_string(keyed[i].second) +
                                        " have equal tuples and equal characteristic words");
        }
        for (auto& [tuple, s] : keyed) num.phi[s] = next++;
    }
    return num;
}

} // namespace

Numbering canonical_numbering(const Automaton& aut, Mode mode) {
    if (!is_initially_connected(aut))
        throw NotTrimError("automaton has an unreachable state");
    RankTable ranks = compute_ranks(aut);
    if (mode == Mode::madfa && !is_minimal(aut))
        throw NotMinimalError("automaton has mergeable states");
    return numbering_impl(aut, ranks, mode);
}

CanonicalString encode(const Automaton& aut, Mode mode) {
    Numbering num = canonical_numbering(aut, mode);
    CanonicalString cs;
    cs.n = aut.n;
    cs.k = aut.k;
    cs.mode = mode;
    cs.cells.assign(static_cast<size_t>(aut.n + 1) * (aut.k + 1), 0);
    const int w = aut.k + 1;
    for (int s = 1; s <= aut.n; ++s) {
        int i = num.phi[s];
        for (int a = 0; a < aut.k; ++a) cs.cells[i * w + a] = num.phi[aut.next(s, a)];
        cs.cells[i * w + aut.k] = aut.is_final(s) ? 1 : 0;
    }
    assert(num.phi[aut.initial] == aut.n);
    return cs;
}

namespace detail {

Automaton decode_unchecked(const CanonicalString& cs) {
    Automaton aut;
    aut.n = cs.n;
    aut.k = cs.k;
    aut.initial = cs.n;
    aut.delta.assign(static_cast<size_t>(cs.n + 1) * cs.k, 0);
    aut.finals.assign(cs.n + 1, 0);
    for (int s = 1; s <= cs.n; ++s) {
        for (int a = 0; a < cs.k; ++a) aut.delta[s * cs.k + a] = cs.cell(s, a);
        aut.finals[s] = cs.cell(s, cs.k) ? 1 : 0;
    }
    return aut;
}

} // namespace detail

Automaton decode(const CanonicalString& cs) {
    ValidationResult vr = validate(cs, cs.mode);
    if (!vr.ok) throw InvalidStringError(vr.condition, vr.position);
    return detail::decode_unchecked(cs);
}

ValidationResult validate(const CanonicalString& cs, Mode mode) {
    const int n = cs.n;
    const int k = cs.k;
    const int w = k + 1;
    assert(cs.cells.size() == static_cast<size_t>(n + 1) * w);

    auto fail = [](Cond c, int pos) { return ValidationResult{false, c, pos}; };

    // N0: the dead-state tuple is all zeros and state 1 is the final
    // pre-dead state (0^k, 1).
    for (int p = 0; p <= 2 * k + 1; ++p) {
        int expect = (p == 2 * k + 1) ? 1 : 0;
        if (cs.cells[p] != expect) return fail(Cond::N0, p);
    }

    // N1: finality bits.
    for (int i = 0; i <= n; ++i)
        if (int f = cs.cell(i, k); f != 0 && f != 1) return fail(Cond::N1, i * w + k);

    // N2: rank structure, recomputed from the string itself. Ranks must
    // exist (no cycles, every state reaches a final tuple), ascend with
    // the state number, and put exactly state n in the top rank.
    Automaton aut = detail::decode_unchecked(cs);
    detail::RankStatus rs = detail::try_compute_ranks(aut);
    if (rs.kind != detail::RankStatus::Kind::ok)
        return fail(Cond::N2, rs.bad_state * w);
    const std::vector<int>& rank = rs.rank;
    for (int i = 2; i <= n; ++i)
        if (rank[i] < rank[i - 1]) return fail(Cond::N2, i * w);
    if (n >= 2 && rank[n] == rank[n - 1]) return fail(Cond::N2, n * w);
    // In madfa mode rank 0 must be the single state 1; several pre-dead
    // states all share the tuple (0^k, 1), so strict N6 reports them.

    // N3: every state below n occurs as a transition target.
    std::vector<char> occurs(n + 1, 0);
    for (int i = 0; i <= n; ++i)
        for (int a = 0; a < k; ++a) occurs[cs.cell(i, a)] = 1;
    for (int v = 1; v < n; ++v)
        if (!occurs[v]) return fail(Cond::N3, v * w);

    // N4: transitions only reach states of strictly lower rank.
    for (int i = 1; i <= n; ++i)
        for (int a = 0; a < k; ++a) {
            int t = cs.cell(i, a);
            if (t != 0 && rank[t] >= rank[i]) return fail(Cond::N4, i * w + a);
        }

    // N5: every state of positive rank steps down by exactly one on some
    // symbol.
    for (int i = 1; i <= n; ++i) {
        if (rank[i] == 0) continue;
        bool has_step = false;
        for (int a = 0; a < k; ++a) {
            int t = cs.cell(i, a);
            has_step = has_step || (t != 0 && rank[t] == rank[i] - 1);
        }
        if (!has_step) return fail(Cond::N5, i * w);
    }

    // N6 / N6': tuple order within each rank.
    auto tuple_cmp = [&](int i, int j) {
        return std::lexicographical_compare_three_way(
            cs.cells.begin() + i * w, cs.cells.begin() + (i + 1) * w,
            cs.cells.begin() + j * w, cs.cells.begin() + (j + 1) * w);
    };
    for (int i = 2; i <= n; ++i) {
        if (rank[i] != rank[i - 1]) continue;
        auto c = tuple_cmp(i - 1, i);
        if (mode == Mode::madfa) {
            if (c >= 0) return fail(Cond::N6, i * w);
        } else {
            if (c > 0) return fail(Cond::N6e, i * w);
        }
    }
    if (mode == Mode::adfa) {
        // Equal tuples within a rank must carry strictly increasing
        // characteristic words.
        bool any_run = false;
        for (int i = 2; i <= n && !any_run; ++i)
            any_run = rank[i] == rank[i - 1] && tuple_cmp(i - 1, i) == 0;
        if (any_run) {
            RankTable rt;
            rt.rank = rank;
            rt.rank[0] = -1;
            rt.diameter = rs.diameter;
            rt.classes.assign(rt.diameter + 1, {});
            for (int s = 1; s <= n; ++s) rt.classes[rank[s]].push_back(s);
            std::vector<CharWord> psi = characteristic_words(aut, rt);
            for (int i = 2; i <= n; ++i) {
                if (rank[i] != rank[i - 1] || tuple_cmp(i - 1, i) != 0) continue;
                if (!(psi[i - 1] < psi[i])) return fail(Cond::N6e, i * w);
            }
        }
    }

    return ValidationResult{};
}

} // namespace adfa
