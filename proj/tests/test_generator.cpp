#include "doctest.h"

#include <set>
#include <vector>

#include "adfa/generator.hpp"
#include "adfa/io.hpp"
#include "fixtures.hpp"

using namespace adfa;

namespace {

std::vector<CanonicalString> collect(int n, int k, Mode mode) {
    std::vector<CanonicalString> out;
    generate(n, k, mode, [&](const CanonicalString& cs) {
        out.push_back(cs);
        return true;
    });
    return out;
}

std::set<std::vector<int>> cell_set(const std::vector<CanonicalString>& strings) {
    std::set<std::vector<int>> out;
    for (const CanonicalString& cs : strings) out.insert(cs.cells);
    return out;
}

} // namespace

TEST_CASE("known counts") {
    CHECK(count(1, 1, Mode::adfa) == 1);
    CHECK(count(1, 4, Mode::madfa) == 1);
    CHECK(count(2, 2, Mode::adfa) == 6);
    CHECK(count(2, 2, Mode::madfa) == 6);
    CHECK(count(2, 5, Mode::adfa) == 62);
    CHECK(count(3, 2, Mode::adfa) == 62);
    CHECK(count(3, 2, Mode::madfa) == 60);
    CHECK(count(4, 2, Mode::adfa) == 964);
    CHECK(count(4, 2, Mode::madfa) == 900);
    CHECK(count(3, 3, Mode::adfa) == 544);
    CHECK(count(3, 3, Mode::madfa) == 532);
}

TEST_CASE("single-state stream") {
    std::vector<CanonicalString> out = collect(1, 2, Mode::adfa);
    REQUIRE(out.size() == 1);
    CHECK(format_canonical(out[0]) == "[[0,0,0],[0,0,1]]");
}

TEST_CASE("streams are strictly increasing and valid") {
    for (Mode mode : {Mode::adfa, Mode::madfa}) {
        std::vector<CanonicalString> out = collect(4, 2, mode);
        for (size_t i = 1; i < out.size(); ++i) CHECK(out[i - 1].cells < out[i].cells);
        for (const CanonicalString& cs : out) CHECK(validate(cs, mode).ok);
    }
}

TEST_CASE("emitted strings decode to trim acyclic automata of the full size") {
    generate(4, 2, Mode::madfa, [&](const CanonicalString& cs) {
        Automaton aut = detail::decode_unchecked(cs);
        CHECK(aut.n == 4);
        CHECK(is_acyclic(aut));
        CHECK(is_trim(aut));
        CHECK(is_minimal(aut));
        return true;
    });
}

TEST_CASE("minimal-mode output is the minimal slice of the general stream") {
    std::set<std::vector<int>> strict = cell_set(collect(4, 2, Mode::madfa));
    std::set<std::vector<int>> relaxed_minimal;
    generate(4, 2, Mode::adfa, [&](const CanonicalString& cs) {
        if (is_minimal(detail::decode_unchecked(cs))) relaxed_minimal.insert(cs.cells);
        return true;
    });
    CHECK(strict == relaxed_minimal);
}

TEST_CASE("pruned and filtered generation agree") {
    for (Mode mode : {Mode::adfa, Mode::madfa}) {
        for (auto [n, k] : {std::pair{3, 2}, {4, 2}, {3, 3}}) {
            std::set<std::vector<int>> pruned = cell_set(collect(n, k, mode));
            std::set<std::vector<int>> filtered;
            generate_filtered(n, k, mode, [&](const CanonicalString& cs) {
                filtered.insert(cs.cells);
                return true;
            });
            CHECK(pruned == filtered);
        }
    }
}

TEST_CASE("minimal counts never exceed general counts") {
    for (int k = 1; k <= 3; ++k)
        for (int n = 1; n <= 4; ++n) {
            std::uint64_t m = count(n, k, Mode::madfa);
            std::uint64_t a = count(n, k, Mode::adfa);
            CHECK(m <= a);
            if (n <= 2) CHECK(m == a);
        }
}

TEST_CASE("rank resolution follows the reference order") {
    // Two equal final pre-dead states referenced from one state of the
    // next rank: first on symbol a (twice), second on symbol c.
    std::vector<ConstraintList> lists{{{{1}, {2}}}};
    RefMap refs;
    refs.per_list.resize(1);
    refs.per_list[0].push_back({0, 1, 0, 0, 3});
    refs.per_list[0].push_back({0, 1, 1, 0, 3});
    refs.per_list[0].push_back({1, 2, 2, 0, 3});
    ResolveOutcome ok = resolve_rank(lists, refs);
    CHECK(ok.ok);
    CHECK(ok.lists.empty());

    // Same references against the reversed group order contradict.
    std::vector<ConstraintList> reversed{{{{2}, {1}}}};
    RefMap swapped;
    swapped.per_list.resize(1);
    swapped.per_list[0].push_back({1, 1, 0, 0, 3});
    swapped.per_list[0].push_back({1, 1, 1, 0, 3});
    swapped.per_list[0].push_back({0, 2, 2, 0, 3});
    CHECK_FALSE(resolve_rank(reversed, swapped).ok);
}

TEST_CASE("rank resolution spawns a list for tied references") {
    // Both groups reached on the same symbol with the same finality, from
    // states 4 and 5: the order falls to the referencing states.
    std::vector<ConstraintList> lists{{{{1}, {2}}}};
    RefMap refs;
    refs.per_list.resize(1);
    refs.per_list[0].push_back({0, 1, 0, 0, 4});
    refs.per_list[0].push_back({1, 2, 0, 0, 5});
    ResolveOutcome out = resolve_rank(lists, refs);
    CHECK(out.ok);
    REQUIRE(out.lists.size() == 1);
    CHECK(out.lists[0].groups == std::vector<std::vector<int>>{{4}, {5}});
}

TEST_CASE("rank resolution wants references to cover a prefix") {
    // Only the later group referenced: its word would lead, contradiction.
    std::vector<ConstraintList> lists{{{{1}, {2}}}};
    RefMap refs;
    refs.per_list.resize(1);
    refs.per_list[0].push_back({1, 2, 0, 0, 3});
    CHECK_FALSE(resolve_rank(lists, refs).ok);

    // Untouched lists survive unchanged.
    RefMap empty;
    ResolveOutcome keep = resolve_rank(lists, empty);
    CHECK(keep.ok);
    REQUIRE(keep.lists.size() == 1);
    CHECK(keep.lists[0].groups == lists[0].groups);
}

TEST_CASE("partitions cover the stream in order") {
    const std::vector<CanonicalString> whole = collect(4, 2, Mode::adfa);
    const long branches = count_top_branches(4, 2, Mode::adfa);
    REQUIRE(branches > 1);
    for (int parts : {2, 3}) {
        std::vector<CanonicalString> stitched;
        for (int p = 0; p < parts; ++p) {
            GenOptions opt;
            opt.first_branch_lo = branches * p / parts;
            opt.first_branch_hi = branches * (p + 1) / parts;
            generate(4, 2, Mode::adfa,
                     [&](const CanonicalString& cs) {
                         stitched.push_back(cs);
                         return true;
                     },
                     opt);
        }
        CHECK(stitched == whole);
    }
}

TEST_CASE("a sink can stop the stream early") {
    int seen = 0;
    std::uint64_t emitted = generate(4, 2, Mode::adfa, [&](const CanonicalString&) {
        return ++seen < 10;
    });
    CHECK(seen == 10);
    CHECK(emitted == 10);
}

TEST_CASE("generation arguments are checked") {
    CHECK_THROWS_AS(count(0, 2, Mode::adfa), std::invalid_argument);
    CHECK_THROWS_AS(count(2, 0, Mode::adfa), std::invalid_argument);
}
