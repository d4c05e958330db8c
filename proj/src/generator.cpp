// generator.cpp

#include "adfa/generator.hpp"

#include <algorithm>
#include <cassert>
#include <climits>
#include <stdexcept>
#include <utility>

namespace adfa {

ResolveOutcome resolve_rank(const std::vector<ConstraintList>& prob_l, const RefMap& refs) {
    ResolveOutcome out;
    for (size_t li = 0; li < prob_l.size(); ++li) {
        const ConstraintList& list = prob_l[li];
        const std::vector<RefEntry>* entries =
            li < refs.per_list.size() ? &refs.per_list[li] : nullptr;
        if (entries == nullptr || entries->empty()) {
            if (list.groups.size() >= 2) out.lists.push_back(list);
            continue;
        }

        const int group_count = static_cast<int>(list.groups.size());
        std::vector<std::pair<int, int>> m(group_count, {INT_MAX, INT_MAX});
        std::vector<char> referenced(group_count, 0);
        for (const RefEntry& r : *entries) {
            referenced[r.group] = 1;
            m[r.group] = std::min(m[r.group], {r.symbol, r.finality});
        }

        // First references decide the leading token of a group's minimal
        // characteristic word, so this rank's references must cover a
        // prefix of the list: a group first referenced later can only
        // carry a larger word.
        int prefix = 0;
        while (prefix < group_count && referenced[prefix]) ++prefix;
        for (int g = prefix; g < group_count; ++g)
            if (referenced[g]) return out;

        for (int g = 1; g < prefix; ++g)
            if (m[g] < m[g - 1]) return out;

        // Groups tied on their minimal (symbol, finality) pair delegate
        // the order to the states referencing them.
        int g = 0;
        while (g < prefix) {
            int e = g + 1;
            while (e < prefix && m[e] == m[g]) ++e;
            if (e - g >= 2) {
                ConstraintList spawned;
                for (int h = g; h < e; ++h) {
                    std::vector<int> preds;
                    for (const RefEntry& r : *entries)
                        if (r.group == h && r.symbol == m[g].first &&
                            r.finality == m[g].second)
                            preds.push_back(r.pred);
                    std::sort(preds.begin(), preds.end());
                    preds.erase(std::unique(preds.begin(), preds.end()), preds.end());
                    spawned.groups.push_back(std::move(preds));
                }
                out.lists.push_back(std::move(spawned));
            }
            g = e;
        }

        // Referenced groups are settled; whatever the rank left untouched
        // keeps its relative constraint.
        if (group_count - prefix >= 2) {
            ConstraintList rest;
            rest.groups.assign(list.groups.begin() + prefix, list.groups.end());
            out.lists.push_back(std::move(rest));
        }
    }
    out.ok = true;
    return out;
}

namespace {

struct Worklist {
    std::vector<ConstraintList> lists;
    RefMap refs; // per_list parallel to lists
    std::vector<std::vector<std::pair<int, int>>> member_of; // state -> (list, group)

    void index_members(int n) {
        member_of.assign(n + 1, {});
        for (size_t li = 0; li < lists.size(); ++li)
            for (size_t gi = 0; gi < lists[li].groups.size(); ++gi)
                for (int s : lists[li].groups[gi])
                    member_of[s].push_back({static_cast<int>(li), static_cast<int>(gi)});
    }
};

class Generator {
public:
    Generator(int n, int k, Mode mode, bool prune_equiv, const StringSink* sink,
              GenOptions options, bool census)
        : n_(n), k_(k), w_(k + 1), mode_(mode), prune_equiv_(prune_equiv),
          sink_(sink), options_(options), census_(census) {}

    std::uint64_t run();
    long top_branches() const { return ordinal_; }

private:
    struct Frame {
        std::vector<int> targets;
        std::vector<int> marked;
        std::vector<std::pair<int, size_t>> trail;
        Worklist closed;
        Worklist final_close;
    };

    int n_, k_, w_;
    Mode mode_;
    bool prune_equiv_;
    const StringSink* sink_;
    GenOptions options_;
    bool census_;

    std::vector<int> cells_;
    std::vector<int> rank_start_;
    std::vector<char> referenced_;
    std::vector<Frame> frames_;
    int unref_ = 0;
    std::uint64_t emitted_ = 0;
    bool stop_ = false;
    long ordinal_ = 0;

    bool in_branch_window() const {
        if (ordinal_ < options_.first_branch_lo) return false;
        return options_.first_branch_hi < 0 || ordinal_ < options_.first_branch_hi;
    }

    void emit();
    bool close_rank(const Worklist& ctx, Worklist& out, int next_state);
    void place(int i, Worklist& ctx);
};

void Generator::emit() {
    CanonicalString cs{n_, k_, mode_, cells_};
    if (!prune_equiv_ && !validate(cs, mode_).ok) return;
    ++emitted_;
    if (sink_ != nullptr && *sink_ && !(*sink_)(cs)) stop_ = true;
}

bool Generator::close_rank(const Worklist& ctx, Worklist& out, int next_state) {
    ResolveOutcome res = resolve_rank(ctx.lists, ctx.refs);
    if (!res.ok) return false;
    out.lists = std::move(res.lists);

    // Runs of identical tuples in the finished rank become new lists, one
    // singleton group per state in numbering order.
    const int rl = rank_start_.back();
    int s = rl;
    while (s < next_state) {
        int e = s + 1;
        while (e < next_state &&
               std::equal(cells_.begin() + (e - 1) * w_, cells_.begin() + e * w_,
                          cells_.begin() + e * w_))
            ++e;
        if (e - s >= 2) {
            ConstraintList run;
            for (int x = s; x < e; ++x) run.groups.push_back({x});
            out.lists.push_back(std::move(run));
        }
        s = e;
    }
    out.refs.per_list.assign(out.lists.size(), {});
    out.index_members(n_);
    return true;
}

void Generator::place(int i, Worklist& ctx) {
    const bool last = (i == n_);
    const bool base_rank = rank_start_.size() == 1;
    const int rl = rank_start_.back();
    const int rlm1 = base_rank ? 0 : rank_start_[rank_start_.size() - 2];
    const int base = i * w_;
    const int prev = (i - 1) * w_;
    Frame& fr = frames_[i];

    bool close_tried = false;
    bool close_ok = false;

    std::vector<int>& t = fr.targets;
    t.assign(k_, 0);
    for (;;) {
        if (stop_) return;
        int hi = 0;
        for (int a = 0; a < k_; ++a) hi = std::max(hi, t[a]);

        for (int f = 0; f < 2 && !stop_; ++f) {
            const bool newrank = hi >= rl;
            if (newrank) {
                // Starting the next rank commits the current one, and the
                // resolution outcome is shared by every such candidate.
                if (prune_equiv_) {
                    if (!close_tried) {
                        close_tried = true;
                        close_ok = close_rank(ctx, fr.closed, i);
                    }
                    if (!close_ok) continue;
                }
            } else {
                if (last) continue; // the top rank is exactly the last state
                // Order within the rank.
                int cmp = 0;
                for (int a = 0; a < k_ && cmp == 0; ++a) cmp = t[a] - cells_[prev + a];
                if (cmp == 0) cmp = f - cells_[prev + k_];
                if (mode_ == Mode::madfa ? cmp <= 0 : cmp < 0) continue;
                // A step into the rank immediately below. Rank 0 needs
                // none; its candidates are pinned to (0^k, 1) by the
                // order check against the forced state-1 tuple.
                if (!base_rank) {
                    bool step = false;
                    for (int a = 0; a < k_ && !step; ++a)
                        step = t[a] >= rlm1 && t[a] < rl;
                    if (!step) continue;
                }
            }

            // Tentatively place the tuple.
            for (int a = 0; a < k_; ++a) cells_[base + a] = t[a];
            cells_[base + k_] = f;
            fr.marked.clear();
            for (int a = 0; a < k_; ++a) {
                int x = t[a];
                if (x != 0 && !referenced_[x]) {
                    referenced_[x] = 1;
                    --unref_;
                    fr.marked.push_back(x);
                }
            }
            ++unref_; // the new state is not referenced yet

            // Every unreferenced state still needs a future transition
            // slot (the last state excepted: nothing may reach it).
            const int need = unref_ - (last ? 1 : 0);
            bool descend = need <= k_ * (n_ - i);
            if (descend && i == 2) {
                if (census_ || !in_branch_window()) descend = false;
                ++ordinal_;
            }

            if (descend) {
                Worklist& sub = (newrank && prune_equiv_) ? fr.closed : ctx;
                if (newrank) rank_start_.push_back(i);
                fr.trail.clear();
                if (prune_equiv_) {
                    for (int a = 0; a < k_; ++a) {
                        int x = t[a];
                        if (x == 0) continue;
                        for (auto [li, gi] : sub.member_of[x]) {
                            fr.trail.push_back({li, sub.refs.per_list[li].size()});
                            sub.refs.per_list[li].push_back({gi, x, a, f, i});
                        }
                    }
                }
                if (last) {
                    bool ok = true;
                    if (prune_equiv_) {
                        ok = close_rank(sub, fr.final_close, i + 1);
                        // Nothing is left to reference a surviving list,
                        // so resolution must have drained them all.
                        assert(!ok || fr.final_close.lists.empty());
                    }
                    if (ok) emit();
                } else {
                    place(i + 1, sub);
                }
                for (auto it = fr.trail.rbegin(); it != fr.trail.rend(); ++it)
                    sub.refs.per_list[it->first].resize(it->second);
                if (newrank) rank_start_.pop_back();
            }

            --unref_;
            for (int x : fr.marked) {
                referenced_[x] = 0;
                ++unref_;
            }
        }

        // Next target combination, last cell fastest.
        int pos = k_ - 1;
        while (pos >= 0 && t[pos] == i - 1) t[pos--] = 0;
        if (pos < 0) break;
        ++t[pos];
    }
}

std::uint64_t Generator::run() {
    if (n_ < 1 || k_ < 1)
        throw std::invalid_argument("generation needs n >= 1 and k >= 1");
    cells_.assign(static_cast<size_t>(n_ + 1) * w_, 0);
    cells_[w_ + k_] = 1; // state 1 is the final pre-dead state
    referenced_.assign(n_ + 1, 0);
    rank_start_ = {1};
    unref_ = 1;
    frames_.resize(n_ + 1);

    if (n_ == 1) {
        bool selected = in_branch_window();
        ++ordinal_;
        if (selected && !census_) emit();
        return emitted_;
    }

    Worklist ctx;
    ctx.index_members(n_);
    place(2, ctx);
    return emitted_;
}

} // namespace

std::uint64_t generate(int n, int k, Mode mode, const StringSink& sink,
                       const GenOptions& options) {
    Generator gen(n, k, mode, true, &sink, options, false);
    return gen.run();
}

std::uint64_t count(int n, int k, Mode mode) {
    Generator gen(n, k, mode, true, nullptr, {}, false);
    return gen.run();
}

std::uint64_t generate_filtered(int n, int k, Mode mode, const StringSink& sink) {
    Generator gen(n, k, mode, false, &sink, {}, false);
    return gen.run();
}

long count_top_branches(int n, int k, Mode mode) {
    Generator gen(n, k, mode, true, nullptr, {}, true);
    gen.run();
    return gen.top_branches();
}

} // namespace adfa
