#include "oberwolfach/search.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <random>

namespace oberwolfach {

namespace {

using Mask = std::uint64_t;

constexpr Mask bit(int i) { return Mask{1} << i; }

struct Abort {
    SearchStatus status;
};

class Searcher {
public:
    Searcher(const SearchProblem& p, const SearchOptions& o) : opt_(o) {
        if (p.labels.size() > 64) throw DomainError("search is limited to 64 vertices");
        n_ = static_cast<int>(p.labels.size());
        std::map<Vertex, int> id;
        for (int i = 0; i < n_; ++i) id[p.labels[static_cast<std::size_t>(i)]] = i;
        labels_ = p.labels;
        out_.assign(static_cast<std::size_t>(n_), 0);
        for (const auto& a : p.arcs) out_[static_cast<std::size_t>(id.at(a.tail))] |= bit(id.at(a.head));
        for (const auto& s : p.factor_sets) {
            Mask m = 0;
            for (Vertex v : s) m |= bit(id.at(v));
            sets_.push_back(m);
        }
        for (int l : p.type.lengths()) {
            if (static_cast<std::size_t>(l) >= need_.size()) need_.resize(static_cast<std::size_t>(l) + 1, 0);
            ++need_[static_cast<std::size_t>(l)];
        }
        max_len_ = p.type.empty() ? 0 : p.type.lengths().back();
        interchangeable_ = p.interchangeable;
        succ_.assign(sets_.size(), std::vector<int>(static_cast<std::size_t>(n_), -1));
        if (o.shuffle_seed) rng_.seed(*o.shuffle_seed);
    }

    SearchResult run() {
        SearchResult r;
        try {
            r.status = factor(0) ? SearchStatus::Found : SearchStatus::Exhausted;
        } catch (const Abort& a) {
            r.status = a.status;
        }
        r.nodes = nodes_;
        if (r.status == SearchStatus::Found) {
            for (const auto& s : succ_) {
                std::vector<Arc> arcs;
                for (int v = 0; v < n_; ++v)
                    if (s[static_cast<std::size_t>(v)] >= 0)
                        arcs.push_back({labels_[static_cast<std::size_t>(v)],
                                        labels_[static_cast<std::size_t>(s[static_cast<std::size_t>(v)])]});
                r.factors.push_back(std::move(arcs));
            }
        }
        return r;
    }

private:
    void tick() {
        ++nodes_;
        if (opt_.node_budget && nodes_ > opt_.node_budget) throw Abort{SearchStatus::BudgetExceeded};
        if (opt_.deadline && (nodes_ & 0xFFF) == 0 && std::chrono::steady_clock::now() > *opt_.deadline)
            throw Abort{SearchStatus::TimedOut};
    }

    // Every remaining arc must fit inside some later factor's vertex set.
    bool coverable(std::size_t from) const {
        for (int u = 0; u < n_; ++u) {
            Mask o = out_[static_cast<std::size_t>(u)];
            if (!o) continue;
            Mask allowed = 0;
            for (std::size_t g = from; g < sets_.size(); ++g)
                if (sets_[g] & bit(u)) allowed |= sets_[g];
            if (o & ~allowed) return false;
        }
        return true;
    }

    bool factor(std::size_t f) {
        if (f == sets_.size()) {
            for (Mask o : out_)
                if (o) return false;
            return true;
        }
        if (!coverable(f)) return false;
        Mask all = sets_[f];
        int start = std::countr_zero(all);
        cur_need_ = need_;
        first_step_ = true;
        return extend(f, start, start, 1, all & ~bit(start));
    }

    std::vector<int> candidates(Mask m) {
        std::vector<int> c;
        while (m) {
            int v = std::countr_zero(m);
            c.push_back(v);
            m &= m - 1;
        }
        if (opt_.shuffle_seed) std::shuffle(c.begin(), c.end(), rng_);
        return c;
    }

    bool extend(std::size_t f, int start, int cur, int len, Mask unassigned) {
        tick();
        auto& succ = succ_[f];
        const auto ucur = static_cast<std::size_t>(cur);
        Mask options = out_[ucur];
        if (interchangeable_ && first_step_) {
            first_step_ = false;
            if (!options) return false;
            options &= ~(options - 1);
            bool ok = step(f, start, cur, len, unassigned, std::countr_zero(options));
            first_step_ = true;
            return ok;
        }
        std::vector<int> order = candidates(options & (unassigned | bit(start)));
        for (int v : order)
            if (step(f, start, cur, len, unassigned, v)) return true;
        succ[ucur] = -1;
        return false;
    }

    bool step(std::size_t f, int start, int cur, int len, Mask unassigned, int v) {
        auto& succ = succ_[f];
        const auto ucur = static_cast<std::size_t>(cur);
        if (v == start) {
            auto ulen = static_cast<std::size_t>(len);
            if (len < 2 || ulen >= cur_need_.size() || cur_need_[ulen] == 0) return false;
            --cur_need_[ulen];
            out_[ucur] &= ~bit(v);
            succ[ucur] = v;
            bool ok;
            if (!unassigned) {
                auto saved = cur_need_;
                bool saved_first = first_step_;
                ok = factor(f + 1);
                cur_need_ = saved;
                first_step_ = saved_first;
            } else {
                int s2 = std::countr_zero(unassigned);
                ok = extend(f, s2, s2, 1, unassigned & ~bit(s2));
            }
            if (ok) return true;
            succ[ucur] = -1;
            out_[ucur] |= bit(v);
            ++cur_need_[ulen];
            return false;
        }
        if (!(unassigned & bit(v)) || len + 1 > max_len_) return false;
        out_[ucur] &= ~bit(v);
        succ[ucur] = v;
        bool ok = extend(f, start, v, len + 1, unassigned & ~bit(v));
        if (ok) return true;
        succ[ucur] = -1;
        out_[ucur] |= bit(v);
        return false;
    }

    SearchOptions opt_;
    int n_ = 0;
    std::vector<Vertex> labels_;
    std::vector<Mask> out_;
    std::vector<Mask> sets_;
    std::vector<int> need_;
    std::vector<int> cur_need_;
    int max_len_ = 0;
    bool interchangeable_ = false;
    bool first_step_ = false;
    std::vector<std::vector<int>> succ_;
    std::uint64_t nodes_ = 0;
    std::mt19937_64 rng_;
};

}  // namespace

SearchResult search_decomposition(const SearchProblem& problem, const SearchOptions& options) {
    Searcher s(problem, options);
    return s.run();
}

SearchResult search_with_restarts(const SearchProblem& problem, std::uint64_t seed,
                                  std::uint64_t nodes_per_restart, int max_restarts,
                                  std::optional<std::chrono::steady_clock::time_point> deadline) {
    std::seed_seq seq{seed};
    std::mt19937_64 seeds(seq);
    SearchResult last;
    std::uint64_t total = 0;
    for (int r = 0; r < max_restarts; ++r) {
        SearchOptions o;
        o.node_budget = nodes_per_restart;
        o.shuffle_seed = seeds();
        o.deadline = deadline;
        last = search_decomposition(problem, o);
        total += last.nodes;
        last.restarts = r;
        if (last.status == SearchStatus::Found || last.status == SearchStatus::Exhausted ||
            last.status == SearchStatus::TimedOut)
            break;
    }
    last.nodes = total;
    return last;
}

}  // namespace oberwolfach
