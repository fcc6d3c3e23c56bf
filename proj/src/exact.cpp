#include "pcc/exact.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <mutex>
#include <thread>

#include "pcc/errors.hpp"
#include "pcc/structure.hpp"
#include "pcc/verify.hpp"

namespace pcc {

namespace {

std::size_t idx(int x) { return static_cast<std::size_t>(x); }

// Depth-first canonical enumeration starting after a fixed prefix.
class CanonicalWalk {
public:
    CanonicalWalk(int m, int t, bool exactly, std::span<const Color> prefix,
                  const std::function<bool(std::span<const Color>)>& visit)
        : m_(m), t_(t), exactly_(exactly), colors_(idx(m), 0), visit_(visit) {
        std::copy(prefix.begin(), prefix.end(), colors_.begin());
        start_ = static_cast<int>(prefix.size());
        for (Color c : prefix) start_max_ = std::max(start_max_, c);
    }

    // Returns false if the visitor stopped the walk.
    bool run() { return step(start_, start_max_); }
    std::uint64_t visited() const noexcept { return visited_; }

private:
    bool step(int i, int used) {
        if (i == m_) {
            if (exactly_ && used != t_) return true;
            ++visited_;
            return visit_(colors_);
        }
        const int hi = std::min(used + 1, t_);
        for (Color c = 1; c <= hi; ++c) {
            const int next_used = std::max(used, c);
            if (exactly_ && t_ - next_used > m_ - i - 1) continue;
            colors_[idx(i)] = c;
            if (!step(i + 1, next_used)) return false;
        }
        return true;
    }

    int m_;
    int t_;
    bool exactly_;
    std::vector<Color> colors_;
    const std::function<bool(std::span<const Color>)>& visit_;
    int start_ = 0;
    int start_max_ = 0;
    std::uint64_t visited_ = 0;
};

std::vector<std::vector<Color>> canonical_prefixes(int m, int t, bool exactly, int depth) {
    std::vector<std::vector<Color>> out;
    std::vector<Color> cur;
    std::function<void(int, int)> rec = [&](int i, int used) {
        if (i == depth) {
            out.push_back(cur);
            return;
        }
        for (Color c = 1; c <= std::min(used + 1, t); ++c) {
            const int next_used = std::max(used, c);
            if (exactly && t - next_used > m - i - 1) continue;
            cur.push_back(c);
            rec(i + 1, next_used);
            cur.pop_back();
        }
    };
    rec(0, 0);
    return out;
}

struct LevelOutcome {
    std::optional<std::vector<Color>> witness;
    std::uint64_t examined = 0;
    bool timed_out = false;
};

unsigned worker_count(const SearchBudget& budget) {
    if (budget.threads != 0) return budget.threads;
    return std::max(1u, std::thread::hardware_concurrency());
}

// Searches canonical colorings with at most (or exactly) t colors for one
// that makes g proper connected. Work is split into lexicographically ordered
// prefix tasks; the witness reported is the one from the smallest task index,
// so the answer does not depend on scheduling.
LevelOutcome search_level(const Graph& g, int ell, int t, bool exactly, std::optional<Clock::time_point> deadline,
                          unsigned threads) {
    const int m = g.num_edges();
    int depth = 0;
    std::vector<std::vector<Color>> tasks{{}};
    if (threads > 1) {
        while (depth < m && tasks.size() < 8 * static_cast<std::size_t>(threads)) {
            ++depth;
            tasks = canonical_prefixes(m, t, exactly, depth);
        }
    }

    std::atomic<std::size_t> next{0};
    std::atomic<std::size_t> best{std::numeric_limits<std::size_t>::max()};
    std::atomic<bool> timed_out{false};
    std::atomic<std::uint64_t> examined{0};
    std::mutex witness_mutex;
    std::vector<std::optional<std::vector<Color>>> found(tasks.size());

    auto worker = [&] {
        ProperConnectionChecker checker(g, ell);
        std::uint64_t local = 0;
        for (;;) {
            const std::size_t task = next.fetch_add(1);
            if (task >= tasks.size() || task > best.load() || timed_out.load()) break;
            std::function<bool(std::span<const Color>)> visit = [&](std::span<const Color> colors) {
                ++local;
                if ((local & 0xFF) == 0) {
                    if (deadline && Clock::now() >= *deadline) {
                        timed_out = true;
                        return false;
                    }
                    if (best.load() < task) return false;
                }
                if (!checker.connected(colors)) return true;
                {
                    std::lock_guard lock(witness_mutex);
                    found[task] = std::vector<Color>(colors.begin(), colors.end());
                }
                std::size_t cur = best.load();
                while (task < cur && !best.compare_exchange_weak(cur, task)) {
                }
                return false;
            };
            CanonicalWalk walk(m, t, exactly, tasks[task], visit);
            walk.run();
        }
        examined += local;
    };

    if (threads <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (unsigned i = 0; i < threads; ++i) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }

    LevelOutcome outcome;
    outcome.examined = examined.load();
    outcome.timed_out = timed_out.load();
    if (best.load() != std::numeric_limits<std::size_t>::max()) {
        outcome.witness = found[best.load()];
        outcome.timed_out = false;
    }
    return outcome;
}

std::optional<Clock::time_point> deadline_for(const SearchBudget& budget) {
    if (!budget.time_limit) return std::nullopt;
    return Clock::now() + std::chrono::duration_cast<Clock::duration>(*budget.time_limit);
}

}  // namespace

std::uint64_t for_each_canonical_coloring(int m, int t, bool exactly,
                                          const std::function<bool(std::span<const Color>)>& visit) {
    if (m < 0 || t < 1) throw ParameterError("for_each_canonical_coloring needs m >= 0 and t >= 1");
    CanonicalWalk walk(m, t, exactly, {}, visit);
    walk.run();
    return walk.visited();
}

ExactOutcome min_colors_exact(const Graph& g, int ell, const SearchBudget& budget) {
    if (ell < 1) throw ParameterError("ell must be >= 1");
    if (!is_connected(g)) throw PreconditionError("min_colors_exact: graph is disconnected");
    if (budget.max_colors < 1) throw ParameterError("max_colors must be >= 1");
    const int m = g.num_edges();
    if (m == 0) return ExactResult{1, EdgeColoring({}, 1), 1, {}};
    if (m > budget.max_edges) {
        return Inconclusive{{}, 0, "graph has " + std::to_string(m) + " edges, above the max_edges guard"};
    }

    const auto deadline = deadline_for(budget);
    const unsigned threads = worker_count(budget);
    std::vector<int> exhausted;
    std::uint64_t total = 0;
    for (int t = 1; t <= std::min(budget.max_colors, m); ++t) {
        const auto level = search_level(g, ell, t, true, deadline, threads);
        total += level.examined;
        if (level.witness) {
            return ExactResult{t, EdgeColoring(*level.witness, t), total, exhausted};
        }
        if (level.timed_out) return Inconclusive{exhausted, total, "time limit reached at t=" + std::to_string(t)};
        exhausted.push_back(t);
    }
    return Inconclusive{exhausted, total, "no valid coloring with at most " + std::to_string(budget.max_colors) +
                                              " colors"};
}

LowerBoundResult prove_lower_bound(const Graph& g, int ell, int t, const SearchBudget& budget) {
    if (ell < 1) throw ParameterError("ell must be >= 1");
    if (t < 1) throw ParameterError("t must be >= 1");
    if (!is_connected(g)) throw PreconditionError("prove_lower_bound: graph is disconnected");
    LowerBoundResult result;
    if (g.num_edges() == 0) {
        result.status = BoundStatus::refuted;
        result.counterexample = EdgeColoring({}, 1);
        return result;
    }
    if (g.num_edges() > budget.max_edges) return result;
    const auto level = search_level(g, ell, t, false, deadline_for(budget), worker_count(budget));
    result.colorings_examined = level.examined;
    if (level.witness) {
        result.status = BoundStatus::refuted;
        result.counterexample = EdgeColoring(*level.witness, t);
    } else if (!level.timed_out) {
        result.status = BoundStatus::proven;
    }
    return result;
}

}  // namespace pcc
