#include "lcdscan/enumeration.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <istream>
#include <mutex>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "lcdscan/code_analysis.hpp"
#include "lcdscan/kernels.hpp"
#include "lcdscan/spectral.hpp"

namespace lcdscan {

int derived_max_entry(int n, int k, int d) {
    const int half = 1 << (k - 1);
    const int big_n = (1 << k) - 1;
    const long long sigma = static_cast<long long>(half) * n - static_cast<long long>(big_n) * d;
    if (sigma < 0) return 0;
    const long long by_weight = (d + sigma) / half;
    const long long by_residual = n - griesmer_length(k - 1, d);
    long long bound = std::min(by_weight, by_residual);
    if (bound < 0) bound = 0;
    return static_cast<int>(bound);
}

namespace {

struct Instance {
    SearchSpec spec;
    int big_n = 0;        // number of points N = 2^k - 1
    int half = 0;         // 2^{k-1}
    int max_e = 0;        // effective per-entry maximum
    int lo_entry = 0;     // effective per-entry minimum
    int cap = 0;          // per-weight maximum
    std::int32_t budget_total = 0;
    bool empty = false;   // provably no solutions
    std::vector<LaneVec> mexp;    // [big_n] incidence expansion of column p
    std::vector<LaneVec> me_inc;  // [big_n + 1] max_e * future incidence
};

Instance build_instance(const SearchSpec& spec) {
    if (spec.k < 2 || spec.k > 5) throw std::invalid_argument("enumeration supports k in [2,5]");
    if (spec.n < 1) throw std::invalid_argument("search length n must be positive");
    if (spec.d < 1) throw std::invalid_argument("search distance d must be positive");
    if (spec.min_entry < 0 || spec.max_entry < 0) throw std::invalid_argument("entry bounds must be nonnegative");

    Instance inst;
    inst.spec = spec;
    const SpectralPair& sp = spectral_pair(spec.k);
    inst.big_n = sp.N;
    inst.half = 1 << (spec.k - 1);

    const long long sigma =
        static_cast<long long>(inst.half) * spec.n - static_cast<long long>(inst.big_n) * spec.d;
    inst.cap = static_cast<int>(static_cast<long long>(inst.half) * spec.n -
                                static_cast<long long>(inst.big_n - 1) * spec.d);
    const int derived = derived_max_entry(spec.n, spec.k, spec.d);
    inst.max_e = spec.max_entry > 0 ? std::min(spec.max_entry, derived) : derived;
    // Derived per-entry minimum: l_p >= (d - sigma)/2^{k-1} = 2d - n.
    inst.lo_entry = std::max({spec.min_entry, 2 * spec.d - spec.n, 0});
    inst.budget_total = static_cast<std::int32_t>(inst.half) * spec.n + (32 - inst.big_n) * spec.d;

    if (sigma < 0 || inst.cap < spec.d || inst.max_e < 1 || inst.max_e < inst.lo_entry ||
        ((spec.require_zero || spec.fix_zero) && inst.lo_entry > 0) ||
        (spec.fix_first >= 0 && (spec.fix_first < inst.lo_entry || spec.fix_first > inst.max_e)) ||
        static_cast<long long>(inst.max_e) * inst.big_n < spec.n ||
        static_cast<long long>(inst.lo_entry) * inst.big_n > spec.n) {
        inst.empty = true;
        return inst;
    }

    inst.mexp.resize(inst.big_n);
    inst.me_inc.resize(inst.big_n + 1);
    for (auto& lv : inst.mexp) lv = LaneVec{};
    for (auto& lv : inst.me_inc) lv = LaneVec{};
    // inc[p][i] = number of points q >= p incident to row i; filled back to front.
    for (int p = inst.big_n - 1; p >= 0; --p) {
        for (int i = 0; i < inst.big_n; ++i) {
            const int bit = sp.P[i][p] ? 1 : 0;
            inst.mexp[p].v[i] = static_cast<std::int16_t>(bit);
            inst.me_inc[p].v[i] =
                static_cast<std::int16_t>(inst.me_inc[p + 1].v[i] + inst.max_e * bit);
        }
    }
    return inst;
}

struct Shared {
    std::atomic<std::uint64_t> nodes{0};
    std::atomic<std::uint64_t> solutions{0};
    std::atomic<bool> stop{false};
    std::atomic<bool> exhausted{false};
    std::uint64_t max_nodes = 0;
    bool has_deadline = false;
    std::chrono::steady_clock::time_point deadline{};
};

// One depth-first scan over a subtree.  `limit_depth` < N turns the scan into
// a prefix enumerator (emit() fires at that depth instead of at leaves).
class Walker {
  public:
    using EmitFn = std::function<bool(const Walker&)>;

    Walker(const Instance& inst, Shared& shared, int limit_depth, EmitFn emit)
        : inst_(inst), shared_(shared), limit_depth_(limit_depth), emit_(std::move(emit)),
          kernels_(active_kernels()) {}

    // Runs the subtree rooted at `depth` with the given partial state.
    // Returns false when the walk was aborted (budget/stop).
    bool run(int depth, int assigned_sum, int zeros, const LaneVec& weights) {
        const bool ok = descend(depth, assigned_sum, zeros, weights);
        flush_nodes();
        return ok;
    }

    const std::int16_t* entries() const { return entries_; }
    const LaneVec& emitted_weights() const { return *emit_weights_; }
    int emitted_sum() const { return emit_sum_; }
    int emitted_zeros() const { return emit_zeros_; }

    void seed_prefix(const std::int16_t* prefix, int len) {
        for (int i = 0; i < len; ++i) entries_[i] = prefix[i];
    }

  private:
    bool tick() {
        shared_.nodes.fetch_add(pending_nodes_, std::memory_order_relaxed);
        pending_nodes_ = 0;
        if (shared_.stop.load(std::memory_order_relaxed)) return false;
        if (shared_.max_nodes > 0 &&
            shared_.nodes.load(std::memory_order_relaxed) >= shared_.max_nodes) {
            shared_.exhausted.store(true, std::memory_order_relaxed);
            shared_.stop.store(true, std::memory_order_relaxed);
            return false;
        }
        if (shared_.has_deadline && std::chrono::steady_clock::now() >= shared_.deadline) {
            shared_.exhausted.store(true, std::memory_order_relaxed);
            shared_.stop.store(true, std::memory_order_relaxed);
            return false;
        }
        return true;
    }

    void flush_nodes() {
        shared_.nodes.fetch_add(pending_nodes_, std::memory_order_relaxed);
        pending_nodes_ = 0;
    }

    bool descend(int p, int assigned_sum, int zeros, const LaneVec& w) {
        if (p == limit_depth_) {
            emit_weights_ = &w;
            emit_sum_ = assigned_sum;
            emit_zeros_ = zeros;
            if (!emit_(*this)) {
                shared_.stop.store(true, std::memory_order_relaxed);
                return false;
            }
            return true;
        }
        const int remaining = inst_.spec.n - assigned_sum;
        const int rem2 = inst_.big_n - p - 1;
        int vlo = std::max(inst_.lo_entry, remaining - inst_.max_e * rem2);
        int vhi = std::min(inst_.max_e, remaining - inst_.lo_entry * rem2);
        if (p == 0 && inst_.spec.fix_zero) vhi = std::min(vhi, 0);
        if (p == 0 && inst_.spec.fix_first >= 0) {
            vlo = std::max(vlo, inst_.spec.fix_first);
            vhi = std::min(vhi, inst_.spec.fix_first);
        }
        StepParams sp;
        sp.me_inc = &inst_.me_inc[p + 1];
        sp.d = static_cast<std::int16_t>(inst_.spec.d);
        sp.cap = static_cast<std::int16_t>(inst_.cap);
        sp.budget = inst_.budget_total;
        alignas(32) LaneVec next;
        for (int v = vlo; v <= vhi; ++v) {
            if (++pending_nodes_ >= 8192 && !tick()) return false;
            const int r2 = remaining - v;
            sp.r2 = static_cast<std::int16_t>(r2);
            sp.base = static_cast<std::int16_t>(r2 - inst_.max_e * rem2);
            if (!kernels_.step(w, next, inst_.mexp[p], static_cast<std::int16_t>(v), sp)) continue;
            entries_[p] = static_cast<std::int16_t>(v);
            if (!descend(p + 1, assigned_sum + v, zeros + (v == 0 ? 1 : 0), next)) return false;
        }
        return true;
    }

    const Instance& inst_;
    Shared& shared_;
    int limit_depth_;
    EmitFn emit_;
    const KernelSet& kernels_;
    std::int16_t entries_[32] = {};
    const LaneVec* emit_weights_ = nullptr;
    int emit_sum_ = 0;
    int emit_zeros_ = 0;
    std::uint64_t pending_nodes_ = 0;
};

LaneVec initial_weights(const Instance& inst) {
    LaneVec w{};
    for (int i = inst.big_n; i < 32; ++i) w.v[i] = static_cast<std::int16_t>(inst.spec.d);
    return w;
}

// Leaf acceptance shared by all drivers: minimum-distance mode and zero-entry
// requirement.  Weight lower/upper bounds are already guaranteed by pruning.
bool leaf_accepted(const Instance& inst, const Walker& wk) {
    if (inst.spec.require_zero && wk.emitted_zeros() == 0) return false;
    if (inst.spec.exact_distance) {
        int mn = wk.emitted_weights().v[0];
        for (int i = 1; i < inst.big_n; ++i) mn = std::min<int>(mn, wk.emitted_weights().v[i]);
        if (mn != inst.spec.d) return false;
    }
    return true;
}

struct PrefixState {
    std::array<std::int16_t, 8> entries;
    LaneVec weights;
    int sum = 0;
    int zeros = 0;
};

// Internal driver: calls visit(prefix_slot, walker) for every accepted leaf.
// Serial execution uses a single slot 0; parallel execution splits the tree at
// a fixed prefix depth and assigns one slot per prefix so collectors can merge
// deterministically.
EnumStats run_search(const Instance& inst, const EnumBudget& budget,
                     const std::function<bool(std::size_t, const Walker&)>& visit) {
    EnumStats stats;
    const auto t0 = std::chrono::steady_clock::now();
    Shared shared;
    shared.max_nodes = budget.max_nodes;
    if (budget.max_seconds > 0) {
        shared.has_deadline = true;
        shared.deadline = t0 + std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                                   std::chrono::duration<double>(budget.max_seconds));
    }

    if (!inst.empty) {
        const LaneVec w0 = initial_weights(inst);
        const int threads = std::max(1, budget.threads);
        if (threads == 1) {
            Walker walker(inst, shared, inst.big_n, [&](const Walker& wk) {
                if (!leaf_accepted(inst, wk)) return true;
                shared.solutions.fetch_add(1, std::memory_order_relaxed);
                return visit(0, wk);
            });
            walker.run(0, 0, 0, w0);
        } else {
            const int split_depth = std::min(3, inst.big_n - 1);
            std::vector<PrefixState> prefixes;
            Walker scout(inst, shared, split_depth, [&](const Walker& wk) {
                PrefixState ps{};
                for (int i = 0; i < split_depth; ++i) ps.entries[i] = wk.entries()[i];
                ps.weights = wk.emitted_weights();
                ps.sum = wk.emitted_sum();
                ps.zeros = wk.emitted_zeros();
                prefixes.push_back(ps);
                return true;
            });
            scout.run(0, 0, 0, w0);

            std::atomic<std::size_t> next_prefix{0};
            auto work = [&]() {
                for (;;) {
                    const std::size_t idx = next_prefix.fetch_add(1, std::memory_order_relaxed);
                    if (idx >= prefixes.size()) return;
                    if (shared.stop.load(std::memory_order_relaxed)) return;
                    const PrefixState& ps = prefixes[idx];
                    Walker walker(inst, shared, inst.big_n, [&](const Walker& wk) {
                        if (!leaf_accepted(inst, wk)) return true;
                        shared.solutions.fetch_add(1, std::memory_order_relaxed);
                        return visit(idx, wk);
                    });
                    walker.seed_prefix(ps.entries.data(), split_depth);
                    if (!walker.run(split_depth, ps.sum, ps.zeros, ps.weights)) return;
                }
            };
            std::vector<std::thread> pool;
            pool.reserve(threads);
            for (int t = 0; t < threads; ++t) pool.emplace_back(work);
            for (auto& th : pool) th.join();
        }
    }

    stats.nodes = shared.nodes.load();
    stats.solutions = shared.solutions.load();
    stats.budget_exhausted = shared.exhausted.load();
    stats.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return stats;
}

DefiningVector vector_from(const Walker& wk, int k, int big_n) {
    DefiningVector l;
    l.k = k;
    l.entries.assign(wk.entries(), wk.entries() + big_n);
    return l;
}

std::uint32_t odd_mask_of(const Walker& wk, int big_n) {
    std::uint32_t mask = 0;
    for (int i = 0; i < big_n; ++i) mask |= static_cast<std::uint32_t>(wk.entries()[i] & 1) << i;
    return mask;
}

}  // namespace

SolutionSet enumerate_defining_vectors(const SearchSpec& spec, const EnumBudget& budget) {
    const Instance inst = build_instance(spec);
    SolutionSet set;
    set.spec = spec;
    const int threads = std::max(1, budget.threads);
    if (threads == 1) {
        set.stats = run_search(inst, budget, [&](std::size_t, const Walker& wk) {
            set.vectors.push_back(vector_from(wk, spec.k, inst.big_n));
            return true;
        });
        return set;
    }
    // One bucket per prefix keeps the merged order identical to a serial run.
    std::vector<std::vector<DefiningVector>> buckets(4096);
    std::mutex grow;
    set.stats = run_search(inst, budget, [&](std::size_t slot, const Walker& wk) {
        if (slot >= buckets.size()) {
            std::scoped_lock lk(grow);
            if (slot >= buckets.size()) buckets.resize(slot + 1);
        }
        buckets[slot].push_back(vector_from(wk, spec.k, inst.big_n));
        return true;
    });
    for (auto& b : buckets) {
        set.vectors.insert(set.vectors.end(), std::make_move_iterator(b.begin()),
                           std::make_move_iterator(b.end()));
    }
    return set;
}

EnumStats for_each_defining_vector(const SearchSpec& spec, const EnumBudget& budget,
                                   const std::function<bool(const DefiningVector&)>& visit) {
    const Instance inst = build_instance(spec);
    std::mutex mtx;
    const bool parallel = budget.threads > 1;
    return run_search(inst, budget, [&](std::size_t, const Walker& wk) {
        const DefiningVector l = vector_from(wk, spec.k, inst.big_n);
        if (!parallel) return visit(l);
        std::scoped_lock lk(mtx);
        return visit(l);
    });
}

int HullHistogram::min_h() const {
    for (std::size_t h = 0; h < count.size(); ++h) {
        if (count[h] > 0) return static_cast<int>(h);
    }
    return -1;
}

HullHistogram hull_histogram(const SearchSpec& spec, const EnumBudget& budget, EnumStats* stats) {
    const Instance inst = build_instance(spec);
    HullHistogram hist;
    std::mutex mtx;
    const bool parallel = budget.threads > 1;
    const EnumStats st = run_search(inst, budget, [&](std::size_t, const Walker& wk) {
        const int h = hull_dimension_bits(odd_mask_of(wk, inst.big_n), spec.k);
        if (parallel) {
            std::scoped_lock lk(mtx);
            ++hist.count[static_cast<std::size_t>(h)];
            ++hist.total;
        } else {
            ++hist.count[static_cast<std::size_t>(h)];
            ++hist.total;
        }
        return true;
    });
    if (stats) *stats = st;
    return hist;
}

std::optional<DefiningVector> find_lcd_vector(const SearchSpec& spec, const EnumBudget& budget,
                                              EnumStats* stats) {
    const Instance inst = build_instance(spec);
    EnumBudget serial = budget;
    serial.threads = 1;  // reproducible witness: always the lexicographically first
    std::optional<DefiningVector> found;
    const EnumStats st = run_search(inst, serial, [&](std::size_t, const Walker& wk) {
        if (hull_dimension_bits(odd_mask_of(wk, inst.big_n), spec.k) != 0) return true;
        found = vector_from(wk, spec.k, inst.big_n);
        return false;
    });
    if (stats) *stats = st;
    return found;
}

int oracle_min_distance(const DefiningVector& l) {
    const BitMatrix gen = generator_from(l);
    const int k = static_cast<int>(gen.rows());
    const std::size_t words = gen.words_per_row();
    std::vector<std::uint64_t> acc(words);
    int best = -1;
    for (int m = 1; m < (1 << k); ++m) {
        std::fill(acc.begin(), acc.end(), 0u);
        for (int r = 0; r < k; ++r) {
            if (!((m >> r) & 1)) continue;
            const std::uint64_t* row = gen.row(static_cast<std::size_t>(r));
            for (std::size_t w = 0; w < words; ++w) acc[w] ^= row[w];
        }
        int weight = 0;
        for (std::size_t w = 0; w < words; ++w) weight += std::popcount(acc[w]);
        if (best < 0 || weight < best) best = weight;
    }
    return best < 0 ? 0 : best;
}

void write_solutions(std::ostream& os, const SolutionSet& set) {
    os << "# lcdscan solution set\n";
    os << "# k=" << set.spec.k << " n=" << set.spec.n << " d=" << set.spec.d
       << " max_entry=" << set.spec.max_entry << " min_entry=" << set.spec.min_entry
       << " require_zero=" << (set.spec.require_zero ? 1 : 0)
       << " exact_distance=" << (set.spec.exact_distance ? 1 : 0)
       << " fix_zero=" << (set.spec.fix_zero ? 1 : 0) << " fix_first=" << set.spec.fix_first
       << "\n";
    os << "# solutions=" << set.vectors.size() << " nodes=" << set.stats.nodes
       << " budget_exhausted=" << (set.stats.budget_exhausted ? 1 : 0) << "\n";
    for (const auto& l : set.vectors) os << format_defining_vector(l) << "\n";
}

SolutionSet read_solutions(std::istream& is) {
    SolutionSet set;
    std::string line;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        if (line[0] == '#') {
            std::istringstream ls(line.substr(1));
            std::string token;
            while (ls >> token) {
                const auto eq = token.find('=');
                if (eq == std::string::npos) continue;
                const std::string key = token.substr(0, eq);
                const long long value = std::stoll(token.substr(eq + 1));
                if (key == "k") set.spec.k = static_cast<int>(value);
                else if (key == "n") set.spec.n = static_cast<int>(value);
                else if (key == "d") set.spec.d = static_cast<int>(value);
                else if (key == "max_entry") set.spec.max_entry = static_cast<int>(value);
                else if (key == "min_entry") set.spec.min_entry = static_cast<int>(value);
                else if (key == "require_zero") set.spec.require_zero = value != 0;
                else if (key == "exact_distance") set.spec.exact_distance = value != 0;
                else if (key == "fix_zero") set.spec.fix_zero = value != 0;
                else if (key == "fix_first") set.spec.fix_first = static_cast<int>(value);
                else if (key == "nodes") set.stats.nodes = static_cast<std::uint64_t>(value);
                else if (key == "budget_exhausted") set.stats.budget_exhausted = value != 0;
            }
            continue;
        }
        set.vectors.push_back(parse_defining_vector(line, set.spec.k));
    }
    set.stats.solutions = set.vectors.size();
    return set;
}

}  // namespace lcdscan
