// GL(k,2) action on defining vectors: equivalence testing, stabilizer
// counting, and stratum classification with an orbit-stabilizer audit.
#include "lcdscan/equivalence.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <mutex>
#include <stdexcept>
#include <tuple>

namespace lcdscan {

namespace {

void check_k(int k) {
    if (k < 2 || k > 6) throw std::invalid_argument("equivalence supports k in [2,6]");
}

// Rank over GF(2) of the k row bitmasks.
int row_rank(const std::uint8_t* rows, int k) {
    std::uint8_t basis[8] = {0};
    int rank = 0;
    for (int i = 0; i < k; ++i) {
        std::uint8_t v = rows[i];
        for (int b = 0; b < 8; ++b) {
            if (basis[b]) v = std::min<std::uint8_t>(v, static_cast<std::uint8_t>(v ^ basis[b]));
        }
        if (v) {
            basis[rank++] = v;
        }
    }
    return rank;
}

}  // namespace

std::uint64_t gl_order(int k) {
    check_k(k);
    std::uint64_t order = 1;
    const std::uint64_t q = 1ull << k;
    for (int i = 0; i < k; ++i) order *= q - (1ull << i);
    return order;
}

bool is_invertible(const GLMatrix& a) {
    check_k(a.k);
    return row_rank(a.rows, a.k) == a.k;
}

std::vector<int> point_permutation(const GLMatrix& a) {
    check_k(a.k);
    const int big_n = (1 << a.k) - 1;
    // Column j of a as a k-bit value.
    int col[8] = {0};
    for (int j = 0; j < a.k; ++j) {
        for (int i = 0; i < a.k; ++i) col[j] |= ((a.rows[i] >> j) & 1) << i;
    }
    std::vector<int> image(static_cast<std::size_t>(big_n) + 1, 0);
    for (int p = 1; p <= big_n; ++p) {
        const int low = p & -p;
        const int low_index = std::countr_zero(static_cast<unsigned>(low));
        image[p] = image[p ^ low] ^ col[low_index];
    }
    return image;
}

DefiningVector apply_transform(const GLMatrix& a, const DefiningVector& l) {
    if (a.k != l.k) throw std::invalid_argument("dimension mismatch in apply_transform");
    if (!is_invertible(a)) throw std::invalid_argument("apply_transform requires an invertible matrix");
    const std::vector<int> image = point_permutation(a);
    DefiningVector out;
    out.k = l.k;
    out.entries.assign(l.entries.size(), 0);
    for (int p = 1; p <= l.N(); ++p) out.entries[image[p] - 1] = l.entries[p - 1];
    return out;
}

GLMatrix random_gl(int k, std::uint64_t& state) {
    check_k(k);
    auto next = [&state]() {  // splitmix64
        state += 0x9e3779b97f4a7c15ull;
        std::uint64_t z = state;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    };
    GLMatrix a;
    a.k = k;
    do {
        const std::uint64_t bits = next();
        for (int i = 0; i < k; ++i) a.rows[i] = static_cast<std::uint8_t>((bits >> (8 * i)) & ((1u << k) - 1));
    } while (!is_invertible(a));
    return a;
}

namespace {

// Backtracking core shared by are_equivalent / stabilizer_order: extends a
// basis-image assignment level by level, keeping the partial point map
// consistent with the multiplicities (src[p] must equal dst[img[p]]).
// Returns the number of completed maps, stopping early at `limit`.
struct MatchSearch {
    const std::vector<int>& src;
    const std::vector<int>& dst;
    int k;
    int big_n;
    int img[128];         // img[m]: image of point m over the chosen basis span
    std::uint64_t found = 0;
    std::uint64_t limit = 0;

    MatchSearch(const std::vector<int>& s, const std::vector<int>& d, int kk)
        : src(s), dst(d), k(kk), big_n((1 << kk) - 1) {
        img[0] = 0;
    }

    bool extend(int level, std::uint32_t used_span) {
        if (level == k) {
            ++found;
            return found >= limit;
        }
        const int base = 1 << level;      // basis point at this level
        for (int c = 1; c <= big_n; ++c) {
            if (used_span & (1u << c)) continue;               // dependent choice
            if (dst[c - 1] != src[base - 1]) continue;         // multiplicity clash
            // Fill images of base ^ m for every m already in the span and
            // check multiplicities; m = 0 re-checks the basis point itself.
            bool ok = true;
            std::uint32_t span_add = 0;
            for (int m = 0; m < base; ++m) {
                const int q = img[m] ^ c;
                if (dst[q - 1] != src[(m | base) - 1]) {
                    ok = false;
                    break;
                }
                img[m | base] = q;
                span_add |= 1u << q;
            }
            if (ok && extend(level + 1, used_span | span_add)) return true;
        }
        return false;
    }

    std::uint64_t run(std::uint64_t stop_at) {
        limit = stop_at;
        found = 0;
        extend(0, 1u);  // the zero vector is always "used"
        return found;
    }
};

bool same_multiset(const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> sa = a, sb = b;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    return sa == sb;
}

}  // namespace

bool are_equivalent(const DefiningVector& a, const DefiningVector& b) {
    check_k(a.k);
    if (a.k != b.k) return false;
    if (a.entries.size() != b.entries.size()) return false;
    if (!same_multiset(a.entries, b.entries)) return false;
    MatchSearch search(a.entries, b.entries, a.k);
    return search.run(1) > 0;
}

std::uint64_t stabilizer_order(const DefiningVector& l) {
    check_k(l.k);
    MatchSearch search(l.entries, l.entries, l.k);
    return search.run(~0ull);
}

std::uint64_t stabilizer_order_scan(const DefiningVector& l) {
    if (l.k < 2 || l.k > 5) throw std::invalid_argument("stabilizer scan supports k in [2,5]");
    const int k = l.k;
    const int cells = k * k;
    const int big_n = (1 << k) - 1;
    std::uint64_t count = 0;
    GLMatrix a;
    a.k = k;
    for (std::uint64_t bits = 0; bits < (1ull << cells); ++bits) {
        for (int i = 0; i < k; ++i)
            a.rows[i] = static_cast<std::uint8_t>((bits >> (k * i)) & ((1u << k) - 1));
        if (!is_invertible(a)) continue;
        const std::vector<int> image = point_permutation(a);
        bool fixes = true;
        for (int p = 1; p <= big_n; ++p) {
            if (l.entries[image[p] - 1] != l.entries[p - 1]) {
                fixes = false;
                break;
            }
        }
        if (fixes) ++count;
    }
    return count;
}

std::vector<GLMatrix> full_gl(int k) {
    if (k < 2 || k > 4) throw std::invalid_argument("full_gl materializes k in [2,4] only");
    const int cells = k * k;
    std::vector<GLMatrix> group;
    group.reserve(static_cast<std::size_t>(gl_order(k)));
    GLMatrix a;
    a.k = k;
    for (std::uint32_t bits = 0; bits < (1u << cells); ++bits) {
        for (int i = 0; i < k; ++i)
            a.rows[i] = static_cast<std::uint8_t>((bits >> (k * i)) & ((1u << k) - 1));
        if (is_invertible(a)) group.push_back(a);
    }
    return group;
}

Classification classify(const SearchSpec& spec, const EnumBudget& budget) {
    Classification result;
    result.spec = spec;
    const SpectralPair& sp = spectral_pair(spec.k);
    const int big_n = sp.N;

    // Fingerprint -> indices of classes carrying it.  All three components are
    // equivalence invariants, so classes in distinct buckets never need an
    // exact test.
    using Fingerprint = std::tuple<int, std::vector<std::pair<int, int>>, std::vector<int>>;
    std::map<Fingerprint, std::vector<std::size_t>> buckets;

    EnumBudget serial = budget;
    serial.threads = 1;  // keep class order = first appearance in search order

    std::vector<int> weights(static_cast<std::size_t>(big_n));
    result.stats = for_each_defining_vector(spec, serial, [&](const DefiningVector& l) {
        std::uint32_t odd = 0;
        for (int i = 0; i < big_n; ++i) odd |= static_cast<std::uint32_t>(l.entries[i] & 1) << i;
        const int h = hull_dimension_bits(odd, spec.k);
        for (int i = 0; i < big_n; ++i) {
            int w = 0;
            for (int p = 0; p < big_n; ++p) w += sp.P[i][p] * l.entries[p];
            weights[i] = w;
        }
        std::sort(weights.begin(), weights.end());
        Fingerprint fp{h, type_signature(l).pairs, weights};

        auto& bucket = buckets[std::move(fp)];
        for (std::size_t pos = 0; pos < bucket.size(); ++pos) {
            const std::size_t idx = bucket[pos];
            if (are_equivalent(l, result.classes[idx].representative)) {
                ++result.classes[idx].member_count;
                // Move-to-front: consecutive solutions usually share a class.
                if (pos > 0) std::swap(bucket[0], bucket[pos]);
                return true;
            }
        }
        EquivalenceClass cls;
        cls.representative = l;
        cls.member_count = 1;
        cls.h = h;
        cls.type = type_signature(l);
        bucket.push_back(result.classes.size());
        result.classes.push_back(std::move(cls));
        return true;
    });

    const std::uint64_t group = gl_order(spec.k);
    std::uint64_t orbit_total = 0;
    std::uint64_t expected_total = 0;
    bool audit_ok = !result.stats.budget_exhausted;
    for (auto& cls : result.classes) {
        cls.stabilizer = stabilizer_order(cls.representative);
        cls.orbit_size = group / cls.stabilizer;
        cls.we = weight_enumerator(cls.representative);
        orbit_total += cls.orbit_size;
        std::uint64_t expected = cls.orbit_size;
        if (spec.fix_zero) {
            // The slice holds orbit_size * z / N members of a class whose
            // representatives have z zero entries (point-zero double count).
            std::uint64_t zeros = 0;
            for (int e : cls.representative.entries) zeros += (e == 0);
            const std::uint64_t incidences = cls.orbit_size * zeros;
            if (incidences % static_cast<std::uint64_t>(big_n) != 0) audit_ok = false;
            expected = incidences / static_cast<std::uint64_t>(big_n);
        }
        expected_total += expected;
        if (expected != cls.member_count) audit_ok = false;
    }
    result.stratum_size = orbit_total;
    result.verified = audit_ok && expected_total == result.stats.solutions;
    return result;
}

namespace {

using ClassifyKey = std::tuple<int, int, int, bool, int, int, bool, bool, int>;

ClassifyKey classify_key(const SearchSpec& spec) {
    return {spec.n,         spec.k,            spec.d,        spec.exact_distance, spec.max_entry,
            spec.min_entry, spec.require_zero, spec.fix_zero, spec.fix_first};
}

std::map<ClassifyKey, Classification>& classify_cache() {
    static std::map<ClassifyKey, Classification> cache;
    return cache;
}

std::mutex& classify_cache_mutex() {
    static std::mutex m;
    return m;
}

}  // namespace

const Classification& classify_cached(const SearchSpec& spec, const EnumBudget& budget) {
    std::lock_guard<std::mutex> lock(classify_cache_mutex());
    auto& cache = classify_cache();
    auto it = cache.find(classify_key(spec));
    if (it == cache.end() || !it->second.verified)
        it = cache.insert_or_assign(classify_key(spec), classify(spec, budget)).first;
    return it->second;
}

const Classification* classify_cached_peek(const SearchSpec& spec) {
    std::lock_guard<std::mutex> lock(classify_cache_mutex());
    auto& cache = classify_cache();
    auto it = cache.find(classify_key(spec));
    return it != cache.end() && it->second.verified ? &it->second : nullptr;
}

}  // namespace lcdscan
