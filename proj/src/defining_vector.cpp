#include "lcdscan/defining_vector.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <stdexcept>

namespace lcdscan {

const PointTable& point_table(int k) {
    static const std::array<PointTable, 7> tables = [] {
        std::array<PointTable, 7> t;
        for (int kk = 2; kk <= 8; ++kk) t[kk - 2] = build_point_table(kk);
        return t;
    }();
    if (k < 2 || k > 8) throw std::invalid_argument("point_table: k must be in [2,8]");
    return tables[k - 2];
}

const SpectralPair& spectral_pair(int k) {
    static const std::array<SpectralPair, 7> pairs = [] {
        std::array<SpectralPair, 7> t;
        for (int kk = 2; kk <= 8; ++kk) t[kk - 2] = build_spectral(kk);
        return t;
    }();
    if (k < 2 || k > 8) throw std::invalid_argument("spectral_pair: k must be in [2,8]");
    return pairs[k - 2];
}

long long DefiningVector::n() const {
    long long s = 0;
    for (int e : entries) s += e;
    return s;
}

int DefiningVector::l_min() const {
    return entries.empty() ? 0 : *std::min_element(entries.begin(), entries.end());
}

int DefiningVector::l_max() const {
    return entries.empty() ? 0 : *std::max_element(entries.begin(), entries.end());
}

std::string TypeSignature::to_string() const {
    std::string out;
    for (const auto& [v, m] : pairs)
        out += "(" + std::to_string(v) + ")_" + std::to_string(m);
    return out;
}

long long WeightVector::d() const {
    if (weights.empty()) return 0;
    return *std::min_element(weights.begin(), weights.end());
}

long long WeightVector::sigma() const {
    long long s = 0;
    for (long long w : weights) s += w;
    return s - d() * static_cast<long long>(weights.size());
}

std::vector<long long> WeightVector::lambda() const {
    std::vector<long long> out = weights;
    const long long dm = d();
    for (auto& w : out) w -= dm;
    return out;
}

DefiningVector parse_defining_vector(const std::string& text, int k) {
    const int N = (1 << k) - 1;
    DefiningVector l;
    l.k = k;
    if (text.find(',') != std::string::npos) {
        // Comma-separated integers (whitespace tolerated).
        size_t pos = 0;
        while (pos <= text.size()) {
            size_t comma = text.find(',', pos);
            std::string tok = text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
            size_t a = tok.find_first_not_of(" \t");
            if (a == std::string::npos)
                throw std::invalid_argument("defining vector: empty entry at position " +
                                            std::to_string(l.entries.size() + 1));
            size_t b = tok.find_last_not_of(" \t");
            tok = tok.substr(a, b - a + 1);
            size_t used = 0;
            int v;
            try {
                v = std::stoi(tok, &used);
            } catch (const std::exception&) {
                throw std::invalid_argument("defining vector: bad entry '" + tok + "' at position " +
                                            std::to_string(l.entries.size() + 1));
            }
            if (used != tok.size() || v < 0)
                throw std::invalid_argument("defining vector: bad entry '" + tok + "' at position " +
                                            std::to_string(l.entries.size() + 1));
            l.entries.push_back(v);
            if (comma == std::string::npos) break;
            pos = comma + 1;
        }
    } else {
        // Contiguous digit string, one entry per character.
        for (size_t i = 0; i < text.size(); ++i) {
            const char c = text[i];
            if (c == ' ' || c == '\t') continue;
            if (c < '0' || c > '9')
                throw std::invalid_argument(std::string("defining vector: non-digit '") + c +
                                            "' at position " + std::to_string(i + 1));
            l.entries.push_back(c - '0');
        }
    }
    if (static_cast<int>(l.entries.size()) != N)
        throw std::invalid_argument("defining vector: expected " + std::to_string(N) +
                                    " entries, got " + std::to_string(l.entries.size()));
    return l;
}

std::string format_defining_vector(const DefiningVector& l) {
    bool digits = true;
    for (int e : l.entries)
        if (e > 9) { digits = false; break; }
    std::string out;
    for (size_t i = 0; i < l.entries.size(); ++i) {
        if (digits) {
            out.push_back(static_cast<char>('0' + l.entries[i]));
        } else {
            if (i) out.push_back(',');
            out += std::to_string(l.entries[i]);
        }
    }
    return out;
}

TypeSignature type_signature(const DefiningVector& l) {
    std::map<int, int> counts;
    for (int e : l.entries) ++counts[e];
    TypeSignature t;
    t.pairs.assign(counts.begin(), counts.end());
    return t;
}

WeightVector weight_vector(const DefiningVector& l, const SpectralPair& sp) {
    WeightVector w;
    w.k = l.k;
    w.weights.assign(sp.N, 0);
    for (int i = 0; i < sp.N; ++i) {
        long long acc = 0;
        const auto& row = sp.P[i];
        for (int j = 0; j < sp.N; ++j) acc += static_cast<long long>(row[j]) * l.entries[j];
        w.weights[i] = acc;
    }
    return w;
}

WeightVector weight_vector(const DefiningVector& l) {
    return weight_vector(l, spectral_pair(l.k));
}

long long sigma(long long n, int k, long long d) {
    return (1LL << (k - 1)) * n - d * ((1LL << k) - 1);
}

std::optional<DefiningVector> defining_vector_from_weights(const WeightVector& w) {
    const SpectralPair& sp = spectral_pair(w.k);
    if (static_cast<int>(w.weights.size()) != sp.N) return std::nullopt;
    // L^T = (1/2^{k-1}) [ (d + sigma) 1^T - 2 Q Lambda^T ]; all integer until
    // the final division, which must be exact.
    const long long d = w.d();
    const std::vector<long long> lam = w.lambda();
    long long sig = 0;
    for (long long x : lam) sig += x;
    const long long half = 1LL << (w.k - 1);
    DefiningVector l;
    l.k = w.k;
    l.entries.resize(sp.N);
    for (int i = 0; i < sp.N; ++i) {
        long long acc = d + sig;
        for (int j = 0; j < sp.N; ++j) acc -= 2LL * sp.Q[i][j] * lam[j];
        if (acc % half != 0 || acc < 0) return std::nullopt;
        l.entries[i] = static_cast<int>(acc / half);
    }
    return l;
}

std::pair<int, DefiningVector> normalize(const DefiningVector& l) {
    const int base = l.l_min();
    DefiningVector r = l;
    for (auto& e : r.entries) e -= base;
    return {base, r};
}

DefiningVector juxtapose(const DefiningVector& l, int m) {
    if (m < 0) throw std::invalid_argument("juxtapose: negative copy count");
    DefiningVector r = l;
    for (auto& e : r.entries) e += m;
    return r;
}

std::pair<int, DefiningVector> reduce_at_point(const DefiningVector& l, int p) {
    const int N = l.N();
    if (p < 0 || p >= N) throw std::invalid_argument("reduce_at_point: point index out of range");
    const int k = l.k;
    const uint32_t a = point_table(k).columns[p];

    // Change of basis sending alpha_p to e_1: complete {a} to a basis greedily
    // in point-table order, form M = [b_1 ... b_k] as columns, take B = M^{-1}.
    std::vector<uint32_t> basis = {a};
    {
        std::vector<uint32_t> span = {0, a};
        for (uint32_t v = 1; v <= uint32_t(N) && basis.size() < size_t(k); ++v) {
            if (std::find(span.begin(), span.end(), v) != span.end()) continue;
            const size_t old = span.size();
            for (size_t i = 0; i < old; ++i) span.push_back(span[i] ^ v);
            basis.push_back(v);
        }
    }
    BitMatrix M(k, k);
    for (int c = 0; c < k; ++c)
        for (int r = 0; r < k; ++r)
            if ((basis[c] >> r) & 1u) M.set(r, c, true);
    const BitMatrix B = inverse(M);
    // Column images of B as integers, so B*alpha is an XOR of columns.
    std::vector<uint32_t> bcol(k, 0);
    for (int c = 0; c < k; ++c)
        for (int r = 0; r < k; ++r)
            if (B.get(r, c)) bcol[c] |= uint32_t(1) << r;

    DefiningVector red;
    red.k = k - 1;
    red.entries.assign((1 << (k - 1)) - 1, 0);
    for (int i = 0; i < N; ++i) {
        if (i == p) continue;
        const uint32_t alpha = point_table(k).columns[i];
        uint32_t y = 0;
        for (int r = 0; r < k; ++r)
            if ((alpha >> r) & 1u) y ^= bcol[r];
        // Pair {alpha, alpha ^ a} maps to {y, y ^ e_1}; dropping the e_1
        // coordinate sends both to the same nonzero (k-1)-bit point.
        const uint32_t z = y >> 1;
        red.entries[point_table(k - 1).index(z)] += l.entries[i];
    }
    return {l.entries[p], red};
}

BitMatrix extend_parity(const BitMatrix& g) {
    BitMatrix out(g.rows(), g.cols() + 1);
    for (int r = 0; r < g.rows(); ++r) {
        int w = 0;
        for (int c = 0; c < g.cols(); ++c) {
            if (g.get(r, c)) { out.set(r, c, true); ++w; }
        }
        if (w & 1) out.set(r, g.cols(), true);
    }
    return out;
}

BitMatrix generator_from(const DefiningVector& l) {
    const PointTable& t = point_table(l.k);
    const long long n = l.n();
    BitMatrix g(l.k, static_cast<int>(n));
    int c = 0;
    for (int i = 0; i < t.N; ++i) {
        for (int copy = 0; copy < l.entries[i]; ++copy, ++c)
            for (int r = 0; r < l.k; ++r)
                if ((t.columns[i] >> r) & 1u) g.set(r, c, true);
    }
    return g;
}

bool is_degenerate(const DefiningVector& l) {
    // GF(2) rank of the supported points via an xor-basis keyed by leading bit.
    uint32_t basis[8] = {0};
    int rk = 0;
    for (int i = 0; i < l.N(); ++i) {
        if (l.entries[i] == 0) continue;
        uint32_t x = point_table(l.k).columns[i];
        for (int bit = l.k - 1; bit >= 0 && x; --bit) {
            if (!((x >> bit) & 1u)) continue;
            if (basis[bit]) {
                x ^= basis[bit];
            } else {
                basis[bit] = x;
                ++rk;
                break;
            }
        }
        if (rk == l.k) return false;
    }
    return true;
}

}  // namespace lcdscan
