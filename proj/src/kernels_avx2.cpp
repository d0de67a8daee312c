// AVX2 implementation of the fused search step: the 32 int16 lanes fit in two
// 256-bit registers.  Compiled with -mavx2 for this translation unit only and
// selected at runtime, so the binary still runs on non-AVX2 hosts.
#if defined(__x86_64__) || defined(__i386__)

#include "lcdscan/kernels.hpp"

#include <immintrin.h>

namespace lcdscan::detail {

bool step_avx2(const LaneVec& in, LaneVec& out, const LaneVec& mexp, int16_t v,
               const StepParams& p) {
    const __m256i vv = _mm256_set1_epi16(v);
    const __m256i vr2 = _mm256_set1_epi16(p.r2);
    const __m256i vbase = _mm256_set1_epi16(p.base);
    const __m256i vd = _mm256_set1_epi16(p.d);
    const __m256i vcap = _mm256_set1_epi16(p.cap);
    const __m256i zero = _mm256_setzero_si256();
    const __m256i ones = _mm256_set1_epi16(1);

    __m256i acc_lo = _mm256_setzero_si256();
    __m256i acc_hi = _mm256_setzero_si256();
    __m256i w[2];

    for (int h = 0; h < 2; ++h) {
        const __m256i win = _mm256_load_si256(reinterpret_cast<const __m256i*>(in.v) + h);
        const __m256i m = _mm256_load_si256(reinterpret_cast<const __m256i*>(mexp.v) + h);
        const __m256i me = _mm256_load_si256(reinterpret_cast<const __m256i*>(p.me_inc->v) + h);

        const __m256i cur = _mm256_add_epi16(win, _mm256_mullo_epi16(m, vv));
        w[h] = cur;

        const __m256i ub = _mm256_add_epi16(cur, _mm256_min_epi16(vr2, me));
        // fail if any ub < d   <=>  d > ub
        if (_mm256_movemask_epi8(_mm256_cmpgt_epi16(vd, ub)) != 0) return false;

        const __m256i lb =
            _mm256_add_epi16(cur, _mm256_max_epi16(zero, _mm256_add_epi16(me, vbase)));
        // fail if any lb > cap
        if (_mm256_movemask_epi8(_mm256_cmpgt_epi16(lb, vcap)) != 0) return false;

        acc_lo = _mm256_add_epi32(acc_lo, _mm256_madd_epi16(_mm256_max_epi16(lb, vd), ones));
        acc_hi = _mm256_add_epi32(acc_hi, _mm256_madd_epi16(_mm256_min_epi16(ub, vcap), ones));
    }

    // Horizontal 8x int32 -> scalar for both accumulators.
    const __m256i pair = _mm256_hadd_epi32(acc_lo, acc_hi);  // [lo lo hi hi | lo lo hi hi]
    const __m128i low = _mm256_castsi256_si128(pair);
    const __m128i high = _mm256_extracti128_si256(pair, 1);
    const __m128i four = _mm_add_epi32(low, high);  // [lo, lo, hi, hi]
    const int32_t sum_lo = _mm_cvtsi128_si32(four) + _mm_extract_epi32(four, 1);
    const int32_t sum_hi = _mm_extract_epi32(four, 2) + _mm_extract_epi32(four, 3);
    if (sum_lo > p.budget || sum_hi < p.budget) return false;

    _mm256_store_si256(reinterpret_cast<__m256i*>(out.v), w[0]);
    _mm256_store_si256(reinterpret_cast<__m256i*>(out.v) + 1, w[1]);
    return true;
}

}  // namespace lcdscan::detail

#endif  // x86
