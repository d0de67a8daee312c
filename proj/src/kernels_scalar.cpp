// Portable reference implementation of the fused search step.  The SIMD
// variants must reproduce this function exactly; tests compare them on
// random inputs.
#include "lcdscan/kernels.hpp"

#include <algorithm>

namespace lcdscan::detail {

bool step_scalar(const LaneVec& in, LaneVec& out, const LaneVec& mexp, int16_t v,
                 const StepParams& p) {
    const int16_t* me = p.me_inc->v;
    int32_t sum_lo = 0;  // sum of max(lb, d)
    int32_t sum_hi = 0;  // sum of min(ub, cap)
    for (int i = 0; i < 32; ++i) {
        const int16_t w = static_cast<int16_t>(in.v[i] + mexp.v[i] * v);
        out.v[i] = w;
        const int16_t ub = static_cast<int16_t>(w + std::min(p.r2, me[i]));
        if (ub < p.d) return false;
        const int16_t lb = static_cast<int16_t>(w + std::max<int16_t>(0, static_cast<int16_t>(me[i] + p.base)));
        if (lb > p.cap) return false;
        sum_lo += std::max(lb, p.d);
        sum_hi += std::min(ub, p.cap);
    }
    return sum_lo <= p.budget && sum_hi >= p.budget;
}

}  // namespace lcdscan::detail
