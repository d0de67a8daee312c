// NEON implementation of the fused search step for aarch64: the 32 int16
// lanes are processed as four 8-lane quads.
#if defined(__aarch64__)

#include "lcdscan/kernels.hpp"

#include <arm_neon.h>

namespace lcdscan::detail {

bool step_neon(const LaneVec& in, LaneVec& out, const LaneVec& mexp, int16_t v,
               const StepParams& p) {
    const int16x8_t vv = vdupq_n_s16(v);
    const int16x8_t vr2 = vdupq_n_s16(p.r2);
    const int16x8_t vbase = vdupq_n_s16(p.base);
    const int16x8_t vd = vdupq_n_s16(p.d);
    const int16x8_t vcap = vdupq_n_s16(p.cap);
    const int16x8_t zero = vdupq_n_s16(0);

    int32x4_t acc_lo = vdupq_n_s32(0);
    int32x4_t acc_hi = vdupq_n_s32(0);
    int16x8_t w[4];

    for (int q = 0; q < 4; ++q) {
        const int16x8_t win = vld1q_s16(in.v + 8 * q);
        const int16x8_t m = vld1q_s16(mexp.v + 8 * q);
        const int16x8_t me = vld1q_s16(p.me_inc->v + 8 * q);

        const int16x8_t cur = vaddq_s16(win, vmulq_s16(m, vv));
        w[q] = cur;

        const int16x8_t ub = vaddq_s16(cur, vminq_s16(vr2, me));
        if (vmaxvq_u16(vcltq_s16(ub, vd)) != 0) return false;

        const int16x8_t lb = vaddq_s16(cur, vmaxq_s16(zero, vaddq_s16(me, vbase)));
        if (vmaxvq_u16(vcgtq_s16(lb, vcap)) != 0) return false;

        acc_lo = vaddq_s32(acc_lo, vpaddlq_s16(vmaxq_s16(lb, vd)));
        acc_hi = vaddq_s32(acc_hi, vpaddlq_s16(vminq_s16(ub, vcap)));
    }

    const int32_t sum_lo = vaddvq_s32(acc_lo);
    const int32_t sum_hi = vaddvq_s32(acc_hi);
    if (sum_lo > p.budget || sum_hi < p.budget) return false;

    for (int q = 0; q < 4; ++q) vst1q_s16(out.v + 8 * q, w[q]);
    return true;
}

}  // namespace lcdscan::detail

#endif  // aarch64
