// Hot-loop kernel for the defining-vector search: a fused 32-lane int16
// "assign and check" step.  A scalar reference implementation always exists;
// AVX2 (x86-64) and NEON (aarch64) variants are compiled when the target
// supports them and selected at runtime.  All variants are bit-for-bit
// interchangeable and are cross-tested against the scalar one.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace lcdscan {

// Lane layout: lanes 0..N-1 hold the N = 2^k - 1 codeword weights; lanes
// N..31 are padding pinned so every check passes through them neutrally
// (weight = d, incidence = 0).
struct alignas(32) LaneVec {
    int16_t v[32];
};

struct StepParams {
    const LaneVec* me_inc;  // max_entry * (future incidence count), padded 0
    int16_t r2;             // sum still to assign after this value
    int16_t base;           // r2 - max_entry * remaining_points  (always <= 0)
    int16_t d;              // required minimum weight
    int16_t cap;            // per-lane weight cap
    int32_t budget;         // 2^{k-1} n plus the padding-lane contribution
};

// Computes out[i] = in[i] + mexp[i] * v (mexp[i] in {0,1}) and reports whether
// the partial assignment can still reach a valid leaf:
//   ub_i := out[i] + min(r2, me_inc[i])        >= d   for every lane,
//   lb_i := out[i] + max(0, me_inc[i] + base)  <= cap for every lane,
//   sum_i max(lb_i, d)   <= budget   (forced weight fits the fixed total),
//   sum_i min(ub_i, cap) >= budget   (remaining weight can be absorbed).
// `out` is only meaningful when the result is true.
using StepFn = bool (*)(const LaneVec& in, LaneVec& out, const LaneVec& mexp, int16_t v,
                        const StepParams& p);

struct KernelSet {
    StepFn step;
    const char* name;
};

// The runtime-selected kernel set.  Selection order: LCDSCAN_KERNEL env var
// ("scalar" | "avx2" | "neon") if set and available, else LCDSCAN_FORCE_SCALAR,
// else the widest variant the CPU supports.
const KernelSet& active_kernels();

// Every kernel set compiled into this binary and usable on this CPU
// (scalar is always first).
const std::vector<KernelSet>& available_kernels();

// Force a specific set by name (tests / CLI); throws std::invalid_argument
// for unknown or unavailable names.
void force_kernels(const std::string& name);

}  // namespace lcdscan
