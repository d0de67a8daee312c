// Runtime kernel registry and selection.
#include "lcdscan/kernels.hpp"

#include <cstdlib>
#include <stdexcept>

namespace lcdscan {

namespace detail {
bool step_scalar(const LaneVec&, LaneVec&, const LaneVec&, int16_t, const StepParams&);
#if defined(__x86_64__) || defined(__i386__)
bool step_avx2(const LaneVec&, LaneVec&, const LaneVec&, int16_t, const StepParams&);
#endif
#if defined(__aarch64__)
bool step_neon(const LaneVec&, LaneVec&, const LaneVec&, int16_t, const StepParams&);
#endif
}  // namespace detail

namespace {

std::vector<KernelSet> build_available() {
    std::vector<KernelSet> sets;
    sets.push_back({detail::step_scalar, "scalar"});
#if defined(__x86_64__) || defined(__i386__)
    if (__builtin_cpu_supports("avx2")) sets.push_back({detail::step_avx2, "avx2"});
#endif
#if defined(__aarch64__)
    sets.push_back({detail::step_neon, "neon"});
#endif
    return sets;
}

KernelSet select_default(const std::vector<KernelSet>& sets) {
    if (const char* want = std::getenv("LCDSCAN_KERNEL")) {
        for (const auto& s : sets)
            if (s.name == std::string(want)) return s;
        return sets.front();  // unknown name: fall back to scalar
    }
    if (std::getenv("LCDSCAN_FORCE_SCALAR")) return sets.front();
    return sets.back();  // widest variant is registered last
}

KernelSet& active_slot() {
    static KernelSet slot = select_default(available_kernels());
    return slot;
}

}  // namespace

const std::vector<KernelSet>& available_kernels() {
    static const std::vector<KernelSet> sets = build_available();
    return sets;
}

const KernelSet& active_kernels() { return active_slot(); }

void force_kernels(const std::string& name) {
    for (const auto& s : available_kernels()) {
        if (name == s.name) {
            active_slot() = s;
            return;
        }
    }
    throw std::invalid_argument("unknown or unavailable kernel set: " + name);
}

}  // namespace lcdscan
