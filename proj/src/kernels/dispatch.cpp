#include <atomic>

#include "loopconv/kernels.hpp"

namespace loopconv::kernels {

bool cpu_has_avx2() {
#if defined(__x86_64__) || defined(__i386__)
    return __builtin_cpu_supports("avx2");
#else
    return false;
#endif
}

namespace {

const Table& detect() {
    const Table* avx = avx2_table();
    if (avx != nullptr && cpu_has_avx2()) return *avx;
    return scalar_table();
}

std::atomic<const Table*>& slot() {
    static std::atomic<const Table*> current{&detect()};
    return current;
}

}  // namespace

const Table& active() { return *slot().load(std::memory_order_acquire); }

bool force(Backend b) {
    if (b == Backend::Scalar) {
        slot().store(&scalar_table(), std::memory_order_release);
        return true;
    }
    const Table* avx = avx2_table();
    if (avx == nullptr || !cpu_has_avx2()) return false;
    slot().store(avx, std::memory_order_release);
    return true;
}

void reset() { slot().store(&detect(), std::memory_order_release); }

std::string_view name(Backend b) { return b == Backend::Scalar ? "scalar" : "avx2"; }

}  // namespace loopconv::kernels
