#include "tfpe/parallel.hpp"

#include <cstdlib>
#include <string>
#include <thread>

namespace tfpe {

namespace {

int resolve_thread_cap() {
    int hw = static_cast<int>(std::thread::hardware_concurrency());
    if (hw <= 0) hw = 1;
    const char* env = std::getenv("TEMPERED_FPE_THREADS");
    if (env == nullptr || *env == '\0') return hw;
    try {
        int v = std::stoi(env);
        if (v <= 0) return hw;
        return v < hw ? v : hw;
    } catch (...) {
        return hw;
    }
}

}  // namespace

int max_threads() {
    static const int cap = resolve_thread_cap();
    return cap;
}

}  // namespace tfpe
