#include "wheels/parallel.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

namespace wheels {

int worker_count() {
    if (const char* env = std::getenv("CENSUS_THREADS")) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v >= 1) return static_cast<int>(std::min(v, 64l));
    }
    unsigned hw = std::thread::hardware_concurrency();
    if (hw == 0) hw = 1;
    return static_cast<int>(std::min(hw, 8u));
}

}  // namespace wheels
