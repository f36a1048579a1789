#include "rdt/exec.hpp"

#include <cstdlib>
#include <cstring>

namespace rdt {

bool use_parallel(Exec e) {
#ifdef _OPENMP
    if (e == Exec::Serial) return false;
    if (e == Exec::Parallel) return true;
    const char* env = std::getenv("RDT_EXEC");
    return !(env && std::strcmp(env, "serial") == 0);
#else
    (void)e;
    return false;
#endif
}

}  // namespace rdt
