#pragma once

namespace rdt {

/// Execution policy for the enumeration kernels. Every kernel has a serial
/// reference path and an OpenMP path producing identical output; Auto picks
/// the OpenMP path when compiled in and not disabled via RDT_EXEC=serial.
enum class Exec { Auto, Serial, Parallel };

bool use_parallel(Exec e);

}  // namespace rdt
