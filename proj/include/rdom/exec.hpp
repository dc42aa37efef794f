#pragma once

namespace rdom {

/// Selects between the serial reference path and the OpenMP kernel.
/// Both produce identical results; the serial path is kept for testing.
enum class Exec { serial, parallel };

/// Number of threads the parallel kernels will use (1 without OpenMP).
int parallel_threads();

}  // namespace rdom
