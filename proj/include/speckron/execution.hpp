#pragma once

namespace speckron {

/// Selects between the OpenMP kernel and the serial reference it is tested
/// against. Both produce identical output.
enum class Execution { Serial, Parallel };

/// Sets the OpenMP thread count used by parallel kernels (0 keeps the default).
void set_thread_count(int threads);

}  // namespace speckron
