#pragma once

namespace theta {

/// Worker cap for OpenMP regions. Reads THETA_EXTREMAL_THREADS once; falls
/// back to the OpenMP default (or 1 without OpenMP).
int thread_cap();

/// Overrides the cap for the rest of the process (tests, benchmarks).
void set_thread_cap(int threads);

}  // namespace theta
