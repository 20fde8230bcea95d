#pragma once

namespace arithver {

/// Kernels with an OpenMP implementation also keep a serial reference path;
/// both must return identical results.
enum class Exec { serial, parallel };

/// Thread count used by parallel kernels (0 means the OpenMP default).
void set_thread_count(int n);
int thread_count();

}  // namespace arithver
