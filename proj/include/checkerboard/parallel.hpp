#pragma once

namespace checkerboard {

// Thread count for the OpenMP kernels; n <= 0 keeps the runtime default.
void set_thread_count(int n);
int thread_count();

}  // namespace checkerboard
