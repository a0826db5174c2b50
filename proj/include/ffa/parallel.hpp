#pragma once

namespace ffa {

// Worker-count override: 0 keeps the OpenMP default.  Reads of thread_count
// reflect what parallel regions will actually use.
void set_threads(int n);
int thread_count();

}  // namespace ffa
