#pragma once

namespace packest {

// Runtime switch between the OpenMP kernels and their serial reference
// paths. Both produce bit-identical results; tests compare them and the
// benchmark tool times them against each other.
namespace parallel {

bool enabled();
void set_enabled(bool on);
int max_threads();

}  // namespace parallel
}  // namespace packest
