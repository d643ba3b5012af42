#pragma once

namespace betti {

// Sweep kernels come in two interchangeable flavors: a serial reference and
// an OpenMP version. Results are identical by construction; tests compare
// them and the bench target times them.
enum class ExecutionPolicy { serial, parallel };

}  // namespace betti
