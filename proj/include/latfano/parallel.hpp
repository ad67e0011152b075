#pragma once

namespace latfano {

/// Worker count for the parallel kernels and suite runners. Reads
/// LATFANO_THREADS: unset or invalid means the OpenMP default, 0 means
/// serial, anything else caps the OpenMP default. Builds without OpenMP
/// always report 1.
int effective_threads();

}  // namespace latfano
