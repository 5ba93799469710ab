#pragma once

namespace rloops {

/// Selects between the OpenMP kernel and its serial reference.
/// Both paths produce identical results; the serial one is kept for testing.
enum class Exec { serial, parallel };

}  // namespace rloops
