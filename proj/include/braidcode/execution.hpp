#pragma once

namespace braidcode {

/// Selects the serial reference loop or the OpenMP kernel for exhaustive
/// enumerations. Both produce identical reports.
enum class Execution { Serial, Parallel };

}  // namespace braidcode
