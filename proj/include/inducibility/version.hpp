#pragma once

namespace inducibility {

// Bumped whenever enumeration or counting output could change; cached
// search results carrying another version are discarded.
inline constexpr const char* kVersion = "1.0.0";

}  // namespace inducibility
