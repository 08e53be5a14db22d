#pragma once

namespace clausesearch {

inline constexpr const char* kVersion = "clausesearch 0.1.0";

}  // namespace clausesearch
