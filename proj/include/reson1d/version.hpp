#ifndef RESON1D_VERSION_HPP
#define RESON1D_VERSION_HPP

namespace reson1d {
inline constexpr const char* kVersion = "0.1.0";
}

#endif
