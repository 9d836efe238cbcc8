#ifndef UMEB_VERSION_HPP
#define UMEB_VERSION_HPP

namespace umeb {

inline constexpr const char* kVersion = "1.0.0";

}  // namespace umeb

#endif  // UMEB_VERSION_HPP
