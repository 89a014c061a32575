#ifndef KSBOUND_VERSION_HPP
#define KSBOUND_VERSION_HPP

namespace ksb {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace ksb

#endif  // KSBOUND_VERSION_HPP
