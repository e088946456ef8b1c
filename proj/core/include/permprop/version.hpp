#ifndef PERMPROP_VERSION_HPP
#define PERMPROP_VERSION_HPP

namespace permprop {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace permprop

#endif  // PERMPROP_VERSION_HPP
