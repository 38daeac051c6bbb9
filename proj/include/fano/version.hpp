#ifndef FANO_VERSION_HPP
#define FANO_VERSION_HPP

namespace fano {
inline constexpr const char* kVersion = "0.1.0";
}

#endif
