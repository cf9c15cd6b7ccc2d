#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace tere {

// Domain error hierarchy. CLI maps tere::Error -> exit 1, usage errors -> exit 2.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct InvalidArgument : Error {
    explicit InvalidArgument(const std::string& msg) : Error(msg) {}
};

struct InvalidGeometry : Error {
    explicit InvalidGeometry(const std::string& msg) : Error(msg) {}
};

struct IoError : Error {
    explicit IoError(const std::string& msg) : Error(msg) {}
};

struct BackendError : Error {
    explicit BackendError(const std::string& msg) : Error(msg) {}
};

// FNV-1a, used for config hashes, prompt token hashing and parameter-group digests.
inline std::uint64_t fnv1a(const void* data, std::size_t n, std::uint64_t h = 0xcbf29ce484222325ull) {
    const auto* p = static_cast<const unsigned char*>(data);
    for (std::size_t i = 0; i < n; ++i) {
        h ^= p[i];
        h *= 0x100000001b3ull;
    }
    return h;
}

inline std::uint64_t fnv1a(const std::string& s, std::uint64_t h = 0xcbf29ce484222325ull) {
    return fnv1a(s.data(), s.size(), h);
}

}  // namespace tere
