#pragma once

#include <cmath>
#include <cstdint>
#include <cstring>
#include <stdexcept>
#include <string>
#include <vector>

namespace fastkv {

// User-facing input problems (bad config, bad prompt, malformed files).
// The CLI maps these to exit code 2.
struct ConfigError : std::runtime_error {
    explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

// Filesystem problems on user-provided paths. Also exit code 2.
struct IoError : std::runtime_error {
    explicit IoError(const std::string& msg) : std::runtime_error(msg) {}
};

// Non-finite activations or other internal numeric failures. Exit code 1.
struct NumericError : std::runtime_error {
    explicit NumericError(const std::string& msg) : std::runtime_error(msg) {}
};

// Round-half-up used for every token-budget computation (context_len * rate).
inline uint32_t round_half_up(double x) {
    if (x <= 0.0) return 0;
    return static_cast<uint32_t>(std::floor(x + 0.5));
}

// FNV-1a over raw bytes; used for logits digests and determinism checks.
inline uint64_t fnv1a64(const void* bytes, size_t len) {
    const auto* p = static_cast<const uint8_t*>(bytes);
    uint64_t h = 0xcbf29ce484222325ull;
    for (size_t i = 0; i < len; ++i) {
        h ^= p[i];
        h *= 0x100000001b3ull;
    }
    return h;
}

inline uint64_t fnv1a64(const std::vector<float>& v) {
    return fnv1a64(v.data(), v.size() * sizeof(float));
}

inline std::string to_hex(uint64_t h) {
    static const char* digits = "0123456789abcdef";
    std::string s(16, '0');
    for (int i = 15; i >= 0; --i) {
        s[i] = digits[h & 0xf];
        h >>= 4;
    }
    return s;
}

inline bool all_finite(const float* p, size_t n) {
    for (size_t i = 0; i < n; ++i)
        if (!std::isfinite(p[i])) return false;
    return true;
}

inline bool all_finite(const std::vector<float>& v) {
    return all_finite(v.data(), v.size());
}

}  // namespace fastkv
