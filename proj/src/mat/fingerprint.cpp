#include "kgact/mat/fingerprint.hpp"

#include "kgact/error.hpp"

#include <cstring>
#include <fstream>

namespace kgact {
namespace mat {

fingerprint& fingerprint::update(const void* data, std::size_t bytes) {
    const auto* p = static_cast<const unsigned char*>(data);
    for (std::size_t i = 0; i < bytes; ++i) {
        hash_ ^= p[i];
        hash_ *= 1099511628211ull;
    }
    return *this;
}

fingerprint& fingerprint::update(std::string_view text) {
    update(text.data(), text.size());
    // Separator byte so {"ab","c"} and {"a","bc"} differ.
    unsigned char sep = 0xff;
    return update(&sep, 1);
}

fingerprint& fingerprint::update(std::uint64_t value) {
    return update(&value, sizeof(value));
}

fingerprint& fingerprint::update(double value) {
    std::uint64_t bits;
    std::memcpy(&bits, &value, sizeof(bits));
    return update(bits);
}

fingerprint& fingerprint::update(const std::vector<double>& values) {
    update(static_cast<std::uint64_t>(values.size()));
    if (!values.empty()) {
        update(values.data(), values.size() * sizeof(double));
    }
    return *this;
}

std::uint64_t fingerprint_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw validation_error("cannot open file for fingerprinting: " + path.string());
    }
    fingerprint fp;
    char buffer[65536];
    while (in.read(buffer, sizeof(buffer)) || in.gcount() > 0) {
        fp.update(buffer, static_cast<std::size_t>(in.gcount()));
    }
    return fp.digest();
}

std::string digest_hex(std::uint64_t digest) {
    static const char* hex = "0123456789abcdef";
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i) {
        out[static_cast<std::size_t>(i)] = hex[digest & 0xf];
        digest >>= 4;
    }
    return out;
}

} // namespace mat
} // namespace kgact
