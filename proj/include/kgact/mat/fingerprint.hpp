#ifndef KGACT_MAT_FINGERPRINT_HPP
#define KGACT_MAT_FINGERPRINT_HPP

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace kgact {
namespace mat {

/// Incremental 64-bit FNV-1a. Used for provenance digests and for the
/// stale-cache checks between forward and backward passes.
class fingerprint {
public:
    fingerprint& update(const void* data, std::size_t bytes);
    fingerprint& update(std::string_view text);
    fingerprint& update(std::uint64_t value);
    fingerprint& update(double value);
    fingerprint& update(const std::vector<double>& values);

    std::uint64_t digest() const { return hash_; }

private:
    std::uint64_t hash_ = 14695981039346656037ull;
};

/// Digest of a file's raw bytes. Throws validation_error when unreadable.
std::uint64_t fingerprint_file(const std::filesystem::path& path);

/// Lowercase hex rendering of a digest, zero-padded to 16 chars.
std::string digest_hex(std::uint64_t digest);

} // namespace mat
} // namespace kgact

#endif // KGACT_MAT_FINGERPRINT_HPP
