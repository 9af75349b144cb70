#ifndef KGACT_MAT_RNG_HPP
#define KGACT_MAT_RNG_HPP

#include <cstdint>
#include <string_view>
#include <vector>

namespace kgact {
namespace mat {

/// Deterministic xoshiro256++ generator. Unlike the standard-library
/// distributions, every draw here is fully specified, so a seed pins the
/// byte-level output of anything built on top of it.
///
/// Named sub-streams (`stream("kg3-sampling")`) let independent components
/// share one user-facing seed without coupling their draw sequences.
class rng {
public:
    explicit rng(std::uint64_t seed);

    /// Derives an independent generator for a named component.
    rng stream(std::string_view name) const;

    std::uint64_t next_u64();

    /// Uniform in [0, 1) with 53 random mantissa bits.
    double next_double();

    /// Uniform in [lo, hi).
    double uniform(double lo, double hi);

    /// Standard normal via Box-Muller (deterministic, pair-cached).
    double normal();

    /// Uniform integer in [0, n); rejection-sampled, unbiased. n must be > 0.
    std::uint64_t below(std::uint64_t n);

    /// Fisher-Yates shuffle.
    template <typename T>
    void shuffle(std::vector<T>& items) {
        for (std::size_t i = items.size(); i > 1; --i) {
            std::size_t j = static_cast<std::size_t>(below(i));
            std::swap(items[i - 1], items[j]);
        }
    }

private:
    std::uint64_t state_[4];
    double spare_normal_ = 0.0;
    bool has_spare_ = false;
};

} // namespace mat
} // namespace kgact

#endif // KGACT_MAT_RNG_HPP
