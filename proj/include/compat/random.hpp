#pragma once

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

namespace compat {

/// Seeded generator whose draws do not depend on the standard library's
/// distribution implementations, so outputs are identical across platforms.
class Rng
{
public:
    explicit Rng(std::uint64_t seed) :
        _engine(seed)
    {
    }

    auto next() -> std::uint64_t { return _engine(); }

    /// Uniform integer in [0, bound).
    auto below(std::uint64_t bound) -> std::uint64_t
    {
        if (bound <= 1)
            return 0;
        auto limit = (~std::uint64_t{0}) - ((~std::uint64_t{0}) % bound);
        std::uint64_t x;
        do
            x = _engine();
        while (x >= limit);
        return x % bound;
    }

    /// Uniform double in [0, 1).
    auto unit() -> double { return static_cast<double>(_engine() >> 11) * 0x1.0p-53; }

    template <typename T>
    auto shuffle(std::vector<T> & items) -> void
    {
        for (std::size_t i = items.size(); i > 1; --i)
            std::swap(items[i - 1], items[below(i)]);
    }

private:
    std::mt19937_64 _engine;
};

/// Derives an independent stream seed from a base seed and an index.
inline auto mix_seed(std::uint64_t base, std::uint64_t index) -> std::uint64_t
{
    auto z = base + 0x9E3779B97F4A7C15ULL * (index + 1);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

} // namespace compat
