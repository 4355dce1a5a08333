#pragma once

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

namespace gid {

// mt19937_64 with distribution code of our own, so streams are identical
// across standard libraries.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t next() { return eng_(); }

    // Uniform on [0, bound); bound > 0.
    std::uint64_t below(std::uint64_t bound)
    {
        const std::uint64_t threshold = (0 - bound) % bound;
        while (true) {
            std::uint64_t r = eng_();
            if (r >= threshold)
                return r % bound;
        }
    }

    // Uniform on [lo, hi].
    int between(int lo, int hi)
    {
        return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo) + 1));
    }

    bool chance(double p) { return static_cast<double>(eng_() >> 11) * 0x1.0p-53 < p; }

    template <class T>
    void shuffle(std::vector<T>& v)
    {
        for (std::size_t i = v.size(); i > 1; --i)
            std::swap(v[i - 1], v[static_cast<std::size_t>(below(i))]);
    }

    template <class T>
    const T& pick(const std::vector<T>& v)
    {
        return v[static_cast<std::size_t>(below(v.size()))];
    }

private:
    std::mt19937_64 eng_;
};

} // namespace gid
