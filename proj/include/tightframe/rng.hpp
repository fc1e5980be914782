#ifndef TIGHTFRAME_RNG_HPP
#define TIGHTFRAME_RNG_HPP

#include <cstdint>
#include <vector>

namespace tightframe {

// splitmix64; byte-stable across platforms so that seeded runs reproduce exactly.
class Rng {
public:
    explicit Rng(uint64_t seed) : state_(seed) {}

    uint64_t next() {
        uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // uniform in [0, bound) by rejection
    uint64_t below(uint64_t bound) {
        if (bound <= 1) return 0;
        uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
        uint64_t v;
        do { v = next(); } while (v >= limit);
        return v % bound;
    }

    bool coin() { return (next() & 1ULL) != 0; }

    // Bernoulli(num/den)
    bool bernoulli(uint64_t num, uint64_t den) { return below(den) < num; }

    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (size_t i = v.size(); i > 1; --i) {
            size_t j = static_cast<size_t>(below(i));
            std::swap(v[i - 1], v[j]);
        }
    }

private:
    uint64_t state_;
};

// per-trial seed derivation (trial i uses root ^ i)
inline uint64_t trial_seed(uint64_t root, uint64_t trial) { return root ^ trial; }

} // namespace tightframe

#endif
