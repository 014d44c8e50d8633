#ifndef MONRES_UTIL_HPP
#define MONRES_UTIL_HPP

#include <algorithm>
#include <cstdint>
#include <exception>
#include <limits>
#include <numeric>
#include <optional>
#include <random>
#include <thread>
#include <vector>

#include "monres/errors.hpp"

namespace monres {

inline std::uint32_t checked_add_u32(std::uint32_t a, std::uint32_t b) {
    std::uint64_t s = std::uint64_t(a) + std::uint64_t(b);
    if (s > std::numeric_limits<std::uint32_t>::max())
        throw Error("exponent overflow in monomial arithmetic");
    return static_cast<std::uint32_t>(s);
}

inline std::uint32_t checked_mul_u32(std::uint32_t a, std::uint32_t b) {
    std::uint64_t p = std::uint64_t(a) * std::uint64_t(b);
    if (p > std::numeric_limits<std::uint32_t>::max())
        throw Error("exponent overflow in monomial arithmetic");
    return static_cast<std::uint32_t>(p);
}

/// C(n, k) as an exact 64-bit value. Callers keep n small (generator caps);
/// guarded so a bad cap fails loudly instead of overflowing.
inline std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    if (n > 61) throw Error("binomial argument too large (n > 61)");
    k = std::min(k, n - k);
    std::uint64_t c = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        c = c * (n - k + i) / i;
    }
    return c;
}

inline bool is_prime_u32(std::uint32_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::uint64_t d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

/// Per-trial seed derivation: decorrelates consecutive trial indices so each
/// trial is replayable from (master seed, index) alone.
inline std::uint64_t mix_seed(std::uint64_t master, std::uint64_t index) {
    return splitmix64(master ^ splitmix64(index + 1));
}

/// Deterministic RNG. mt19937_64 output is fixed by the standard and the
/// bounded draws below avoid std::uniform_int_distribution, whose mapping is
/// implementation-defined; the same seed yields the same stream everywhere.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t next() { return eng_(); }

    /// Uniform draw from [lo, hi], inclusive. Mask rejection, no bias.
    std::uint64_t uniform(std::uint64_t lo, std::uint64_t hi) {
        if (hi < lo) throw Error("rng: empty range");
        std::uint64_t range = hi - lo;
        if (range == std::numeric_limits<std::uint64_t>::max()) return next();
        range += 1;
        std::uint64_t mask = range - 1;
        mask |= mask >> 1;
        mask |= mask >> 2;
        mask |= mask >> 4;
        mask |= mask >> 8;
        mask |= mask >> 16;
        mask |= mask >> 32;
        for (;;) {
            std::uint64_t v = next() & mask;
            if (v < range) return lo + v;
        }
    }

    /// Sorted d-element subset of {0, ..., n-1}, uniform over subsets.
    std::vector<std::uint32_t> subset(std::uint32_t n, std::uint32_t d) {
        if (d > n) throw Error("rng: subset size exceeds universe");
        std::vector<std::uint32_t> pool(n);
        std::iota(pool.begin(), pool.end(), 0u);
        for (std::uint32_t i = 0; i < d; ++i) {
            std::uint32_t j =
                static_cast<std::uint32_t>(uniform(i, n - 1));
            std::swap(pool[i], pool[j]);
        }
        pool.resize(d);
        std::sort(pool.begin(), pool.end());
        return pool;
    }

    /// n non-negative parts summing to d, uniform over compositions
    /// (stars and bars: a random bar placement).
    std::vector<std::uint32_t> composition(std::uint64_t d, std::uint32_t n) {
        if (n == 0) throw Error("rng: composition into zero parts");
        if (n == 1) return {static_cast<std::uint32_t>(d)};
        std::uint64_t slots = d + n - 1;
        // d-subset would also work; bars (n-1 of them) are usually fewer.
        std::vector<std::uint64_t> bars;
        bars.reserve(n - 1);
        {
            // Floyd's algorithm over [0, slots-1].
            std::vector<std::uint64_t> chosen;
            for (std::uint64_t j = slots - (n - 1); j < slots; ++j) {
                std::uint64_t t = uniform(0, j);
                if (std::find(chosen.begin(), chosen.end(), t) !=
                    chosen.end())
                    chosen.push_back(j);
                else
                    chosen.push_back(t);
            }
            bars = std::move(chosen);
        }
        std::sort(bars.begin(), bars.end());
        std::vector<std::uint32_t> parts(n);
        std::uint64_t prev = 0;
        for (std::uint32_t i = 0; i < n - 1; ++i) {
            parts[i] = static_cast<std::uint32_t>(bars[i] - prev);
            prev = bars[i] + 1;
        }
        parts[n - 1] = static_cast<std::uint32_t>(slots - prev);
        return parts;
    }

private:
    std::mt19937_64 eng_;
};

/// Runs fn(0..count-1) and returns the results in index order. Work items
/// must be independent; results are merged deterministically regardless of
/// scheduling. Falls back to a serial loop for small counts.
template <class R, class Fn>
std::vector<R> parallel_map_indexed(std::size_t count, Fn&& fn) {
    unsigned hw = std::thread::hardware_concurrency();
    std::size_t nthreads = std::min<std::size_t>(hw == 0 ? 1 : hw, 8);
    nthreads = std::min(nthreads, count);
    std::vector<R> out;
    if (nthreads <= 1 || count < 4) {
        out.reserve(count);
        for (std::size_t i = 0; i < count; ++i) out.push_back(fn(i));
        return out;
    }
    std::vector<std::optional<R>> slots(count);
    std::vector<std::exception_ptr> errors(nthreads);
    std::vector<std::thread> workers;
    workers.reserve(nthreads);
    for (std::size_t w = 0; w < nthreads; ++w) {
        workers.emplace_back([&, w]() {
            try {
                for (std::size_t i = w; i < count; i += nthreads)
                    slots[i] = fn(i);
            } catch (...) {
                errors[w] = std::current_exception();
            }
        });
    }
    for (auto& t : workers) t.join();
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
    out.reserve(count);
    for (auto& s : slots) out.push_back(std::move(*s));
    return out;
}

}  // namespace monres

#endif  // MONRES_UTIL_HPP
