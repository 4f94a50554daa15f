#pragma once

#include <cmath>
#include <cstdint>
#include <random>

#include "maskprop/tensor.hpp"

namespace maskprop {

inline uint64_t splitmix64(uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

/// Deterministic RNG. mt19937_64 output is fixed by the standard and the
/// distributions below are hand-rolled, so streams are identical across
/// platforms and compilers.
class Rng {
public:
    explicit Rng(uint64_t seed) : gen_(seed) {}

    uint64_t next_u64() { return gen_(); }

    /// Uniform in [0, 1), 53-bit resolution.
    double uniform() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    /// Inclusive range. Lemire reduction, no modulo bias worth caring about here.
    int64_t uniform_int(int64_t lo, int64_t hi) {
        uint64_t n = static_cast<uint64_t>(hi - lo + 1);
        uint64_t r = static_cast<uint64_t>((static_cast<__uint128_t>(gen_()) * n) >> 64);
        return lo + static_cast<int64_t>(r);
    }

    /// Box-Muller, one output per call.
    double normal() {
        double u1 = uniform();
        double u2 = uniform();
        if (u1 < 1e-300) u1 = 1e-300;
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
    }

    double normal(double mean, double stddev) { return mean + stddev * normal(); }

    Rng split(uint64_t stream) { return Rng(splitmix64(gen_() ^ splitmix64(stream))); }

    Tensor uniform_tensor(std::vector<int64_t> dims, double lo, double hi) {
        Tensor t(std::move(dims));
        for (int64_t i = 0; i < t.size(); ++i) t[i] = uniform(lo, hi);
        return t;
    }

    Tensor normal_tensor(std::vector<int64_t> dims, double mean, double stddev) {
        Tensor t(std::move(dims));
        for (int64_t i = 0; i < t.size(); ++i) t[i] = normal(mean, stddev);
        return t;
    }

private:
    std::mt19937_64 gen_;
};

}  // namespace maskprop
