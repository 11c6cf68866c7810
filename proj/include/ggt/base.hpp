#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace ggt {

using Int = mpz_class;
using Rat = mpq_class;
using VecZ = std::vector<Int>;
using VecQ = std::vector<Rat>;

// Error taxonomy shared by all modules. Typed so callers (and the CLI exit
// codes) can tell a bad config from a violated mathematical hypothesis.
struct validation_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct hypothesis_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct precision_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct budget_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline double to_double(const Rat& q) { return q.get_d(); }
inline double to_double(const Int& z) { return z.get_d(); }

// mpq_class(p, q) does not canonicalize, and mpq equality assumes canonical
// form; every fraction is built through here.
inline Rat frac(long num, long den) {
    Rat r(num, den);
    r.canonicalize();
    return r;
}

inline Rat rat_abs(const Rat& q) { return q < 0 ? Rat(-q) : q; }
inline Int int_abs(const Int& z) { return z < 0 ? Int(-z) : z; }

// Exact squared Euclidean norm of an integer vector.
inline Int norm2(const VecZ& v) {
    Int s = 0;
    for (const auto& x : v) s += x * x;
    return s;
}

inline Rat norm2(const VecQ& v) {
    Rat s = 0;
    for (const auto& x : v) s += x * x;
    return s;
}

inline std::size_t hash_combine(std::size_t seed, std::size_t v) {
    return seed ^ (v + 0x9e3779b97f4a7c15ull + (seed << 6) + (seed >> 2));
}

inline std::size_t hash_int(const Int& z) {
    // Limb-mix; cheap and stable across runs.
    std::size_t h = mpz_sgn(z.get_mpz_t()) < 0 ? 0x9e3779b97f4a7c15ull : 0;
    const std::size_t n = mpz_size(z.get_mpz_t());
    for (std::size_t i = 0; i < n; ++i)
        h = hash_combine(h, static_cast<std::size_t>(mpz_getlimbn(z.get_mpz_t(), i)));
    return h;
}

inline std::size_t hash_vecz(const VecZ& v) {
    std::size_t h = v.size();
    for (const auto& z : v) h = hash_combine(h, hash_int(z));
    return h;
}

struct VecZHash {
    std::size_t operator()(const VecZ& v) const { return hash_vecz(v); }
};

// Deterministic RNG used by every sampled experiment; the seed is part of the
// experiment config, never ambient state.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t next_u64() { return eng_(); }

    // Uniform in [lo, hi] inclusive.
    long next_int(long lo, long hi) {
        return std::uniform_int_distribution<long>(lo, hi)(eng_);
    }

    double next_unit() { return std::uniform_real_distribution<double>(0.0, 1.0)(eng_); }

    double next_real(double lo, double hi) {
        return std::uniform_real_distribution<double>(lo, hi)(eng_);
    }

  private:
    std::mt19937_64 eng_;
};

std::string rat_to_string(const Rat& q);
Rat rat_from_string(const std::string& s);

// Rational with denominator 10^k exactly matching the decimal literal.
Rat rat_from_decimal(const std::string& s);
Rat rat_from_double(double x);

}  // namespace ggt
