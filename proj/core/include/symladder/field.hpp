#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <utility>

#include "symladder/errors.hpp"

namespace symladder {

// Exact rational coefficients.  mpq_class keeps values canonical, so
// structural equality is value equality.
struct RationalField {
    using Elem = mpq_class;

    Elem zero() const { return Elem(0); }
    Elem one() const { return Elem(1); }
    Elem from_int(long v) const { return Elem(v); }
    Elem add(const Elem& a, const Elem& b) const { return a + b; }
    Elem sub(const Elem& a, const Elem& b) const { return a - b; }
    Elem mul(const Elem& a, const Elem& b) const { return a * b; }
    Elem neg(const Elem& a) const { return -a; }
    Elem div(const Elem& a, const Elem& b) const {
        if (sgn(b) == 0) throw SymladderError("division by zero in Q");
        return a / b;
    }
    Elem inv(const Elem& a) const { return div(one(), a); }
    bool is_zero(const Elem& a) const { return sgn(a) == 0; }
    bool is_one(const Elem& a) const { return a == 1; }
    bool is_negative(const Elem& a) const { return sgn(a) < 0; }
    std::string str(const Elem& a) const { return a.get_str(); }
    std::string label() const { return "Q"; }
};

// Prime field F_p for an odd prime p < 2^31.  Elements are reduced residues;
// primality of p is the caller's responsibility.
struct PrimeField {
    using Elem = std::uint64_t;

    std::uint64_t p;

    explicit PrimeField(std::uint64_t prime) : p(prime) {
        if (p < 2 || p >= (std::uint64_t{1} << 31))
            throw SymladderError("prime field modulus must satisfy 2 <= p < 2^31");
    }

    Elem zero() const { return 0; }
    Elem one() const { return 1 % p; }
    Elem from_int(long v) const {
        long r = v % static_cast<long>(p);
        if (r < 0) r += static_cast<long>(p);
        return static_cast<Elem>(r);
    }
    Elem add(Elem a, Elem b) const {
        Elem s = a + b;
        return s >= p ? s - p : s;
    }
    Elem sub(Elem a, Elem b) const { return a >= b ? a - b : a + p - b; }
    Elem mul(Elem a, Elem b) const {
        return static_cast<Elem>(static_cast<unsigned __int128>(a) * b % p);
    }
    Elem neg(Elem a) const { return a == 0 ? 0 : p - a; }
    Elem inv(Elem a) const {
        if (a == 0) throw SymladderError("division by zero in F_p");
        // extended Euclid on signed 64-bit; p < 2^31 keeps everything in range
        long long t = 0, new_t = 1;
        long long r = static_cast<long long>(p), new_r = static_cast<long long>(a);
        while (new_r != 0) {
            const long long q = r / new_r;
            t = std::exchange(new_t, t - q * new_t);
            r = std::exchange(new_r, r - q * new_r);
        }
        if (t < 0) t += static_cast<long long>(p);
        return static_cast<Elem>(t);
    }
    Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
    bool is_zero(Elem a) const { return a == 0; }
    bool is_one(Elem a) const { return a == one(); }
    bool is_negative(Elem) const { return false; }
    std::string str(Elem a) const { return std::to_string(a); }
    std::string label() const { return "Fp:" + std::to_string(p); }
};

}  // namespace symladder
