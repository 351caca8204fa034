#pragma once

#include <cstdint>
#include <map>

#include "qhp/errors.hpp"

namespace qhp {

using i64 = std::int64_t;

/// Trial-division primality test; adequate for the desk-scale moduli this
/// library targets (p < 10^4 or so).
bool is_odd_prime(i64 p);

/// A residue in Z_p for an odd prime p. Values are kept canonical in
/// [0, p-1]; negative inputs are reduced on entry. All arithmetic is exact;
/// no floating point anywhere.
class Fp {
public:
    Fp(i64 value, i64 modulus);

    i64 value() const { return value_; }
    i64 modulus() const { return p_; }
    bool is_zero() const { return value_ == 0; }

    Fp operator+(Fp rhs) const;
    Fp operator-(Fp rhs) const;
    Fp operator*(Fp rhs) const;
    Fp operator-() const;

    bool operator==(Fp rhs) const;
    bool operator!=(Fp rhs) const { return !(*this == rhs); }

private:
    struct unchecked_tag {};
    Fp(i64 value, i64 modulus, unchecked_tag) : value_(value), p_(modulus) {}
    void require_same_modulus(Fp rhs) const;

    i64 value_;
    i64 p_;
};

/// Multiplicative inverse. Throws NotInvertible on zero.
Fp inv(Fp a);

/// a^e with a^0 = 1, also for a = 0.
Fp pow(Fp a, i64 e);

enum class Legendre { Zero, Residue, NonResidue };

/// Euler's criterion a^((p-1)/2).
Legendre legendre(Fp a);

/// Least d >= 1 with a^d = 1. Throws NotInvertible on zero.
i64 mult_order(Fp a);

/// Number of elements of multiplicative order exactly d in Z_p*, by scan.
i64 count_order(i64 p, i64 d);

/// Number of t in Z_p* with t^e = c, by scan.
i64 count_power_solutions(i64 p, i64 e, Fp c);

/// +1 if p = 1 (mod 4), -1 if p = 3 (mod 4). Exact residue test.
int chi4(i64 p);

/// Order census of Z_p*: theta[d] = number of elements of order d.
struct OrderCensus {
    i64 p;
    std::map<i64, i64> theta;
};

OrderCensus order_census(i64 p);

}  // namespace qhp
