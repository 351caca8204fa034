#include "qhp/fp.hpp"

#include <numeric>
#include <string>
#include <vector>

namespace qhp {

bool is_odd_prime(i64 p) {
    if (p < 3 || p % 2 == 0) return false;
    for (i64 d = 3; d * d <= p; d += 2) {
        if (p % d == 0) return false;
    }
    return true;
}

Fp::Fp(i64 value, i64 modulus) : p_(modulus) {
    if (!is_odd_prime(modulus)) {
        throw NotPrime("modulus " + std::to_string(modulus) + " is not an odd prime");
    }
    value_ = value % modulus;
    if (value_ < 0) value_ += modulus;
}

void Fp::require_same_modulus(Fp rhs) const {
    if (p_ != rhs.p_) {
        throw ModulusMismatch("mixed moduli " + std::to_string(p_) + " and " +
                              std::to_string(rhs.p_));
    }
}

Fp Fp::operator+(Fp rhs) const {
    require_same_modulus(rhs);
    return Fp((value_ + rhs.value_) % p_, p_, unchecked_tag{});
}

Fp Fp::operator-(Fp rhs) const {
    require_same_modulus(rhs);
    i64 v = value_ - rhs.value_;
    if (v < 0) v += p_;
    return Fp(v, p_, unchecked_tag{});
}

Fp Fp::operator*(Fp rhs) const {
    require_same_modulus(rhs);
    return Fp((value_ * rhs.value_) % p_, p_, unchecked_tag{});
}

Fp Fp::operator-() const {
    return Fp(value_ == 0 ? 0 : p_ - value_, p_, unchecked_tag{});
}

bool Fp::operator==(Fp rhs) const {
    require_same_modulus(rhs);
    return value_ == rhs.value_;
}

Fp pow(Fp a, i64 e) {
    Fp result(1, a.modulus());
    Fp base = a;
    while (e > 0) {
        if (e & 1) result = result * base;
        base = base * base;
        e >>= 1;
    }
    return result;
}

Fp inv(Fp a) {
    if (a.is_zero()) {
        throw NotInvertible("0 has no inverse mod " + std::to_string(a.modulus()));
    }
    return pow(a, a.modulus() - 2);
}

Legendre legendre(Fp a) {
    if (a.is_zero()) return Legendre::Zero;
    Fp e = pow(a, (a.modulus() - 1) / 2);
    return e.value() == 1 ? Legendre::Residue : Legendre::NonResidue;
}

namespace {

std::vector<i64> prime_factors(i64 n) {
    std::vector<i64> factors;
    for (i64 d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            factors.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) factors.push_back(n);
    return factors;
}

}  // namespace

i64 mult_order(Fp a) {
    if (a.is_zero()) {
        throw NotInvertible("0 has no multiplicative order mod " +
                            std::to_string(a.modulus()));
    }
    // Start from the group order and strip prime factors while a^(d/q) = 1.
    i64 d = a.modulus() - 1;
    for (i64 q : prime_factors(d)) {
        while (d % q == 0 && pow(a, d / q).value() == 1) d /= q;
    }
    return d;
}

i64 count_order(i64 p, i64 d) {
    if (!is_odd_prime(p)) {
        throw NotPrime("modulus " + std::to_string(p) + " is not an odd prime");
    }
    i64 count = 0;
    for (i64 a = 1; a < p; ++a) {
        if (mult_order(Fp(a, p)) == d) ++count;
    }
    return count;
}

i64 count_power_solutions(i64 p, i64 e, Fp c) {
    if (!is_odd_prime(p)) {
        throw NotPrime("modulus " + std::to_string(p) + " is not an odd prime");
    }
    i64 count = 0;
    for (i64 t = 1; t < p; ++t) {
        if (pow(Fp(t, p), e) == c) ++count;
    }
    return count;
}

int chi4(i64 p) {
    if (!is_odd_prime(p)) {
        throw NotPrime("modulus " + std::to_string(p) + " is not an odd prime");
    }
    return p % 4 == 1 ? 1 : -1;
}

OrderCensus order_census(i64 p) {
    OrderCensus census{p, {}};
    for (i64 a = 1; a < p; ++a) {
        ++census.theta[mult_order(Fp(a, p))];
    }
    return census;
}

}  // namespace qhp
