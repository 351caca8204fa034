#pragma once

#include <optional>
#include <string>

#include "qhp/fp.hpp"

namespace qhp {

/// A quaternion over Z_p on the basis (1, i, j, k), with i^2 = j^2 = k^2 = -1,
/// ij = k, jk = i, ki = j and distinct imaginary units anti-commuting.
/// Every element satisfies q^2 - trace(q)*q + norm(q) = 0.
class Quaternion {
public:
    Quaternion(Fp c0, Fp c1, Fp c2, Fp c3);

    static Quaternion zero(i64 p);
    static Quaternion one(i64 p);
    static Quaternion scalar(Fp s);

    Fp c0() const { return c0_; }
    Fp c1() const { return c1_; }
    Fp c2() const { return c2_; }
    Fp c3() const { return c3_; }
    i64 modulus() const { return c0_.modulus(); }

    bool is_zero() const;
    bool is_scalar() const;

    Quaternion operator+(const Quaternion& rhs) const;
    Quaternion operator-(const Quaternion& rhs) const;
    Quaternion operator*(const Quaternion& rhs) const;
    bool operator==(const Quaternion& rhs) const;
    bool operator!=(const Quaternion& rhs) const { return !(*this == rhs); }

    Quaternion conjugate() const;
    Fp trace() const;
    Fp norm() const;

private:
    Fp c0_, c1_, c2_, c3_;
};

Quaternion pow(const Quaternion& q, i64 e);

/// True iff trace(q) = norm(q) = 0, equivalently q^2 = 0. Includes q = 0.
bool is_nilpotent(const Quaternion& q);

/// True iff q != 0 and norm(q) = 0.
bool is_zero_divisor(const Quaternion& q);

enum class PotencyKind { Potent, Nilpotent, NoIndexWithinCap };

/// Classification of an element by Definition-style minimal k with q^k = q.
/// The zero element is classified Potent with index 2.
struct PotencyClass {
    PotencyKind kind;
    i64 index;  // meaningful for Potent (the k-potency index) and Nilpotent (2)
};

/// Default cap p^2 + 1 always suffices: the minimal index k has k-1 bounded
/// by the largest multiplicative order arising from a (trace, norm) class,
/// which is at most p^2 - 1 (split/inert) or p(p-1) (ramified).
i64 default_potency_cap(i64 p);

PotencyClass potency_index(const Quaternion& q, i64 cap);

/// Parses the literal "c0,c1,c2,c3" (decimal, negatives allowed).
std::optional<Quaternion> parse_quaternion(const std::string& text, i64 p);

std::string to_string(const Quaternion& q);

}  // namespace qhp
