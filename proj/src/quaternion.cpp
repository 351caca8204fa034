#include "qhp/quaternion.hpp"

#include <charconv>
#include <sstream>

namespace qhp {

namespace {

void require_same_modulus(const Fp& a, const Fp& b) {
    if (a.modulus() != b.modulus()) {
        throw ModulusMismatch("quaternion coefficients with mixed moduli " +
                              std::to_string(a.modulus()) + " and " +
                              std::to_string(b.modulus()));
    }
}

}  // namespace

Quaternion::Quaternion(Fp c0, Fp c1, Fp c2, Fp c3)
    : c0_(c0), c1_(c1), c2_(c2), c3_(c3) {
    require_same_modulus(c0_, c1_);
    require_same_modulus(c0_, c2_);
    require_same_modulus(c0_, c3_);
}

Quaternion Quaternion::zero(i64 p) { return scalar(Fp(0, p)); }

Quaternion Quaternion::one(i64 p) { return scalar(Fp(1, p)); }

Quaternion Quaternion::scalar(Fp s) {
    Fp z(0, s.modulus());
    return Quaternion(s, z, z, z);
}

bool Quaternion::is_zero() const {
    return c0_.is_zero() && is_scalar();
}

bool Quaternion::is_scalar() const {
    return c1_.is_zero() && c2_.is_zero() && c3_.is_zero();
}

Quaternion Quaternion::operator+(const Quaternion& rhs) const {
    return Quaternion(c0_ + rhs.c0_, c1_ + rhs.c1_, c2_ + rhs.c2_, c3_ + rhs.c3_);
}

Quaternion Quaternion::operator-(const Quaternion& rhs) const {
    return Quaternion(c0_ - rhs.c0_, c1_ - rhs.c1_, c2_ - rhs.c2_, c3_ - rhs.c3_);
}

Quaternion Quaternion::operator*(const Quaternion& rhs) const {
    if (modulus() != rhs.modulus()) {
        throw ModulusMismatch("product of quaternions with moduli " +
                              std::to_string(modulus()) + " and " +
                              std::to_string(rhs.modulus()));
    }
    const Fp &a0 = c0_, &a1 = c1_, &a2 = c2_, &a3 = c3_;
    const Fp &b0 = rhs.c0_, &b1 = rhs.c1_, &b2 = rhs.c2_, &b3 = rhs.c3_;
    return Quaternion(a0 * b0 - a1 * b1 - a2 * b2 - a3 * b3,
                      a0 * b1 + a1 * b0 + a2 * b3 - a3 * b2,
                      a0 * b2 - a1 * b3 + a2 * b0 + a3 * b1,
                      a0 * b3 + a1 * b2 - a2 * b1 + a3 * b0);
}

bool Quaternion::operator==(const Quaternion& rhs) const {
    return c0_ == rhs.c0_ && c1_ == rhs.c1_ && c2_ == rhs.c2_ && c3_ == rhs.c3_;
}

Quaternion Quaternion::conjugate() const {
    return Quaternion(c0_, -c1_, -c2_, -c3_);
}

Fp Quaternion::trace() const { return c0_ + c0_; }

Fp Quaternion::norm() const {
    return c0_ * c0_ + c1_ * c1_ + c2_ * c2_ + c3_ * c3_;
}

Quaternion pow(const Quaternion& q, i64 e) {
    // Exponents stay small here, so iterated products are fine.
    Quaternion result = Quaternion::one(q.modulus());
    for (i64 m = 0; m < e; ++m) result = result * q;
    return result;
}

bool is_nilpotent(const Quaternion& q) {
    return q.trace().is_zero() && q.norm().is_zero();
}

bool is_zero_divisor(const Quaternion& q) {
    return !q.is_zero() && q.norm().is_zero();
}

i64 default_potency_cap(i64 p) { return p * p + 1; }

PotencyClass potency_index(const Quaternion& q, i64 cap) {
    if (!q.is_zero() && is_nilpotent(q)) {
        return {PotencyKind::Nilpotent, 2};
    }
    Quaternion power = q * q;
    for (i64 k = 2; k <= cap; ++k) {
        if (power == q) return {PotencyKind::Potent, k};
        power = power * q;
    }
    return {PotencyKind::NoIndexWithinCap, 0};
}

std::optional<Quaternion> parse_quaternion(const std::string& text, i64 p) {
    std::istringstream in(text);
    i64 coeffs[4];
    for (int idx = 0; idx < 4; ++idx) {
        std::string part;
        if (!std::getline(in, part, ',')) return std::nullopt;
        const char* first = part.data();
        const char* last = part.data() + part.size();
        auto [ptr, ec] = std::from_chars(first, last, coeffs[idx]);
        if (ec != std::errc{} || ptr != last) return std::nullopt;
    }
    if (!in.eof()) return std::nullopt;
    return Quaternion(Fp(coeffs[0], p), Fp(coeffs[1], p), Fp(coeffs[2], p),
                      Fp(coeffs[3], p));
}

std::string to_string(const Quaternion& q) {
    return std::to_string(q.c0().value()) + "," + std::to_string(q.c1().value()) +
           "," + std::to_string(q.c2().value()) + "," +
           std::to_string(q.c3().value());
}

}  // namespace qhp
