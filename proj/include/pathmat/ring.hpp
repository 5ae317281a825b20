#pragma once

#include <gmpxx.h>

#include <string>
#include <variant>
#include <vector>

#include "pathmat/errors.hpp"

namespace pathmat {

/// Exact rational scalar. GMP keeps results canonical (lowest terms,
/// positive denominator) as long as inputs are canonical; every value
/// entering a RingValue goes through canonicalization once.
using Rat = mpq_class;

/// Rational p/q in lowest terms. q must be nonzero.
Rat make_rat(long p, long q = 1);

/// Parses "p", "p/q" or "-p/q" (q > 0). Throws ParseError.
Rat rat_from_string(const std::string& s);

/// Lowest-terms encoding; the "/q" part is omitted when q = 1.
std::string rat_to_string(const Rat& q);

enum class RingKind { Rational, GF2, Block };

struct RingSpec {
    RingKind kind = RingKind::Rational;
    int block_dim = 0;  // >= 1 exactly when kind == Block

    static RingSpec rational() { return {RingKind::Rational, 0}; }
    static RingSpec gf2() { return {RingKind::GF2, 0}; }
    static RingSpec block(int d);

    friend bool operator==(const RingSpec&, const RingSpec&) = default;
};

std::string to_string(const RingSpec& spec);

struct Gf2 {
    unsigned char bit = 0;
    friend bool operator==(const Gf2&, const Gf2&) = default;
};

/// Square array of rationals; the noncommutative ring of the library.
struct BlockData {
    int dim = 0;
    std::vector<Rat> entries;  // row-major dim*dim

    BlockData() = default;
    BlockData(int d, std::vector<Rat> e);

    Rat& at(int i, int j) { return entries[static_cast<size_t>(i) * dim + j]; }
    const Rat& at(int i, int j) const {
        return entries[static_cast<size_t>(i) * dim + j];
    }

    friend bool operator==(const BlockData& a, const BlockData& b) {
        return a.dim == b.dim && a.entries == b.entries;
    }
};

/// Tagged exact scalar: a rational, a GF(2) bit, or a d x d rational block.
/// Immutable after construction; arithmetic goes through the ring_* free
/// functions below, which demand equal specs.
class RingValue {
public:
    RingValue() : v_(Rat(0)) {}

    static RingValue rational(Rat q);
    static RingValue rational(long p, long q = 1) {
        return rational(make_rat(p, q));
    }
    static RingValue gf2(int bit);
    static RingValue block(BlockData b);

    RingSpec spec() const;

    bool is_rational() const { return std::holds_alternative<Rat>(v_); }
    bool is_gf2() const { return std::holds_alternative<Gf2>(v_); }
    bool is_block() const { return std::holds_alternative<BlockData>(v_); }

    const Rat& as_rational() const;
    int as_gf2() const;
    const BlockData& as_block() const;

    friend bool operator==(const RingValue& a, const RingValue& b) {
        return a.v_ == b.v_;
    }

private:
    std::variant<Rat, Gf2, BlockData> v_;
};

RingValue ring_zero(const RingSpec& spec);
RingValue ring_one(const RingSpec& spec);
RingValue ring_add(const RingValue& a, const RingValue& b);
RingValue ring_sub(const RingValue& a, const RingValue& b);

/// Product in operand order; significant for Block values.
RingValue ring_mul(const RingValue& a, const RingValue& b);
RingValue ring_neg(const RingValue& a);

/// Two-sided multiplicative inverse. Throws NotInvertible on zero rationals,
/// zero bits and singular blocks (exact Gauss-Jordan detection).
RingValue ring_inv(const RingValue& a);
bool ring_is_zero(const RingValue& a);

inline RingValue operator+(const RingValue& a, const RingValue& b) {
    return ring_add(a, b);
}
inline RingValue operator-(const RingValue& a, const RingValue& b) {
    return ring_sub(a, b);
}
inline RingValue operator*(const RingValue& a, const RingValue& b) {
    return ring_mul(a, b);
}
inline RingValue operator-(const RingValue& a) { return ring_neg(a); }

}  // namespace pathmat
