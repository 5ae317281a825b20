#include "pathmat/ring.hpp"

#include <cctype>
#include <utility>

namespace pathmat {

Rat make_rat(long p, long q) {
    if (q == 0) throw Error("rational with zero denominator");
    Rat r(p, q);
    r.canonicalize();
    return r;
}

Rat rat_from_string(const std::string& s) {
    auto is_int = [](const std::string& t) {
        if (t.empty()) return false;
        size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
        if (i == t.size()) return false;
        for (; i < t.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
        return true;
    };
    auto slash = s.find('/');
    std::string num = s.substr(0, slash);
    std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
    if (!is_int(num) || !is_int(den) || den[0] == '-')
        throw ParseError("bad rational literal: \"" + s + "\"");
    Rat r;
    if (mpq_set_str(r.get_mpq_t(), (num + "/" + den).c_str(), 10) != 0)
        throw ParseError("bad rational literal: \"" + s + "\"");
    if (r.get_den() == 0) throw ParseError("zero denominator: \"" + s + "\"");
    r.canonicalize();
    return r;
}

std::string rat_to_string(const Rat& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

RingSpec RingSpec::block(int d) {
    if (d < 1) throw Error("block_dim must be >= 1");
    return {RingKind::Block, d};
}

std::string to_string(const RingSpec& spec) {
    switch (spec.kind) {
        case RingKind::Rational: return "rational";
        case RingKind::GF2: return "gf2";
        case RingKind::Block:
            return "block(" + std::to_string(spec.block_dim) + ")";
    }
    return "?";
}

BlockData::BlockData(int d, std::vector<Rat> e) : dim(d), entries(std::move(e)) {
    if (dim < 1 || entries.size() != static_cast<size_t>(dim) * dim)
        throw Error("block payload must be dim*dim entries");
    for (auto& x : entries) x.canonicalize();
}

RingValue RingValue::rational(Rat q) {
    q.canonicalize();
    RingValue v;
    v.v_ = std::move(q);
    return v;
}

RingValue RingValue::gf2(int bit) {
    if (bit != 0 && bit != 1) throw Error("gf2 bit must be 0 or 1");
    RingValue v;
    v.v_ = Gf2{static_cast<unsigned char>(bit)};
    return v;
}

RingValue RingValue::block(BlockData b) {
    if (b.dim < 1 || b.entries.size() != static_cast<size_t>(b.dim) * b.dim)
        throw Error("block payload must be dim*dim entries");
    RingValue v;
    v.v_ = std::move(b);
    return v;
}

RingSpec RingValue::spec() const {
    if (is_rational()) return RingSpec::rational();
    if (is_gf2()) return RingSpec::gf2();
    return RingSpec::block(std::get<BlockData>(v_).dim);
}

const Rat& RingValue::as_rational() const {
    if (!is_rational()) throw SpecMismatch("value is not rational");
    return std::get<Rat>(v_);
}

int RingValue::as_gf2() const {
    if (!is_gf2()) throw SpecMismatch("value is not gf2");
    return std::get<Gf2>(v_).bit;
}

const BlockData& RingValue::as_block() const {
    if (!is_block()) throw SpecMismatch("value is not a block");
    return std::get<BlockData>(v_);
}

RingValue ring_zero(const RingSpec& spec) {
    switch (spec.kind) {
        case RingKind::Rational: return RingValue::rational(Rat(0));
        case RingKind::GF2: return RingValue::gf2(0);
        case RingKind::Block: {
            BlockData b;
            b.dim = spec.block_dim;
            b.entries.assign(static_cast<size_t>(b.dim) * b.dim, Rat(0));
            return RingValue::block(std::move(b));
        }
    }
    throw Error("bad spec");
}

RingValue ring_one(const RingSpec& spec) {
    switch (spec.kind) {
        case RingKind::Rational: return RingValue::rational(Rat(1));
        case RingKind::GF2: return RingValue::gf2(1);
        case RingKind::Block: {
            BlockData b;
            b.dim = spec.block_dim;
            b.entries.assign(static_cast<size_t>(b.dim) * b.dim, Rat(0));
            for (int i = 0; i < b.dim; ++i) b.at(i, i) = 1;
            return RingValue::block(std::move(b));
        }
    }
    throw Error("bad spec");
}

namespace {

void require_same_spec(const RingValue& a, const RingValue& b) {
    if (!(a.spec() == b.spec()))
        throw SpecMismatch("operands from different rings: " +
                           to_string(a.spec()) + " vs " + to_string(b.spec()));
}

}  // namespace

RingValue ring_add(const RingValue& a, const RingValue& b) {
    require_same_spec(a, b);
    switch (a.spec().kind) {
        case RingKind::Rational:
            return RingValue::rational(a.as_rational() + b.as_rational());
        case RingKind::GF2:
            return RingValue::gf2(a.as_gf2() ^ b.as_gf2());
        case RingKind::Block: {
            BlockData r = a.as_block();
            const BlockData& y = b.as_block();
            for (size_t k = 0; k < r.entries.size(); ++k)
                r.entries[k] += y.entries[k];
            return RingValue::block(std::move(r));
        }
    }
    throw Error("bad spec");
}

RingValue ring_sub(const RingValue& a, const RingValue& b) {
    return ring_add(a, ring_neg(b));
}

RingValue ring_mul(const RingValue& a, const RingValue& b) {
    require_same_spec(a, b);
    switch (a.spec().kind) {
        case RingKind::Rational:
            return RingValue::rational(a.as_rational() * b.as_rational());
        case RingKind::GF2:
            return RingValue::gf2(a.as_gf2() & b.as_gf2());
        case RingKind::Block: {
            const BlockData& x = a.as_block();
            const BlockData& y = b.as_block();
            const int d = x.dim;
            BlockData r;
            r.dim = d;
            r.entries.assign(static_cast<size_t>(d) * d, Rat(0));
            for (int i = 0; i < d; ++i)
                for (int k = 0; k < d; ++k) {
                    const Rat& xik = x.at(i, k);
                    if (xik == 0) continue;
                    for (int j = 0; j < d; ++j) r.at(i, j) += xik * y.at(k, j);
                }
            return RingValue::block(std::move(r));
        }
    }
    throw Error("bad spec");
}

RingValue ring_neg(const RingValue& a) {
    switch (a.spec().kind) {
        case RingKind::Rational:
            return RingValue::rational(-a.as_rational());
        case RingKind::GF2:
            return a;  // characteristic 2
        case RingKind::Block: {
            BlockData r = a.as_block();
            for (auto& x : r.entries) x = -x;
            return RingValue::block(std::move(r));
        }
    }
    throw Error("bad spec");
}

RingValue ring_inv(const RingValue& a) {
    switch (a.spec().kind) {
        case RingKind::Rational: {
            const Rat& q = a.as_rational();
            if (q == 0) throw NotInvertible("zero rational has no inverse");
            return RingValue::rational(Rat(1) / q);
        }
        case RingKind::GF2:
            if (a.as_gf2() == 0)
                throw NotInvertible("zero bit has no inverse");
            return a;
        case RingKind::Block: {
            // Gauss-Jordan on [M | I] with the first exact nonzero as pivot.
            const BlockData& m = a.as_block();
            const int d = m.dim;
            std::vector<Rat> w(static_cast<size_t>(d) * 2 * d, Rat(0));
            auto at = [&](int i, int j) -> Rat& {
                return w[static_cast<size_t>(i) * 2 * d + j];
            };
            for (int i = 0; i < d; ++i) {
                for (int j = 0; j < d; ++j) at(i, j) = m.at(i, j);
                at(i, d + i) = 1;
            }
            for (int col = 0; col < d; ++col) {
                int piv = -1;
                for (int r = col; r < d; ++r)
                    if (at(r, col) != 0) {
                        piv = r;
                        break;
                    }
                if (piv < 0) throw NotInvertible("singular block");
                if (piv != col)
                    for (int j = 0; j < 2 * d; ++j)
                        std::swap(at(piv, j), at(col, j));
                Rat scale = Rat(1) / at(col, col);
                for (int j = 0; j < 2 * d; ++j) at(col, j) *= scale;
                for (int r = 0; r < d; ++r) {
                    if (r == col || at(r, col) == 0) continue;
                    Rat f = at(r, col);
                    for (int j = 0; j < 2 * d; ++j)
                        at(r, j) -= f * at(col, j);
                }
            }
            BlockData inv;
            inv.dim = d;
            inv.entries.assign(static_cast<size_t>(d) * d, Rat(0));
            for (int i = 0; i < d; ++i)
                for (int j = 0; j < d; ++j) inv.at(i, j) = at(i, d + j);
            return RingValue::block(std::move(inv));
        }
    }
    throw Error("bad spec");
}

bool ring_is_zero(const RingValue& a) {
    switch (a.spec().kind) {
        case RingKind::Rational: return a.as_rational() == 0;
        case RingKind::GF2: return a.as_gf2() == 0;
        case RingKind::Block: {
            for (const auto& x : a.as_block().entries)
                if (x != 0) return false;
            return true;
        }
    }
    throw Error("bad spec");
}

}  // namespace pathmat
