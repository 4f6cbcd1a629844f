#pragma once

#include <vector>

#include "tornzeta/rational.hpp"

namespace tornzeta {

/// Truncated formal Laurent series over Q: coefficients for exponents
/// lowest_exponent .. max_exponent inclusive. Addition and multiplication are
/// exact; multiplication truncates at the common max_exponent.
class RationalLaurent {
public:
    RationalLaurent(long lowest_exponent, long max_exponent)
        : lo_(lowest_exponent), hi_(max_exponent),
          coeff_(static_cast<size_t>(hi_ - lo_ + 1), Rational(0)) {
        if (hi_ < lo_) throw DomainError("RationalLaurent: empty exponent range");
    }

    long lowest_exponent() const { return lo_; }
    long max_exponent() const { return hi_; }

    const Rational& at(long e) const {
        static const Rational zero(0);
        if (e < lo_ || e > hi_) return zero;
        return coeff_[static_cast<size_t>(e - lo_)];
    }

    void set(long e, Rational v) {
        if (e < lo_ || e > hi_)
            throw DomainError("RationalLaurent: exponent out of range");
        coeff_[static_cast<size_t>(e - lo_)] = std::move(v);
    }

    /// Coefficient of x^{-1}.
    Rational formal_residue() const { return at(-1); }

    RationalLaurent operator+(const RationalLaurent& o) const {
        RationalLaurent r(std::min(lo_, o.lo_), std::min(hi_, o.hi_));
        for (long e = r.lo_; e <= r.hi_; ++e) r.set(e, at(e) + o.at(e));
        return r;
    }

    /// Product truncated at min(max_exponent) of the factors. Terms of the
    /// full product with exponent above the truncation are dropped; every
    /// retained coefficient is exact because both factors are complete from
    /// their lowest exponent up.
    RationalLaurent operator*(const RationalLaurent& o) const {
        RationalLaurent r(lo_ + o.lo_, std::min(hi_, o.hi_));
        for (long e1 = lo_; e1 <= hi_; ++e1) {
            if (at(e1) == 0) continue;
            for (long e2 = o.lo_; e2 <= o.hi_; ++e2) {
                long e = e1 + e2;
                if (e > r.hi_) break;
                if (o.at(e2) == 0) continue;
                r.set(e, r.at(e) + at(e1) * o.at(e2));
            }
        }
        return r;
    }

private:
    long lo_, hi_;
    std::vector<Rational> coeff_;
};

}  // namespace tornzeta
