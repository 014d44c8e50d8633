#ifndef MONRES_FIELD_HPP
#define MONRES_FIELD_HPP

#include <boost/multiprecision/gmp.hpp>
#include <cstdint>
#include <string>
#include <string_view>

#include "monres/errors.hpp"
#include "monres/util.hpp"

namespace monres {

/// Exact arbitrary-precision scalars. GMP keeps rationals in canonical form
/// (reduced, positive denominator).
using Rational = boost::multiprecision::mpq_rational;
using BigInt = boost::multiprecision::mpz_int;

/// Field objects carry the arithmetic; scalars stay plain values. Algorithms
/// template on the field type and never mix scalars from different fields.
struct RationalField {
    using Scalar = Rational;
    static constexpr bool is_rational = true;

    std::string name() const { return "q"; }

    Scalar zero() const { return Scalar(0); }
    Scalar one() const { return Scalar(1); }
    Scalar from_int(long long v) const { return Scalar(v); }

    Scalar add(const Scalar& a, const Scalar& b) const { return a + b; }
    Scalar sub(const Scalar& a, const Scalar& b) const { return a - b; }
    Scalar mul(const Scalar& a, const Scalar& b) const { return a * b; }
    Scalar neg(const Scalar& a) const { return -a; }
    Scalar div(const Scalar& a, const Scalar& b) const {
        if (b == 0) throw Error("division by zero in the rational field");
        return a / b;
    }

    bool is_zero(const Scalar& a) const { return a == 0; }
    bool is_one(const Scalar& a) const { return a == 1; }
    std::string to_string(const Scalar& a) const { return a.str(); }

    bool operator==(const RationalField&) const { return true; }
};

/// Z/p for a prime p < 2^31; residues live in [0, p).
class PrimeField {
public:
    using Scalar = std::uint32_t;
    static constexpr bool is_rational = false;

    explicit PrimeField(std::uint32_t p) : p_(p) {
        if (p < 2 || p >= (1u << 31) || !is_prime_u32(p))
            throw Error("field modulus " + std::to_string(p) +
                        " is not a prime below 2^31");
    }

    std::uint32_t modulus() const { return p_; }
    std::string name() const { return "zp:" + std::to_string(p_); }

    Scalar zero() const { return 0; }
    Scalar one() const { return 1 % p_; }
    Scalar from_int(long long v) const {
        long long m = v % static_cast<long long>(p_);
        if (m < 0) m += p_;
        return static_cast<Scalar>(m);
    }

    Scalar add(Scalar a, Scalar b) const {
        std::uint64_t s = std::uint64_t(a) + b;
        return static_cast<Scalar>(s >= p_ ? s - p_ : s);
    }
    Scalar sub(Scalar a, Scalar b) const {
        return a >= b ? a - b : static_cast<Scalar>(a + p_ - b);
    }
    Scalar mul(Scalar a, Scalar b) const {
        return static_cast<Scalar>((std::uint64_t(a) * b) % p_);
    }
    Scalar neg(Scalar a) const { return a == 0 ? 0 : p_ - a; }
    Scalar div(Scalar a, Scalar b) const { return mul(a, inv(b)); }

    Scalar inv(Scalar a) const {
        if (a == 0) throw Error("division by zero in Z/" + std::to_string(p_));
        // Extended Euclid on (a, p).
        std::int64_t t = 0, newt = 1;
        std::int64_t r = p_, newr = a;
        while (newr != 0) {
            std::int64_t qt = r / newr;
            std::int64_t tmp = t - qt * newt;
            t = newt;
            newt = tmp;
            tmp = r - qt * newr;
            r = newr;
            newr = tmp;
        }
        if (t < 0) t += p_;
        return static_cast<Scalar>(t);
    }

    bool is_zero(Scalar a) const { return a == 0; }
    bool is_one(Scalar a) const { return a == one(); }
    std::string to_string(Scalar a) const { return std::to_string(a); }

    bool operator==(const PrimeField& o) const { return p_ == o.p_; }

private:
    std::uint32_t p_;
};

inline constexpr std::uint32_t kDefaultPrime = 32003;

/// Runtime field selection, parsed from "q" or "zp:<prime>".
struct FieldDesc {
    bool rational = true;
    std::uint32_t p = 0;

    static FieldDesc parse(std::string_view text) {
        if (text == "q" || text == "Q") return FieldDesc{true, 0};
        constexpr std::string_view prefix = "zp:";
        if (text.substr(0, prefix.size()) == prefix) {
            std::string_view digits = text.substr(prefix.size());
            if (digits.empty())
                throw Error("missing prime in field descriptor");
            std::uint64_t p = 0;
            for (char c : digits) {
                if (c < '0' || c > '9')
                    throw Error("malformed field descriptor '" +
                                std::string(text) + "'");
                p = p * 10 + static_cast<std::uint64_t>(c - '0');
                if (p >= (1ull << 31))
                    throw Error("field modulus out of range");
            }
            PrimeField check{static_cast<std::uint32_t>(p)};  // validates
            return FieldDesc{false, check.modulus()};
        }
        throw Error("unknown field descriptor '" + std::string(text) +
                    "' (expected q or zp:<prime>)");
    }

    std::string name() const {
        return rational ? std::string("q") : "zp:" + std::to_string(p);
    }
};

/// Dispatches fn on the concrete field object named by the descriptor.
template <class Fn>
decltype(auto) with_field(const FieldDesc& desc, Fn&& fn) {
    if (desc.rational) return fn(RationalField{});
    return fn(PrimeField{desc.p});
}

}  // namespace monres

#endif  // MONRES_FIELD_HPP
