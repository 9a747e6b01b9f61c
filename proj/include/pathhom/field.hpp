#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace pathhom {

/// Exact rational scalar. All homology ranks are computed without rounding.
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

inline std::string rational_to_string(const Rational& q) {
    return q.str();  // "num/den" or "num" when den == 1
}

/// Element of the prime field Z/p. The modulus travels with the value;
/// mixing moduli is a programming error.
class PrimeFieldElem {
public:
    static constexpr std::uint64_t kDefaultPrime = 2147483647ULL;  // 2^31 - 1

    PrimeFieldElem() : v_(0), p_(kDefaultPrime) {}
    PrimeFieldElem(std::int64_t v, std::uint64_t p) : p_(p) {
        std::int64_t r = v % static_cast<std::int64_t>(p);
        if (r < 0) r += static_cast<std::int64_t>(p);
        v_ = static_cast<std::uint64_t>(r);
    }

    std::uint64_t value() const { return v_; }
    std::uint64_t modulus() const { return p_; }

    bool is_zero() const { return v_ == 0; }

    friend PrimeFieldElem operator+(const PrimeFieldElem& a, const PrimeFieldElem& b) {
        return PrimeFieldElem::raw((a.v_ + b.v_) % a.p_, a.p_);
    }
    friend PrimeFieldElem operator-(const PrimeFieldElem& a, const PrimeFieldElem& b) {
        return PrimeFieldElem::raw((a.v_ + a.p_ - b.v_) % a.p_, a.p_);
    }
    friend PrimeFieldElem operator*(const PrimeFieldElem& a, const PrimeFieldElem& b) {
        return PrimeFieldElem::raw(
            static_cast<std::uint64_t>((static_cast<unsigned __int128>(a.v_) * b.v_) % a.p_),
            a.p_);
    }
    friend PrimeFieldElem operator/(const PrimeFieldElem& a, const PrimeFieldElem& b) {
        return a * b.inverse();
    }
    PrimeFieldElem operator-() const { return raw(v_ == 0 ? 0 : p_ - v_, p_); }
    friend bool operator==(const PrimeFieldElem& a, const PrimeFieldElem& b) {
        return a.v_ == b.v_;
    }

    PrimeFieldElem inverse() const {
        if (v_ == 0) throw std::domain_error("division by zero in prime field");
        // extended Euclid
        std::int64_t t = 0, newt = 1;
        std::int64_t r = static_cast<std::int64_t>(p_), newr = static_cast<std::int64_t>(v_);
        while (newr != 0) {
            std::int64_t q = r / newr;
            std::int64_t tmp = t - q * newt;
            t = newt;
            newt = tmp;
            tmp = r - q * newr;
            r = newr;
            newr = tmp;
        }
        if (t < 0) t += static_cast<std::int64_t>(p_);
        return raw(static_cast<std::uint64_t>(t), p_);
    }

    static PrimeFieldElem raw(std::uint64_t v, std::uint64_t p) {
        PrimeFieldElem e;
        e.v_ = v;
        e.p_ = p;
        return e;
    }

private:
    std::uint64_t v_;
    std::uint64_t p_;
};

/// Field trait glue used by the templated linear algebra.
template <class F>
struct FieldOps;

template <>
struct FieldOps<Rational> {
    static Rational zero(const Rational&) { return Rational(0); }
    static Rational one(const Rational&) { return Rational(1); }
    static Rational from_int(int v, const Rational&) { return Rational(v); }
    static bool is_zero(const Rational& x) { return x == 0; }
};

template <>
struct FieldOps<PrimeFieldElem> {
    static PrimeFieldElem zero(const PrimeFieldElem& like) {
        return PrimeFieldElem(0, like.modulus());
    }
    static PrimeFieldElem one(const PrimeFieldElem& like) {
        return PrimeFieldElem(1, like.modulus());
    }
    static PrimeFieldElem from_int(int v, const PrimeFieldElem& like) {
        return PrimeFieldElem(v, like.modulus());
    }
    static bool is_zero(const PrimeFieldElem& x) { return x.is_zero(); }
};

}  // namespace pathhom
