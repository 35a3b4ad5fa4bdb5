#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <map>
#include <mutex>
#include <numbers>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "depthlab/bigint.hpp"
#include "depthlab/errors.hpp"

namespace depthlab {

namespace detail {

/// Integer coefficients of the n-th cyclotomic polynomial, constant term first.
inline const std::vector<BigInt>& phi_poly(std::uint32_t n)
{
    static std::recursive_mutex mutex;
    static std::map<std::uint32_t, std::vector<BigInt>> cache;
    std::lock_guard lock(mutex);
    if (auto it = cache.find(n); it != cache.end())
        return it->second;

    // x^n - 1 divided by every Phi_d with d | n, d < n
    std::vector<BigInt> poly(n + 1, 0);
    poly[0] = -1;
    poly[n] = 1;
    for (std::uint32_t d = 1; d < n; ++d) {
        if (n % d != 0)
            continue;
        const std::vector<BigInt>& divisor = phi_poly(d);
        std::size_t dd = divisor.size() - 1;
        std::vector<BigInt> quotient(poly.size() - dd, 0);
        for (std::size_t k = poly.size(); k-- > dd;) {
            BigInt c = poly[k];
            quotient[k - dd] = c;
            if (c != 0)
                for (std::size_t t = 0; t <= dd; ++t)
                    poly[k - dd + t] -= c * divisor[t];
        }
        poly = std::move(quotient);
    }
    return cache.emplace(n, std::move(poly)).first->second;
}

inline std::uint32_t euler_phi(std::uint32_t n)
{
    std::uint32_t result = n;
    for (std::uint32_t p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            while (n % p == 0)
                n /= p;
            result -= result / p;
        }
    }
    if (n > 1)
        result -= result / n;
    return result;
}

} // namespace detail

/// An element of Z[zeta_n], stored in the power basis 1, zeta, ...,
/// zeta^(phi(n)-1) after reduction modulo the n-th cyclotomic polynomial.
/// The representation is canonical for a fixed n, so equality is
/// coefficient equality. Mixed-conductor operations lift both sides to the
/// least common multiple, identifying zeta_m with zeta_n^(n/m).
class Cyclotomic {
public:
    Cyclotomic() : conductor_(1), coeffs_{0} {}
    Cyclotomic(BigInt value) : conductor_(1), coeffs_{std::move(value)} {} // NOLINT
    Cyclotomic(long long value) : Cyclotomic(BigInt(value)) {}             // NOLINT
    Cyclotomic(int value) : Cyclotomic(BigInt(value)) {}                   // NOLINT

    /// sum_k powers[k] * zeta_n^k for k in [0, powers.size()), any length.
    static Cyclotomic from_powers(std::uint32_t n, std::span<const BigInt> powers)
    {
        if (n == 0)
            throw input_error("cyclotomic conductor must be positive");
        std::vector<BigInt> folded(n, 0);
        for (std::size_t k = 0; k < powers.size(); ++k)
            folded[k % n] += powers[k];
        return Cyclotomic(n, std::move(folded));
    }

    static Cyclotomic root_of_unity(std::uint32_t n, std::uint32_t k)
    {
        std::vector<BigInt> powers(n, 0);
        powers[k % n] = 1;
        return from_powers(n, powers);
    }

    std::uint32_t conductor() const noexcept { return conductor_; }
    const std::vector<BigInt>& coefficients() const noexcept { return coeffs_; }

    /// Same number written over Z[zeta_m]; requires n | m.
    Cyclotomic in_conductor(std::uint32_t m) const
    {
        if (m == conductor_)
            return *this;
        if (m == 0 || m % conductor_ != 0)
            throw input_error("conductor " + std::to_string(conductor_) + " does not divide " +
                              std::to_string(m));
        std::uint32_t step = m / conductor_;
        std::vector<BigInt> powers(m, 0);
        for (std::size_t k = 0; k < coeffs_.size(); ++k)
            powers[k * step] = coeffs_[k];
        return Cyclotomic(m, std::move(powers));
    }

    bool is_zero() const
    {
        for (const auto& c : coeffs_)
            if (c != 0)
                return false;
        return true;
    }

    std::optional<BigInt> to_integer() const
    {
        for (std::size_t k = 1; k < coeffs_.size(); ++k)
            if (coeffs_[k] != 0)
                return std::nullopt;
        return coeffs_[0];
    }

    bool is_integer() const { return to_integer().has_value(); }

    /// Complex conjugate: zeta^k -> zeta^-k.
    Cyclotomic conj() const
    {
        std::vector<BigInt> powers(conductor_, 0);
        for (std::size_t k = 0; k < coeffs_.size(); ++k)
            powers[(conductor_ - k) % conductor_] += coeffs_[k];
        return Cyclotomic(conductor_, std::move(powers));
    }

    std::complex<double> to_complex() const
    {
        std::complex<double> z = 0;
        for (std::size_t k = 0; k < coeffs_.size(); ++k) {
            if (coeffs_[k] == 0)
                continue;
            double angle = 2.0 * std::numbers::pi * static_cast<double>(k) / conductor_;
            z += coeffs_[k].convert_to<double>() * std::polar(1.0, angle);
        }
        return z;
    }

    friend Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b)
    {
        std::uint32_t m = std::lcm(a.conductor_, b.conductor_);
        Cyclotomic x = a.in_conductor(m);
        const Cyclotomic y = b.in_conductor(m);
        for (std::size_t k = 0; k < x.coeffs_.size(); ++k)
            x.coeffs_[k] += y.coeffs_[k];
        return x;
    }

    friend Cyclotomic operator-(const Cyclotomic& a)
    {
        Cyclotomic x = a;
        for (auto& c : x.coeffs_)
            c = -c;
        return x;
    }

    friend Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b) { return a + (-b); }

    friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b)
    {
        std::uint32_t m = std::lcm(a.conductor_, b.conductor_);
        const Cyclotomic x = a.in_conductor(m);
        const Cyclotomic y = b.in_conductor(m);
        std::vector<BigInt> powers(m, 0);
        for (std::size_t i = 0; i < x.coeffs_.size(); ++i) {
            if (x.coeffs_[i] == 0)
                continue;
            for (std::size_t j = 0; j < y.coeffs_.size(); ++j)
                if (y.coeffs_[j] != 0)
                    powers[(i + j) % m] += x.coeffs_[i] * y.coeffs_[j];
        }
        return Cyclotomic(m, std::move(powers));
    }

    Cyclotomic& operator+=(const Cyclotomic& o) { return *this = *this + o; }
    Cyclotomic& operator-=(const Cyclotomic& o) { return *this = *this - o; }
    Cyclotomic& operator*=(const Cyclotomic& o) { return *this = *this * o; }

    /// Exact division by a nonzero integer; throws if any coefficient is not divisible.
    Cyclotomic divided_by(const BigInt& d) const
    {
        if (d == 0)
            throw input_error("division of a cyclotomic integer by zero");
        Cyclotomic x = *this;
        for (auto& c : x.coeffs_) {
            if (c % d != 0)
                throw input_error("cyclotomic integer is not divisible by " + d.str());
            c /= d;
        }
        return x;
    }

    friend bool operator==(const Cyclotomic& a, const Cyclotomic& b)
    {
        if (a.conductor_ == b.conductor_)
            return a.coeffs_ == b.coeffs_;
        std::uint32_t m = std::lcm(a.conductor_, b.conductor_);
        return a.in_conductor(m).coeffs_ == b.in_conductor(m).coeffs_;
    }

    /// Written with E(n) for a primitive n-th root of unity, e.g. "-1-E(3)".
    std::string to_string() const
    {
        std::string out;
        for (std::size_t k = 0; k < coeffs_.size(); ++k) {
            const BigInt& c = coeffs_[k];
            if (c == 0)
                continue;
            std::string mag = (c < 0 ? BigInt(-c) : c).str();
            if (!out.empty() || c < 0)
                out += c < 0 ? "-" : "+";
            if (k == 0) {
                out += mag;
                continue;
            }
            if (mag != "1")
                out += mag + "*";
            out += "E(" + std::to_string(conductor_) + ")";
            if (k > 1)
                out += "^" + std::to_string(k);
        }
        return out.empty() ? "0" : out;
    }

private:
    // `powers` has length n and is interpreted modulo x^n - 1.
    Cyclotomic(std::uint32_t n, std::vector<BigInt> powers) : conductor_(n)
    {
        const auto& phi = detail::phi_poly(n);
        const std::size_t deg = phi.size() - 1;
        for (std::size_t k = powers.size(); k-- > deg;) {
            BigInt c = powers[k];
            if (c == 0)
                continue;
            for (std::size_t t = 0; t <= deg; ++t)
                powers[k - deg + t] -= c * phi[t];
        }
        powers.resize(deg);
        coeffs_ = std::move(powers);
    }

    std::uint32_t conductor_;
    std::vector<BigInt> coeffs_;
};

} // namespace depthlab
