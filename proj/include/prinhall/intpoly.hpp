#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace prinhall {

/// A polynomial in T with integer coefficients (ascending, no trailing zeros).
class IntPoly {
public:
    IntPoly() = default;
    IntPoly(long c);
    IntPoly(const mpz_class& c);
    explicit IntPoly(std::vector<mpz_class> coeffs);

    static IntPoly T(std::size_t power = 1);

    const std::vector<mpz_class>& coeffs() const { return c_; }
    /// -1 for the zero polynomial.
    long degree() const { return static_cast<long>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_monic() const { return !c_.empty() && c_.back() == 1; }
    mpz_class coeff(std::size_t k) const { return k < c_.size() ? c_[k] : mpz_class(0); }

    mpz_class operator()(const mpz_class& t) const;

    IntPoly operator-() const;
    friend IntPoly operator+(const IntPoly& a, const IntPoly& b);
    friend IntPoly operator-(const IntPoly& a, const IntPoly& b);
    friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
    IntPoly& operator+=(const IntPoly& b) { return *this = *this + b; }
    IntPoly& operator-=(const IntPoly& b) { return *this = *this - b; }
    IntPoly& operator*=(const IntPoly& b) { return *this = *this * b; }

    friend bool operator==(const IntPoly& a, const IntPoly& b) { return a.c_ == b.c_; }

    /// "c0 + c1*T + c2*T^2", unit coefficients omitted, "0" for zero.
    std::string to_string() const;

private:
    void normalize();
    std::vector<mpz_class> c_;
};

struct PolyDivision {
    IntPoly quotient;
    IntPoly remainder;
    /// False when some step needed a non-integral quotient coefficient.
    bool integral = true;
};

PolyDivision divide(const IntPoly& a, const IntPoly& b);
/// a / b, throwing Falsification (naming `what`) unless the division is exact in Z[T].
IntPoly exact_divide(const IntPoly& a, const IntPoly& b, const std::string& what);

/// The first n primes.
std::vector<std::uint32_t> first_primes(std::size_t n);
/// Primes greater than `above`, in order, n of them.
std::vector<std::uint32_t> primes_above(std::uint32_t above, std::size_t n);

struct FitPlan {
    std::vector<std::uint32_t> samples;
    std::vector<std::uint32_t> verify;
    std::size_t degree_bound = 0;

    /// Throws ValidationError unless |samples| > degree_bound and all primes
    /// are distinct primes.
    void check() const;
    /// First (bound + 1) primes as samples, the next two for verification.
    static FitPlan standard(std::size_t degree_bound);
    std::string to_string() const;
};

struct FitPoint {
    std::uint32_t prime;
    mpz_class value;
};

struct FitResult {
    IntPoly poly;
    std::vector<FitPoint> samples;
    std::vector<FitPoint> verified;
};

using Counter = std::function<mpz_class(std::uint32_t)>;

/// Interpolates through every sample, requires integer coefficients and
/// degree <= bound, then checks every verification prime exactly. Throws
/// Falsification ("no polynomial within degree bound") otherwise.
FitResult fit(const Counter& counter, const FitPlan& plan);

/// sum_i floor(d_i^2 / 4).
std::size_t degree_bound_for(const std::vector<std::size_t>& dims);

} // namespace prinhall
