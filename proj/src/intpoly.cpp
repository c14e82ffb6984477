#include "prinhall/intpoly.hpp"

#include "prinhall/errors.hpp"
#include "prinhall/gflin.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace prinhall {

IntPoly::IntPoly(long c)
{
    if (c != 0)
        c_.emplace_back(c);
}

IntPoly::IntPoly(const mpz_class& c)
{
    if (c != 0)
        c_.push_back(c);
}

IntPoly::IntPoly(std::vector<mpz_class> coeffs) : c_(std::move(coeffs)) { normalize(); }

IntPoly IntPoly::T(std::size_t power)
{
    std::vector<mpz_class> c(power + 1, 0);
    c[power] = 1;
    return IntPoly(std::move(c));
}

void IntPoly::normalize()
{
    while (!c_.empty() && c_.back() == 0)
        c_.pop_back();
}

mpz_class IntPoly::operator()(const mpz_class& t) const
{
    mpz_class acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it)
        acc = acc * t + *it;
    return acc;
}

IntPoly IntPoly::operator-() const
{
    IntPoly out = *this;
    for (auto& c : out.c_)
        c = -c;
    return out;
}

IntPoly operator+(const IntPoly& a, const IntPoly& b)
{
    std::vector<mpz_class> c(std::max(a.c_.size(), b.c_.size()), 0);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
        c[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i)
        c[i] += b.c_[i];
    return IntPoly(std::move(c));
}

IntPoly operator-(const IntPoly& a, const IntPoly& b) { return a + (-b); }

IntPoly operator*(const IntPoly& a, const IntPoly& b)
{
    if (a.is_zero() || b.is_zero())
        return {};
    std::vector<mpz_class> c(a.c_.size() + b.c_.size() - 1, 0);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
        for (std::size_t j = 0; j < b.c_.size(); ++j)
            c[i + j] += a.c_[i] * b.c_[j];
    return IntPoly(std::move(c));
}

std::string IntPoly::to_string() const
{
    if (c_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = 0; k < c_.size(); ++k) {
        const mpz_class& c = c_[k];
        if (c == 0)
            continue;
        mpz_class mag = abs(c);
        if (first)
            os << (c < 0 ? "-" : "");
        else
            os << (c < 0 ? " - " : " + ");
        first = false;
        if (k == 0) {
            os << mag.get_str();
            continue;
        }
        if (mag != 1)
            os << mag.get_str() << "*";
        os << "T";
        if (k > 1)
            os << "^" << k;
    }
    return os.str();
}

PolyDivision divide(const IntPoly& a, const IntPoly& b)
{
    if (b.is_zero())
        throw ValidationError("polynomial division by zero");
    PolyDivision out;
    std::vector<mpz_class> rem = a.coeffs();
    const auto& d = b.coeffs();
    const std::size_t db = d.size() - 1;
    if (rem.size() < d.size()) {
        out.remainder = a;
        return out;
    }
    std::vector<mpz_class> q(rem.size() - db, 0);
    for (std::size_t k = rem.size(); k-- > db;) {
        if (rem[k] == 0)
            continue;
        if (rem[k] % d.back() != 0) {
            out.integral = false;
            break;
        }
        const mpz_class factor = rem[k] / d.back();
        q[k - db] = factor;
        for (std::size_t j = 0; j <= db; ++j)
            rem[k - db + j] -= factor * d[j];
    }
    out.quotient = IntPoly(std::move(q));
    out.remainder = IntPoly(std::move(rem));
    return out;
}

IntPoly exact_divide(const IntPoly& a, const IntPoly& b, const std::string& what)
{
    if (b.is_zero())
        throw Falsification(what + ": division by the zero polynomial");
    auto r = divide(a, b);
    if (!r.integral || !r.remainder.is_zero())
        throw Falsification(what + ": " + b.to_string() + " does not divide " + a.to_string() + " in Z[T]");
    return r.quotient;
}

std::vector<std::uint32_t> first_primes(std::size_t n)
{
    std::vector<std::uint32_t> out;
    for (std::uint32_t k = 2; out.size() < n; ++k)
        if (is_prime(k))
            out.push_back(k);
    return out;
}

std::vector<std::uint32_t> primes_above(std::uint32_t above, std::size_t n)
{
    std::vector<std::uint32_t> out;
    for (std::uint32_t k = above + 1; out.size() < n; ++k)
        if (is_prime(k))
            out.push_back(k);
    return out;
}

void FitPlan::check() const
{
    if (samples.size() < degree_bound + 1)
        throw ValidationError("fit plan needs at least " + std::to_string(degree_bound + 1) + " sample primes, has " +
                              std::to_string(samples.size()));
    std::set<std::uint32_t> seen;
    for (auto p : samples)
        if (!is_prime(p) || !seen.insert(p).second)
            throw ValidationError("fit plan sample primes must be distinct primes");
    for (auto p : verify)
        if (!is_prime(p) || !seen.insert(p).second)
            throw ValidationError("fit plan verification primes must be distinct primes, disjoint from the samples");
}

FitPlan FitPlan::standard(std::size_t degree_bound)
{
    auto ps = first_primes(degree_bound + 3);
    FitPlan plan;
    plan.samples.assign(ps.begin(), ps.begin() + static_cast<long>(degree_bound + 1));
    plan.verify.assign(ps.begin() + static_cast<long>(degree_bound + 1), ps.end());
    plan.degree_bound = degree_bound;
    return plan;
}

std::string FitPlan::to_string() const
{
    std::ostringstream os;
    os << "samples {";
    for (std::size_t i = 0; i < samples.size(); ++i)
        os << (i ? "," : "") << samples[i];
    os << "} verify {";
    for (std::size_t i = 0; i < verify.size(); ++i)
        os << (i ? "," : "") << verify[i];
    os << "} degree <= " << degree_bound;
    return os.str();
}

FitResult fit(const Counter& counter, const FitPlan& plan)
{
    plan.check();
    FitResult result;
    const std::size_t n = plan.samples.size();
    std::vector<mpq_class> xs(n), dd(n);
    for (std::size_t i = 0; i < n; ++i) {
        const auto v = counter(plan.samples[i]);
        result.samples.push_back({plan.samples[i], v});
        xs[i] = plan.samples[i];
        dd[i] = v;
    }
    // Newton divided differences, then expansion into the monomial basis.
    for (std::size_t level = 1; level < n; ++level)
        for (std::size_t i = n - 1; i >= level; --i)
            dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - level]);
    std::vector<mpq_class> poly(1, n ? dd[n - 1] : mpq_class(0));
    for (std::size_t k = n - 1; k-- > 0;) {
        // poly = poly * (T - xs[k]) + dd[k]
        std::vector<mpq_class> next(poly.size() + 1, 0);
        for (std::size_t j = 0; j < poly.size(); ++j) {
            next[j + 1] += poly[j];
            next[j] -= poly[j] * xs[k];
        }
        next[0] += dd[k];
        poly = std::move(next);
    }
    std::vector<mpz_class> coeffs;
    for (auto& c : poly) {
        c.canonicalize();
        if (c.get_den() != 1)
            throw Falsification("no polynomial within degree bound: interpolant has non-integer coefficient " +
                                c.get_str() + " (" + plan.to_string() + ")");
        coeffs.push_back(c.get_num());
    }
    result.poly = IntPoly(std::move(coeffs));
    if (result.poly.degree() > static_cast<long>(plan.degree_bound))
        throw Falsification("no polynomial within degree bound: interpolant " + result.poly.to_string() +
                            " has degree " + std::to_string(result.poly.degree()) + " (" + plan.to_string() + ")");
    for (auto p : plan.verify) {
        const auto v = counter(p);
        const auto predicted = result.poly(mpz_class(p));
        if (v != predicted)
            throw Falsification("no polynomial within degree bound: " + result.poly.to_string() + " predicts " +
                                predicted.get_str() + " at " + std::to_string(p) + ", count is " + v.get_str());
        result.verified.push_back({p, v});
    }
    return result;
}

std::size_t degree_bound_for(const std::vector<std::size_t>& dims)
{
    std::size_t b = 0;
    for (auto d : dims)
        b += d * d / 4;
    return b;
}

} // namespace prinhall
