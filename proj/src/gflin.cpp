#include "prinhall/gflin.hpp"

#include "prinhall/errors.hpp"

#include <algorithm>
#include <sstream>

namespace prinhall {

bool is_prime(std::uint64_t n)
{
    if (n < 2)
        return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0)
            return false;
    return true;
}

Field::Field(std::uint32_t p) : p_(p)
{
    if (!is_prime(p) || p >= (1u << 31))
        throw ValidationError("field characteristic " + std::to_string(p) + " is not a supported prime");
}

Residue Field::inv(Residue a) const
{
    if (a == 0)
        throw ValidationError("inverse of zero in F_" + std::to_string(p_));
    // Fermat: a^(p-2)
    std::uint64_t result = 1, base = a, e = p_ - 2;
    while (e) {
        if (e & 1)
            result = result * base % p_;
        base = base * base % p_;
        e >>= 1;
    }
    return static_cast<Residue>(result);
}

MatFp::MatFp(Field f, std::size_t rows, std::size_t cols)
    : field_(f), rows_(rows), cols_(cols), data_(rows * cols, 0)
{
}

MatFp::MatFp(Field f, std::size_t rows, std::size_t cols, std::vector<Residue> entries)
    : field_(f), rows_(rows), cols_(cols), data_(std::move(entries))
{
    if (data_.size() != rows * cols)
        throw ValidationError("matrix entry count does not match shape");
    for (auto e : data_)
        if (e >= f.p())
            throw ValidationError("matrix entry out of range for F_" + std::to_string(f.p()));
}

MatFp MatFp::identity(Field f, std::size_t n)
{
    MatFp m(f, n, n);
    for (std::size_t i = 0; i < n; ++i)
        m(i, i) = 1;
    return m;
}

MatFp MatFp::from_rows(Field f, const std::vector<std::vector<std::int64_t>>& rows,
                       std::size_t cols_if_empty)
{
    std::size_t cols = rows.empty() ? cols_if_empty : rows.front().size();
    MatFp m(f, rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols)
            throw ValidationError("ragged matrix rows");
        for (std::size_t c = 0; c < cols; ++c)
            m(r, c) = f.reduce(rows[r][c]);
    }
    return m;
}

Vec MatFp::column(std::size_t c) const
{
    Vec v(rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        v[r] = (*this)(r, c);
    return v;
}

bool MatFp::is_zero() const
{
    return std::all_of(data_.begin(), data_.end(), [](Residue e) { return e == 0; });
}

MatFp MatFp::transpose() const
{
    MatFp t(field_, cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            t(c, r) = (*this)(r, c);
    return t;
}

MatFp MatFp::operator*(const MatFp& rhs) const
{
    if (cols_ != rhs.rows_ || field_ != rhs.field_)
        throw ValidationError("matrix product shape mismatch");
    const std::uint64_t p = field_.p();
    MatFp out(field_, rows_, rhs.cols_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < rhs.cols_; ++c) {
            std::uint64_t acc = 0;
            for (std::size_t k = 0; k < cols_; ++k) {
                acc += static_cast<std::uint64_t>((*this)(r, k)) * rhs(k, c);
                if (acc >= (1ull << 62))
                    acc %= p;
            }
            out(r, c) = static_cast<Residue>(acc % p);
        }
    return out;
}

MatFp MatFp::operator+(const MatFp& rhs) const
{
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_ || field_ != rhs.field_)
        throw ValidationError("matrix sum shape mismatch");
    MatFp out(*this);
    for (std::size_t i = 0; i < data_.size(); ++i)
        out.data_[i] = field_.add(data_[i], rhs.data_[i]);
    return out;
}

MatFp MatFp::operator-(const MatFp& rhs) const
{
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_ || field_ != rhs.field_)
        throw ValidationError("matrix difference shape mismatch");
    MatFp out(*this);
    for (std::size_t i = 0; i < data_.size(); ++i)
        out.data_[i] = field_.sub(data_[i], rhs.data_[i]);
    return out;
}

MatFp MatFp::scaled(Residue s) const
{
    MatFp out(*this);
    for (auto& e : out.data_)
        e = field_.mul(e, s);
    return out;
}

Vec MatFp::apply(std::span<const Residue> v) const
{
    if (v.size() != cols_)
        throw ValidationError("matrix-vector shape mismatch");
    Vec out(rows_, 0);
    for (std::size_t r = 0; r < rows_; ++r) {
        std::uint64_t acc = 0;
        for (std::size_t c = 0; c < cols_; ++c)
            acc += static_cast<std::uint64_t>((*this)(r, c)) * v[c];
        out[r] = static_cast<Residue>(acc % field_.p());
    }
    return out;
}

MatFp MatFp::stacked(const MatFp& below) const
{
    if (cols_ != below.cols_)
        throw ValidationError("stacking matrices with different column counts");
    MatFp out(field_, rows_ + below.rows_, cols_);
    std::copy(data_.begin(), data_.end(), out.data_.begin());
    std::copy(below.data_.begin(), below.data_.end(), out.data_.begin() + data_.size());
    return out;
}

MatFp MatFp::beside(const MatFp& right) const
{
    if (rows_ != right.rows_)
        throw ValidationError("joining matrices with different row counts");
    MatFp out(field_, rows_, cols_ + right.cols_);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c)
            out(r, c) = (*this)(r, c);
        for (std::size_t c = 0; c < right.cols_; ++c)
            out(r, cols_ + c) = right(r, c);
    }
    return out;
}

MatFp MatFp::select_rows(std::span<const std::size_t> idx) const
{
    MatFp out(field_, idx.size(), cols_);
    for (std::size_t r = 0; r < idx.size(); ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            out(r, c) = (*this)(idx[r], c);
    return out;
}

std::string MatFp::to_string() const
{
    std::ostringstream os;
    os << '[';
    for (std::size_t r = 0; r < rows_; ++r) {
        os << (r ? ", [" : "[");
        for (std::size_t c = 0; c < cols_; ++c)
            os << (c ? ", " : "") << (*this)(r, c);
        os << ']';
    }
    os << ']';
    return os.str();
}

Echelon rref(const MatFp& m)
{
    const Field f = m.field();
    MatFp a = m;
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
        std::size_t sel = row;
        while (sel < a.rows() && a(sel, col) == 0)
            ++sel;
        if (sel == a.rows())
            continue;
        if (sel != row)
            for (std::size_t c = 0; c < a.cols(); ++c)
                std::swap(a(sel, c), a(row, c));
        const Residue s = f.inv(a(row, col));
        for (std::size_t c = col; c < a.cols(); ++c)
            a(row, c) = f.mul(a(row, c), s);
        for (std::size_t r = 0; r < a.rows(); ++r) {
            if (r == row || a(r, col) == 0)
                continue;
            const Residue factor = a(r, col);
            for (std::size_t c = col; c < a.cols(); ++c)
                a(r, c) = f.sub(a(r, c), f.mul(factor, a(row, c)));
        }
        pivots.push_back(col);
        ++row;
    }
    return {std::move(a), row, std::move(pivots)};
}

std::size_t rank(const MatFp& m) { return rref(m).rank; }

std::vector<Vec> kernel_basis(const MatFp& m)
{
    const auto e = rref(m);
    const Field f = m.field();
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto c : e.pivots)
        is_pivot[c] = true;
    std::vector<Vec> basis;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free])
            continue;
        Vec v(m.cols(), 0);
        v[free] = 1;
        for (std::size_t r = 0; r < e.rank; ++r)
            v[e.pivots[r]] = f.neg(e.reduced(r, free));
        basis.push_back(std::move(v));
    }
    return basis;
}

MatFp inverse(const MatFp& m)
{
    if (m.rows() != m.cols())
        throw ValidationError("inverse of a non-square matrix");
    const auto n = m.rows();
    const auto e = rref(m.beside(MatFp::identity(m.field(), n)));
    if (e.rank < n || (n > 0 && e.pivots[n - 1] != n - 1))
        throw ValidationError("inverse of a singular matrix");
    MatFp inv(m.field(), n, n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c)
            inv(r, c) = e.reduced(r, n + c);
    return inv;
}

MatFp row_space(const MatFp& m)
{
    const auto e = rref(m);
    MatFp out(m.field(), e.rank, m.cols());
    for (std::size_t r = 0; r < e.rank; ++r)
        for (std::size_t c = 0; c < m.cols(); ++c)
            out(r, c) = e.reduced(r, c);
    return out;
}

MatFp image_rows(const MatFp& m) { return row_space(m.transpose()); }

Vec rref_coordinates(const Echelon& basis, std::span<const Residue> v)
{
    Vec coords(basis.rank);
    for (std::size_t r = 0; r < basis.rank; ++r)
        coords[r] = v[basis.pivots[r]];
    return coords;
}

Vec rref_reduce(const Echelon& basis, std::span<const Residue> v)
{
    const Field f = basis.reduced.field();
    Vec w(v.begin(), v.end());
    for (std::size_t r = 0; r < basis.rank; ++r) {
        const Residue c = w[basis.pivots[r]];
        if (c == 0)
            continue;
        for (std::size_t j = 0; j < w.size(); ++j)
            w[j] = f.sub(w[j], f.mul(c, basis.reduced(r, j)));
    }
    return w;
}

bool rref_contains(const Echelon& basis, std::span<const Residue> v)
{
    const auto w = rref_reduce(basis, v);
    return std::all_of(w.begin(), w.end(), [](Residue e) { return e == 0; });
}

namespace {

// Advances a k-combination of {0..n-1} in lexicographic order.
bool next_combination(std::vector<std::size_t>& comb, std::size_t n)
{
    const std::size_t k = comb.size();
    for (std::size_t i = k; i-- > 0;) {
        if (comb[i] < n - k + i) {
            ++comb[i];
            for (std::size_t j = i + 1; j < k; ++j)
                comb[j] = comb[j - 1] + 1;
            return true;
        }
    }
    return false;
}

} // namespace

void for_each_subspace(std::size_t n, std::size_t k, Field f,
                       const std::function<bool(const MatFp&)>& visit)
{
    if (k > n)
        return;
    std::vector<std::size_t> pivots(k);
    for (std::size_t i = 0; i < k; ++i)
        pivots[i] = i;
    do {
        std::vector<bool> is_pivot(n, false);
        for (auto c : pivots)
            is_pivot[c] = true;
        std::vector<std::pair<std::size_t, std::size_t>> free;
        for (std::size_t r = 0; r < k; ++r)
            for (std::size_t c = pivots[r] + 1; c < n; ++c)
                if (!is_pivot[c])
                    free.emplace_back(r, c);
        MatFp m(f, k, n);
        for (std::size_t r = 0; r < k; ++r)
            m(r, pivots[r]) = 1;
        std::vector<Residue> digits(free.size(), 0);
        while (true) {
            if (!visit(m))
                return;
            bool wrapped = true;
            for (std::size_t pos = free.size(); pos-- > 0;) {
                auto [r, c] = free[pos];
                if (++digits[pos] < f.p()) {
                    m(r, c) = digits[pos];
                    wrapped = false;
                    break;
                }
                digits[pos] = 0;
                m(r, c) = 0;
            }
            if (wrapped)
                break;
        }
    } while (next_combination(pivots, n));
}

std::vector<MatFp> subspaces(std::size_t n, std::size_t k, Field f)
{
    std::vector<MatFp> out;
    for_each_subspace(n, k, f, [&](const MatFp& m) {
        out.push_back(m);
        return true;
    });
    return out;
}

void for_each_subspace_containing(const MatFp& fixed, std::size_t k,
                                  const std::function<bool(const MatFp&)>& visit)
{
    const Field f = fixed.field();
    const std::size_t n = fixed.cols();
    const auto base = rref(fixed);
    if (k < base.rank || k > n)
        return;
    std::vector<bool> is_pivot(n, false);
    for (auto c : base.pivots)
        is_pivot[c] = true;
    std::vector<std::size_t> complement;
    for (std::size_t c = 0; c < n; ++c)
        if (!is_pivot[c])
            complement.push_back(c);
    MatFp base_rows(f, base.rank, n);
    for (std::size_t r = 0; r < base.rank; ++r)
        for (std::size_t c = 0; c < n; ++c)
            base_rows(r, c) = base.reduced(r, c);
    for_each_subspace(complement.size(), k - base.rank, f, [&](const MatFp& s) {
        MatFp lifted(f, s.rows(), n);
        for (std::size_t r = 0; r < s.rows(); ++r)
            for (std::size_t c = 0; c < complement.size(); ++c)
                lifted(r, complement[c]) = s(r, c);
        return visit(row_space(base_rows.stacked(lifted)));
    });
}

std::vector<MatFp> subspaces_containing(const MatFp& fixed, std::size_t k)
{
    std::vector<MatFp> out;
    for_each_subspace_containing(fixed, k, [&](const MatFp& m) {
        out.push_back(m);
        return true;
    });
    return out;
}

} // namespace prinhall
