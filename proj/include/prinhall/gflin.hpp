#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

namespace prinhall {

using Residue = std::uint32_t;
using Vec = std::vector<Residue>;

bool is_prime(std::uint64_t n);

/// The prime field F_p.
class Field {
public:
    explicit Field(std::uint32_t p);

    std::uint32_t p() const { return p_; }

    Residue reduce(std::int64_t v) const
    {
        auto r = v % static_cast<std::int64_t>(p_);
        return static_cast<Residue>(r < 0 ? r + p_ : r);
    }
    Residue add(Residue a, Residue b) const
    {
        Residue s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    Residue sub(Residue a, Residue b) const { return a >= b ? a - b : a + p_ - b; }
    Residue neg(Residue a) const { return a == 0 ? 0 : p_ - a; }
    Residue mul(Residue a, Residue b) const
    {
        return static_cast<Residue>(static_cast<std::uint64_t>(a) * b % p_);
    }
    Residue inv(Residue a) const;

    friend bool operator==(const Field&, const Field&) = default;

private:
    std::uint32_t p_;
};

/// Dense row-major matrix over F_p.
class MatFp {
public:
    MatFp(Field f, std::size_t rows, std::size_t cols);
    MatFp(Field f, std::size_t rows, std::size_t cols, std::vector<Residue> entries);

    static MatFp identity(Field f, std::size_t n);
    /// Rows given as integer lists, reduced mod p.
    static MatFp from_rows(Field f, const std::vector<std::vector<std::int64_t>>& rows,
                           std::size_t cols_if_empty = 0);

    const Field& field() const { return field_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const std::vector<Residue>& entries() const { return data_; }

    Residue& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    Residue operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    std::span<const Residue> row(std::size_t r) const
    {
        return {data_.data() + r * cols_, cols_};
    }
    Vec column(std::size_t c) const;

    bool is_zero() const;
    MatFp transpose() const;
    MatFp operator*(const MatFp& rhs) const;
    MatFp operator+(const MatFp& rhs) const;
    MatFp operator-(const MatFp& rhs) const;
    MatFp scaled(Residue s) const;
    Vec apply(std::span<const Residue> v) const;

    /// Rows of `this` followed by rows of `below`.
    MatFp stacked(const MatFp& below) const;
    /// Columns of `this` followed by columns of `right`.
    MatFp beside(const MatFp& right) const;
    MatFp select_rows(std::span<const std::size_t> idx) const;

    std::string to_string() const;

    friend bool operator==(const MatFp&, const MatFp&) = default;

private:
    Field field_;
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Residue> data_;
};

struct Echelon {
    MatFp reduced;
    std::size_t rank;
    std::vector<std::size_t> pivots;
};

Echelon rref(const MatFp& m);
std::size_t rank(const MatFp& m);
/// Basis of {v : m v = 0}; one free column per vector, in increasing order.
std::vector<Vec> kernel_basis(const MatFp& m);
/// Inverse of a square matrix; throws ValidationError when singular.
MatFp inverse(const MatFp& m);

/// Row basis (RREF, zero rows dropped) of the row space.
MatFp row_space(const MatFp& m);
/// Basis rows of the column space of m, as an RREF row matrix.
MatFp image_rows(const MatFp& m);

/// Coordinates of `v` in an RREF row basis; assumes membership.
Vec rref_coordinates(const Echelon& basis, std::span<const Residue> v);
/// v reduced against an RREF row basis (entries at pivot columns become 0).
Vec rref_reduce(const Echelon& basis, std::span<const Residue> v);
bool rref_contains(const Echelon& basis, std::span<const Residue> v);

/// Visits each k-dimensional subspace of F_p^n exactly once as its RREF
/// basis (k x n). Order: pivot sets lexicographically, then free entries
/// lexicographically. The visitor returns false to stop early.
void for_each_subspace(std::size_t n, std::size_t k, Field f,
                       const std::function<bool(const MatFp&)>& visit);
std::vector<MatFp> subspaces(std::size_t n, std::size_t k, Field f);

/// Each k-dimensional subspace containing span(rows of `fixed`), lifted from
/// subspaces of the quotient by the standard complement.
void for_each_subspace_containing(const MatFp& fixed, std::size_t k,
                                  const std::function<bool(const MatFp&)>& visit);
std::vector<MatFp> subspaces_containing(const MatFp& fixed, std::size_t k);

} // namespace prinhall
