#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "hnum/rat_poly.hpp"
#include "hnum/rational.hpp"

namespace hnum {

/// Dense matrix over Q. Every operation is exact.
class RatMatrix {
public:
    RatMatrix() = default;
    RatMatrix(std::size_t rows, std::size_t cols);
    RatMatrix(std::initializer_list<std::initializer_list<long>> rows);
    static RatMatrix from_rows(const std::vector<std::vector<Rational>>& rows);
    static RatMatrix identity(std::size_t n);
    static RatMatrix column(const std::vector<Rational>& entries);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }
    bool empty() const { return rows_ == 0 || cols_ == 0; }

    Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    RatMatrix& operator+=(const RatMatrix& rhs);
    RatMatrix& operator-=(const RatMatrix& rhs);
    RatMatrix& operator*=(const Rational& c);
    RatMatrix operator-() const;
    friend RatMatrix operator+(RatMatrix a, const RatMatrix& b) { return a += b; }
    friend RatMatrix operator-(RatMatrix a, const RatMatrix& b) { return a -= b; }
    friend RatMatrix operator*(RatMatrix a, const Rational& c) { return a *= c; }
    friend RatMatrix operator*(const Rational& c, RatMatrix a) { return a *= c; }
    friend RatMatrix operator*(const RatMatrix& a, const RatMatrix& b);
    friend bool operator==(const RatMatrix& a, const RatMatrix& b);

    RatMatrix transpose() const;
    RatMatrix pow(unsigned e) const;
    bool is_zero() const;
    bool is_integral() const;

    RatMatrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
    RatMatrix column_at(std::size_t c) const { return block(0, c, rows_, 1); }
    RatMatrix hconcat(const RatMatrix& rhs) const;
    static RatMatrix block_diagonal(const RatMatrix& a, const RatMatrix& b);

    /// Fraction-free (Bareiss) determinant; dimension error for non-square input.
    Rational det() const;
    std::size_t rank() const;
    /// Reduced row echelon form and pivot columns.
    RatMatrix rref(std::vector<std::size_t>* pivots = nullptr) const;
    /// Exact right-kernel basis as columns; the basis read off the RREF (free variable = 1).
    RatMatrix kernel_matrix() const;
    std::vector<RatMatrix> kernel_basis() const;
    /// Throws std::domain_error when singular.
    RatMatrix inverse() const;
    /// det(tI - m), division-free (Berkowitz).
    RatPoly charpoly() const;
    /// p(m) by Horner's rule.
    RatMatrix eval_poly(const RatPoly& p) const;

    std::string to_string() const;

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Rational> data_;
};

/// Row-echelon form of an integer-scaled copy computed with Bareiss steps.
/// Row scaling is by positive rationals, so the row space is unchanged.
struct BareissEchelon {
    RatMatrix echelon;
    std::vector<std::size_t> pivots;
    Rational det_scale;  ///< det(original) = det(last pivot) / det_scale when square and full rank
};
BareissEchelon bareiss_echelon(const RatMatrix& m);

}  // namespace hnum
