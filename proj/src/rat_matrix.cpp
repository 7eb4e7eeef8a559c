#include "hnum/rat_matrix.hpp"

#include <sstream>
#include <stdexcept>

namespace hnum {

namespace {

void require_square(const RatMatrix& m, const char* what) {
    if (!m.is_square()) throw std::invalid_argument(std::string(what) + ": matrix is not square");
}

}  // namespace

RatMatrix::RatMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

RatMatrix::RatMatrix(std::initializer_list<std::initializer_list<long>> rows) {
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_) throw std::invalid_argument("ragged matrix literal");
        for (long v : r) data_.emplace_back(v);
    }
}

RatMatrix RatMatrix::from_rows(const std::vector<std::vector<Rational>>& rows) {
    RatMatrix m(rows.size(), rows.empty() ? 0 : rows.front().size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != m.cols_) throw std::invalid_argument("ragged matrix rows");
        for (std::size_t j = 0; j < m.cols_; ++j) m(i, j) = rows[i][j];
    }
    return m;
}

RatMatrix RatMatrix::identity(std::size_t n) {
    RatMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

RatMatrix RatMatrix::column(const std::vector<Rational>& entries) {
    RatMatrix m(entries.size(), 1);
    for (std::size_t i = 0; i < entries.size(); ++i) m(i, 0) = entries[i];
    return m;
}

RatMatrix& RatMatrix::operator+=(const RatMatrix& rhs) {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw std::invalid_argument("matrix sum: shape mismatch");
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += rhs.data_[i];
    return *this;
}

RatMatrix& RatMatrix::operator-=(const RatMatrix& rhs) {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw std::invalid_argument("matrix difference: shape mismatch");
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= rhs.data_[i];
    return *this;
}

RatMatrix& RatMatrix::operator*=(const Rational& c) {
    for (auto& x : data_) x *= c;
    return *this;
}

RatMatrix RatMatrix::operator-() const {
    RatMatrix r(*this);
    for (auto& x : r.data_) x = -x;
    return r;
}

RatMatrix operator*(const RatMatrix& a, const RatMatrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product: shape mismatch");
    RatMatrix r(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const Rational& aik = a(i, k);
            if (aik == 0) continue;
            for (std::size_t j = 0; j < b.cols_; ++j) r(i, j) += aik * b(k, j);
        }
    return r;
}

bool operator==(const RatMatrix& a, const RatMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

RatMatrix RatMatrix::transpose() const {
    RatMatrix r(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
    return r;
}

RatMatrix RatMatrix::pow(unsigned e) const {
    require_square(*this, "matrix power");
    RatMatrix result = identity(rows_);
    RatMatrix base = *this;
    while (e) {
        if (e & 1u) result = result * base;
        e >>= 1u;
        if (e) base = base * base;
    }
    return result;
}

bool RatMatrix::is_zero() const {
    for (const auto& x : data_)
        if (x != 0) return false;
    return true;
}

bool RatMatrix::is_integral() const {
    for (const auto& x : data_)
        if (x.get_den() != 1) return false;
    return true;
}

RatMatrix RatMatrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
    if (r0 + nr > rows_ || c0 + nc > cols_) throw std::out_of_range("matrix block out of range");
    RatMatrix r(nr, nc);
    for (std::size_t i = 0; i < nr; ++i)
        for (std::size_t j = 0; j < nc; ++j) r(i, j) = (*this)(r0 + i, c0 + j);
    return r;
}

RatMatrix RatMatrix::hconcat(const RatMatrix& rhs) const {
    if (rows_ != rhs.rows_ && !empty() && !rhs.empty()) throw std::invalid_argument("hconcat: row mismatch");
    if (cols_ == 0) return rhs;
    if (rhs.cols_ == 0) return *this;
    RatMatrix r(rows_, cols_ + rhs.cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) r(i, j) = (*this)(i, j);
        for (std::size_t j = 0; j < rhs.cols_; ++j) r(i, cols_ + j) = rhs(i, j);
    }
    return r;
}

RatMatrix RatMatrix::block_diagonal(const RatMatrix& a, const RatMatrix& b) {
    RatMatrix r(a.rows_ + b.rows_, a.cols_ + b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t j = 0; j < a.cols_; ++j) r(i, j) = a(i, j);
    for (std::size_t i = 0; i < b.rows_; ++i)
        for (std::size_t j = 0; j < b.cols_; ++j) r(a.rows_ + i, a.cols_ + j) = b(i, j);
    return r;
}

BareissEchelon bareiss_echelon(const RatMatrix& m) {
    const std::size_t R = m.rows(), C = m.cols();
    std::vector<std::vector<Integer>> a(R, std::vector<Integer>(C));
    Rational scale = 1;
    for (std::size_t i = 0; i < R; ++i) {
        Integer l = 1;
        for (std::size_t j = 0; j < C; ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).get_den_mpz_t());
        for (std::size_t j = 0; j < C; ++j) a[i][j] = m(i, j).get_num() * (l / m(i, j).get_den());
        scale *= l;
    }
    int swaps = 0;
    Integer prev = 1;
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < C && row < R; ++col) {
        std::size_t p = row;
        while (p < R && a[p][col] == 0) ++p;
        if (p == R) continue;
        if (p != row) {
            std::swap(a[p], a[row]);
            ++swaps;
        }
        for (std::size_t i = row + 1; i < R; ++i) {
            for (std::size_t j = col + 1; j < C; ++j) {
                a[i][j] = a[row][col] * a[i][j] - a[i][col] * a[row][j];
                mpz_divexact(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(), prev.get_mpz_t());
            }
            a[i][col] = 0;
        }
        prev = a[row][col];
        pivots.push_back(col);
        ++row;
    }
    BareissEchelon out;
    out.echelon = RatMatrix(R, C);
    for (std::size_t i = 0; i < R; ++i)
        for (std::size_t j = 0; j < C; ++j) out.echelon(i, j) = a[i][j];
    out.pivots = std::move(pivots);
    out.det_scale = (swaps % 2) ? Rational(-scale) : scale;
    return out;
}

Rational RatMatrix::det() const {
    require_square(*this, "determinant");
    if (rows_ == 0) return 1;
    BareissEchelon e = bareiss_echelon(*this);
    if (e.pivots.size() < rows_) return 0;
    Rational d = e.echelon(rows_ - 1, rows_ - 1);
    return d / e.det_scale;
}

std::size_t RatMatrix::rank() const {
    if (empty()) return 0;
    return bareiss_echelon(*this).pivots.size();
}

RatMatrix RatMatrix::rref(std::vector<std::size_t>* pivots_out) const {
    if (empty()) {
        if (pivots_out) pivots_out->clear();
        return *this;
    }
    BareissEchelon e = bareiss_echelon(*this);
    RatMatrix r = std::move(e.echelon);
    const auto& pivots = e.pivots;
    for (std::size_t k = pivots.size(); k-- > 0;) {
        std::size_t pc = pivots[k];
        Rational inv = 1 / r(k, pc);
        for (std::size_t j = pc; j < cols_; ++j) r(k, j) *= inv;
        for (std::size_t i = 0; i < k; ++i) {
            Rational f = r(i, pc);
            if (f == 0) continue;
            for (std::size_t j = pc; j < cols_; ++j) r(i, j) -= f * r(k, j);
        }
    }
    if (pivots_out) *pivots_out = pivots;
    return r;
}

RatMatrix RatMatrix::kernel_matrix() const {
    if (cols_ == 0) return RatMatrix(0, 0);
    if (rows_ == 0) return identity(cols_);
    std::vector<std::size_t> pivots;
    RatMatrix r = rref(&pivots);
    std::vector<bool> is_pivot(cols_, false);
    for (auto p : pivots) is_pivot[p] = true;
    std::vector<std::size_t> free_cols;
    for (std::size_t j = 0; j < cols_; ++j)
        if (!is_pivot[j]) free_cols.push_back(j);
    RatMatrix k(cols_, free_cols.size());
    for (std::size_t f = 0; f < free_cols.size(); ++f) {
        std::size_t fc = free_cols[f];
        k(fc, f) = 1;
        for (std::size_t i = 0; i < pivots.size(); ++i) k(pivots[i], f) = -r(i, fc);
    }
    return k;
}

std::vector<RatMatrix> RatMatrix::kernel_basis() const {
    RatMatrix k = kernel_matrix();
    std::vector<RatMatrix> out;
    for (std::size_t j = 0; j < k.cols(); ++j) out.push_back(k.column_at(j));
    return out;
}

RatMatrix RatMatrix::inverse() const {
    require_square(*this, "inverse");
    const std::size_t n = rows_;
    RatMatrix aug = hconcat(identity(n));
    std::vector<std::size_t> pivots;
    RatMatrix r = aug.rref(&pivots);
    if (n > 0 && (pivots.size() < n || pivots[n - 1] != n - 1)) throw std::domain_error("matrix is singular");
    return r.block(0, n, n, n);
}

RatPoly RatMatrix::charpoly() const {
    require_square(*this, "charpoly");
    const std::size_t n = rows_;
    // Berkowitz: c holds the coefficients of det(tI - A_r), highest degree first.
    std::vector<Rational> c{Rational(1)};
    for (std::size_t r = 0; r < n; ++r) {
        // A_{r+1} = [[A_r, col], [row, a]] with A_r the leading r x r block.
        const Rational& a = (*this)(r, r);
        std::vector<Rational> col(r), row(r);
        for (std::size_t i = 0; i < r; ++i) {
            col[i] = (*this)(i, r);
            row[i] = (*this)(r, i);
        }
        // Toeplitz entries: 1, -a, -row*col, -row*A*col, ...
        std::vector<Rational> tz(r + 2);
        tz[0] = 1;
        tz[1] = -a;
        std::vector<Rational> v = col;
        for (std::size_t k = 2; k < r + 2; ++k) {
            Rational s = 0;
            for (std::size_t i = 0; i < r; ++i) s += row[i] * v[i];
            tz[k] = -s;
            std::vector<Rational> nv(r);
            for (std::size_t i = 0; i < r; ++i)
                for (std::size_t j = 0; j < r; ++j) nv[i] += (*this)(i, j) * v[j];
            v = std::move(nv);
        }
        std::vector<Rational> next(r + 2);
        for (std::size_t i = 0; i < r + 2; ++i)
            for (std::size_t j = 0; j <= i && j < c.size(); ++j) next[i] += tz[i - j] * c[j];
        c = std::move(next);
    }
    std::vector<Rational> low(c.rbegin(), c.rend());
    return RatPoly(std::move(low));
}

RatMatrix RatMatrix::eval_poly(const RatPoly& p) const {
    require_square(*this, "polynomial evaluation");
    RatMatrix acc(rows_, cols_);
    for (int i = p.degree(); i >= 0; --i) {
        acc = acc * *this;
        Rational ci = p.coeff(i);
        for (std::size_t d = 0; d < rows_; ++d) acc(d, d) += ci;
    }
    return acc;
}

std::string RatMatrix::to_string() const {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < rows_; ++i) {
        os << (i ? ", [" : "[");
        for (std::size_t j = 0; j < cols_; ++j) os << (j ? ", " : "") << hnum::to_string((*this)(i, j));
        os << "]";
    }
    os << "]";
    return os.str();
}

}  // namespace hnum
