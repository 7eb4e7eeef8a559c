#include "hnum/seifert.hpp"

#include <algorithm>
#include <stdexcept>

namespace hnum {

namespace {

RatMatrix congruent(const RatMatrix& A, const RatMatrix& M) { return A * M * A.transpose(); }

// Rows of the result: the given vectors followed by standard basis vectors that keep the set independent.
RatMatrix complete_basis(const std::vector<RatMatrix>& front, std::size_t n) {
    std::vector<std::vector<Rational>> acc;
    auto push = [&](const RatMatrix& col) {
        std::vector<Rational> r(n);
        for (std::size_t i = 0; i < n; ++i) r[i] = col(i, 0);
        acc.push_back(std::move(r));
    };
    for (const auto& v : front) push(v);
    std::size_t rank = acc.size();
    for (std::size_t i = 0; i < n && acc.size() < n; ++i) {
        std::vector<Rational> e(n);
        e[i] = 1;
        acc.push_back(e);
        if (RatMatrix::from_rows(acc).rank() == rank + 1) {
            ++rank;
        } else {
            acc.pop_back();
        }
    }
    return RatMatrix::from_rows(acc);
}

RatMatrix drop_leading(const RatMatrix& M, std::size_t k) {
    const std::size_t m = M.rows();
    return M.block(k, k, m - k, m - k);
}

RatMatrix drop_trailing(const RatMatrix& M, std::size_t k) {
    const std::size_t m = M.rows();
    return M.block(0, 0, m - k, m - k);
}

// Common kernel of M and M^T.
RatMatrix common_kernel(const RatMatrix& M) {
    const std::size_t m = M.rows();
    RatMatrix stacked(2 * m, m);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) {
            stacked(i, j) = M(i, j);
            stacked(m + i, j) = M(j, i);
        }
    return stacked.kernel_matrix();
}

ReductionStep zero_block_step(const RatMatrix& M, const RatMatrix& ker) {
    std::vector<RatMatrix> vs;
    for (std::size_t j = 0; j < ker.cols(); ++j) vs.push_back(ker.column_at(j));
    return {ReductionStep::Kind::zero_block, complete_basis(vs, M.rows()), ker.cols()};
}

ReductionStep destabilize_step(const RatMatrix& M) {
    const std::size_t m = M.rows();
    RatMatrix v = M.kernel_matrix().column_at(0);
    RatMatrix w = M.transpose() * v;  // last row of the new matrix is w . a_j
    std::size_t j0 = 0;
    while (j0 < m && w(j0, 0) == 0) ++j0;
    if (j0 == m) throw std::logic_error("destabilization requires a vector outside the common kernel");

    RatMatrix wrow = w.transpose();
    RatMatrix perp = wrow.kernel_matrix();  // m x (m-1), contains v
    std::vector<std::size_t> pivots;
    wrow.rref(&pivots);
    // Free coordinates of the RREF kernel basis give the coordinates of v in that basis.
    std::vector<std::size_t> free_cols;
    for (std::size_t c = 0; c < m; ++c)
        if (std::find(pivots.begin(), pivots.end(), c) == pivots.end()) free_cols.push_back(c);
    std::size_t replace = perp.cols();
    for (std::size_t f = 0; f < free_cols.size(); ++f)
        if (v(free_cols[f], 0) != 0) {
            replace = f;
            break;
        }
    if (replace == perp.cols()) throw std::logic_error("kernel vector not found in the orthogonal complement");

    RatMatrix A(m, m);
    std::size_t row = 0;
    for (std::size_t f = 0; f < perp.cols(); ++f) {
        if (f == replace) continue;
        for (std::size_t i = 0; i < m; ++i) A(row, i) = perp(i, f);
        ++row;
    }
    A(m - 2, j0) = 1 / w(j0, 0);
    for (std::size_t i = 0; i < m; ++i) A(m - 1, i) = v(i, 0);

    // Clear column m-2 (0-based) above the last row: row_i += alpha * row_last.
    RatMatrix T = congruent(A, M);
    RatMatrix E = RatMatrix::identity(m);
    for (std::size_t i = 0; i + 1 < m; ++i) E(i, m - 1) = -T(i, m - 2);
    return {ReductionStep::Kind::destabilize, E * A, 2};
}

std::optional<std::string> check_step_shape(const ReductionStep& step, const RatMatrix& T) {
    const std::size_t m = T.rows();
    if (step.kind == ReductionStep::Kind::zero_block) {
        for (std::size_t i = 0; i < step.removed; ++i)
            for (std::size_t j = 0; j < m; ++j)
                if (T(i, j) != 0 || T(j, i) != 0) return "zero-block step leaves a nonzero entry";
        return std::nullopt;
    }
    if (m < 2) return "destabilization on a matrix smaller than 2x2";
    for (std::size_t i = 0; i < m; ++i)
        if (T(i, m - 1) != 0) return "destabilization: last column is not zero";
    for (std::size_t j = 0; j < m; ++j)
        if (T(m - 1, j) != (j == m - 2 ? 1 : 0)) return "destabilization: last row is not e_{m-1}";
    for (std::size_t i = 0; i + 1 < m; ++i)
        if (T(i, m - 2) != 0) return "destabilization: column m-1 is not cleared";
    return std::nullopt;
}

}  // namespace

SeifertSplit split_degenerate(const SeifertMatrix& s) {
    if (!s.S.is_square()) throw std::invalid_argument("Seifert matrix must be square");
    SeifertSplit out;
    RatMatrix M = s.S;
    while (M.rows() > 0 && M.det() == 0) {
        RatMatrix ker = common_kernel(M);
        ReductionStep step = ker.cols() > 0 ? zero_block_step(M, ker) : destabilize_step(M);
        RatMatrix T = congruent(step.congruence, M);
        if (auto err = check_step_shape(step, T)) throw std::logic_error(*err);
        if (step.kind == ReductionStep::Kind::zero_block) {
            out.s0_dim += step.removed;
            M = drop_leading(T, step.removed);
        } else {
            M = drop_trailing(T, 2);
        }
        out.witness.push_back(std::move(step));
    }
    out.s_ndeg = M;
    return out;
}

std::optional<std::string> replay_split(const RatMatrix& S, const SeifertSplit& split) {
    RatMatrix M = S;
    std::size_t zeros = 0;
    for (const auto& step : split.witness) {
        if (step.congruence.rows() != M.rows() || step.congruence.det() == 0) return "witness congruence is not invertible";
        RatMatrix T = congruent(step.congruence, M);
        if (auto err = check_step_shape(step, T)) return err;
        if (step.kind == ReductionStep::Kind::zero_block) {
            zeros += step.removed;
            M = drop_leading(T, step.removed);
        } else {
            M = drop_trailing(T, 2);
        }
    }
    if (zeros != split.s0_dim) return "zero block size differs from the witness";
    if (!(M == split.s_ndeg)) return "replayed nondegenerate block differs";
    if (M.rows() > 0 && M.det() == 0) return "replayed block is degenerate";
    return std::nullopt;
}

VariationStructure build_hvs_from_nondegenerate(const RatMatrix& s) {
    VariationStructure v;
    v.dim = s.rows();
    v.S = s;
    if (v.dim == 0) return v;
    RatMatrix st = s.transpose();
    v.V = st.inverse();
    v.b = s - st;
    v.h = v.V * s;
    return v;
}

VariationStructure build_hvs(const SeifertSplit& split) { return build_hvs_from_nondegenerate(split.s_ndeg); }

VariationStructure build_hvs_from_variation(const RatMatrix& V) {
    if (!V.is_square()) throw std::invalid_argument("variation matrix must be square");
    if (V.rows() > 0 && V.det() == 0) throw std::domain_error("variation matrix is singular");
    return build_hvs_from_nondegenerate(V.rows() ? V.inverse().transpose() : V);
}

std::vector<std::string> check_hvs(const VariationStructure& v) {
    std::vector<std::string> bad;
    if (v.dim == 0) return bad;
    const RatMatrix I = RatMatrix::identity(v.dim);
    if (!(v.V * v.b == v.h - I)) bad.emplace_back("V b != h - I");
    if (!(v.b * v.V == v.h.transpose().inverse() - I)) bad.emplace_back("b V != (h^T)^{-1} - I");
    if (!(v.h.transpose() * v.b * v.h == v.b)) bad.emplace_back("h^T b h != b");
    if (v.h.det() == 0) bad.emplace_back("det h == 0");
    if (!(v.b == -v.b.transpose())) bad.emplace_back("b is not skew-symmetric");
    return bad;
}

}  // namespace hnum
