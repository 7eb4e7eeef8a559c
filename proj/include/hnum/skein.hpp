#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hnum/invariants.hpp"

namespace hnum {

struct SkeinTriple {
    RatMatrix s_plus, s_minus, s_zero;
};

struct TripleValidation {
    std::optional<SkeinTriple> triple;
    std::string reason;  ///< first mismatch when invalid
    bool ok() const { return triple.has_value(); }
};

/// S+ - S- must be the single corner matrix E_{n+1,n+1}; S0 is S+ without its last row and column.
TripleValidation validate_triple(const RatMatrix& sp, const RatMatrix& sm, const RatMatrix& s0);

/// Order of vanishing with +infinity for the zero polynomial; arithmetic saturates.
struct Order {
    static constexpr int kInfinite = -1;
    int value = 0;
    bool infinite() const { return value == kInfinite; }
    static Order from_raw(int raw) { return {raw}; }
    friend bool operator>=(Order a, Order b) {
        if (a.infinite()) return true;
        if (b.infinite()) return false;
        return a.value >= b.value;
    }
    friend Order operator+(Order a, int k) { return a.infinite() ? a : Order{a.value + k}; }
    friend Order min(Order a, Order b) { return a >= b ? b : a; }
    std::string to_string() const { return infinite() ? "inf" : std::to_string(value); }
};

struct SkeinCheck {
    std::string what;
    bool ok = true;
    std::string detail;
};

struct SkeinReport {
    std::vector<SkeinCheck> checks;
    bool ok() const;
    int failures() const;
    void add(std::string what, bool ok, std::string detail = {});
};

struct TripleData {
    SkeinTriple triple;
    AlexanderTower plus, minus, zero;
};

TripleData triple_data(const SkeinTriple& t);

/// d_k^* = ord_{t=lambda} Delta_k for k = 0 .. count-1, lambda a root of the irreducible f.
std::vector<Order> dk_sequence(const AlexanderTower& tower, const RatPoly& f, int count);

/// |sigma_{L+-} - sigma_{L0}| + |n_{L+-} - n_{L0}| <= 1 at every sample.
SkeinReport check_signature_skein(const SkeinTriple& t, const std::vector<Rational>& zetas,
                                  Precision prec = kDefaultPrecision);

/// Monotonicity and the four crossing-change families for the factor f of lambda.
SkeinReport check_dk_inequalities(const TripleData& d, const RatPoly& f);

/// Number of Jordan blocks of size >= N at a root of f, for N = 1 .. max size.
std::vector<int> pn_counts(const std::vector<JordanClass>& jordan, const RatPoly& f);

/// |P_N^+ - P_N^-| <= 2N (N >= 2) and <= 1 (N = 1) for the factor f, from the monodromies of both sides.
SkeinReport check_pn_bounds(const std::vector<JordanClass>& plus, const std::vector<JordanClass>& minus,
                            const RatPoly& f);

/// |n_Q(K+) - n_Q(K-)| <= 1 when both sides are knots (det(S - S^T) != 0).
SkeinReport check_nakanishi_bound(const SkeinTriple& t, const TripleData& d);

/// Irreducible factors carrying eigenvalues of any of the three monodromies.
std::vector<RatPoly> triple_eigen_factors(const TripleData& d);

enum class Hypothesis { a, b, c };

enum class SemicontVerdict { holds, violated, hypotheses_not_met, refused_boundary };

std::string_view to_string(SemicontVerdict v);

struct SemicontReport {
    SemicontVerdict verdict = SemicontVerdict::holds;
    int count1 = 0, count2 = 0;  ///< #ESp_i in H_x
    int deg1 = 0, deg2 = 0;      ///< degree of the first nonzero Alexander polynomial
    std::string detail;
};

/// Semicontinuity #ESp1 in H_x >= #ESp2 in H_x. The geometric relation named by the hypothesis is
/// taken on trust; the degree condition and the boundary emptiness are checked.
SemicontReport check_semicontinuity(const SpectrumData& sd1, int deg1, const SpectrumData& sd2, int deg2,
                                    Hypothesis hyp, const Rational& x);

}  // namespace hnum
