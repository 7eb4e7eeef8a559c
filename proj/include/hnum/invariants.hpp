#pragma once

#include <optional>
#include <vector>

#include "hnum/classify.hpp"
#include "hnum/spectra.hpp"

namespace hnum {

/// zeta = e^{2 pi i turns}; turns is reduced into [0, 1).
struct SignatureSample {
    Rational turns;
    int sigma = 0;
    int nullity = 0;       ///< includes the dim S0 correction
    int nullity_ndeg = 0;  ///< nullity of the nondegenerate part alone (table route), or -1 if unknown
};

Rational reduce_turns(const Rational& turns);

/// Degree of Q(zeta) at or below which the exact cyclotomic route is used.
inline constexpr unsigned kExactCyclotomicDegree = 24;

/// Signature and nullity of (1 - zeta) S + (1 - conj zeta) S^T.
/// Throws std::domain_error for zeta = 1 and PrecisionError if the inertia cannot be certified.
/// `invariant_factors` (those of S - t S^T) may be passed to skip recomputing them on the numeric route.
SignatureSample tristram_levine_direct(const RatMatrix& S, const Rational& turns, Precision prec = kDefaultPrecision,
                                       const std::vector<RatPoly>* invariant_factors = nullptr);

/// Signature from the H-number table (circular order with lambda = 1 smallest) and nullity from
/// the blocks at conj zeta plus dim S0. Throws PrecisionError when an irrational eigenvalue
/// argument cannot be separated from zeta.
SignatureSample tristram_levine_from_h(const HNumbers& hn, const Rational& turns);

/// Half-plane routes: -#Sp in (x, x+1) + #Sp outside, and the same count over ESp.
/// nullopt when zeta is an eigenvalue or an element lies on the boundary of the strip.
struct SpectralSignature {
    int from_sp = 0;
    int from_esp = 0;
};
std::optional<SpectralSignature> tristram_levine_from_spectrum(const SpectrumData& sd, const Rational& turns);

/// Invariant factors of S - t S^T over Q[t]: monic, d_1 | d_2 | ..., zero factors last.
std::vector<RatPoly> alexander_invariant_factors(const RatMatrix& S);

struct AlexanderTower {
    std::vector<LaurentPoly> polys;  ///< Delta_0, Delta_1, ... up to the first Delta_k == 1
    int m0 = 0;                      ///< number of leading zero polynomials
    std::vector<RatPoly> invariant_factors;

    /// Delta_n for any n >= 0 (1 beyond the stored range).
    LaurentPoly delta(int n) const;
    /// ord_{t = root of f} Delta_n; -1 encodes +infinity.
    int order(int n, const RatPoly& f) const;
    /// Index of the first Delta equal to 1.
    int first_one() const { return static_cast<int>(polys.size()) - 1; }
};

AlexanderTower alexander_tower(const RatMatrix& S);

/// I(n) for n = 0 .. r(mu): sums of the smallest r - n block sizes at mu (zeros when mu is not an eigenvalue).
std::vector<int> alexander_multiplicities_from_jordan(const std::vector<JordanClass>& jordan, const EigenKey& mu);

struct NakanishiIndex {
    int value = 0;
    std::optional<EigenKey> witness;  ///< eigenvalue with the largest number of blocks
};

NakanishiIndex nakanishi_from_tower(const AlexanderTower& tower);
/// m0 + max over eigenvalues of the number of Jordan blocks.
NakanishiIndex nakanishi_from_jordan(const std::vector<JordanClass>& jordan, std::size_t s0_dim);

}  // namespace hnum
