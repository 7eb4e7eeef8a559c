#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hnum/invariants.hpp"

namespace hnum {

/// Everything computed for one link.
struct LinkAnalysis {
    std::string name;
    RatMatrix S;
    SeifertSplit split;
    VariationStructure hvs;
    std::vector<JordanClass> jordan;
    std::vector<EquivariantSignature> eqsig;
    HNumbers hn;
    SpectrumData sd;
    AlexanderTower tower;
    Precision precision;  ///< precision at which every certified decision succeeded
    std::vector<std::string> failures;  ///< violated structural identities (empty when consistent)

    /// Degree of the first nonzero Alexander polynomial.
    int alexander_degree() const { return static_cast<int>(hvs.dim); }
};

/// Runs the full pipeline from a Seifert matrix, doubling the precision on PrecisionError up to
/// kPrecisionCeiling; the last PrecisionError is rethrown when the ceiling is reached.
LinkAnalysis analyze_seifert(const RatMatrix& S, Precision start = kDefaultPrecision, std::string name = {});

/// Stage-isolated entry from a variation matrix V (S = (V^{-1})^T); h, when given, must equal V S.
LinkAnalysis analyze_variation(const RatMatrix& V, const std::optional<RatMatrix>& h,
                               Precision start = kDefaultPrecision, std::string name = {});

/// Signature samples by every available route with their agreement status.
struct SignatureComparison {
    SignatureSample direct;
    SignatureSample table;
    std::optional<SpectralSignature> spectral;
    bool agree() const;
};

SignatureComparison compare_signatures(const LinkAnalysis& a, const Rational& turns);

/// Every cross-route identity: tower vs Jordan multiplicities, m0 vs dim S0, Nakanishi routes,
/// #ESp vs deg Delta_{m0}, spectrum symmetry and the signature routes at the given samples
/// (plus conjugate samples). Returns the list of mismatches.
std::vector<std::string> cross_check(const LinkAnalysis& a, const std::vector<Rational>& zetas);

/// N samples in (0, 1) near (2j-1)/2N, nudged away from every eigenvalue argument.
std::vector<Rational> zeta_sweep(const LinkAnalysis& a, int n);

}  // namespace hnum
