#pragma once

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hnum/jordan.hpp"
#include "hnum/seifert.hpp"

namespace hnum {

/// Signature data of the normalized hermitian form B^(k) on U^(k)/U^(k-1) at a unit-circle eigenvalue.
struct EquivariantSignature {
    EigenKey key;
    int k = 0;
    int dim_kernel = 0;  ///< n^(k) = dim U^(k)
    int sigma = 0;       ///< signature of the normalized form
    int rank = 0;        ///< rank of the form on the quotient (equals s_k)
    double margin = 0;   ///< smallest |diagonal value| of the exact diagonalization at lambda (0 if none)
};

/// Throws PrecisionError when a sign cannot be certified at the roots' precision.
std::vector<EquivariantSignature> equivariant_signatures(const VariationStructure& v,
                                                        const std::vector<JordanClass>& jordan);

struct PKey {
    EigenKey key;
    int k = 0;
    int u = 0;
    friend bool operator==(const PKey&, const PKey&) = default;
    friend std::strong_ordering operator<=>(const PKey& a, const PKey& b) {
        if (auto c = a.key <=> b.key; c != 0) return c;
        if (auto c = a.k <=> b.k; c != 0) return c;
        return a.u <=> b.u;
    }
};

struct QKey {
    EigenKey key;
    int k = 0;
    friend bool operator==(const QKey&, const QKey&) = default;
    friend std::strong_ordering operator<=>(const QKey& a, const QKey& b) {
        if (auto c = a.key <=> b.key; c != 0) return c;
        return a.k <=> b.k;
    }
};

/// Eigenvalue description carried with H-number tables.
struct EigenInfo {
    BigComplex value;
    UnitCircleStatus status = UnitCircleStatus::undecided;
    std::optional<Rational> turns;  ///< exact arg / 2pi in [0, 1)
    EigenKey conjugate;
    bool real = false;              ///< certified real eigenvalue
    BigFloat radius;                ///< enclosure radius of `value`
};

struct HNumbers {
    std::map<PKey, int> p;
    std::map<QKey, int> q;
    std::size_t s0_dim = 0;
    std::map<EigenKey, EigenInfo> eigen;

    int p_count(const EigenKey& key, int k, int u) const;
    int q_count(const EigenKey& key, int k) const;
    /// sum k p + 2 sum k q
    int weighted_dim() const;
    bool same_counts(const HNumbers& other) const { return p == other.p && q == other.q && s0_dim == other.s0_dim; }
};

HNumbers h_numbers(const std::vector<JordanClass>& jordan, const std::vector<EquivariantSignature>& eqsig,
                   std::size_t s0_dim);

/// Violations of the table invariants against the Jordan data (empty when consistent).
std::vector<std::string> check_hnumbers(const HNumbers& hn, const std::vector<JordanClass>& jordan, std::size_t dim);

HNumbers transform_mirror(const HNumbers& hn);
HNumbers transform_reverse(const HNumbers& hn);
HNumbers connected_sum(const HNumbers& a, const HNumbers& b);

/// Violated necessary conditions for algebraic links (empty report passes every implemented check).
std::vector<std::string> algebraicity_obstructions(const HNumbers& hn);

bool is_unit_one(const EigenKey& key);

}  // namespace hnum
