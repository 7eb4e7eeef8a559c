#pragma once

#include <compare>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "hnum/rat_matrix.hpp"
#include "hnum/roots.hpp"
#include "hnum/seifert.hpp"

namespace hnum {

/// Raised when a certified decision needs more precision than was supplied.
class PrecisionError : public std::runtime_error {
public:
    PrecisionError(const std::string& what, Precision p) : std::runtime_error(what), precision(p) {}
    Precision precision;
};

/// Exact eigenvalue key: irreducible factor plus the root's index in (argument, modulus) order.
struct EigenKey {
    RatPoly factor;
    int index = 0;

    friend bool operator==(const EigenKey&, const EigenKey&) = default;
    friend std::strong_ordering operator<=>(const EigenKey& a, const EigenKey& b) {
        if (auto c = a.factor <=> b.factor; c != 0) return c;
        return a.index <=> b.index;
    }
};

std::string to_string(const EigenKey& k);

struct EigenClass {
    EigenKey key;
    CertifiedRoot root;
    UnitCircleStatus status = UnitCircleStatus::undecided;
    EigenKey conjugate;                 ///< class of conj(lambda)
    std::optional<EigenKey> reflection; ///< class of 1/conj(lambda) when it is an eigenvalue
    std::optional<Rational> turns;      ///< arg(lambda) / 2pi in [0, 1) for roots of unity
};

struct JordanPartition {
    int multiplicity = 0;      ///< multiplicity of the factor in charpoly(h)
    std::vector<int> dimker;   ///< dimker[j] = dim ker f(h)^j / deg f, up to and including the first repeat
    std::vector<int> s;        ///< s[k] = number of blocks of size k per root; s[0] unused

    int blocks(int k) const { return k >= 1 && k < static_cast<int>(s.size()) ? s[static_cast<std::size_t>(k)] : 0; }
    int max_size() const;
    int block_count() const;
    /// Block sizes in ascending order (the multiset Theta).
    std::vector<int> theta() const;
};

struct JordanClass {
    EigenClass cls;
    JordanPartition part;
};

/// Exact Jordan data of h per irreducible factor, paired with certified root placement.
/// Throws PrecisionError if any placement is undecided at `prec`.
std::vector<JordanClass> jordan_partition(const RatMatrix& h, Precision prec);
inline std::vector<JordanClass> jordan_partition(const VariationStructure& v, Precision prec) {
    return jordan_partition(v.h, prec);
}

/// Partition of a single factor from exact ranks (exposed for tests).
JordanPartition partition_for_factor(const RatMatrix& h, const RatPoly& f, int multiplicity);

struct PairingReport {
    std::vector<std::string> violations;
    bool ok() const { return violations.empty(); }
};

/// Partitions at lambda and conj(lambda) coincide; off-circle classes match their 1/conj partner.
PairingReport eigen_pairing_check(const std::vector<JordanClass>& classes);

const JordanClass* find_class(const std::vector<JordanClass>& classes, const EigenKey& key);

}  // namespace hnum
