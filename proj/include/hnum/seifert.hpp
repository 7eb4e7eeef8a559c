#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hnum/rat_matrix.hpp"

namespace hnum {

struct SeifertMatrix {
    RatMatrix S;
    std::string name;
};

/// One reduction step on the current matrix M (size m):
///  - zero_block: A M A^T has its first `removed` rows and columns zero; they join S0.
///  - destabilize: A M A^T has last column zero, last row e_{m-1} and zero entries in
///    column m-1 above the last row; the last two rows and columns are dropped.
struct ReductionStep {
    enum class Kind { zero_block, destabilize } kind;
    RatMatrix congruence;
    std::size_t removed = 0;
};

struct SeifertSplit {
    std::size_t s0_dim = 0;
    RatMatrix s_ndeg;
    std::vector<ReductionStep> witness;
};

/// Splits S into a zero block and a nondegenerate block using real congruences and
/// destabilizations only. Deterministic: kernel vectors come from the RREF basis.
SeifertSplit split_degenerate(const SeifertMatrix& s);

/// Replays the witness on S; returns the reason for the first failure or nullopt on success.
std::optional<std::string> replay_split(const RatMatrix& S, const SeifertSplit& split);

/// Hermitian variation structure of a nondegenerate Seifert matrix (epsilon = -1).
struct VariationStructure {
    std::size_t dim = 0;
    RatMatrix S;  ///< nondegenerate Seifert matrix the structure was built from
    RatMatrix b;  ///< S - S^T
    RatMatrix h;  ///< (S^T)^{-1} S
    RatMatrix V;  ///< (S^T)^{-1}
    int epsilon = -1;
};

VariationStructure build_hvs(const SeifertSplit& split);
VariationStructure build_hvs_from_nondegenerate(const RatMatrix& s_ndeg);
/// Structure from a variation matrix V (S = (V^{-1})^T). Throws std::domain_error if V is singular.
VariationStructure build_hvs_from_variation(const RatMatrix& V);

/// Lists every violated structure identity (empty when all hold exactly).
std::vector<std::string> check_hvs(const VariationStructure& v);

}  // namespace hnum
