#pragma once

#include <vector>

#include "hnum/records.hpp"

namespace hnum {

/// Seifert matrix -(L_p (x) L_q) of the torus link T(p, q), L_m the (m-1)x(m-1) upper bidiagonal
/// matrix with 1 on the diagonal and -1 above it.
RatMatrix torus_seifert(int p, int q);

/// Built-in fixtures: classical knots, twist links, the 10- and 12-crossing family (with monodromy
/// and variation for stage-isolated runs) and a few torus knots.
std::vector<LinkRecord> builtin_catalog();

/// Catalog entry by name; throws InputError when absent.
LinkRecord catalog_entry(const std::string& name);

}  // namespace hnum
