#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hnum/classify.hpp"

namespace hnum {

/// A real spectral coordinate: exact when it comes from a root of unity, else a
/// high-precision approximation.
struct SpecReal {
    std::optional<Rational> exact;
    BigFloat approx;

    static SpecReal from_rational(const Rational& q, Precision prec);
    bool is_integer() const { return exact && exact->get_den() == 1; }
    /// Exact "p/q" text, or a 64 significant digit decimal.
    std::string to_string() const;
};

/// Sign of (a - x), or nullopt when |a - x| is below the comparison tolerance.
std::optional<int> compare(const SpecReal& a, const Rational& x);
/// a == b, exactly when both are exact, within tolerance otherwise.
bool same_value(const SpecReal& a, const SpecReal& b);

/// 2^-64: below this distance an inexact coordinate counts as lying on a boundary.
BigFloat boundary_tolerance();

struct SpElement {
    SpecReal alpha;  ///< in (0, 2]
    int mult = 0;
    EigenKey source;
};

struct ISpElement {
    SpecReal x;  ///< in (0, 2]
    BigFloat y;  ///< nonzero
    int mult = 0;
    EigenKey source;
};

struct SpectrumData {
    std::vector<SpElement> sp;    ///< ascending by alpha
    std::vector<ISpElement> isp;  ///< ascending by x, then y

    int sp_size() const;
    int isp_size() const;
    int cardinality() const { return sp_size() + isp_size(); }
};

/// Mod 2 spectrum and extended spectrum of a table of H-numbers.
SpectrumData spectrum(const HNumbers& hn);

struct HalfplaneCount {
    int inside = 0;
    int outside = 0;
    bool boundary = false;
    int isp_inside = 0;
    int isp_outside = 0;
};

/// Counts of ESp inside and outside the strip H_x = (x, x+1) x iR for x in (0, 1).
HalfplaneCount halfplane_count(const SpectrumData& sd, const Rational& x);

/// Violations of the alpha <-> 2 - alpha symmetry on Sp and of z <-> 2 - z on the points of
/// ISp with non-integer real part.
std::vector<std::string> symmetry_check(const SpectrumData& sd);

}  // namespace hnum
