#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "hnum/pipeline.hpp"

namespace hnum {

/// Serializable eigenvalue descriptor.
struct EigenDescriptor {
    std::vector<std::string> factor;  ///< integer coefficients, lowest degree first
    int index = 0;
    std::string re, im;               ///< 64 significant digits
    std::string status;
    std::optional<std::string> turns;  ///< exact arg / 2pi for roots of unity
    std::vector<int> jordan;           ///< s_1, s_2, ... blocks per size
    friend bool operator==(const EigenDescriptor&, const EigenDescriptor&) = default;
};

struct HEntry {
    int eigen = 0;  ///< index into InvariantReport::eigenvalues
    std::string kind;  ///< "p" or "q"
    int k = 0;
    int u = 0;  ///< +1 / -1 for p, 0 for q
    int count = 0;
    friend bool operator==(const HEntry&, const HEntry&) = default;
};

struct SpEntry {
    std::string x;
    std::optional<std::string> y;  ///< absent for real spectrum elements
    bool exact = false;
    int mult = 0;
    friend bool operator==(const SpEntry&, const SpEntry&) = default;
};

struct SigEntry {
    std::string zeta;  ///< turns a/b, zeta = e^{2 pi i a/b}
    int sigma = 0;
    int nullity = 0;
    int nullity_ndeg = 0;
    friend bool operator==(const SigEntry&, const SigEntry&) = default;
};

struct InvariantReport {
    std::string name;
    std::string status = "ok";  ///< ok, cross-check-failure, precision, error
    std::string error;
    int dim = 0;
    int s0_dim = 0;
    std::vector<EigenDescriptor> eigenvalues;
    std::vector<HEntry> h_numbers;
    std::vector<SpEntry> spectrum;
    std::vector<SpEntry> extended;  ///< ISp part
    std::vector<SigEntry> signatures;
    int m0 = 0;
    std::vector<std::vector<std::string>> alexander;  ///< Delta_0, Delta_1, ... coefficient lists
    int nakanishi = 0;
    std::optional<int> nakanishi_witness;
    std::vector<std::string> obstructions;
    std::vector<std::string> failures;
    unsigned precision_bits = 0;
    std::string tolerance;
    std::string version;
    friend bool operator==(const InvariantReport&, const InvariantReport&) = default;
};

/// Report for an analysed link with signature samples at the given zetas.
InvariantReport make_report(const LinkAnalysis& a, const std::vector<SignatureSample>& sigs,
                            const std::vector<std::string>& failures);
InvariantReport error_report(const std::string& name, const std::string& status, const std::string& error);

nlohmann::json to_json(const InvariantReport& r);
InvariantReport report_from_json(const nlohmann::json& j);

/// Fixed-layout text table for humans.
std::string format_report(const InvariantReport& r);

std::string library_version();

}  // namespace hnum
