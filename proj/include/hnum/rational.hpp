#pragma once

#include <optional>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace hnum {

using Rational = mpq_class;
using Integer = mpz_class;

/// Parses "n" or "p/q" (optional sign, decimal digits, q != 0). No floats.
std::optional<Rational> parse_rational(std::string_view text);

/// Canonical text: "n" for integers, "p/q" otherwise.
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

}  // namespace hnum
