#pragma once

#include <filesystem>
#include <istream>
#include <vector>

namespace rmt {

/// Ordinates gamma_n of zeta zeros on the critical line, ascending. Some
/// published tables store gamma_n - offset; the offset is kept separately.
struct ZetaZeros {
    std::vector<double> gammas;
    double offset = 0.0;
};

/// One decimal ordinate per line; surrounding whitespace and blank lines are
/// ignored. Throws ParseError (with line number), DataError for an empty or
/// non-ascending table.
ZetaZeros load_zeros(const std::filesystem::path& path, double offset = 0.0);
ZetaZeros parse_zeros(std::istream& in, double offset = 0.0);

/// (gamma_{n+1} - gamma_n) / (2 pi) * log((gamma_n + offset) / (2 pi)).
/// Throws DomainError if gamma_n + offset <= 2 pi, ContractViolation for
/// fewer than two zeros.
std::vector<double> zeta_normalized_spacings(const ZetaZeros& zeros);

}  // namespace rmt
