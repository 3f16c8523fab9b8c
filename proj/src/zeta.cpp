#include "rmt/zeta.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <numbers>
#include <string>

#include "rmt/errors.hpp"

namespace rmt {

ZetaZeros parse_zeros(std::istream& in, double offset) {
    ZetaZeros z;
    z.offset = offset;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto b = line.find_first_not_of(" \t\r\n");
        if (b == std::string::npos) continue;
        const auto e = line.find_last_not_of(" \t\r\n");
        const char* first = line.data() + b;
        const char* last = line.data() + e + 1;
        double v = 0.0;
        const auto [ptr, ec] = std::from_chars(first, last, v);
        if (ec != std::errc() || ptr != last || !std::isfinite(v))
            throw ParseError("not a decimal number: '" + std::string(first, last) + "'", line_no);
        if (!z.gammas.empty() && !(v > z.gammas.back()))
            throw DataError("zeros not strictly ascending at line " + std::to_string(line_no));
        z.gammas.push_back(v);
    }
    if (z.gammas.empty()) throw DataError("zero table is empty");
    return z;
}

ZetaZeros load_zeros(const std::filesystem::path& path, double offset) {
    std::ifstream in(path);
    if (!in) throw DataError("cannot open zero table " + path.string());
    return parse_zeros(in, offset);
}

std::vector<double> zeta_normalized_spacings(const ZetaZeros& z) {
    if (z.gammas.size() < 2) throw ContractViolation("need at least two zeros");
    constexpr double two_pi = 2.0 * std::numbers::pi;
    std::vector<double> out;
    out.reserve(z.gammas.size() - 1);
    for (std::size_t i = 0; i + 1 < z.gammas.size(); ++i) {
        const double height = z.gammas[i] + z.offset;
        if (!(height > two_pi)) throw DomainError("zero height must exceed 2 pi for the unfolding");
        out.push_back((z.gammas[i + 1] - z.gammas[i]) / two_pi * std::log(height / two_pi));
    }
    return out;
}

}  // namespace rmt
