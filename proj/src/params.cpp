#include "spinel/params.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace spinel {

WotsParams WotsParams::for_w(std::uint32_t w) {
    if (w != 16 && w != 256) throw std::invalid_argument("w must be 16 or 256");
    WotsParams p;
    p.w = w;
    p.log_w = (w == 16) ? 4 : 8;
    p.len1 = (512 + p.log_w - 1) / p.log_w;
    p.len2 = static_cast<std::uint32_t>(
                 std::floor(std::log2(static_cast<double>(p.len1) * (w - 1)) / p.log_w)) +
             1;
    p.len = p.len1 + p.len2;
    return p;
}

void SpinelParams::validate() const {
    if (h == 0 || h > 96) throw std::invalid_argument("h out of range [1, 96]");
    if (d == 0 || d > h) throw std::invalid_argument("d out of range [1, h]");
    if (h % d != 0) throw std::invalid_argument("d must divide h");
    if (h / d > 25) throw std::invalid_argument("subtree height h/d exceeds 25");
    if (w != 16 && w != 256) throw std::invalid_argument("w must be 16 or 256");
    if (b == 0 || b > 25) throw std::invalid_argument("b out of range [1, 25]");
    if (k == 0) throw std::invalid_argument("k must be positive");
    if (static_cast<std::uint64_t>(k) * b + h > 512)
        throw std::invalid_argument("k*b + h exceeds the 512-bit digest");
}

SpinelParams SpinelParams::make(std::uint32_t h, std::uint32_t d, std::uint32_t b, std::uint32_t k,
                                std::uint32_t w) {
    SpinelParams p{h, d, b, k, w};
    p.validate();
    return p;
}

const std::vector<NamedParams>& builtin_param_sets() {
    static const std::vector<NamedParams> sets = {
        {"F1", SpinelParams::make(64, 8, 14, 22, 256)},
        {"F2", SpinelParams::make(72, 9, 16, 16, 256)},
        {"F3", SpinelParams::make(72, 9, 17, 15, 256)},
        {"F4", SpinelParams::make(63, 7, 10, 38, 256)},
        {"F5", SpinelParams::make(63, 7, 14, 23, 256)},
        {"F6", SpinelParams::make(72, 8, 7, 45, 256)},
        {"F7", SpinelParams::make(72, 8, 8, 37, 256)},
        {"F8", SpinelParams::make(72, 8, 16, 16, 256)},
        {"F9", SpinelParams::make(72, 8, 17, 15, 256)},
        {"F10", SpinelParams::make(72, 9, 21, 12, 256)},
        {"P1", SpinelParams::make(72, 4, 17, 15, 256)},
        {"P2", SpinelParams::make(72, 4, 16, 16, 256)},
        {"P3", SpinelParams::make(72, 4, 21, 12, 256)},
        {"P4", SpinelParams::make(80, 4, 9, 28, 256)},
        {"P5", SpinelParams::make(76, 4, 10, 26, 256)},
        {"P6", SpinelParams::make(80, 4, 7, 38, 256)},
        {"P7", SpinelParams::make(64, 4, 14, 22, 256)},
        {"P8", SpinelParams::make(75, 5, 19, 13, 256)},
        {"P9", SpinelParams::make(80, 5, 9, 28, 256)},
        {"P10", SpinelParams::make(75, 5, 14, 18, 256)},
        // CI-scale set: full-size signing runs minutes per operation.
        {"desk", SpinelParams::make(8, 2, 4, 8, 16)},
    };
    return sets;
}

std::optional<SpinelParams> SpinelParams::by_name(std::string_view name) {
    for (const auto& [n, p] : builtin_param_sets())
        if (n == name) return p;
    return std::nullopt;
}

std::vector<SpinelParams> parse_registry(std::istream& in) {
    std::vector<SpinelParams> rows;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto pos = line.find('#');
        if (pos != std::string::npos) line.erase(pos);
        std::istringstream ls(line);
        std::uint32_t h, d, b, k, w;
        if (!(ls >> h)) continue;   // blank line
        if (!(ls >> d >> b >> k >> w)) {
            throw std::invalid_argument("registry line " + std::to_string(lineno) +
                                        ": expected 'h d b k w'");
        }
        std::string extra;
        if (ls >> extra) {
            throw std::invalid_argument("registry line " + std::to_string(lineno) +
                                        ": trailing tokens");
        }
        rows.push_back(SpinelParams::make(h, d, b, k, w));
    }
    return rows;
}

const std::vector<SpinelParams>& builtin_registry() {
    static const std::vector<SpinelParams> rows = [] {
        // h, d, b, k, w per admissible 256-bit-security row.
        static constexpr std::uint32_t raw[][5] = {
            {60, 4, 13, 31, 256}, {60, 5, 13, 31, 256}, {60, 6, 13, 31, 256},
            {60, 4, 18, 19, 16},  {60, 4, 18, 19, 256}, {60, 5, 18, 19, 256},
            {60, 6, 18, 19, 256}, {63, 7, 10, 38, 256}, {63, 7, 14, 23, 256},
            {64, 4, 14, 22, 16},  {64, 4, 14, 22, 256}, {64, 8, 14, 22, 256},
            {65, 5, 8, 49, 256},  {65, 5, 9, 40, 256},  {66, 6, 9, 38, 256},
            {66, 6, 15, 19, 256}, {68, 4, 8, 42, 16},   {68, 4, 8, 42, 256},
            {70, 5, 9, 33, 256},  {70, 7, 9, 33, 256},  {72, 4, 7, 45, 16},
            {72, 4, 7, 45, 256},  {72, 6, 7, 45, 256},  {72, 8, 7, 45, 256},
            {72, 4, 8, 37, 16},   {72, 4, 8, 37, 256},  {72, 6, 8, 37, 256},
            {72, 8, 8, 37, 256},  {72, 4, 16, 16, 16},  {72, 4, 16, 16, 256},
            {72, 6, 16, 16, 256}, {72, 8, 16, 16, 256}, {72, 9, 16, 16, 256},
            {72, 4, 17, 15, 16},  {72, 4, 17, 15, 256}, {72, 6, 17, 15, 256},
            {72, 8, 17, 15, 256}, {72, 9, 17, 15, 256}, {72, 4, 21, 12, 16},
            {72, 4, 21, 12, 256}, {72, 6, 21, 12, 256}, {72, 8, 21, 12, 256},
            {72, 9, 21, 12, 256}, {75, 5, 14, 18, 256}, {75, 5, 19, 13, 16},
            {75, 5, 19, 13, 256}, {76, 4, 6, 51, 16},   {76, 4, 6, 51, 256},
            {76, 4, 10, 26, 16},  {76, 4, 10, 26, 256}, {80, 4, 7, 38, 16},
            {80, 4, 7, 38, 256},  {80, 5, 7, 38, 256},  {80, 4, 9, 28, 16},
            {80, 4, 9, 28, 256},  {80, 5, 9, 28, 256},
        };
        std::vector<SpinelParams> v;
        for (const auto& r : raw) v.push_back(SpinelParams::make(r[0], r[1], r[2], r[3], r[4]));
        return v;
    }();
    return rows;
}

}  // namespace spinel
