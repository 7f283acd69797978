#pragma once

// Version of the library and of the implemented formula set. The formula
// hash changes whenever a closed form or its coefficients change, so reports
// can be matched to the formulas that produced them.

#include <cstdint>
#include <string>
#include <string_view>

namespace kpt {

inline constexpr std::string_view kLibraryVersion = "1.0.0";

inline constexpr std::string_view kFormulaSet =
    "P(n)=2kP(n-1)+kP(n-2)+P(n-3);P(0)=0;P(1)=1;P(2)=2k\n"
    "phi(x)=x^3-2kx^2-kx-1;psi(x)=1-2kx-kx^2-x^3\n"
    "S1=(P(n+3)+(1-2k)P(n+2)+(1-3k)P(n+1)-1)/(3k)\n"
    "W1:a=(3k,5k-3);b=(3k-6k^2,-10k^2+8k-3);c=(3k-9k^2,-9k^2+8k-3);d=k+3;den=9k^2\n"
    "S2:a=(1,4k^2+4k+1,3k^2+6k+1);b=(2k-2,-4k-2,-2);c=-1;den=-+3k(k+2)\n"
    "W2:den=9k^2(k+2)^2\n"
    "F^2=nS2(n-1)+(|r|^2-1)W2(n-1);L1=nS1(n-1)+(|r|-1)W1(n-1)\n"
    "lower=sqrt(S2(n-1)+(|r|^2-1)/n W2(n-1));upper=max(|r|,1)S1(n-1)\n"
    "lambda=(rho-rP(n)-r rho(kP(n-1)+P(n-2))-r rho^2 P(n-1))/psi(rho)\n"
    "det=(-1)^n r^n P(n-1)^n (r1^n-r)(r2^n-r)/prod(x^-n-r)\n";

constexpr std::uint64_t fnv1a64(std::string_view s) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (char c : s) {
        h ^= static_cast<unsigned char>(c);
        h *= 0x100000001b3ULL;
    }
    return h;
}

/// "<library version>-g<first 10 hex digits of the formula-set hash>"
inline std::string formula_version() {
    constexpr char digits[] = "0123456789abcdef";
    std::uint64_t h = fnv1a64(kFormulaSet);
    std::string hex(16, '0');
    for (int i = 15; i >= 0; --i, h >>= 4) hex[static_cast<std::size_t>(i)] = digits[h & 0xF];
    return std::string(kLibraryVersion) + "-g" + hex.substr(0, 10);
}

} // namespace kpt
