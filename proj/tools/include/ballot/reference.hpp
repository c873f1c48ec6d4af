#pragma once

#include <array>
#include <cstdint>
#include <string_view>

// Published values the reproduce targets compare against.
namespace ballot::reference {

struct Exponent3d {
    std::array<std::int64_t, 3> weights;
    std::string_view theta;
};

/// Printed critical exponents for the 3D fixed-endpoint family, 1 <= c <= b <= a <= 4, gcd 1.
inline constexpr std::array<Exponent3d, 15> kExponents3d{{
    {{1, 1, 1}, "-4"},
    {{2, 1, 1}, "-3.7312"},
    {{2, 2, 1}, "-4.2884"},
    {{3, 1, 1}, "-3.5976"},
    {{3, 2, 1}, "-4.055"},
    {{3, 2, 2}, "-3.8375"},
    {{3, 3, 1}, "-4.4455"},
    {{3, 3, 2}, "-4.1695"},
    {{4, 1, 1}, "-3.515"},
    {{4, 2, 1}, "-3.9091"},
    {{4, 3, 1}, "-4.2454"},
    {{4, 3, 2}, "-4.0237"},
    {{4, 3, 3}, "-3.8834"},
    {{4, 4, 1}, "-4.5453"},
    {{4, 4, 3}, "-4.12019"},
}};

/// 400-term estimate for (2,1,1).
inline constexpr std::string_view kRefined211 = "-3.731220575";

/// Free-endpoint walks in x1 >= ... >= x13 >= 0, n = 1..16.
inline constexpr std::array<std::string_view, 16> kK13{
    "1",    "2",     "4",      "10",     "26",      "76",       "232",      "764",
    "2620", "9496",  "35696",  "140152", "568504",  "2390479",  "10349521", "46206511",
};

/// Exponents the free-endpoint 3D strata are expected to approach.
inline constexpr std::array<std::string_view, 2> kFreeExponents{"-0.5", "-1"};

}  // namespace ballot::reference
