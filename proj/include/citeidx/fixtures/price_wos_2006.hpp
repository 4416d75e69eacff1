#pragma once

#include <array>
#include <string_view>

namespace citeidx::fixtures {

// h, g and R of the Price medallists from Web of Science, January 2006.
// Only these three numbers survive; no per-paper counts.
struct LegacyRow {
    std::string_view name;
    long h;
    long g;
    double R;
};

inline constexpr std::array<LegacyRow, 14> price_wos_2006 = {{
    {"Leydesdorff", 13, 19, 17.52},
    {"Glänzel", 18, 27, 37.85},
    {"Moed", 18, 27, 27.40},
    {"Van Raan", 19, 27, 24.73},
    {"Rousseau", 13, 15, 14.20},
    {"Schubert", 18, 30, 25.53},
    {"Martin", 16, 27, 25.17},
    {"Narin", 27, 40, 37.51},
    {"Garfield", 27, 59, 55.21},
    {"Braun", 25, 38, 34.17},
    {"Small", 18, 39, 24.37},
    {"Egghe", 13, 19, 24.85},
    {"Ingwersen", 13, 26, 17.77},
    {"White", 12, 25, 23.52},
}};

// Per-author summary: papers and citations on record in Scopus (2023), and
// h / g for both snapshots.
struct AuthorSummary {
    std::string_view name;
    long papers;
    long citations;
    long h_2006;
    long h_2023;
    long g_2006;
    long g_2023;
};

inline constexpr std::array<AuthorSummary, 14> price_author_summary = {{
    {"Garfield", 256, 11515, 27, 37, 59, 106},
    {"Narin", 68, 7209, 27, 38, 40, 68},
    {"Braun", 260, 5680, 25, 37, 38, 66},
    {"Van Raan", 136, 8308, 19, 48, 27, 89},
    {"Glänzel", 293, 11766, 18, 61, 27, 99},
    {"Moed", 147, 7606, 18, 49, 27, 86},
    {"Schubert", 164, 7587, 18, 41, 30, 85},
    {"Small", 62, 7693, 18, 34, 39, 57},
    {"Martin", 96, 7598, 16, 38, 27, 85},
    {"Egghe", 231, 5640, 13, 30, 19, 69},
    {"Ingwersen", 100, 3606, 13, 27, 26, 59},
    {"Leydesdorff", 432, 25005, 13, 79, 19, 145},
    {"Rousseau", 330, 8053, 13, 43, 15, 79},
    {"White", 29, 2399, 12, 19, 25, 28},
}};

}  // namespace citeidx::fixtures
