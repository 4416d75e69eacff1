#pragma once

// Cell-by-cell comparison of computed indices against the published Price
// medallist tables. Every printed cell receives a verdict:
//   match       computed value agrees within tolerance
//   propagated  disagrees, but the same formula applied to the printed
//               upstream values reproduces the printed cell
//   erratum     disagrees and is listed in `root_errata` with an explanation
//   unexplained anything else (a defect in either the tables or this code)
// Cells printed as "-" and total-citation cells of truncated columns carry
// no comparable value. Rendering marks cells that only differ because zero-cited
// papers were kept as "counting mode".

#include <cmath>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "citeidx/dataset.hpp"
#include "citeidx/fixtures/published_tables.hpp"
#include "citeidx/format.hpp"
#include "citeidx/indices.hpp"
#include "citeidx/ranking.hpp"

namespace citeidx {

enum class Verdict { match, propagated, erratum, unexplained, unlisted, skipped, counting_mode };

[[nodiscard]] inline std::string_view to_string(Verdict v) {
    switch (v) {
        case Verdict::match: return "match";
        case Verdict::propagated: return "propagated";
        case Verdict::erratum: return "erratum";
        case Verdict::unexplained: return "unexplained";
        case Verdict::unlisted: return "unlisted";
        case Verdict::skipped: return "skipped";
        case Verdict::counting_mode: return "counting mode";
    }
    return "?";
}

/// Printed number, or nullopt for a dash. Stray trailing dots are dropped.
[[nodiscard]] inline std::optional<double> parse_printed(std::string_view text) {
    while (!text.empty() && text.back() == '.') text.remove_suffix(1);
    if (text.empty() || text == "-") return std::nullopt;
    return std::stod(std::string(text));
}

/// A printed cell whose disagreement originates in the table itself.
struct RootErratum {
    int table;
    std::string_view row;
    std::string_view name;
    std::string_view note;
};

// clang-format off
inline constexpr RootErratum root_errata[] = {
    {1, "h", "Schubert", "printed 42; the 42nd paper has 41 citations, so h = 41, the value listed with the author summary"},
    {1, "r", "White", "printed 10; g_12 = 19 = h, so the order is 11, as is floor(2N(h)/(h(h+1))) - 1 = floor(4664/380) - 1"},
    {1, "g_5", "Narin", "printed 53; 2N(53) = 14282 < 5*53*54 = 14310, while k = 52 qualifies"},
    {1, "g_8", "Narin", "printed 42; 2N(42) = 13906 < 8*42*43 = 14448, while k = 41 qualifies"},
    {1, "g_5", "Garfield", "printed 65; 2N(66) = 22176 >= 5*66*67 = 22110, so k = 66 qualifies"},
    {1, "g_5", "Egghe", "printed 41; 2N(41) = 8570 < 5*41*42 = 8610, while k = 40 qualifies"},
    {1, "g_5", "Ingwersen", "printed 34; 2N(35) = 6304 >= 5*35*36 = 6300, so k = 35 qualifies"},
    {1, "g_7", "Martin", "printed 45; 2N(45) = 14482 < 7*45*46 = 14490, while k = 44 qualifies"},
    {1, "N(g)", "Garfield", "printed 11359; the top 106 papers sum to 11406"},
    {1, "g_bar", "Leydesdorff", "printed 88.750 = (145 + 114 + 96)/4 leaves out g_5 = 83; (g + g_3 + g_4 + g_5)/4 = 109.5"},
    {1, "N(h)/h", "Van Raan", "printed 142.235; 6833/48 = 142.354"},
    {1, "N(h)/h", "Schubert", "printed 151.140; 6359/42 = 151.405 and 6359/41 = 155.098"},
    {1, "N(g)/g", "Glänzel", "printed 99.691; 9810/99 = 99.091"},
    {1, "h/g", "Ingwersen", "printed 0.545; 27/59 = 0.458"},
    {3, "g_bar/h", "Small", "printed 1.552; 46.545/34 = 1.369"},
    {3, "R/g_bar", "White", "printed 0.580 repeats the g/R cell; R/g_bar = 1.975, or 1.932 with the printed g_bar"},
    {3, "H/g", "Braun", "printed 1.212; 74/66 = 1.121"},
    {3, "A/h", "Narin", "printed 9.450 is 2A/h; A/h = 4.725"},
    {3, "A/h", "Garfield", "printed 15.352 is 2A/h; A/h = 7.676"},
    {3, "A/h", "Braun", "printed 5.206 is close to 2A/h = 5.210; A/h = 2.605"},
    {3, "A/h", "Small", "printed 12.926 is 2A/h; A/h = 6.463"},
    {3, "A/h", "Egghe", "printed 8.878 is 2A/h; A/h = 4.439"},
    {3, "A/h", "Ingwersen", "printed 8.100 is 2A/h; A/h = 4.049"},
    {3, "A/h", "White", "printed 12.920 is 2A/h; A/h = 6.460"},
    {5, "beta", "Braun", "printed 1.163; D/g = 75.914/66 = 1.150"},
    {5, "delta", "Ingwersen", "printed 0; floor(2A/h) = floor(8.099) = 8 and r + 1 = 7, so delta = 1"},
    {7, "B/h", "Moed", "printed 1.110; 56.544/49 = 1.154"},
    {7, "B/h", "Narin", "printed 1.223; 44.559/38 = 1.173, or 1.175 with the printed B"},
    {7, "C/B", "White", "printed 1.3401; 1.405, or 1.390 with the printed C and B"},
    {4, "R", "Moed", "printed ranks of Moed and Schubert are swapped; R = 79.693 for Moed and 79.743 for Schubert"},
    {4, "R", "Schubert", "printed ranks of Moed and Schubert are swapped; R = 79.693 for Moed and 79.743 for Schubert"},
    {4, "A", "Rousseau", "A = 121.000 places Rousseau 12th, above Ingwersen (109.333) and below White (122.737)"},
    {4, "A", "Ingwersen", "A = 109.333 is the second lowest, rank 13"},
    {4, "A", "White", "A = 122.737 places White 11th"},
    {8, "h", "Martin", "Martin and Narin both have h = 38 and share ranks 7/8, as printed for the same row elsewhere"},
    {8, "h", "Narin", "Martin and Narin both have h = 38 and share ranks 7/8, as printed for the same row elsewhere"},
    {8, "h", "Garfield", "Garfield and Braun both have h = 37 and share ranks 9/10, as printed for the same row elsewhere"},
    {8, "h", "Braun", "Garfield and Braun both have h = 37 and share ranks 9/10, as printed for the same row elsewhere"},
    {9, "r", "Glänzel", "printed 2; 2R^2/(h(h+1)) = 8.378 gives r = 7, and the printed H = 47.624 = 18*sqrt(7) uses 7"},
    {9, "H", "Small", "printed 24.456; 18*sqrt(2) = 25.456"},
};
// clang-format on

[[nodiscard]] inline const RootErratum* find_root_erratum(int table, std::string_view row, std::string_view name) {
    for (const auto& e : root_errata) {
        if (e.table == table && e.row == row && e.name == name) return &e;
    }
    return nullptr;
}

/// Authors whose published indices exclude zero-cited papers.
inline constexpr std::string_view positive_only_authors[] = {"White"};

/// The Scopus 2023 corpus with each author in the counting mode the
/// published tables used for them.
[[nodiscard]] inline Corpus reproduction_corpus() {
    Corpus c = load_price_scopus_2023();
    const Corpus positive = load_price_scopus_2023(CountingMode::positive_only);
    for (auto& e : c.entries) {
        for (auto name : positive_only_authors) {
            if (e.name == name) e.profile = positive.at(name).profile;
        }
    }
    c.provenance = std::string(fixture_scopus_2023) + " (reproduction modes)";
    return c;
}

/// Index values from which every table cell is derived.
struct TableBasis {
    std::optional<double> h, g, r, g_bar, H, A, R, D, B, C, E, F, K;
    std::optional<double> N, N_h, N_g, c_h_minus_h, delta;
    std::map<Count, double> g_d;
};

[[nodiscard]] inline TableBasis computed_basis(const IndexReport& x) {
    TableBasis b;
    b.h = static_cast<double>(x.h);
    b.g = static_cast<double>(x.g);
    b.r = static_cast<double>(x.r);
    b.g_bar = to_double(x.g_bar);
    b.H = x.H;
    b.A = to_double(x.A);
    b.R = x.R;
    b.D = x.D;
    b.B = x.B;
    b.C = x.C;
    b.E = x.E;
    b.F = x.F;
    b.K = x.K;
    b.N = static_cast<double>(x.total);
    b.N_h = static_cast<double>(x.core_h);
    b.N_g = static_cast<double>(x.core_g);
    b.c_h_minus_h = static_cast<double>(x.c_h - x.h);
    b.delta = static_cast<double>(x.delta);
    for (Count d = 2; d <= x.g_d.last_d(); ++d) b.g_d[d] = static_cast<double>(x.g_d.at(d));
    return b;
}

namespace detail {

[[nodiscard]] inline std::optional<double> printed_value(int table, std::string_view row, std::string_view name) {
    for (const auto& c : fixtures::printed_cells) {
        if (c.table == table && c.row == row && c.name == name) return parse_printed(c.text);
    }
    return std::nullopt;
}

[[nodiscard]] inline std::optional<Count> g_d_row(std::string_view row) {
    if (!row.starts_with("g_") || row == "g_bar") return std::nullopt;
    return std::stoll(std::string(row.substr(2)));
}

}  // namespace detail

/// Basis made of the printed values for one author.
[[nodiscard]] inline TableBasis printed_basis(std::string_view name) {
    using detail::printed_value;
    TableBasis b;
    b.h = printed_value(1, "h", name);
    b.g = printed_value(1, "g", name);
    b.r = printed_value(1, "r", name);
    b.g_bar = printed_value(1, "g_bar", name);
    b.H = printed_value(1, "H", name);
    b.A = printed_value(1, "N(h)/h", name);
    b.R = printed_value(2, "R", name);
    b.D = printed_value(2, "D", name);
    b.B = printed_value(6, "B", name);
    b.C = printed_value(6, "C", name);
    b.E = printed_value(6, "E", name);
    b.F = printed_value(6, "F", name);
    b.K = printed_value(6, "K", name);
    b.N = printed_value(1, "N", name);
    b.N_h = printed_value(1, "N(h)", name);
    b.N_g = printed_value(1, "N(g)", name);
    b.c_h_minus_h = printed_value(1, "c_h-h", name);
    b.delta = printed_value(5, "delta", name);
    for (const auto& c : fixtures::printed_cells) {
        if (c.table != 1 || c.name != name) continue;
        if (auto d = detail::g_d_row(c.row)) {
            if (auto v = parse_printed(c.text)) b.g_d[*d] = *v;
        }
    }
    return b;
}

/// True for cells read straight from the data rather than derived from
/// other cells. Such cells cannot inherit a discrepancy.
[[nodiscard]] inline bool is_primary_cell(int table, std::string_view row) {
    if (table != 1) return false;
    return row == "h" || row == "g" || row == "r" || row == "N" || row == "N(h)" || row == "N(g)" ||
           row == "c_h-h" || detail::g_d_row(row).has_value();
}

[[nodiscard]] inline bool is_integer_cell(int table, std::string_view row) {
    if (table == 1) return is_primary_cell(table, row) || row == "l";
    if (table == 2) return row == "h" || row == "g";
    if (table == 5) return row == "r+1" || row == "delta" || row == "l";
    if (table == 6) return row == "h";
    if (table == 9) return row == "h" || row == "g" || row == "r";
    return false;
}

/// Value of cell (table, row) derived from `b`. Derived cells are computed
/// from their upstream quantities, so a printed basis yields the value the
/// tables imply.
[[nodiscard]] inline std::optional<double> evaluate_cell(int table, std::string_view row, const TableBasis& b) {
    using opt = std::optional<double>;
    auto all = [](auto... xs) { return (xs.has_value() && ...); };
    auto overshoot = [&]() -> opt {
        if (!all(b.r, b.h, b.g)) return std::nullopt;
        if (*b.r < 2) return *b.g - *b.h;
        auto it = b.g_d.find(static_cast<Count>(*b.r) + 1);
        if (it == b.g_d.end()) return std::nullopt;
        return it->second - *b.h;
    };
    auto g_bar = [&]() -> opt {
        if (!all(b.r, b.g)) return std::nullopt;
        const auto r = static_cast<Count>(*b.r);
        double sum = *b.g;
        for (Count d = 3; d <= r + 1; ++d) {
            auto it = b.g_d.find(d);
            if (it == b.g_d.end()) return std::nullopt;
            sum += it->second;
        }
        return sum / static_cast<double>(r);
    };
    auto div = [](opt a, opt c) -> opt { return a && c ? opt(*a / *c) : std::nullopt; };
    auto root_of = [](opt a, opt c) -> opt { return a && c ? opt(std::sqrt(*a * *c)) : std::nullopt; };
    auto big_h = [&]() -> opt { return all(b.h, b.r) ? opt(*b.h * std::sqrt(*b.r)) : std::nullopt; };

    switch (table) {
        case 1:
            if (auto d = detail::g_d_row(row)) {
                auto it = b.g_d.find(*d);
                return it == b.g_d.end() ? std::nullopt : opt(it->second);
            }
            if (row == "h") return b.h;
            if (row == "g") return b.g;
            if (row == "r") return b.r;
            if (row == "N") return b.N;
            if (row == "N(h)") return b.N_h;
            if (row == "N(g)") return b.N_g;
            if (row == "c_h-h") return b.c_h_minus_h;
            if (row == "(c_h-h)/h") return div(b.c_h_minus_h, b.h);
            if (row == "l") return overshoot();
            if (row == "l/h") return div(overshoot(), b.h);
            if (row == "h/g") return div(b.h, b.g);
            if (row == "h*sqrt(r)/g") return div(big_h(), b.g);
            if (row == "h*sqrt(r-1)/g") {
                return all(b.h, b.r, b.g) ? opt(*b.h * std::sqrt(*b.r - 1) / *b.g) : std::nullopt;
            }
            if (row == "H") return big_h();
            if (row == "g_bar") return g_bar();
            if (row == "N(h)/h") return div(b.N_h, b.h);
            if (row == "N(g)/g") return div(b.N_g, b.g);
            break;
        case 2:
            if (row == "h") return b.h;
            if (row == "g") return b.g;
            if (row == "g_bar") return b.g_bar;
            if (row == "H") return b.H;
            if (row == "A") return b.A;
            if (row == "R") return b.N_h ? opt(std::sqrt(*b.N_h)) : std::nullopt;
            if (row == "D") return all(b.h, b.A) ? opt(std::sqrt(2 * *b.h * *b.A - *b.h * *b.h)) : std::nullopt;
            break;
        case 3:
            if (row == "g_bar/h") return div(b.g_bar, b.h);
            if (row == "R/g_bar") return div(b.R, b.g_bar);
            if (row == "g/R") return div(b.g, b.R);
            if (row == "H/g") return div(b.H, b.g);
            if (row == "D/H") return div(b.D, b.H);
            if (row == "A/D") return div(b.A, b.D);
            if (row == "A/h") return div(b.A, b.h);
            if (row == "2A/((r+1)h)") {
                return all(b.A, b.r, b.h) ? opt(2 * *b.A / ((*b.r + 1) * *b.h)) : std::nullopt;
            }
            break;
        case 5:
            if (row == "beta") return div(b.D, b.g);
            if (row == "r+1") return b.r ? opt(*b.r + 1) : std::nullopt;
            if (row == "delta") {
                return all(b.A, b.h, b.r) ? opt(std::floor(2 * *b.A / *b.h) - (*b.r + 1)) : std::nullopt;
            }
            if (row == "l") return overshoot();
            break;
        case 6:
            if (row == "h") return b.h;
            if (row == "B") return root_of(b.h, b.g_bar);
            if (row == "C") return root_of(b.h, b.R);
            if (row == "E") return root_of(b.h, b.g);
            if (row == "F") return root_of(b.h, b.H);
            if (row == "K") return root_of(b.h, b.D);
            break;
        case 7:
            if (row == "B/h") return div(b.B, b.h);
            if (row == "C/B") return div(b.C, b.B);
            if (row == "E/C") return div(b.E, b.C);
            if (row == "F/E") return div(b.F, b.E);
            if (row == "K/F") return div(b.K, b.F);
            break;
        default:
            break;
    }
    return std::nullopt;
}

/// Tolerance pinned for real-valued cells; integer cells compare exactly.
inline constexpr double real_cell_tolerance = 0.01;

struct CellComparison {
    int table = 0;
    std::string row;
    std::string name;
    std::string printed_text;
    std::optional<double> printed;
    std::optional<double> computed;
    std::optional<double> from_printed_upstream;
    std::string printed_label;  // ranking cells only
    std::string computed_label;
    std::string upstream_label;
    Verdict verdict = Verdict::unexplained;
    std::string note;
};

namespace detail {

[[nodiscard]] inline bool agrees(std::optional<double> a, std::optional<double> b, bool integer) {
    if (!a || !b) return false;
    return std::fabs(*a - *b) <= (integer ? 1e-9 : real_cell_tolerance + 1e-9);
}

inline void classify(CellComparison& c, bool primary) {
    if (!primary && !c.printed_label.empty()) {
        // ranking cell
        if (c.printed_label == c.computed_label) {
            c.verdict = Verdict::match;
        } else if (c.printed_label == c.upstream_label) {
            c.verdict = Verdict::propagated;
        }
    }
    if (c.verdict == Verdict::unexplained && c.printed_label.empty()) {
        const bool integer = is_integer_cell(c.table, c.row);
        if (agrees(c.printed, c.computed, integer)) {
            c.verdict = Verdict::match;
        } else if (!primary && agrees(c.printed, c.from_printed_upstream, integer)) {
            c.verdict = Verdict::propagated;
        }
    }
    if (c.verdict == Verdict::unexplained) {
        if (const RootErratum* e = find_root_erratum(c.table, c.row, c.name)) {
            c.verdict = Verdict::erratum;
            c.note = std::string(e->note);
        }
    } else if (c.verdict == Verdict::propagated) {
        c.note = "follows from the printed upstream values";
    }
}

}  // namespace detail

/// Tables 1, 2, 3, 5, 6 and 7 against `corpus` (normally `reproduction_corpus()`).
[[nodiscard]] inline std::vector<CellComparison> compare_value_tables(const Corpus& corpus) {
    std::map<std::string, TableBasis, std::less<>> computed;
    std::map<std::string, TableBasis, std::less<>> printed;
    for (const auto& e : corpus.entries) {
        computed[e.name] = computed_basis(compute_indices(e.profile));
        printed[e.name] = printed_basis(e.name);
    }
    std::vector<CellComparison> out;
    for (const auto& cell : fixtures::printed_cells) {
        if (cell.table == 4 || cell.table == 8 || cell.table == 9) continue;
        const CorpusEntry* entry = corpus.find(cell.name);
        if (entry == nullptr) continue;
        CellComparison c;
        c.table = cell.table;
        c.row = std::string(cell.row);
        c.name = std::string(cell.name);
        c.printed_text = std::string(cell.text);
        c.printed = parse_printed(cell.text);
        if (!c.printed) {
            c.verdict = Verdict::unlisted;
            out.push_back(std::move(c));
            continue;
        }
        c.computed = evaluate_cell(cell.table, cell.row, computed.find(cell.name)->second);
        if (cell.table == 1 && cell.row == "N" && entry->truncated) {
            c.verdict = Verdict::skipped;
            c.note = "column lists only part of the publication record";
            out.push_back(std::move(c));
            continue;
        }
        const bool primary = is_primary_cell(cell.table, cell.row);
        if (!primary) c.from_printed_upstream = evaluate_cell(cell.table, cell.row, printed.find(cell.name)->second);
        detail::classify(c, primary);
        out.push_back(std::move(c));
    }
    return out;
}

/// Index keys of the ranking tables: table 4 ranks on table 2 values and
/// table 8 on table 6 values.
[[nodiscard]] inline int ranking_source_table(int ranking_table) { return ranking_table == 4 ? 2 : 6; }

/// Tables 4 and 8. Computed labels come from exact keys; upstream labels
/// rank the printed values of the source table.
[[nodiscard]] inline std::vector<CellComparison> compare_ranking_tables(const Corpus& corpus) {
    std::vector<CellComparison> out;
    for (int table : {4, 8}) {
        std::vector<std::string> rows;
        for (const auto& cell : fixtures::printed_cells) {
            if (cell.table == table && std::find(rows.begin(), rows.end(), cell.row) == rows.end()) {
                rows.emplace_back(cell.row);
            }
        }
        for (const auto& row : rows) {
            const Ranking computed = rank(corpus, row);
            std::vector<std::tuple<std::string, double, double>> printed_items;
            for (const auto& e : corpus.entries) {
                if (auto v = detail::printed_value(ranking_source_table(table), row, e.name)) {
                    printed_items.emplace_back(e.name, *v, *v);
                }
            }
            const auto from_printed = assign_ranks(std::move(printed_items));
            auto printed_label_of = [&](const std::string& name) {
                for (const auto& r : from_printed) {
                    if (r.name == name) return r.label();
                }
                return std::string{};
            };
            for (const auto& cell : fixtures::printed_cells) {
                if (cell.table != table || cell.row != row || corpus.find(cell.name) == nullptr) continue;
                CellComparison c;
                c.table = table;
                c.row = row;
                c.name = std::string(cell.name);
                c.printed_text = std::string(cell.text);
                c.printed_label = std::string(cell.text);
                c.computed_label = computed.at(cell.name).label();
                c.upstream_label = printed_label_of(c.name);
                detail::classify(c, false);
                out.push_back(std::move(c));
            }
        }
    }
    return out;
}

/// Table 9: order and capital H reconstructed from the (h, R) pairs.
[[nodiscard]] inline std::vector<CellComparison> compare_legacy_table(const std::vector<LegacyRecord>& records) {
    std::vector<CellComparison> out;
    for (const auto& rec : records) {
        const Count r = r_from_h_and_R(rec.h, rec.R);
        const double h = static_cast<double>(rec.h);
        const double H = h * std::sqrt(static_cast<double>(r));
        const std::map<std::string_view, double> computed = {
            {"h", h}, {"g", static_cast<double>(rec.g)}, {"R", rec.R}, {"r", static_cast<double>(r)},
            {"H", H}, {"h/g", h / static_cast<double>(rec.g)}, {"H/g", H / static_cast<double>(rec.g)},
            {"H/R", H / rec.R},
        };
        const auto printed_r = detail::printed_value(9, "r", rec.name);
        const auto printed_H = detail::printed_value(9, "H", rec.name);
        for (const auto& cell : fixtures::printed_cells) {
            if (cell.table != 9 || cell.name != rec.name) continue;
            CellComparison c;
            c.table = 9;
            c.row = std::string(cell.row);
            c.name = rec.name;
            c.printed_text = std::string(cell.text);
            c.printed = parse_printed(cell.text);
            if (!c.printed) {
                c.verdict = Verdict::unlisted;
                out.push_back(std::move(c));
                continue;
            }
            c.computed = computed.at(cell.row);
            const bool primary = cell.row == "h" || cell.row == "g" || cell.row == "R" || cell.row == "r";
            if (cell.row == "H" && printed_r) c.from_printed_upstream = h * std::sqrt(*printed_r);
            if (cell.row == "H/g" && printed_H) c.from_printed_upstream = *printed_H / static_cast<double>(rec.g);
            if (cell.row == "H/R" && printed_H) c.from_printed_upstream = *printed_H / rec.R;
            if (cell.row == "h/g") c.from_printed_upstream = computed.at("h/g");
            detail::classify(c, primary);
            out.push_back(std::move(c));
        }
    }
    return out;
}

/// All printed cells of tables 1 to 9.
[[nodiscard]] inline std::vector<CellComparison> compare_published_tables() {
    const Corpus corpus = reproduction_corpus();
    auto out = compare_value_tables(corpus);
    auto ranks = compare_ranking_tables(corpus);
    auto legacy = compare_legacy_table(load_price_wos_2006());
    out.insert(out.end(), ranks.begin(), ranks.end());
    out.insert(out.end(), legacy.begin(), legacy.end());
    return out;
}

}  // namespace citeidx
