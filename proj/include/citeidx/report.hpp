#pragma once

#include <algorithm>
#include <cmath>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include <json.hpp>

#include "citeidx/bounds.hpp"
#include "citeidx/dataset.hpp"
#include "citeidx/format.hpp"
#include "citeidx/indices.hpp"
#include "citeidx/ranking.hpp"
#include "citeidx/reproduction.hpp"

namespace citeidx {

enum class Layout { indices, ratios, bounds, ranking };
enum class Format { md, csv, json };

[[nodiscard]] inline Layout parse_layout(std::string_view s) {
    if (s == "indices") return Layout::indices;
    if (s == "ratios") return Layout::ratios;
    if (s == "bounds") return Layout::bounds;
    if (s == "ranking") return Layout::ranking;
    throw UsageError("unknown layout '" + std::string(s) + "'; valid layouts: indices, ratios, bounds, ranking");
}

[[nodiscard]] inline Format parse_format(std::string_view s) {
    if (s == "md") return Format::md;
    if (s == "csv") return Format::csv;
    if (s == "json") return Format::json;
    throw UsageError("unknown format '" + std::string(s) + "'; valid formats: md, csv, json");
}

/// A rendered value that differs from its published counterpart.
struct ErratumNote {
    int table = 0;
    std::string row;
    std::string printed;
    std::string computed;
    Verdict verdict = Verdict::unexplained;
    std::string note;
};

struct EntryReport {
    std::string name;
    IndexReport indices;
    std::optional<RatioReport> ratios;   // empty when h = 0 or g = 0
    std::optional<BoundsReport> bounds;  // empty when h = 0
    std::vector<ErratumNote> errata;
};

struct RenderOptions {
    int precision = 3;
    /// 0 renders every ratio; 1, 3, 5 or 7 selects one published bundle.
    int ratio_table = 0;
    std::vector<std::string> rank_keys = {"h"};
    /// Highest d shown as a g_d column in text tables.
    Count max_g_d = 14;
};

namespace detail {

[[nodiscard]] inline std::string computed_text(const CellComparison& c) {
    if (!c.computed_label.empty()) return c.computed_label;
    if (!c.computed) return "-";
    return is_integer_cell(c.table, c.row) ? std::to_string(static_cast<Count>(*c.computed))
                                           : format_fixed(*c.computed, 3);
}

// Published-table cells of `corpus` that disagree with the computed values.
// A disagreement that only arises from the counting mode is labelled as such.
[[nodiscard]] inline std::map<std::string, std::vector<ErratumNote>> collect_errata(const Corpus& corpus) {
    std::vector<CellComparison> cells = compare_value_tables(corpus);
    auto ranks = compare_ranking_tables(corpus);
    cells.insert(cells.end(), ranks.begin(), ranks.end());
    std::vector<CellComparison> reference;
    auto verdict_in_reference = [&](const CellComparison& c) -> const CellComparison* {
        if (reference.empty()) {
            reference = compare_value_tables(reproduction_corpus());
            auto r = compare_ranking_tables(reproduction_corpus());
            reference.insert(reference.end(), r.begin(), r.end());
        }
        for (const auto& x : reference) {
            if (x.table == c.table && x.row == c.row && x.name == c.name) return &x;
        }
        return nullptr;
    };
    std::map<std::string, std::vector<ErratumNote>> out;
    for (const auto& c : cells) {
        if (c.verdict == Verdict::match || c.verdict == Verdict::unlisted || c.verdict == Verdict::skipped) continue;
        ErratumNote n{c.table, c.row, c.printed_text, computed_text(c), c.verdict, c.note};
        if (c.verdict == Verdict::unexplained) {
            const CellComparison* ref = verdict_in_reference(c);
            if (ref != nullptr && ref->verdict != Verdict::unexplained) {
                n.verdict = Verdict::counting_mode;
                n.note = "with zero-cited papers dropped the verdict is " +
                         std::string(to_string(ref->verdict)) + (ref->note.empty() ? "" : " (" + ref->note + ")");
            } else {
                n.note = "differs from the printed value";
            }
        }
        out[c.name].push_back(std::move(n));
    }
    return out;
}

}  // namespace detail

/// Per-entry reports. With `annotate`, entries of the bundled Scopus 2023
/// fixture carry notes for every cell that disagrees with the published tables.
[[nodiscard]] inline std::vector<EntryReport> build_reports(const Corpus& corpus, bool annotate = false) {
    std::vector<EntryReport> out;
    out.reserve(corpus.entries.size());
    for (const auto& e : corpus.entries) {
        EntryReport r{e.name, compute_indices(e.profile), std::nullopt, std::nullopt, {}};
        if (r.indices.h > 0 && r.indices.g > 0) r.ratios = ratio_report(r.indices);
        if (r.indices.h > 0) r.bounds = bounds_report(r.indices);
        out.push_back(std::move(r));
    }
    if (annotate) {
        auto notes = detail::collect_errata(corpus);
        for (auto& r : out) {
            if (auto it = notes.find(r.name); it != notes.end()) r.errata = it->second;
        }
    }
    return out;
}

/// True when `corpus` holds the bundled Scopus 2023 profiles.
[[nodiscard]] inline bool is_published_fixture(const Corpus& corpus) {
    return corpus.provenance.starts_with(fixture_scopus_2023);
}

namespace detail {

struct TableCell {
    std::string text;
    std::vector<std::pair<int, std::string>> sources;  // published (table, row) shown in this cell
};

struct TextTable {
    std::vector<std::string> header;
    std::vector<std::string> names;  // entry of each row
    std::vector<std::vector<TableCell>> rows;
};

[[nodiscard]] inline std::string fixed(double v, int p) { return format_fixed(v, p); }

[[nodiscard]] inline std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) out += c == '"' ? std::string("\"\"") : std::string(1, c);
    return out + "\"";
}

[[nodiscard]] inline Count g_d_columns(const std::vector<EntryReport>& reports, Count cap) {
    Count widest = 1;
    for (const auto& r : reports) widest = std::max(widest, std::min(r.indices.r + 1, r.indices.g_d.last_d()));
    return std::min(widest, cap);
}

[[nodiscard]] inline std::string g_d_cell(const IndexReport& x, Count d) {
    if (d > x.r + 1) return "-";
    auto v = x.g_d.find(d);
    return v ? std::to_string(*v) : "-";
}

struct RatioColumn {
    std::string_view key;
    int table;
    std::string_view row;  // published row key
    bool integer;
};

// clang-format off
inline constexpr RatioColumn ratio_columns[] = {
    {"h/g", 1, "h/g", false}, {"h*sqrt(r)/g", 1, "h*sqrt(r)/g", false},
    {"h*sqrt(r-1)/g", 1, "h*sqrt(r-1)/g", false}, {"(c_h-h)/h", 1, "(c_h-h)/h", false}, {"l/h", 1, "l/h", false},
    {"g_bar/h", 3, "g_bar/h", false}, {"R/g_bar", 3, "R/g_bar", false}, {"g/R", 3, "g/R", false},
    {"H/g", 3, "H/g", false}, {"D/H", 3, "D/H", false}, {"A/D", 3, "A/D", false}, {"A/h", 3, "A/h", false},
    {"2A/((r+1)h)", 3, "2A/((r+1)h)", false},
    {"beta", 5, "beta", false}, {"r+1", 5, "r+1", true}, {"delta", 5, "delta", true}, {"l", 5, "l", true},
    {"B/h", 7, "B/h", false}, {"C/B", 7, "C/B", false}, {"E/C", 7, "E/C", false}, {"F/E", 7, "F/E", false},
    {"K/F", 7, "K/F", false},
};
// clang-format on

[[nodiscard]] inline double ratio_value(const RatioReport& q, std::string_view key) {
    if (key == "h/g") return q.h_over_g;
    if (key == "h*sqrt(r)/g") return q.h_sqrt_r_over_g;
    if (key == "h*sqrt(r-1)/g") return q.h_sqrt_r_minus_1_over_g;
    if (key == "(c_h-h)/h") return q.c_h_minus_h_over_h;
    if (key == "l/h") return q.l_over_h;
    if (key == "g_bar/h") return q.g_bar_over_h;
    if (key == "R/g_bar") return q.R_over_g_bar;
    if (key == "g/R") return q.g_over_R;
    if (key == "H/g") return q.H_over_g;
    if (key == "D/H") return q.D_over_H;
    if (key == "A/D") return q.A_over_D;
    if (key == "A/h") return q.A_over_h;
    if (key == "2A/((r+1)h)") return q.two_A_over_r1_h;
    if (key == "beta") return q.beta;
    if (key == "r+1") return static_cast<double>(q.r_plus_1);
    if (key == "delta") return static_cast<double>(q.delta);
    if (key == "l") return static_cast<double>(q.l);
    if (key == "B/h") return q.B_over_h;
    if (key == "C/B") return q.C_over_B;
    if (key == "E/C") return q.E_over_C;
    if (key == "F/E") return q.F_over_E;
    if (key == "K/F") return q.K_over_F;
    throw UsageError("unknown ratio '" + std::string(key) + "'");
}

[[nodiscard]] inline std::vector<RatioColumn> selected_ratio_columns(int ratio_table) {
    if (ratio_table != 0 && ratio_table != 1 && ratio_table != 3 && ratio_table != 5 && ratio_table != 7) {
        throw UsageError("ratio table must be 1, 3, 5 or 7");
    }
    std::vector<RatioColumn> out;
    for (const auto& c : ratio_columns) {
        if (ratio_table == 0 || c.table == ratio_table) out.push_back(c);
    }
    return out;
}

[[nodiscard]] inline std::string ratio_cell(const std::optional<RatioReport>& q, const RatioColumn& c, int p) {
    if (!q) return "-";
    const double v = ratio_value(*q, c.key);
    return c.integer ? std::to_string(static_cast<Count>(v)) : fixed(v, p);
}

[[nodiscard]] inline TextTable indices_table(const std::vector<EntryReport>& reports, const RenderOptions& o) {
    const Count last_d = g_d_columns(reports, o.max_g_d);
    TextTable t;
    t.header = {"name", "n", "N", "h", "g"};
    for (Count d = 2; d <= last_d; ++d) t.header.push_back("g_" + std::to_string(d));
    for (const char* k : {"r", "g_bar", "H", "A", "R", "D", "B", "C", "E", "F", "K", "N(h)", "N(g)", "c_h", "l",
                          "delta"}) {
        t.header.emplace_back(k);
    }
    const int p = o.precision;
    for (const auto& r : reports) {
        const IndexReport& x = r.indices;
        std::vector<TableCell> row = {
            {r.name, {}},
            {std::to_string(x.n), {}},
            {std::to_string(x.total), {{1, "N"}}},
            {std::to_string(x.h), {{1, "h"}}},
            {std::to_string(x.g), {{1, "g"}}},
        };
        for (Count d = 2; d <= last_d; ++d) row.push_back({g_d_cell(x, d), {{1, "g_" + std::to_string(d)}}});
        row.push_back({std::to_string(x.r), {{1, "r"}}});
        row.push_back({format_fixed(x.g_bar, p), {{1, "g_bar"}}});
        row.push_back({fixed(x.H, p), {{1, "H"}}});
        row.push_back({format_fixed(x.A, p), {{1, "N(h)/h"}}});
        row.push_back({fixed(x.R, p), {{2, "R"}}});
        row.push_back({fixed(x.D, p), {{2, "D"}}});
        row.push_back({fixed(x.B, p), {{6, "B"}}});
        row.push_back({fixed(x.C, p), {{6, "C"}}});
        row.push_back({fixed(x.E, p), {{6, "E"}}});
        row.push_back({fixed(x.F, p), {{6, "F"}}});
        row.push_back({fixed(x.K, p), {{6, "K"}}});
        row.push_back({std::to_string(x.core_h), {{1, "N(h)"}}});
        row.push_back({std::to_string(x.core_g), {{1, "N(g)"}}});
        row.push_back({std::to_string(x.c_h), {{1, "c_h-h"}}});
        row.push_back({std::to_string(x.l), {{1, "l"}}});
        row.push_back({std::to_string(x.delta), {{5, "delta"}}});
        t.names.push_back(r.name);
        t.rows.push_back(std::move(row));
    }
    return t;
}

[[nodiscard]] inline TextTable ratios_table(const std::vector<EntryReport>& reports, const RenderOptions& o) {
    const auto columns = selected_ratio_columns(o.ratio_table);
    TextTable t;
    t.header = {"name"};
    for (const auto& c : columns) t.header.emplace_back(c.key);
    for (const auto& r : reports) {
        std::vector<TableCell> row = {{r.name, {}}};
        for (const auto& c : columns) row.push_back({ratio_cell(r.ratios, c, o.precision), {{c.table, std::string(c.row)}}});
        t.names.push_back(r.name);
        t.rows.push_back(std::move(row));
    }
    return t;
}

[[nodiscard]] inline TextTable bounds_table(const std::vector<EntryReport>& reports, const RenderOptions& o) {
    const int p = o.precision;
    TextTable t;
    t.header = {"name", "h", "r", "r_lower", "r_upper", "h_bracket", "l", "l_upper", "H", "H_lower", "H_upper"};
    for (const auto& r : reports) {
        const IndexReport& x = r.indices;
        std::vector<TableCell> row = {{r.name, {}}, {std::to_string(x.h), {}}, {std::to_string(x.r), {}}};
        if (!r.bounds) {
            for (int i = 0; i < 8; ++i) row.push_back({"-", {}});
        } else {
            const BoundsReport& b = *r.bounds;
            row.push_back({format_fixed(b.r.lower, p), {}});
            row.push_back({std::to_string(b.r.upper), {}});
            if (const auto* f = std::get_if<HFloorBracket>(&b.h)) {
                row.push_back({std::to_string(f->lower) + " < h <= " + std::to_string(f->upper), {}});
            } else {
                const auto& one = std::get<HOrderOneBracket>(b.h);
                row.push_back({std::to_string(one.lower) + " <= 2A = " + format_fixed(one.twice_core_average, p) +
                                   " < " + std::to_string(one.upper),
                               {}});
            }
            row.push_back({std::to_string(x.l), {}});
            row.push_back({b.l_upper ? fixed(*b.l_upper, p) : "-", {}});
            row.push_back({fixed(x.H, p), {}});
            row.push_back({b.H ? fixed(b.H->lower, p) : "-", {}});
            row.push_back({b.H ? fixed(b.H->upper, p) : "-", {}});
        }
        t.names.push_back(r.name);
        t.rows.push_back(std::move(row));
    }
    return t;
}

[[nodiscard]] inline std::vector<Ranking> rankings_of(const std::vector<EntryReport>& reports,
                                                      const std::vector<std::string>& keys) {
    std::vector<std::pair<std::string, IndexReport>> items;
    items.reserve(reports.size());
    for (const auto& r : reports) items.emplace_back(r.name, r.indices);
    std::vector<Ranking> out;
    for (const auto& k : keys) out.push_back(rank(items, k));
    return out;
}

// One row per entry (input order), one "rank" and one value column per key.
[[nodiscard]] inline TextTable ranking_table(const std::vector<EntryReport>& reports, const RenderOptions& o) {
    const auto rankings = rankings_of(reports, o.rank_keys);
    TextTable t;
    t.header = {"name"};
    for (const auto& k : o.rank_keys) {
        t.header.push_back("rank(" + k + ")");
        t.header.push_back(k);
    }
    // Rows follow the first key's order.
    for (const auto& lead : rankings.front().entries) {
        std::vector<TableCell> row = {{lead.name, {}}};
        for (const auto& rk : rankings) {
            const RankedEntry& e = rk.at(lead.name);
            const bool integer = exact_key_is_integer_valued(rk.key);
            row.push_back({e.label(), {{4, rk.key}, {8, rk.key}}});
            row.push_back({integer ? std::to_string(static_cast<Count>(e.value)) : fixed(e.value, o.precision), {}});
        }
        t.names.push_back(lead.name);
        t.rows.push_back(std::move(row));
    }
    return t;
}

[[nodiscard]] inline TextTable build_table(const std::vector<EntryReport>& reports, Layout layout,
                                           const RenderOptions& o) {
    switch (layout) {
        case Layout::indices: return indices_table(reports, o);
        case Layout::ratios: return ratios_table(reports, o);
        case Layout::bounds: return bounds_table(reports, o);
        case Layout::ranking: return ranking_table(reports, o);
    }
    throw UsageError("unknown layout");
}

[[nodiscard]] inline const ErratumNote* note_for(const EntryReport& r, const TableCell& cell) {
    for (const auto& [table, row] : cell.sources) {
        for (const auto& n : r.errata) {
            if (n.table == table && n.row == row) return &n;
        }
    }
    return nullptr;
}

[[nodiscard]] inline std::string render_markdown(const std::vector<EntryReport>& reports, const TextTable& t) {
    std::string out = "|";
    for (const auto& h : t.header) out += " " + h + " |";
    out += "\n|";
    for (std::size_t i = 0; i < t.header.size(); ++i) out += i == 0 ? " --- |" : " ---: |";
    out += "\n";
    std::vector<std::string> footnotes;
    for (std::size_t i = 0; i < t.rows.size(); ++i) {
        const EntryReport* entry = nullptr;
        for (const auto& r : reports) {
            if (r.name == t.names[i]) entry = &r;
        }
        out += "|";
        for (std::size_t j = 0; j < t.rows[i].size(); ++j) {
            const TableCell& cell = t.rows[i][j];
            std::string text = cell.text;
            if (entry != nullptr) {
                if (const ErratumNote* n = note_for(*entry, cell)) {
                    footnotes.push_back(entry->name + " " + t.header[j] + ": computed " + n->computed +
                                        ", published " + n->printed + " (" + std::string(to_string(n->verdict)) +
                                        (n->note.empty() ? "" : "; " + n->note) + ")");
                    text += " [" + std::to_string(footnotes.size()) + "]";
                }
            }
            out += " " + text + " |";
        }
        out += "\n";
    }
    if (!footnotes.empty()) {
        out += "\n";
        for (std::size_t k = 0; k < footnotes.size(); ++k) out += "[" + std::to_string(k + 1) + "] " + footnotes[k] + "\n";
    }
    return out;
}

[[nodiscard]] inline std::string render_csv(const TextTable& t) {
    std::string out;
    for (std::size_t j = 0; j < t.header.size(); ++j) out += (j ? "," : "") + csv_escape(t.header[j]);
    out += "\n";
    for (const auto& row : t.rows) {
        for (std::size_t j = 0; j < row.size(); ++j) out += (j ? "," : "") + csv_escape(row[j].text);
        out += "\n";
    }
    return out;
}

[[nodiscard]] inline nlohmann::ordered_json indices_json(const IndexReport& x, int p) {
    nlohmann::ordered_json j;
    j["n"] = x.n;
    j["N"] = x.total;
    j["h"] = x.h;
    j["g"] = x.g;
    nlohmann::ordered_json gd = nlohmann::ordered_json::object();
    for (Count d = 2; d <= std::min(x.r + 1, x.g_d.last_d()); ++d) gd[std::to_string(d)] = x.g_d.at(d);
    j["g_d"] = gd;
    j["r"] = x.r;
    j["g_bar"] = format_fixed(x.g_bar, p);
    j["g_bar_exact"] = to_string(x.g_bar);
    j["H"] = fixed(x.H, p);
    j["A"] = format_fixed(x.A, p);
    j["A_exact"] = to_string(x.A);
    j["R"] = fixed(x.R, p);
    j["D"] = fixed(x.D, p);
    j["B"] = fixed(x.B, p);
    j["C"] = fixed(x.C, p);
    j["E"] = fixed(x.E, p);
    j["F"] = fixed(x.F, p);
    j["K"] = fixed(x.K, p);
    j["N(h)"] = x.core_h;
    j["N(g)"] = x.core_g;
    j["c_h"] = x.c_h;
    j["l"] = x.l;
    j["delta"] = x.delta;
    return j;
}

[[nodiscard]] inline nlohmann::ordered_json ratios_json(const std::optional<RatioReport>& q, int p) {
    if (!q) return nullptr;
    nlohmann::ordered_json j;
    for (const auto& c : ratio_columns) {
        const double v = ratio_value(*q, c.key);
        if (c.integer) {
            j[std::string(c.key)] = static_cast<Count>(v);
        } else {
            j[std::string(c.key)] = fixed(v, p);
        }
    }
    return j;
}

[[nodiscard]] inline nlohmann::ordered_json bounds_json(const EntryReport& r, int p) {
    if (!r.bounds) return nullptr;
    const BoundsReport& b = *r.bounds;
    nlohmann::ordered_json j;
    j["r_lower"] = format_fixed(b.r.lower, p);
    j["r_upper"] = b.r.upper;
    if (const auto* f = std::get_if<HFloorBracket>(&b.h)) {
        j["h_lower"] = f->lower;
        j["h_upper"] = f->upper;
    } else {
        const auto& one = std::get<HOrderOneBracket>(b.h);
        j["two_A_lower"] = one.lower;
        j["two_A"] = format_fixed(one.twice_core_average, p);
        j["two_A_upper"] = one.upper;
    }
    j["l_upper"] = b.l_upper ? nlohmann::ordered_json(fixed(*b.l_upper, p)) : nlohmann::ordered_json(nullptr);
    j["H_lower"] = b.H ? nlohmann::ordered_json(fixed(b.H->lower, p)) : nlohmann::ordered_json(nullptr);
    j["H_upper"] = b.H ? nlohmann::ordered_json(fixed(b.H->upper, p)) : nlohmann::ordered_json(nullptr);
    return j;
}

[[nodiscard]] inline std::string render_json(const std::vector<EntryReport>& reports, Layout layout,
                                             const RenderOptions& o) {
    std::vector<Ranking> rankings;
    if (layout == Layout::ranking) rankings = rankings_of(reports, o.rank_keys);
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& r : reports) {
        nlohmann::ordered_json j;
        j["name"] = r.name;
        j["indices"] = indices_json(r.indices, o.precision);
        j["ratios"] = ratios_json(r.ratios, o.precision);
        if (layout == Layout::bounds) j["bounds"] = bounds_json(r, o.precision);
        if (layout == Layout::ranking) {
            nlohmann::ordered_json ranks;
            for (const auto& rk : rankings) ranks[rk.key] = rk.at(r.name).label();
            j["ranks"] = ranks;
        }
        nlohmann::ordered_json errata = nlohmann::ordered_json::array();
        for (const auto& n : r.errata) {
            errata.push_back({{"table", n.table},
                              {"row", n.row},
                              {"computed", n.computed},
                              {"published", n.printed},
                              {"verdict", std::string(to_string(n.verdict))},
                              {"note", n.note}});
        }
        j["errata"] = errata;
        arr.push_back(std::move(j));
    }
    return arr.dump(2) + "\n";
}

}  // namespace detail

/// Renders `reports` deterministically. Throws UsageError on an empty set.
[[nodiscard]] inline std::string render(const std::vector<EntryReport>& reports, Layout layout, Format format,
                                        const RenderOptions& options = {}) {
    if (reports.empty()) throw UsageError("nothing to render: the report set is empty");
    detail::check_precision(options.precision);
    if (layout == Layout::ranking && options.rank_keys.empty()) throw UsageError("ranking needs at least one key");
    for (const auto& k : options.rank_keys) {
        if (layout == Layout::ranking && !is_ranking_key(k)) {
            throw UsageError("unknown ranking key '" + k + "'; valid keys: " + detail::key_list());
        }
    }
    if (format == Format::json) return detail::render_json(reports, layout, options);
    const detail::TextTable t = detail::build_table(reports, layout, options);
    return format == Format::md ? detail::render_markdown(reports, t) : detail::render_csv(t);
}

/// (h, g, R) records with the order and capital H rebuilt from h and R.
[[nodiscard]] inline std::string render_legacy(const std::vector<LegacyRecord>& records, Format format,
                                               int precision = 3) {
    if (records.empty()) throw UsageError("nothing to render: the record set is empty");
    detail::check_precision(precision);
    const int p = precision;
    detail::TextTable t;
    t.header = {"name", "h", "g", "R", "r", "H", "h/g", "H/g", "H/R"};
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& rec : records) {
        const Count r = r_from_h_and_R(rec.h, rec.R);
        const double h = static_cast<double>(rec.h);
        const double g = static_cast<double>(rec.g);
        const double H = h * std::sqrt(static_cast<double>(r));
        std::vector<std::string> cells = {rec.name,
                                          std::to_string(rec.h),
                                          std::to_string(rec.g),
                                          format_fixed(rec.R, p),
                                          std::to_string(r),
                                          format_fixed(H, p),
                                          format_fixed(h / g, p),
                                          format_fixed(H / g, p),
                                          format_fixed(H / rec.R, p)};
        nlohmann::ordered_json j;
        j["name"] = rec.name;
        j["indices"] = {{"h", rec.h}, {"g", rec.g}, {"R", cells[3]}, {"r", r}, {"H", cells[5]}};
        j["ratios"] = {{"h/g", cells[6]}, {"H/g", cells[7]}, {"H/R", cells[8]}};
        j["errata"] = nlohmann::ordered_json::array();
        arr.push_back(std::move(j));
        std::vector<detail::TableCell> row;
        for (auto& c : cells) row.push_back({std::move(c), {}});
        t.names.push_back(rec.name);
        t.rows.push_back(std::move(row));
    }
    if (format == Format::json) return arr.dump(2) + "\n";
    return format == Format::md ? detail::render_markdown({}, t) : detail::render_csv(t);
}

/// Pieces of the threshold function G of one profile.
[[nodiscard]] inline std::string render_breakpoints(const std::vector<GInterval>& pieces, Format format,
                                                    int precision = 3) {
    if (pieces.empty()) throw UsageError("nothing to render: no breakpoints");
    detail::check_precision(precision);
    detail::TextTable t;
    t.header = {"G", "x_above", "x_upto", "x_above_exact", "x_upto_exact"};
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& piece : pieces) {
        std::vector<std::string> cells = {std::to_string(piece.k), format_fixed(piece.lower, precision),
                                          format_fixed(piece.upper, precision), to_string(piece.lower),
                                          to_string(piece.upper)};
        arr.push_back({{"G", piece.k},
                       {"x_above", cells[1]},
                       {"x_upto", cells[2]},
                       {"x_above_exact", cells[3]},
                       {"x_upto_exact", cells[4]}});
        std::vector<detail::TableCell> row;
        for (auto& c : cells) row.push_back({std::move(c), {}});
        t.names.push_back({});
        t.rows.push_back(std::move(row));
    }
    if (format == Format::json) return arr.dump(2) + "\n";
    return format == Format::md ? detail::render_markdown({}, t) : detail::render_csv(t);
}

}  // namespace citeidx
