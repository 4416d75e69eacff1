#pragma once

#include <algorithm>
#include <array>
#include <charconv>
#include <cstdint>
#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <unordered_map>
#include <variant>
#include <vector>

#include <json.hpp>

#include "citeidx/errors.hpp"
#include "citeidx/fixtures/price_scopus_2023.hpp"
#include "citeidx/fixtures/price_wos_2006.hpp"
#include "citeidx/profile.hpp"

namespace citeidx {

struct CorpusEntry {
    std::string name;
    CitationProfile profile;
    /// The source lists only part of this author's papers.
    bool truncated = false;

    friend bool operator==(const CorpusEntry&, const CorpusEntry&) = default;
};

/// Named profiles in input order. Names are unique.
struct Corpus {
    std::vector<CorpusEntry> entries;
    std::string provenance;
    CountingMode mode = CountingMode::all_records;

    [[nodiscard]] const CorpusEntry* find(std::string_view name) const {
        auto it = std::find_if(entries.begin(), entries.end(), [&](const CorpusEntry& e) { return e.name == name; });
        return it == entries.end() ? nullptr : &*it;
    }

    [[nodiscard]] const CorpusEntry& at(std::string_view name) const {
        if (const CorpusEntry* e = find(name)) return *e;
        throw LookupError("no entry named '" + std::string(name) + "'");
    }
};

/// Published h, g and R for an author with no per-paper data.
struct LegacyRecord {
    std::string name;
    Count h = 0;
    Count g = 0;
    double R = 0;
};

inline constexpr std::string_view fixture_scopus_2023 = "price-scopus-2023";
inline constexpr std::string_view fixture_wos_2006 = "price-wos-2006";
inline constexpr std::array<std::string_view, 2> fixture_ids = {fixture_scopus_2023, fixture_wos_2006};

namespace detail {

[[nodiscard]] inline std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
    return s;
}

[[nodiscard]] inline std::vector<std::string_view> split(std::string_view s, char sep) {
    std::vector<std::string_view> parts;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= s.size(); ++i) {
        if (i == s.size() || s[i] == sep) {
            parts.push_back(s.substr(start, i - start));
            start = i + 1;
        }
    }
    return parts;
}

[[nodiscard]] inline bool parse_count(std::string_view s, Count& out) {
    if (s.empty()) return false;
    const char* first = s.data();
    const char* last = s.data() + s.size();
    auto [ptr, ec] = std::from_chars(first, last, out);
    return ec == std::errc{} && ptr == last;
}

constexpr std::uint64_t fnv1a(std::string_view s) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (char c : s) {
        h ^= static_cast<unsigned char>(c);
        h *= 0x100000001b3ULL;
    }
    return h;
}

static_assert(fnv1a(fixtures::price_scopus_2023_tsv) == fixtures::price_scopus_2023_checksum,
              "price-scopus-2023 fixture text changed; verify against the source table and update the checksum");

// Builds a corpus from (name, raw counts) groups in first-seen order.
class CorpusBuilder {
public:
    explicit CorpusBuilder(CountingMode mode) : mode_(mode) {}

    std::vector<Count>& group(std::string_view name) {
        auto [it, inserted] = index_.try_emplace(std::string(name), groups_.size());
        if (inserted) groups_.emplace_back(std::string(name), std::vector<Count>{});
        return groups_[it->second].second;
    }

    [[nodiscard]] Corpus finish(std::string provenance) && {
        Corpus c{{}, std::move(provenance), mode_};
        c.entries.reserve(groups_.size());
        for (auto& [name, raw] : groups_) c.entries.push_back({name, normalize(raw, mode_), false});
        return c;
    }

private:
    CountingMode mode_;
    std::vector<std::pair<std::string, std::vector<Count>>> groups_;
    std::unordered_map<std::string, std::size_t> index_;
};

}  // namespace detail

/// CSV with header `name,citations`, one row per paper. LF or CRLF; a UTF-8
/// byte-order mark is skipped. Rows sharing a name form one profile.
[[nodiscard]] inline Corpus parse_csv(std::string_view text, CountingMode mode = CountingMode::all_records,
                                      std::string provenance = "csv") {
    if (text.starts_with("\xEF\xBB\xBF")) text.remove_prefix(3);
    const auto lines = detail::split(text, '\n');
    if (detail::trim(text).empty()) throw ParseError("empty input", 1);
    if (detail::trim(lines.front()) != "name,citations") {
        throw ParseError("expected header 'name,citations'", 1);
    }
    detail::CorpusBuilder builder(mode);
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const std::size_t line_no = i + 1;
        const std::string_view line = detail::trim(lines[i]);
        if (line.empty()) continue;
        const auto fields = detail::split(line, ',');
        if (fields.size() != 2) throw ParseError("expected 2 fields, found " + std::to_string(fields.size()), line_no);
        const std::string_view name = detail::trim(fields[0]);
        const std::string_view cell = detail::trim(fields[1]);
        if (name.empty()) throw ParseError("empty name", line_no);
        Count value = 0;
        if (!detail::parse_count(cell, value)) {
            throw ParseError("citation count '" + std::string(cell) + "' is not an integer", line_no);
        }
        if (value < 0) throw ParseError("negative citation count " + std::string(cell), line_no);
        builder.group(name).push_back(value);
    }
    return std::move(builder).finish(std::move(provenance));
}

/// JSON object mapping each name to an array of non-negative integers.
[[nodiscard]] inline Corpus parse_json(std::string_view text, CountingMode mode = CountingMode::all_records,
                                       std::string provenance = "json") {
    nlohmann::ordered_json doc;
    try {
        doc = nlohmann::ordered_json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("malformed JSON: ") + e.what());
    }
    if (!doc.is_object()) throw ParseError("top-level JSON value must be an object");
    detail::CorpusBuilder builder(mode);
    for (const auto& [name, value] : doc.items()) {
        if (!value.is_array()) throw ParseError("value of '" + name + "' is not an array");
        auto& raw = builder.group(name);
        for (const auto& elem : value) {
            if (!elem.is_number_integer()) {
                throw ParseError("'" + name + "' contains non-integer element " + elem.dump());
            }
            if (elem.is_number_unsigned()) {
                if (elem.get<std::uint64_t>() > static_cast<std::uint64_t>(INT64_MAX)) {
                    throw ParseError("'" + name + "' contains an out-of-range count");
                }
            } else if (elem.get<std::int64_t>() < 0) {
                throw ParseError("'" + name + "' contains negative count " + elem.dump());
            }
            raw.push_back(elem.get<Count>());
        }
    }
    return std::move(builder).finish(std::move(provenance));
}

/// Reads a .csv or .json file, chosen by extension.
[[nodiscard]] inline Corpus read_corpus_file(const std::string& path, CountingMode mode = CountingMode::all_records) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    if (path.ends_with(".json")) return parse_json(buf.str(), mode, path);
    if (path.ends_with(".csv")) return parse_csv(buf.str(), mode, path);
    throw UsageError("unsupported input extension for '" + path + "' (expected .csv or .json)");
}

/// A cell of the Scopus 2023 table that is replaced on load.
struct TranscriptionCorrection {
    std::string_view name;
    Count rank;
    Count printed;
    Count corrected;
    std::string_view reason;
};

inline constexpr std::array<TranscriptionCorrection, 1> scopus_2023_corrections = {{
    {"Schubert", 42, 42, 41,
     "column prints 43, 41, 42, 40 at ranks 40-43; with 41 the column is non-increasing and sums to the "
     "7587 citations on record, with top-41 total 6359 and top-85 total 7348"},
}};

/// Columns of the Scopus 2023 table in printed order, optionally with the
/// transcription corrections applied. Counts are in rank order as printed.
[[nodiscard]] inline std::vector<std::pair<std::string, std::vector<Count>>> scopus_2023_columns(
    bool apply_corrections = true) {
    const auto lines = detail::split(fixtures::price_scopus_2023_tsv, '\n');
    const auto header = detail::split(lines.front(), '\t');
    std::vector<std::pair<std::string, std::vector<Count>>> cols;
    for (std::size_t j = 1; j < header.size(); ++j) cols.emplace_back(std::string(header[j]), std::vector<Count>{});
    for (std::size_t i = 1; i < lines.size(); ++i) {
        if (lines[i].empty()) continue;
        const auto cells = detail::split(lines[i], '\t');
        for (std::size_t j = 1; j < cells.size() && j <= cols.size(); ++j) {
            Count v = 0;
            if (cells[j].empty()) continue;
            if (!detail::parse_count(cells[j], v)) throw ParseError("bad fixture cell", i + 1);
            cols[j - 1].second.push_back(v);
        }
    }
    if (apply_corrections) {
        for (const auto& fix : scopus_2023_corrections) {
            for (auto& [name, counts] : cols) {
                if (name != fix.name) continue;
                Count& cell = counts.at(static_cast<std::size_t>(fix.rank - 1));
                if (cell != fix.printed) throw ParseError("fixture correction no longer matches the table");
                cell = fix.corrected;
            }
        }
    }
    return cols;
}

[[nodiscard]] inline const fixtures::AuthorSummary& author_summary(std::string_view name) {
    for (const auto& s : fixtures::price_author_summary) {
        if (s.name == name) return s;
    }
    throw LookupError("no author summary for '" + std::string(name) + "'");
}

/// The 14 Scopus 2023 profiles. Authors with more papers on record than
/// listed rows are marked truncated.
[[nodiscard]] inline Corpus load_price_scopus_2023(CountingMode mode = CountingMode::all_records) {
    Corpus c{{}, std::string(fixture_scopus_2023), mode};
    for (auto& [name, counts] : scopus_2023_columns()) {
        const bool truncated = author_summary(name).papers > static_cast<long>(counts.size());
        c.entries.push_back({name, normalize(counts, mode), truncated});
    }
    return c;
}

[[nodiscard]] inline std::vector<LegacyRecord> load_price_wos_2006() {
    std::vector<LegacyRecord> out;
    for (const auto& row : fixtures::price_wos_2006) out.push_back({std::string(row.name), row.h, row.g, row.R});
    return out;
}

using FixtureData = std::variant<Corpus, std::vector<LegacyRecord>>;

[[nodiscard]] inline FixtureData load_fixture(std::string_view id, CountingMode mode = CountingMode::all_records) {
    if (id == fixture_scopus_2023) return load_price_scopus_2023(mode);
    if (id == fixture_wos_2006) return load_price_wos_2006();
    std::string valid;
    for (auto v : fixture_ids) valid += (valid.empty() ? "" : ", ") + std::string(v);
    throw LookupError("unknown fixture '" + std::string(id) + "'; valid ids: " + valid);
}

}  // namespace citeidx
