// Copyright (c) 2026 The chainecon developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#pragma once

#include <charconv>
#include <cstdint>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <chainecon/calibration.hpp>
#include <chainecon/distribution.hpp>

namespace chainecon {

//! Malformed input; line is 1-based, 0 when no single line is at fault.
class ParseError : public std::runtime_error
{
public:
    ParseError(std::string message, int line = 0)
        : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + message : std::move(message)),
          line_(line)
    {
    }

    int line() const { return line_; }

private:
    int line_ = 0;
};

namespace detail {

inline std::string_view trim(std::string_view text)
{
    while (!text.empty() && (text.front() == ' ' || text.front() == '\t')) text.remove_prefix(1);
    while (!text.empty() && (text.back() == ' ' || text.back() == '\t' || text.back() == '\r')) text.remove_suffix(1);
    return text;
}

inline bool try_parse_double(std::string_view text, double& out)
{
    text = trim(text);
    if (text.empty()) return false;
    const char* first = text.data();
    const char* last = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(first, last, out);
    return ec == std::errc{} && ptr == last && std::isfinite(out);
}

inline bool try_parse_int(std::string_view text, std::int64_t& out)
{
    text = trim(text);
    if (text.empty()) return false;
    const char* first = text.data();
    const char* last = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(first, last, out);
    return ec == std::errc{} && ptr == last;
}

//! Reads a line accepting both LF and CRLF endings.
inline bool next_line(std::istream& in, std::string& line)
{
    if (!std::getline(in, line)) return false;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    return true;
}

} // namespace detail

//! Number formatting used in every machine-readable surface: 15 significant
//! digits, '.' as the decimal mark.
inline std::string format_number(double value)
{
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.15g", value);
    return buf;
}

// ---------------------------------------------------------------------------
// Snapshot files: `holder,balance` rows, optional header, balances in BTC.
// ---------------------------------------------------------------------------

inline BalanceSnapshot parse_snapshot(std::istream& in, std::string label = {})
{
    BalanceSnapshot snapshot;
    snapshot.label = std::move(label);
    std::string line;
    int line_no = 0;
    bool first_data_line = true;
    while (detail::next_line(in, line)) {
        ++line_no;
        const auto text = detail::trim(line);
        if (text.empty()) continue;
        const auto comma = text.find(',');
        if (comma == std::string_view::npos || text.find(',', comma + 1) != std::string_view::npos) {
            throw ParseError("expected exactly two comma-separated fields", line_no);
        }
        const auto holder = detail::trim(text.substr(0, comma));
        const auto value_text = detail::trim(text.substr(comma + 1));
        double balance = 0.0;
        if (!detail::try_parse_double(value_text, balance)) {
            if (first_data_line) {
                first_data_line = false; // header row, e.g. "holder,balance"
                continue;
            }
            throw ParseError("balance '" + std::string(value_text) + "' is not a number", line_no);
        }
        first_data_line = false;
        if (balance < 0.0) {
            throw ParseError("balance must be >= 0, got " + std::string(value_text), line_no);
        }
        snapshot.entries.push_back({std::string(holder), balance});
    }
    if (snapshot.entries.empty()) {
        throw ParseError("snapshot file contains no entries");
    }
    return snapshot;
}

// ---------------------------------------------------------------------------
// Calibration input files: `key = value` lines; unlisted keys keep the 2015
// defaults. '#' starts a comment.
// ---------------------------------------------------------------------------

struct CalibrationFile {
    CalibrationInputs inputs;
    //! one ("key", "file"|"default") pair per input field
    std::vector<std::pair<std::string, std::string>> provenance;
};

inline CalibrationFile parse_calibration_inputs(std::istream& in)
{
    CalibrationFile result;
    struct Field {
        const char* key;
        bool integer;
        bool seen;
    };
    Field fields[] = {
        {"tx_per_day", false, false},     {"volume_per_day", false, false},
        {"fees_per_day", false, false},   {"supply", false, false},
        {"blocks_per_day", true, false},  {"annual_discount", false, false},
        {"reward_per_block", false, false},
    };
    auto store = [&](const std::string& key, std::string_view value, int line_no) {
        double number = 0.0;
        std::int64_t integer = 0;
        for (auto& f : fields) {
            if (key != f.key) continue;
            if (f.seen) throw ParseError("duplicate key '" + key + "'", line_no);
            f.seen = true;
            if (f.integer) {
                if (!detail::try_parse_int(value, integer)) {
                    throw ParseError("value for key '" + key + "' is not an integer", line_no);
                }
            } else if (!detail::try_parse_double(value, number)) {
                throw ParseError("value for key '" + key + "' is not a number", line_no);
            }
            auto& inputs = result.inputs;
            if (key == "tx_per_day") inputs.tx_per_day = number;
            else if (key == "volume_per_day") inputs.volume_per_day = number;
            else if (key == "fees_per_day") inputs.fees_per_day = number;
            else if (key == "supply") inputs.supply = number;
            else if (key == "blocks_per_day") inputs.blocks_per_day = integer;
            else if (key == "annual_discount") inputs.annual_discount = number;
            else if (key == "reward_per_block") inputs.reward_per_block = number;
            return;
        }
        throw ParseError("unknown key '" + key + "'", line_no);
    };

    std::string line;
    int line_no = 0;
    while (detail::next_line(in, line)) {
        ++line_no;
        auto text = detail::trim(line);
        if (text.empty() || text.front() == '#') continue;
        const auto eq = text.find('=');
        if (eq == std::string_view::npos) {
            throw ParseError("expected 'key = value'", line_no);
        }
        const auto key = detail::trim(text.substr(0, eq));
        const auto value = detail::trim(text.substr(eq + 1));
        if (key.empty()) throw ParseError("missing key before '='", line_no);
        store(std::string(key), value, line_no);
    }
    for (const auto& f : fields) {
        result.provenance.emplace_back(f.key, f.seen ? "file" : "default");
    }
    return result;
}

//! Single-column numeric file of transaction sizes (shock samples).
inline std::vector<double> parse_samples(std::istream& in)
{
    std::vector<double> samples;
    std::string line;
    int line_no = 0;
    while (detail::next_line(in, line)) {
        ++line_no;
        const auto text = detail::trim(line);
        if (text.empty() || text.front() == '#') continue;
        double value = 0.0;
        if (!detail::try_parse_double(text, value)) {
            throw ParseError("sample '" + std::string(text) + "' is not a number", line_no);
        }
        samples.push_back(value);
    }
    if (samples.empty()) throw ParseError("sample file contains no values");
    return samples;
}

//! Generic `key = value` reader, the inverse of the KEYVALUE emitter.
inline std::vector<std::pair<std::string, std::string>> parse_keyvalue(std::istream& in)
{
    std::vector<std::pair<std::string, std::string>> pairs;
    std::string line;
    int line_no = 0;
    while (detail::next_line(in, line)) {
        ++line_no;
        const auto text = detail::trim(line);
        if (text.empty() || text.front() == '#') continue;
        const auto eq = text.find('=');
        if (eq == std::string_view::npos) throw ParseError("expected 'key = value'", line_no);
        pairs.emplace_back(std::string(detail::trim(text.substr(0, eq))),
                           std::string(detail::trim(text.substr(eq + 1))));
    }
    return pairs;
}

// ---------------------------------------------------------------------------
// Result documents
// ---------------------------------------------------------------------------

enum class OutputFormat { TABLE, KEYVALUE, CSV };

inline OutputFormat output_format_from_name(std::string_view name)
{
    if (name == "table") return OutputFormat::TABLE;
    if (name == "keyvalue") return OutputFormat::KEYVALUE;
    if (name == "csv") return OutputFormat::CSV;
    throw std::domain_error("unknown output format '" + std::string(name) + "'");
}

//! Outcome of one CLI analysis: echoed inputs, named outputs, optional
//! series for plotting, and run metadata. Insertion order is preserved so
//! emitted files are stable.
struct ResultDocument {
    using KeyValues = std::vector<std::pair<std::string, std::string>>;

    std::string command;
    KeyValues inputs;
    KeyValues outputs;
    KeyValues metadata;              //!< seed/version; timestamp printed only in TABLE
    std::string timestamp;           //!< ISO-8601, human output only
    std::vector<std::string> series_header;
    std::vector<std::vector<double>> series_rows;

    void add_input(std::string key, std::string value) { inputs.emplace_back(std::move(key), std::move(value)); }
    void add_input(std::string key, double value) { add_input(std::move(key), format_number(value)); }
    void add_output(std::string key, std::string value) { outputs.emplace_back(std::move(key), std::move(value)); }
    void add_output(std::string key, double value) { add_output(std::move(key), format_number(value)); }
    void add_meta(std::string key, std::string value) { metadata.emplace_back(std::move(key), std::move(value)); }
};

namespace detail {

inline void emit_table(const ResultDocument& doc, std::ostream& out)
{
    out << "chainecon " << doc.command << "\n";
    auto section = [&](const char* name, const ResultDocument::KeyValues& kv) {
        if (kv.empty()) return;
        out << name << ":\n";
        std::size_t width = 0;
        for (const auto& [k, v] : kv) width = std::max(width, k.size());
        for (const auto& [k, v] : kv) {
            out << "  " << k << std::string(width - k.size(), ' ') << "  " << v << "\n";
        }
    };
    section("inputs", doc.inputs);
    section("outputs", doc.outputs);
    section("metadata", doc.metadata);
    if (!doc.timestamp.empty()) out << "generated: " << doc.timestamp << "\n";
    if (!doc.series_header.empty()) {
        out << "series:\n  ";
        for (std::size_t i = 0; i < doc.series_header.size(); ++i) {
            out << (i ? "  " : "") << doc.series_header[i];
        }
        out << "\n";
        for (const auto& row : doc.series_rows) {
            out << "  ";
            for (std::size_t i = 0; i < row.size(); ++i) {
                out << (i ? "  " : "") << format_number(row[i]);
            }
            out << "\n";
        }
    }
}

inline void emit_keyvalue(const ResultDocument& doc, std::ostream& out)
{
    out << "command = " << doc.command << "\n";
    for (const auto& [k, v] : doc.inputs) out << "input." << k << " = " << v << "\n";
    for (const auto& [k, v] : doc.outputs) out << "output." << k << " = " << v << "\n";
    for (const auto& [k, v] : doc.metadata) out << "meta." << k << " = " << v << "\n";
    for (const auto& row : doc.series_rows) {
        out << "series";
        for (std::size_t i = 0; i < row.size(); ++i) {
            out << (i ? "," : " = ") << format_number(row[i]);
        }
        out << "\n";
    }
}

inline void emit_csv(const ResultDocument& doc, std::ostream& out)
{
    if (!doc.series_header.empty()) {
        for (std::size_t i = 0; i < doc.series_header.size(); ++i) {
            out << (i ? "," : "") << doc.series_header[i];
        }
        out << "\n";
        for (const auto& row : doc.series_rows) {
            for (std::size_t i = 0; i < row.size(); ++i) {
                out << (i ? "," : "") << format_number(row[i]);
            }
            out << "\n";
        }
        return;
    }
    out << "key,value\n";
    for (const auto& [k, v] : doc.outputs) out << k << "," << v << "\n";
}

} // namespace detail

inline void emit(const ResultDocument& doc, OutputFormat format, std::ostream& out)
{
    switch (format) {
    case OutputFormat::TABLE: detail::emit_table(doc, out); break;
    case OutputFormat::KEYVALUE: detail::emit_keyvalue(doc, out); break;
    case OutputFormat::CSV: detail::emit_csv(doc, out); break;
    }
}

inline std::string emit_string(const ResultDocument& doc, OutputFormat format)
{
    std::ostringstream out;
    emit(doc, format, out);
    return out.str();
}

} // namespace chainecon
