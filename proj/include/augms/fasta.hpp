// Sequence ingestion. FASTA records are uppercased and concatenated,
// each record followed by the record separator so matches cannot span
// records. Raw mode takes the file bytes as-is, minus trailing newlines.
#pragma once

#include <cctype>
#include <fstream>
#include <istream>

#include "augms/text.hpp"

namespace augms {

struct fasta_record {
    std::string name;
    std::vector<u8> seq;
};

inline std::vector<fasta_record> read_fasta(std::istream& in) {
    std::vector<fasta_record> recs;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        if (line[0] == '>') {
            recs.push_back({line.substr(1), {}});
            continue;
        }
        if (recs.empty()) throw std::runtime_error("fasta: sequence data before any header");
        for (char ch : line) {
            u8 b = static_cast<u8>(ch);
            if (b == SENTINEL || b == RECORD_SEP)
                throw std::runtime_error("fasta: sequence contains a reserved byte");
            if (std::isspace(b)) continue;
            recs.back().seq.push_back(static_cast<u8>(std::toupper(b)));
        }
    }
    return recs;
}

// Concatenates records, a separator after each. Rejects empty input.
inline std::vector<u8> fasta_to_bytes(const std::vector<fasta_record>& recs) {
    std::vector<u8> out;
    u64 total = 0;
    for (const auto& r : recs) total += r.seq.size();
    if (recs.empty() || total == 0) throw std::runtime_error("fasta: no sequence data");
    out.reserve(total + recs.size());
    for (const auto& r : recs) {
        out.insert(out.end(), r.seq.begin(), r.seq.end());
        out.push_back(RECORD_SEP);
    }
    return out;
}

inline bool looks_like_fasta(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    char c;
    return f && f.get(c) && c == '>';
}

inline std::vector<u8> read_raw_bytes(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot read " + path);
    std::vector<u8> bytes((std::istreambuf_iterator<char>(f)), std::istreambuf_iterator<char>());
    while (!bytes.empty() && (bytes.back() == '\n' || bytes.back() == '\r')) bytes.pop_back();
    return bytes;
}

// Build-input loader: FASTA when the file starts with '>', raw otherwise.
inline std::vector<u8> read_build_input(const std::string& path, bool force_fasta, bool force_raw) {
    if (force_fasta || (!force_raw && looks_like_fasta(path))) {
        std::ifstream f(path);
        if (!f) throw std::runtime_error("cannot read " + path);
        return fasta_to_bytes(read_fasta(f));
    }
    return read_raw_bytes(path);
}

// Patterns: FASTA records, or one pattern per line.
inline std::vector<std::vector<u8>> read_patterns(const std::string& path) {
    if (looks_like_fasta(path)) {
        std::ifstream f(path);
        if (!f) throw std::runtime_error("cannot read " + path);
        std::vector<std::vector<u8>> pats;
        for (auto& r : read_fasta(f))
            if (!r.seq.empty()) pats.push_back(std::move(r.seq));
        return pats;
    }
    std::ifstream f(path);
    if (!f) throw std::runtime_error("cannot read " + path);
    std::vector<std::vector<u8>> pats;
    std::string line;
    while (std::getline(f, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        pats.emplace_back(line.begin(), line.end());
    }
    return pats;
}

}  // namespace augms
