#pragma once

#include <iosfwd>
#include <string>
#include <variant>
#include <vector>

#include "dnacodes/algebra.hpp"
#include "dnacodes/groups.hpp"
#include "dnacodes/search.hpp"

namespace dnacodes {

inline constexpr const char* kVersion = "dnacodes 1.0.0";

using AnyCode = std::variant<F2Code, F4Code>;

// Code file: a header line "n k field" with field in {F2, F4}, then k rows
// of n symbols over {0,1} or {0,1,w,W}. '#' starts a comment; whitespace
// between symbols is ignored. Rows are re-reduced on load.
AnyCode read_code_file(std::istream& in);
AnyCode read_code_file(const std::string& path);
void write_code_file(std::ostream& out, const F2Code& c);
void write_code_file(std::ostream& out, const F4Code& c);
void write_code_file(const std::string& path, const AnyCode& c);

// Group file: header "order n", then n lines of n space-separated indices.
FiniteGroup read_group_file(std::istream& in);
void write_group_file(std::ostream& out, const FiniteGroup& g);

// Word lists: plain text (one word per line) or FASTA-like ('>' headers,
// wrapped sequence lines concatenate).
std::vector<std::string> read_word_list(std::istream& in);
std::vector<std::string> read_word_list(const std::string& path);
void write_word_list(std::ostream& out, const std::vector<std::string>& words,
                     bool fasta);

std::string record_to_json(const SearchRecord& r);
SearchRecord record_from_json(const std::string& line);

// Completed-range ledger for resumable searches: one "begin end" pair per line.
std::vector<std::pair<std::uint64_t, std::uint64_t>> read_range_ledger(
    const std::string& path);
void append_range_ledger(const std::string& path,
                         const std::vector<std::pair<std::uint64_t, std::uint64_t>>& ranges);

}  // namespace dnacodes
