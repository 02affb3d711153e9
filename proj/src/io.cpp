#include "dnacodes/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace dnacodes {

namespace {

// Next line that carries data: comments ('#' to end of line) stripped,
// blank lines skipped. Returns false at EOF.
bool next_data_line(std::istream& in, std::string& line, int& lineno) {
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        bool blank = true;
        for (char c : line)
            if (!std::isspace(static_cast<unsigned char>(c))) {
                blank = false;
                break;
            }
        if (!blank) return true;
    }
    return false;
}

template <class V>
LinearCode<V> read_rows(std::istream& in, int n, int k, int& lineno) {
    std::vector<V> rows;
    rows.reserve(k);
    std::string line;
    int collected = 0;
    V row = V::zeros(n);
    int col = 0;
    while (collected < k) {
        if (!next_data_line(in, line, lineno))
            throw ParseError("unexpected end of file inside generator rows", lineno);
        for (char c : line) {
            if (std::isspace(static_cast<unsigned char>(c))) continue;
            if (col >= n) throw ParseError("row longer than n", lineno);
            std::uint8_t val = f4_from_char(c, std::size_t(col));
            if constexpr (V::q == 2) {
                if (val > 1) throw ParseError("symbol outside F2", lineno);
            }
            row.set(col, val);
            ++col;
        }
        if (col == n) {
            rows.push_back(row);
            row = V::zeros(n);
            col = 0;
            ++collected;
        }
    }
    return make_code<V>(n, std::move(rows));
}

}  // namespace

AnyCode read_code_file(std::istream& in) {
    int lineno = 0;
    std::string line;
    if (!next_data_line(in, line, lineno)) throw ParseError("empty code file", lineno);
    std::istringstream hdr(line);
    int n = -1, k = -1;
    std::string field;
    if (!(hdr >> n >> k >> field)) throw ParseError("bad header, want 'n k field'", lineno);
    if (n < 0 || n > kMaxLen || k < 0 || k > n)
        throw ParseError("bad code dimensions", lineno);
    if (field == "F2") return read_rows<F2Vec>(in, n, k, lineno);
    if (field == "F4") return read_rows<F4Vec>(in, n, k, lineno);
    throw ParseError("field must be F2 or F4", lineno);
}

AnyCode read_code_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open " + path);
    return read_code_file(in);
}

void write_code_file(std::ostream& out, const F2Code& c) {
    out << c.n << ' ' << c.k() << " F2\n";
    for (const auto& g : c.gens) out << g.to_string() << '\n';
}

void write_code_file(std::ostream& out, const F4Code& c) {
    out << c.n << ' ' << c.k() << " F4\n";
    for (const auto& g : c.gens) out << g.to_string() << '\n';
}

void write_code_file(const std::string& path, const AnyCode& c) {
    std::ofstream out(path);
    if (!out) throw Error("cannot open " + path);
    std::visit([&](const auto& code) { write_code_file(out, code); }, c);
}

FiniteGroup read_group_file(std::istream& in) {
    int lineno = 0;
    std::string line;
    if (!next_data_line(in, line, lineno)) throw ParseError("empty group file", lineno);
    std::istringstream hdr(line);
    std::string kw;
    int n = -1;
    if (!(hdr >> kw >> n) || kw != "order" || n < 1)
        throw ParseError("bad header, want 'order n'", lineno);
    std::vector<std::int16_t> table;
    table.reserve(std::size_t(n) * n);
    while (int(table.size()) < n * n) {
        if (!next_data_line(in, line, lineno))
            throw ParseError("unexpected end of file inside Cayley table", lineno);
        std::istringstream row(line);
        int v;
        while (row >> v) table.push_back(std::int16_t(v));
    }
    if (int(table.size()) != n * n) throw ParseError("table has extra entries", lineno);
    return FiniteGroup::from_table(n, std::move(table), "from-file");
}

void write_group_file(std::ostream& out, const FiniteGroup& g) {
    out << "# " << g.name << '\n';
    out << "order " << g.n << '\n';
    for (int a = 0; a < g.n; ++a) {
        for (int b = 0; b < g.n; ++b) {
            if (b) out << ' ';
            out << g.mul(a, b);
        }
        out << '\n';
    }
}

std::vector<std::string> read_word_list(std::istream& in) {
    std::vector<std::string> words;
    std::string line;
    std::string pending;
    bool fasta = false;
    while (std::getline(in, line)) {
        while (!line.empty() && (line.back() == '\r' || line.back() == '\n'))
            line.pop_back();
        if (line.empty()) continue;
        if (line[0] == '#') continue;
        if (line[0] == '>') {
            fasta = true;
            if (!pending.empty()) words.push_back(std::move(pending));
            pending.clear();
            continue;
        }
        if (fasta)
            pending += line;
        else
            words.push_back(line);
    }
    if (!pending.empty()) words.push_back(std::move(pending));
    return words;
}

std::vector<std::string> read_word_list(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open " + path);
    return read_word_list(in);
}

void write_word_list(std::ostream& out, const std::vector<std::string>& words,
                     bool fasta) {
    for (std::size_t i = 0; i < words.size(); ++i) {
        if (fasta) out << ">w" << i << '\n';
        out << words[i] << '\n';
    }
}

std::string record_to_json(const SearchRecord& r) {
    nlohmann::json j;
    j["schema"] = 1;
    j["group"] = r.group_spec;
    j["involution"] = r.involution;
    j["x"] = r.x.to_string();
    j["candidate"] = r.candidate;
    j["wt"] = r.wt;
    j["n"] = r.n;
    j["k"] = r.k;
    j["d"] = r.d;
    j["size"] = r.size.str();
    j["reversible"] = r.reversible;
    j["all_ones"] = r.all_ones;
    if (r.gc_half >= 0) j["gc_half"] = r.gc_half.str();
    if (r.ffs >= 0) j["ffs"] = r.ffs;
    return j.dump();
}

SearchRecord record_from_json(const std::string& line) {
    nlohmann::json j = nlohmann::json::parse(line);
    SearchRecord r;
    r.group_spec = j.at("group").get<std::string>();
    r.involution = j.at("involution").get<int>();
    r.x = F4Vec::from_string(j.at("x").get<std::string>());
    r.candidate = j.at("candidate").get<std::uint64_t>();
    r.wt = j.at("wt").get<int>();
    r.n = j.at("n").get<int>();
    r.k = j.at("k").get<int>();
    r.d = j.at("d").get<int>();
    r.size = BigInt(j.at("size").get<std::string>());
    r.reversible = j.at("reversible").get<bool>();
    r.all_ones = j.at("all_ones").get<bool>();
    if (j.contains("gc_half")) r.gc_half = BigInt(j.at("gc_half").get<std::string>());
    if (j.contains("ffs")) r.ffs = j.at("ffs").get<std::int64_t>();
    return r;
}

std::vector<std::pair<std::uint64_t, std::uint64_t>> read_range_ledger(
    const std::string& path) {
    std::vector<std::pair<std::uint64_t, std::uint64_t>> out;
    std::ifstream in(path);
    if (!in) return out;
    std::uint64_t a, b;
    while (in >> a >> b) out.push_back({a, b});
    return out;
}

void append_range_ledger(
    const std::string& path,
    const std::vector<std::pair<std::uint64_t, std::uint64_t>>& ranges) {
    std::ofstream out(path, std::ios::app);
    if (!out) throw Error("cannot open " + path);
    for (const auto& [a, b] : ranges) out << a << ' ' << b << '\n';
}

}  // namespace dnacodes
