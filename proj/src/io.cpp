#include "schurkit/io.hpp"

#include <cctype>
#include <fstream>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace schurkit {

using ordered_json = nlohmann::ordered_json;

namespace {

ordered_json complex_pairs(const std::vector<cplx>& v) {
    ordered_json arr = ordered_json::array();
    for (const cplx& z : v) arr.push_back({z.real(), z.imag()});
    return arr;
}

}  // namespace

std::string labeled_unitary_to_json(const LabeledUnitary& u) {
    ordered_json j;
    j["rows"] = u.row_labels;
    j["cols"] = u.col_labels;
    j["data"] = complex_pairs(u.mat.a);
    return j.dump();
}

std::string block_structure_to_json(const BlockStructure& b) {
    ordered_json j;
    j["total_dim"] = b.total_dim;
    ordered_json blocks = ordered_json::array();
    for (const IrrepBlock& blk : b.blocks) {
        ordered_json jb;
        jb["lambda"] = blk.lambda.to_string();
        jb["mult_labels"] = blk.mult_labels;
        jb["irrep_labels"] = blk.irrep_labels;
        jb["mult_major"] = blk.mult_major;
        blocks.push_back(std::move(jb));
    }
    j["blocks"] = std::move(blocks);
    return j.dump();
}

std::string state_vector_to_json(const StateVector& s) {
    ordered_json j;
    j["n"] = s.n;
    j["d"] = s.d;
    j["amps"] = complex_pairs(s.amps);
    return j.dump();
}

StateVector state_vector_from_json(const std::string& text) {
    ordered_json j;
    try {
        j = ordered_json::parse(text);
    } catch (const std::exception& e) {
        throw std::invalid_argument(std::string("state JSON parse error: ") + e.what());
    }
    if (!j.contains("n") || !j.contains("d") || !j.contains("amps"))
        throw std::invalid_argument("state JSON requires fields n, d, amps");
    StateVector s;
    s.n = j["n"].get<int>();
    s.d = j["d"].get<int>();
    if (s.n < 1 || s.d < 1) throw std::invalid_argument("state JSON: n, d must be positive");
    for (const auto& p : j["amps"]) {
        if (!p.is_array() || p.size() != 2)
            throw std::invalid_argument("state JSON: amplitudes must be [re, im] pairs");
        s.amps.emplace_back(p[0].get<double>(), p[1].get<double>());
    }
    long long dim = 1;
    for (int i = 0; i < s.n; ++i) dim *= s.d;
    if ((long long)s.amps.size() != dim)
        throw std::invalid_argument("state JSON: amps length must equal d^n");
    return s;
}

std::string residual_records_to_json(const std::vector<ResidualRecord>& recs) {
    ordered_json arr = ordered_json::array();
    for (const ResidualRecord& r : recs) {
        ordered_json j;
        j["check"] = r.check;
        j["params"] = r.params;
        j["residual"] = r.residual;
        j["tolerance"] = r.tolerance;
        j["pass"] = r.pass;
        arr.push_back(std::move(j));
    }
    return arr.dump();
}

std::vector<int> parse_int_list(const std::string& text) {
    std::string s = text;
    if (!s.empty() && s.front() == '[') {
        if (s.back() != ']') throw std::invalid_argument("int list: unbalanced brackets");
        s = s.substr(1, s.size() - 2);
    }
    std::vector<int> out;
    if (s.empty()) return out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t pos = 0;
        int v;
        try {
            v = std::stoi(item, &pos);
        } catch (const std::exception&) {
            throw std::invalid_argument("int list: bad entry '" + item + "'");
        }
        while (pos < item.size() && std::isspace((unsigned char)item[pos])) ++pos;
        if (pos != item.size())
            throw std::invalid_argument("int list: bad entry '" + item + "'");
        out.push_back(v);
    }
    return out;
}

Permutation parse_permutation(const std::string& text, int n) {
    if (n < 1) throw std::invalid_argument("permutation: n must be positive");
    if (text.find('(') == std::string::npos) {
        const std::vector<int> img = parse_int_list(text);
        if ((int)img.size() != n)
            throw std::invalid_argument("permutation: expected " + std::to_string(n) +
                                        " entries, got " + std::to_string(img.size()));
        return Permutation(img);
    }
    std::vector<int> img((std::size_t)n);
    std::iota(img.begin(), img.end(), 1);
    std::vector<bool> seen((std::size_t)n + 1, false);
    std::size_t i = 0;
    const auto skip_ws = [&] {
        while (i < text.size() && std::isspace((unsigned char)text[i])) ++i;
    };
    skip_ws();
    while (i < text.size()) {
        if (text[i] != '(') throw std::invalid_argument("permutation: expected '(' in cycles");
        ++i;
        std::vector<int> cyc;
        while (true) {
            skip_ws();
            if (i < text.size() && text[i] == ',') {
                ++i;
                skip_ws();
            }
            if (i >= text.size()) throw std::invalid_argument("permutation: unterminated cycle");
            if (text[i] == ')') {
                ++i;
                break;
            }
            std::size_t pos = 0;
            int v;
            try {
                v = std::stoi(text.substr(i), &pos);
            } catch (const std::exception&) {
                throw std::invalid_argument("permutation: bad cycle entry");
            }
            i += pos;
            if (v < 1 || v > n)
                throw std::invalid_argument("permutation: cycle entry out of [1, n]");
            if (seen[(std::size_t)v])
                throw std::invalid_argument("permutation: cycles must be disjoint");
            seen[(std::size_t)v] = true;
            cyc.push_back(v);
        }
        if (cyc.size() >= 2)
            for (std::size_t k = 0; k < cyc.size(); ++k)
                img[(std::size_t)cyc[k] - 1] = cyc[(k + 1) % cyc.size()];
        skip_ws();
    }
    return Permutation(img);
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::invalid_argument("cannot open file: " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::invalid_argument("cannot write file: " + path);
    out << text;
}

}  // namespace schurkit
