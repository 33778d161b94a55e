#include <fstream>
#include <sstream>

#include "pairlin/error.hpp"
#include "pairlin/instances.hpp"
#include "pairlin/matrix.hpp"

namespace pairlin {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

std::size_t parse_dim(const std::string& text, const char* what) {
    try {
        std::size_t pos = 0;
        long v = std::stol(text, &pos);
        if (pos == text.size() && v > 0) return std::size_t(v);
    } catch (const std::exception&) {
    }
    throw Error(ErrorCode::BadLiteral, std::string("bad ") + what + " count '" + text + "'");
}

}  // namespace

Matrix parse_matrix(std::string_view text) {
    AlgebraPtr alg;
    std::size_t rows = 0, cols = 0;
    std::vector<Element> entries;
    std::istringstream in{std::string(text)};
    std::string line;
    while (std::getline(in, line)) {
        std::string_view s = line;
        if (auto hash = s.find('#'); hash != std::string_view::npos) s = s.substr(0, hash);
        s = trim(s);
        if (s.empty()) continue;
        std::istringstream words{std::string(s)};
        std::string head;
        words >> head;
        if (head == "pair") {
            std::string spec;
            words >> spec;
            alg = make_pair(spec);
            continue;
        }
        if (head == "rows" || head == "cols") {
            std::string n;
            words >> n;
            (head == "rows" ? rows : cols) = parse_dim(n, head.c_str());
            continue;
        }
        if (!alg || rows == 0 || cols == 0)
            throw Error(ErrorCode::BadLiteral, "matrix header needs 'pair', 'rows' and 'cols' before entries");
        std::istringstream row{std::string(s)};
        std::string lit;
        std::size_t count = 0;
        while (row >> lit) {
            entries.push_back(alg->parse(lit));
            ++count;
        }
        if (count != cols)
            throw Error(ErrorCode::DimensionMismatch, "row has " + std::to_string(count) + " entries, expected " +
                                                          std::to_string(cols));
    }
    if (!alg) throw Error(ErrorCode::BadLiteral, "missing 'pair' header");
    if (entries.size() != rows * cols)
        throw Error(ErrorCode::DimensionMismatch,
                    "expected " + std::to_string(rows) + " rows, got " + std::to_string(entries.size() / cols));
    return Matrix(alg, rows, cols, std::move(entries));
}

Matrix read_matrix_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw Error(ErrorCode::BadLiteral, "cannot read " + path);
    std::stringstream buf;
    buf << f.rdbuf();
    return parse_matrix(buf.str());
}

std::string format_matrix(const Matrix& a) {
    std::string out = "pair " + a.alg().spec() + "\nrows " + std::to_string(a.rows()) + "\ncols " +
                      std::to_string(a.cols()) + "\n";
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) {
            if (j) out += ' ';
            out += a.alg().format(a(i, j));
        }
        out += '\n';
    }
    return out;
}

Vector parse_vector(const PairAlgebra& alg, std::string_view text) {
    // Commas inside braces belong to set literals.
    Vector out;
    int depth = 0;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= text.size(); ++i) {
        if (i < text.size()) {
            depth += text[i] == '{' || text[i] == '(' ? 1 : text[i] == '}' || text[i] == ')' ? -1 : 0;
            if (text[i] != ',' || depth != 0) continue;
        }
        auto tok = trim(text.substr(start, i - start));
        if (tok.empty()) throw Error(ErrorCode::BadLiteral, "empty entry in vector '" + std::string(text) + "'");
        out.push_back(alg.parse(tok));
        start = i + 1;
    }
    return out;
}

std::string format_vector(const PairAlgebra& alg, const Vector& v) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ',';
        out += alg.format(v[i]);
    }
    return out;
}

}  // namespace pairlin
