#pragma once

#include <cstdint>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace qcl {

/// m x n matrix of lift exponents over Z_N. Fully connected: every entry is a
/// real shift in [0, N-1], there are no masked positions. Rows and columns are
/// 0-based everywhere in the library; reporting code converts to 1-based.
struct ExponentMatrix {
    int rows = 0;   ///< m (check-node blocks)
    int cols = 0;   ///< n (variable-node blocks)
    int lift = 0;   ///< N (circulant size)
    std::vector<int> entries;  ///< row-major, rows*cols values in [0, lift)

    ExponentMatrix() = default;
    ExponentMatrix(int m, int n, int N)
        : rows(m), cols(n), lift(N), entries(static_cast<size_t>(m) * n, 0) {
        validate_shape();
    }

    int at(int i, int j) const { return entries[static_cast<size_t>(i) * cols + j]; }
    int& at(int i, int j) { return entries[static_cast<size_t>(i) * cols + j]; }

    bool operator==(const ExponentMatrix&) const = default;

    void validate_shape() const {
        if (rows < 1 || cols < 1) throw std::invalid_argument("exponent matrix needs m >= 1, n >= 1");
        if (lift < 2) throw std::invalid_argument("lifting degree N must be >= 2");
    }

    void validate() const {
        validate_shape();
        if (entries.size() != static_cast<size_t>(rows) * cols)
            throw std::invalid_argument("entry count does not match m*n");
        for (int v : entries)
            if (v < 0 || v >= lift) throw std::invalid_argument("entry out of [0, N-1]");
    }
};

/// Parse failure with the 1-based line it occurred on.
class ParseError : public std::runtime_error {
public:
    ParseError(int line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

/// Text format: line 1 is "m n N"; the next m lines carry n entries each.
/// '#' starts a comment line. Blank lines are skipped.
inline ExponentMatrix parse_exponent_matrix(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    int lineno = 0;
    ExponentMatrix B;
    int rows_read = 0;
    bool have_header = false;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        if (!have_header) {
            int m, n, N;
            if (!(ls >> m)) continue;  // blank or comment-only line
            if (!(ls >> n >> N)) throw ParseError(lineno, "header must be \"m n N\"");
            std::string extra;
            if (ls >> extra) throw ParseError(lineno, "trailing token in header: '" + extra + "'");
            if (m < 1 || n < 1) throw ParseError(lineno, "m and n must be positive");
            if (N < 2) throw ParseError(lineno, "N must be >= 2");
            if (static_cast<long long>(m) * n > 50'000'000) throw ParseError(lineno, "matrix is implausibly large");
            B = ExponentMatrix(m, n, N);
            have_header = true;
            continue;
        }
        if (rows_read == B.rows) {
            int stray;
            if (ls >> stray) throw ParseError(lineno, "extra row after " + std::to_string(B.rows) + " matrix rows");
            continue;
        }
        int v;
        int col = 0;
        bool any = false;
        while (ls >> v) {
            any = true;
            if (col == B.cols) throw ParseError(lineno, "row has more than " + std::to_string(B.cols) + " entries");
            if (v < 0 || v >= B.lift)
                throw ParseError(lineno, "entry " + std::to_string(v) + " out of [0, " + std::to_string(B.lift - 1) + "]");
            B.at(rows_read, col++) = v;
        }
        if (!any) continue;
        if (col != B.cols) throw ParseError(lineno, "row has " + std::to_string(col) + " entries, expected " + std::to_string(B.cols));
        ++rows_read;
    }
    if (!have_header) throw ParseError(lineno, "missing header line \"m n N\"");
    if (rows_read != B.rows)
        throw ParseError(lineno, "expected " + std::to_string(B.rows) + " matrix rows, got " + std::to_string(rows_read));
    return B;
}

inline std::string print_exponent_matrix(const ExponentMatrix& B) {
    std::ostringstream out;
    out << B.rows << ' ' << B.cols << ' ' << B.lift << '\n';
    for (int i = 0; i < B.rows; ++i) {
        for (int j = 0; j < B.cols; ++j) out << (j ? " " : "") << B.at(i, j);
        out << '\n';
    }
    return out.str();
}

inline ExponentMatrix load_exponent_matrix(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open matrix file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_exponent_matrix(buf.str());
}

}  // namespace qcl
