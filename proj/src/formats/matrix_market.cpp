// SPDX-FileCopyrightText: 2026 The psl authors
//
// SPDX-License-Identifier: Apache-2.0

#include <psl/formats/matrix_market.hpp>

#include <algorithm>
#include <array>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <limits>
#include <ostream>
#include <vector>

#include <psl/core/error.hpp>


namespace psl {
namespace {


enum class Field { real, integer, pattern };


std::string lower(std::string_view s)
{
    std::string out(s);
    std::transform(out.begin(), out.end(), out.begin(),
                   [](unsigned char c) { return std::tolower(c); });
    return out;
}


bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r'; }


/// Splits `line` on blanks into at most `out.size()` tokens; returns the
/// token count, or out.size() + 1 if there are more.
template <std::size_t N>
std::size_t tokenize(std::string_view line,
                     std::array<std::string_view, N>& out)
{
    std::size_t count = 0;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && is_space(line[i])) {
            ++i;
        }
        if (i == line.size()) {
            break;
        }
        const auto start = i;
        while (i < line.size() && !is_space(line[i])) {
            ++i;
        }
        if (count == N) {
            return N + 1;
        }
        out[count++] = line.substr(start, i - start);
    }
    return count;
}


bool is_blank(std::string_view line)
{
    return std::all_of(line.begin(), line.end(), is_space);
}


std::int64_t parse_integer(std::string_view token, std::size_t line_no,
                           std::string_view what)
{
    std::int64_t value{};
    const auto* first = token.data();
    const auto* last = token.data() + token.size();
    if (first != last && *first == '+') {
        ++first;
    }
    const auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec == std::errc::result_out_of_range) {
        throw Overflow("line " + std::to_string(line_no) + ": " +
                       std::string(what) + " '" + std::string(token) +
                       "' is too large");
    }
    if (ec != std::errc{} || ptr != last) {
        throw ParseError(line_no, "expected integer " + std::string(what) +
                                      ", got '" + std::string(token) + "'");
    }
    return value;
}


double parse_real(std::string_view token, std::size_t line_no)
{
    double value{};
    const auto* first = token.data();
    const auto* last = token.data() + token.size();
    if (first != last && *first == '+') {
        ++first;
    }
    const auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last) {
        throw ParseError(line_no, "expected a real value, got '" +
                                      std::string(token) + "'");
    }
    return value;
}


std::string_view trim(std::string_view s)
{
    while (!s.empty() && (is_space(s.front()))) {
        s.remove_prefix(1);
    }
    while (!s.empty() && (is_space(s.back()))) {
        s.remove_suffix(1);
    }
    return s;
}


/// Picks up "% name: Group/matrix" and "% kind: ..." SuiteSparse comments.
void scan_comment(std::string_view line, MatrixMetadata& meta)
{
    auto body = trim(line.substr(line.find_first_not_of('%') ==
                                         std::string_view::npos
                                     ? line.size()
                                     : line.find_first_not_of('%')));
    const auto take = [&](std::string_view key) -> std::optional<std::string_view> {
        if (body.size() > key.size() && body.substr(0, key.size()) == key) {
            return trim(body.substr(key.size()));
        }
        return std::nullopt;
    };
    if (const auto name = take("name:")) {
        const auto slash = name->rfind('/');
        meta.name = std::string(
            slash == std::string_view::npos ? *name : name->substr(slash + 1));
    } else if (const auto kind = take("kind:")) {
        meta.origin = std::string(*kind);
    }
}


}  // namespace


template <Scalar T>
MatrixMarketData<T> read_matrix_market(std::istream& in,
                                       std::string_view name_hint)
{
    std::string line;
    std::size_t line_no = 0;

    if (!std::getline(in, line)) {
        throw ParseError(0, "empty input, expected a MatrixMarket header");
    }
    ++line_no;
    std::array<std::string_view, 5> header{};
    if (tokenize(line, header) != 5 || lower(header[0]) != "%%matrixmarket") {
        throw ParseError(line_no,
                         "expected '%%MatrixMarket matrix coordinate <field> "
                         "<symmetry>'");
    }
    const auto object = lower(header[1]);
    const auto storage = lower(header[2]);
    const auto field_name = lower(header[3]);
    const auto symmetry = lower(header[4]);

    if (object != "matrix") {
        if (object == "vector") {
            throw UnsupportedField("object '" + object + "'");
        }
        throw ParseError(line_no, "unknown object '" + object + "'");
    }
    if (storage != "coordinate") {
        if (storage == "array") {
            throw UnsupportedField("dense 'array' storage");
        }
        throw ParseError(line_no, "unknown storage format '" + storage + "'");
    }
    Field field{};
    if (field_name == "real" || field_name == "double") {
        field = Field::real;
    } else if (field_name == "integer") {
        field = Field::integer;
    } else if (field_name == "pattern") {
        field = Field::pattern;
    } else if (field_name == "complex") {
        throw UnsupportedField("field 'complex'");
    } else {
        throw ParseError(line_no, "unknown field '" + field_name + "'");
    }
    bool symmetric = false;
    if (symmetry == "symmetric") {
        symmetric = true;
    } else if (symmetry == "hermitian" || symmetry == "skew-symmetric") {
        throw UnsupportedField("symmetry '" + symmetry + "'");
    } else if (symmetry != "general") {
        throw ParseError(line_no, "unknown symmetry '" + symmetry + "'");
    }

    MatrixMetadata meta;
    meta.symmetry = symmetric ? "symmetric" : "general";

    // comments, then the size line
    bool have_size = false;
    std::int64_t rows = 0;
    std::int64_t cols = 0;
    std::int64_t entries = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line[0] == '%') {
            scan_comment(line, meta);
            continue;
        }
        if (is_blank(line)) {
            continue;
        }
        std::array<std::string_view, 3> size{};
        if (tokenize(line, size) != 3) {
            throw ParseError(line_no, "expected size line 'rows cols entries'");
        }
        rows = parse_integer(size[0], line_no, "row count");
        cols = parse_integer(size[1], line_no, "column count");
        entries = parse_integer(size[2], line_no, "entry count");
        have_size = true;
        break;
    }
    if (!have_size) {
        throw ParseError(line_no, "missing size line");
    }
    if (rows <= 0 || cols <= 0 || entries < 0) {
        throw ParseError(line_no, "matrix dimensions must be positive");
    }
    check_index_extent("row count", static_cast<size_type>(rows));
    check_index_extent("column count", static_cast<size_type>(cols));
    check_index_extent("entry count", static_cast<size_type>(entries));
    if (symmetric && rows != cols) {
        throw ParseError(line_no, "symmetric matrix must be square");
    }

    std::vector<Triplet<T>> triplets;
    constexpr std::int64_t max_reserve = std::int64_t{1} << 26;
    triplets.reserve(static_cast<size_type>(
        std::min(symmetric ? 2 * entries : entries, max_reserve)));

    const auto expected_tokens = field == Field::pattern ? 2u : 3u;
    std::int64_t read = 0;
    while (read < entries && std::getline(in, line)) {
        ++line_no;
        if (is_blank(line) || line[0] == '%') {
            continue;
        }
        std::array<std::string_view, 3> tok{};
        const auto count = tokenize(line, tok);
        if (count != expected_tokens) {
            throw ParseError(line_no, "expected " +
                                          std::to_string(expected_tokens) +
                                          " fields in entry, got " +
                                          std::to_string(count));
        }
        const auto r = parse_integer(tok[0], line_no, "row index");
        const auto c = parse_integer(tok[1], line_no, "column index");
        if (r < 1 || r > rows || c < 1 || c > cols) {
            throw IndexOutOfRange(
                line_no, "entry (" + std::to_string(r) + ", " +
                             std::to_string(c) + ") outside " +
                             std::to_string(rows) + " x " +
                             std::to_string(cols) + " matrix");
        }
        double value = 1.0;
        if (field == Field::real) {
            value = parse_real(tok[2], line_no);
        } else if (field == Field::integer) {
            value = static_cast<double>(
                parse_integer(tok[2], line_no, "integer value"));
        }
        const auto stored = static_cast<T>(value);
        if (!std::isfinite(stored)) {
            throw ParseError(line_no, "value '" + std::string(tok[2]) +
                                          "' is not finite in " +
                                          std::string(to_string(
                                              precision_of<T>)));
        }
        const auto row = static_cast<index_type>(r - 1);
        const auto col = static_cast<index_type>(c - 1);
        triplets.push_back({row, col, stored});
        if (symmetric && row != col) {
            triplets.push_back({col, row, stored});
        }
        ++read;
    }
    if (read < entries) {
        throw ParseError(line_no, "expected " + std::to_string(entries) +
                                      " entries, found " +
                                      std::to_string(read));
    }
    while (std::getline(in, line)) {
        ++line_no;
        if (!is_blank(line) && line[0] != '%') {
            throw ParseError(line_no, "more entries than the declared " +
                                          std::to_string(entries));
        }
    }
    check_index_extent("expanded nonzero count", triplets.size());

    auto matrix = CooMatrix<T>::from_triplets(static_cast<size_type>(rows),
                                              static_cast<size_type>(cols),
                                              std::move(triplets));
    if (meta.name.empty()) {
        meta.name = std::string(name_hint);
    }
    meta.n = static_cast<std::uint64_t>(rows);
    meta.num_cols = static_cast<std::uint64_t>(cols);
    meta.nz = matrix.nnz();
    meta.declared_entries = static_cast<std::uint64_t>(entries);
    return {std::move(matrix), std::move(meta)};
}


template <Scalar T>
MatrixMarketData<T> read_matrix_market(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in) {
        throw IoError("cannot open '" + path.string() + "'");
    }
    return read_matrix_market<T>(in, path.stem().string());
}


template <Scalar T>
void write_matrix_market(std::ostream& out, const CooMatrix<T>& m,
                         std::string_view comment)
{
    out << "%%MatrixMarket matrix coordinate real general\n";
    if (!comment.empty()) {
        out << "% " << comment << '\n';
    }
    out << m.num_rows() << ' ' << m.num_cols() << ' ' << m.nnz() << '\n';
    const auto old_precision =
        out.precision(std::numeric_limits<T>::max_digits10);
    for (size_type k = 0; k < m.nnz(); ++k) {
        out << m.row_idxs()[k] + 1 << ' ' << m.col_idxs()[k] + 1 << ' '
            << m.values()[k] << '\n';
    }
    out.precision(old_precision);
}


template MatrixMarketData<float> read_matrix_market(std::istream&,
                                                    std::string_view);
template MatrixMarketData<double> read_matrix_market(std::istream&,
                                                     std::string_view);
template MatrixMarketData<float> read_matrix_market(
    const std::filesystem::path&);
template MatrixMarketData<double> read_matrix_market(
    const std::filesystem::path&);
template void write_matrix_market(std::ostream&, const CooMatrix<float>&,
                                  std::string_view);
template void write_matrix_market(std::ostream&, const CooMatrix<double>&,
                                  std::string_view);


}  // namespace psl
