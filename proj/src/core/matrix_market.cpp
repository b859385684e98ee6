#include "bosp/core/matrix_market.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

#include "bosp/core/errors.hpp"

namespace bosp {

namespace {

std::string lowercase(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(),
                   [](unsigned char c) { return std::tolower(c); });
    return s;
}

[[noreturn]] void fail(const std::string& path, std::size_t line, const std::string& what) {
    throw IngestionError(path + ":" + std::to_string(line) + ": " + what);
}

} // namespace

SparseMatrixCSR read_matrix_market(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IngestionError(path + ": cannot open file");

    std::string line;
    std::size_t lineno = 0;

    if (!std::getline(in, line)) fail(path, 1, "empty file");
    ++lineno;
    std::istringstream header(line);
    std::string banner, object, format, field, symmetry;
    header >> banner >> object >> format >> field >> symmetry;
    if (banner != "%%MatrixMarket") fail(path, lineno, "missing %%MatrixMarket banner");
    if (lowercase(object) != "matrix" || lowercase(format) != "coordinate")
        fail(path, lineno, "only coordinate matrices are supported");
    if (lowercase(field) != "real")
        fail(path, lineno, "only real-valued matrices are supported (field '" + field + "')");
    const std::string sym = lowercase(symmetry);
    if (sym != "general" && sym != "symmetric")
        fail(path, lineno, "only general or symmetric matrices are supported");
    const bool symmetric = (sym == "symmetric");

    // size line, skipping comments
    std::size_t rows = 0, cols = 0, nnz = 0;
    for (;;) {
        if (!std::getline(in, line)) fail(path, lineno + 1, "missing size line");
        ++lineno;
        if (!line.empty() && line[0] == '%') continue;
        std::istringstream ss(line);
        if (!(ss >> rows >> cols >> nnz)) fail(path, lineno, "malformed size line");
        break;
    }

    std::vector<std::size_t> ti, tj;
    std::vector<double> tv;
    ti.reserve(nnz);
    tj.reserve(nnz);
    tv.reserve(nnz);

    std::size_t seen = 0;
    while (seen < nnz) {
        if (!std::getline(in, line))
            fail(path, lineno + 1, "unexpected end of file, expected " +
                                       std::to_string(nnz) + " entries");
        ++lineno;
        if (line.empty() || line[0] == '%') continue;
        std::istringstream ss(line);
        long long i = 0, j = 0;
        double v = 0.0;
        if (!(ss >> i >> j >> v)) fail(path, lineno, "malformed coordinate entry");
        if (i < 1 || j < 1 || static_cast<std::size_t>(i) > rows ||
            static_cast<std::size_t>(j) > cols)
            fail(path, lineno, "coordinate out of declared bounds");
        ti.push_back(static_cast<std::size_t>(i - 1));
        tj.push_back(static_cast<std::size_t>(j - 1));
        tv.push_back(v);
        if (symmetric && i != j) {
            ti.push_back(static_cast<std::size_t>(j - 1));
            tj.push_back(static_cast<std::size_t>(i - 1));
            tv.push_back(v);
        }
        ++seen;
    }

    return csr_from_triplets(rows, cols, std::move(ti), std::move(tj), std::move(tv));
}

} // namespace bosp
