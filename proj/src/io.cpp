#include "specround/io.hpp"

#include "specround/error.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace specround {

namespace {

std::string trim(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return {};
    std::size_t b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

std::vector<std::string> split_line(const std::string& line) {
    std::vector<std::string> cells;
    std::string cell;
    std::stringstream ss(line);
    while (std::getline(ss, cell, ',')) cells.push_back(trim(cell));
    if (!line.empty() && line.back() == ',') cells.emplace_back();
    return cells;
}

bool parse_double(const std::string& cell, double& out) {
    if (cell.empty()) return false;
    const char* begin = cell.data();
    char* end = nullptr;
    out = std::strtod(begin, &end);
    return end == begin + cell.size();
}

std::string format_double(double v) {
    char buf[32];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    if (ec != std::errc()) fail(ErrorCode::io_error, "failed to format number");
    return std::string(buf, ptr);
}

struct CsvTable {
    std::vector<std::string> header;  // empty if none
    std::vector<std::vector<double>> rows;
};

CsvTable read_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(ErrorCode::io_error, "cannot open " + path);
    CsvTable table;
    std::string line;
    bool first = true;
    std::size_t width = 0;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (trim(line).empty()) continue;
        std::vector<std::string> cells = split_line(line);
        std::vector<double> row(cells.size());
        bool numeric = true;
        for (std::size_t j = 0; j < cells.size(); ++j) {
            if (!parse_double(cells[j], row[j])) {
                numeric = false;
                break;
            }
        }
        if (first && !numeric) {
            table.header = std::move(cells);
            width = table.header.size();
            first = false;
            continue;
        }
        first = false;
        if (!numeric)
            fail(ErrorCode::parse_error,
                 path + ":" + std::to_string(lineno) + ": non-numeric cell");
        if (width == 0) width = row.size();
        if (row.size() != width)
            fail(ErrorCode::parse_error, path + ":" + std::to_string(lineno) +
                                             ": expected " + std::to_string(width) +
                                             " columns, got " + std::to_string(row.size()));
        table.rows.push_back(std::move(row));
    }
    if (table.rows.empty()) fail(ErrorCode::empty_data, path + ": no data rows");
    return table;
}

Matrix to_matrix(const CsvTable& table) {
    Matrix m(static_cast<Eigen::Index>(table.rows.size()),
             static_cast<Eigen::Index>(table.rows.front().size()));
    for (std::size_t i = 0; i < table.rows.size(); ++i)
        for (std::size_t j = 0; j < table.rows[i].size(); ++j)
            m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
                table.rows[i][j];
    return m;
}

bool column_is_integral(const CsvTable& table, std::size_t j) {
    for (const auto& row : table.rows) {
        double v = row[j];
        if (!std::isfinite(v) || v != std::floor(v)) return false;
    }
    return true;
}

bool header_marks_labels(const std::vector<std::string>& header) {
    if (header.empty()) return false;
    std::string last = header.back();
    std::transform(last.begin(), last.end(), last.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return last == "label" || last == "labels";
}

std::ofstream open_out(const std::string& path) {
    std::ofstream out(path);
    if (!out) fail(ErrorCode::io_error, "cannot write " + path);
    return out;
}

}  // namespace

Matrix read_matrix_csv(const std::string& path, std::vector<std::string>* header_out) {
    CsvTable table = read_csv(path);
    if (header_out) *header_out = table.header;
    return to_matrix(table);
}

void write_matrix_csv(const std::string& path, const Matrix& m,
                      const std::vector<std::string>& header) {
    std::ofstream out = open_out(path);
    if (!header.empty()) {
        if (static_cast<Eigen::Index>(header.size()) != m.cols())
            fail(ErrorCode::length_mismatch, "header width does not match matrix");
        for (std::size_t j = 0; j < header.size(); ++j)
            out << (j ? "," : "") << header[j];
        out << '\n';
    }
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        for (Eigen::Index j = 0; j < m.cols(); ++j)
            out << (j ? "," : "") << format_double(m(i, j));
        out << '\n';
    }
}

DataSet read_points_csv(const std::string& path, LabelColumn mode) {
    CsvTable table = read_csv(path);
    const std::size_t cols = table.rows.front().size();

    bool labeled = false;
    switch (mode) {
        case LabelColumn::yes:
            labeled = true;
            break;
        case LabelColumn::no:
            labeled = false;
            break;
        case LabelColumn::automatic:
            if (cols >= 2) {
                if (header_marks_labels(table.header)) {
                    labeled = true;
                } else if (table.header.empty() && column_is_integral(table, cols - 1)) {
                    // Ambiguous without a header: call it a label column
                    // only when some feature column is clearly real-valued.
                    for (std::size_t j = 0; j + 1 < cols; ++j)
                        if (!column_is_integral(table, j)) {
                            labeled = true;
                            break;
                        }
                }
            }
            break;
    }
    if (labeled && cols < 2)
        fail(ErrorCode::invalid_argument, path + ": label column leaves no features");
    if (labeled && !column_is_integral(table, cols - 1))
        fail(ErrorCode::parse_error, path + ": label column is not integral");

    const std::size_t d = labeled ? cols - 1 : cols;
    Matrix points(static_cast<Eigen::Index>(table.rows.size()),
                  static_cast<Eigen::Index>(d));
    std::vector<std::int32_t> labels;
    if (labeled) labels.reserve(table.rows.size());
    for (std::size_t i = 0; i < table.rows.size(); ++i) {
        for (std::size_t j = 0; j < d; ++j)
            points(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
                table.rows[i][j];
        if (labeled) labels.push_back(static_cast<std::int32_t>(table.rows[i][cols - 1]));
    }
    return DataSet::create(std::move(points), std::move(labels));
}

void write_points_csv(const std::string& path, const DataSet& data, bool with_labels) {
    std::ofstream out = open_out(path);
    const bool labeled = with_labels && data.has_labels();
    if (data.d() == 2) {
        out << (labeled ? "x,y,label" : "x,y") << '\n';
    } else {
        for (int j = 0; j < data.d(); ++j) out << (j ? "," : "") << "x" << j;
        out << (labeled ? ",label" : "") << '\n';
    }
    for (int i = 0; i < data.n(); ++i) {
        for (int j = 0; j < data.d(); ++j)
            out << (j ? "," : "") << format_double(data.points(i, j));
        if (labeled) out << ',' << data.labels[static_cast<std::size_t>(i)];
        out << '\n';
    }
}

SimilarityMatrix read_similarity_csv(const std::string& path) {
    Matrix s = read_matrix_csv(path);
    if (s.rows() != s.cols())
        fail(ErrorCode::invalid_argument,
             path + ": similarity matrix must be square");
    if (!s.allFinite()) fail(ErrorCode::nonfinite_input, path + ": non-finite entry");
    if ((s.array() < 0.0).any())
        fail(ErrorCode::invalid_argument, path + ": negative similarity");
    const double scale = std::max(1.0, s.cwiseAbs().maxCoeff());
    if ((s - s.transpose()).cwiseAbs().maxCoeff() > 1e-9 * scale)
        fail(ErrorCode::invalid_argument, path + ": similarity matrix must be symmetric");
    s = ((s + s.transpose()) * 0.5).eval();  // exact symmetry after tolerance check
    Vector degrees = s.rowwise().sum();
    return SimilarityMatrix{std::move(s), std::move(degrees)};
}

void write_similarity_csv(const std::string& path, const SimilarityMatrix& sim) {
    write_matrix_csv(path, sim.s);
}

std::vector<std::int32_t> read_labels_csv(const std::string& path) {
    CsvTable table = read_csv(path);
    if (table.rows.front().size() != 1)
        fail(ErrorCode::parse_error, path + ": expected a single label column");
    if (!column_is_integral(table, 0))
        fail(ErrorCode::parse_error, path + ": labels must be integers");
    std::vector<std::int32_t> labels;
    labels.reserve(table.rows.size());
    for (const auto& row : table.rows)
        labels.push_back(static_cast<std::int32_t>(row[0]));
    return labels;
}

void write_labels_csv(const std::string& path,
                      const std::vector<std::int32_t>& labels) {
    std::ofstream out = open_out(path);
    out << "label\n";
    for (std::int32_t v : labels) out << v << '\n';
}

}  // namespace specround
