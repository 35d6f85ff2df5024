#pragma once

#include "specround/types.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace specround {

/// Whether the final CSV column holds integer class labels. `automatic`
/// trusts a header column named "label", else falls back to a heuristic
/// (final column all-integral while some feature column is not).
enum class LabelColumn { automatic, yes, no };

/// Numeric CSV with optional single header line (detected: any cell of
/// the first line that does not parse as a number makes it a header).
Matrix read_matrix_csv(const std::string& path,
                       std::vector<std::string>* header_out = nullptr);

void write_matrix_csv(const std::string& path, const Matrix& m,
                      const std::vector<std::string>& header = {});

/// One point per row; optional final integer label column.
DataSet read_points_csv(const std::string& path,
                        LabelColumn mode = LabelColumn::automatic);

/// Writes points (and the label column when present and requested) with
/// a header line: x,y,...,label.
void write_points_csv(const std::string& path, const DataSet& data,
                      bool with_labels = true);

/// Dense symmetric nonnegative matrix; degrees recomputed on load.
SimilarityMatrix read_similarity_csv(const std::string& path);

void write_similarity_csv(const std::string& path, const SimilarityMatrix& sim);

/// Single-column integer CSV (optional header).
std::vector<std::int32_t> read_labels_csv(const std::string& path);

void write_labels_csv(const std::string& path,
                      const std::vector<std::int32_t>& labels);

}  // namespace specround
