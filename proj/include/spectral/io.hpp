#pragma once

#include "spectral/diffusion.hpp"
#include "spectral/eigensolver.hpp"
#include "spectral/embed.hpp"
#include "spectral/graph.hpp"

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

namespace spectral::io {

/// Header-less CSV, one sample per line, decimal-point floats. Blank lines
/// are skipped. Throws ParseError naming the offending line.
DataSet parse_csv(std::istream& in);
DataSet read_csv(const std::filesystem::path& path);

/// Whitespace-separated "i j w" lines with 1-based indices. Lines starting
/// with '#' are comments, except "# nodes N" which fixes the node count
/// (otherwise the largest index is used).
SimilarityGraph parse_edge_list(std::istream& in);
SimilarityGraph read_edge_list(const std::filesystem::path& path);
void write_edge_list(std::ostream& out, const SimilarityGraph& g);

/// Full-precision scientific notation, used by every writer below.
std::string format_number(double x);

/// One matrix row per line, entries separated by single spaces.
void write_matrix(std::ostream& out, const Matrix& m);
Matrix parse_matrix(std::istream& in);

/// One line per eigenpair: "lambda v_1 ... v_N".
void write_spectrum(std::ostream& out, const Spectrum& s);

/// "sample_index,y_1,...,y_m" with 1-based sample indices.
void write_embedding_csv(std::ostream& out, const Embedding& e);

/// "sample_index,label".
void write_labels_csv(std::ostream& out, const std::vector<int>& labels);
std::vector<int> parse_labels_csv(std::istream& in);

/// "t,h_1,...,h_N" per sample time.
void write_trajectory_csv(std::ostream& out, const std::vector<HeatState>& states);

void write_lpp_model(std::ostream& out, const LppModel& model);
/// Reads a model written by write_lpp_model. The training embedding is not
/// stored and comes back empty.
LppModel parse_lpp_model(std::istream& in);

/// Writes `content` to `path`, throwing ParseError if the file cannot be opened.
void write_file(const std::filesystem::path& path, const std::string& content);

}  // namespace spectral::io
