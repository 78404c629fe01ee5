#include "spectral/io.hpp"

#include "spectral/error.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

namespace spectral::io {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

double parse_double(std::string_view token, long line) {
  token = trim(token);
  double value = 0.0;
  const auto* end = token.data() + token.size();
  const auto [ptr, ec] = std::from_chars(token.data(), end, value);
  if (token.empty() || ec != std::errc() || ptr != end) {
    throw Error(ErrorKind::ParseError,
                "line " + std::to_string(line) + ": cannot parse '" + std::string(token) +
                    "' as a number",
                line);
  }
  return value;
}

long parse_index(std::string_view token, long line) {
  long value = 0;
  const auto* end = token.data() + token.size();
  const auto [ptr, ec] = std::from_chars(token.data(), end, value);
  if (token.empty() || ec != std::errc() || ptr != end) {
    throw Error(ErrorKind::ParseError,
                "line " + std::to_string(line) + ": cannot parse '" + std::string(token) +
                    "' as an index",
                line);
  }
  return value;
}

std::ifstream open_input(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::ParseError, "cannot open '" + path.string() + "'");
  return in;
}

std::vector<std::string_view> split_whitespace(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t pos = 0;
  while (pos < s.size()) {
    const auto start = s.find_first_not_of(" \t\r", pos);
    if (start == std::string_view::npos) break;
    auto stop = s.find_first_of(" \t\r", start);
    if (stop == std::string_view::npos) stop = s.size();
    out.push_back(s.substr(start, stop - start));
    pos = stop;
  }
  return out;
}

}  // namespace

DataSet parse_csv(std::istream& in) {
  std::vector<std::vector<double>> rows;
  std::string line;
  long number = 0;
  while (std::getline(in, line)) {
    ++number;
    const auto body = trim(line);
    if (body.empty()) continue;
    std::vector<double> row;
    std::size_t pos = 0;
    while (true) {
      const auto comma = body.find(',', pos);
      row.push_back(parse_double(body.substr(pos, comma - pos), number));
      if (comma == std::string_view::npos) break;
      pos = comma + 1;
    }
    if (!rows.empty() && row.size() != rows.front().size()) {
      throw Error(ErrorKind::ParseError,
                  "line " + std::to_string(number) + ": expected " +
                      std::to_string(rows.front().size()) + " columns, found " +
                      std::to_string(row.size()),
                  number);
    }
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw Error(ErrorKind::ParseError, "CSV input has no samples");
  Matrix points(static_cast<Index>(rows.size()), static_cast<Index>(rows.front().size()));
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < rows[i].size(); ++j) {
      points(static_cast<Index>(i), static_cast<Index>(j)) = rows[i][j];
    }
  }
  if (!points.allFinite()) throw Error(ErrorKind::InvalidData, "CSV input has non-finite values");
  return DataSet(std::move(points));
}

DataSet read_csv(const std::filesystem::path& path) {
  auto in = open_input(path);
  return parse_csv(in);
}

SimilarityGraph parse_edge_list(std::istream& in) {
  std::vector<WeightedEdge> edges;
  long declared = -1;
  long largest = 0;
  std::string line;
  long number = 0;
  while (std::getline(in, line)) {
    ++number;
    const auto body = trim(line);
    if (body.empty()) continue;
    if (body.front() == '#') {
      const auto tokens = split_whitespace(body.substr(1));
      if (tokens.size() == 2 && (tokens[0] == "nodes" || tokens[0] == "nodes:")) {
        declared = parse_index(tokens[1], number);
      }
      continue;
    }
    const auto tokens = split_whitespace(body);
    if (tokens.size() != 3) {
      throw Error(ErrorKind::ParseError,
                  "line " + std::to_string(number) + ": expected 'i j w'", number);
    }
    const long i = parse_index(tokens[0], number);
    const long j = parse_index(tokens[1], number);
    if (i < 1 || j < 1) {
      throw Error(ErrorKind::InvalidEdgeList,
                  "line " + std::to_string(number) + ": indices are 1-based", number);
    }
    largest = std::max({largest, i, j});
    edges.push_back({i - 1, j - 1, parse_double(tokens[2], number)});
  }
  const long n = declared >= 0 ? declared : largest;
  if (n < 1) throw Error(ErrorKind::ParseError, "edge list defines no nodes");
  return from_edge_list(n, edges);
}

SimilarityGraph read_edge_list(const std::filesystem::path& path) {
  auto in = open_input(path);
  return parse_edge_list(in);
}

void write_edge_list(std::ostream& out, const SimilarityGraph& g) {
  out << "# nodes " << g.n_nodes() << '\n';
  for (const auto& [i, j, w] : g.edges()) {
    out << (i + 1) << ' ' << (j + 1) << ' ' << format_number(w) << '\n';
  }
}

std::string format_number(double x) { return fmt::format("{:.17e}", x); }

void write_matrix(std::ostream& out, const Matrix& m) {
  for (Index i = 0; i < m.rows(); ++i) {
    for (Index j = 0; j < m.cols(); ++j) {
      if (j) out << ' ';
      out << format_number(m(i, j));
    }
    out << '\n';
  }
}

Matrix parse_matrix(std::istream& in) {
  std::vector<std::vector<double>> rows;
  std::string line;
  long number = 0;
  while (std::getline(in, line)) {
    ++number;
    const auto tokens = split_whitespace(line);
    if (tokens.empty()) continue;
    std::vector<double> row;
    for (auto t : tokens) row.push_back(parse_double(t, number));
    if (!rows.empty() && row.size() != rows.front().size()) {
      throw Error(ErrorKind::ParseError, "line " + std::to_string(number) + ": ragged matrix",
                  number);
    }
    rows.push_back(std::move(row));
  }
  Matrix m(static_cast<Index>(rows.size()), rows.empty() ? 0 : static_cast<Index>(rows[0].size()));
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < rows[i].size(); ++j) {
      m(static_cast<Index>(i), static_cast<Index>(j)) = rows[i][j];
    }
  }
  return m;
}

void write_spectrum(std::ostream& out, const Spectrum& s) {
  for (Index u = 0; u < s.size(); ++u) {
    out << format_number(s.eigenvalues(u));
    for (Index i = 0; i < s.eigenvectors.rows(); ++i) {
      out << ' ' << format_number(s.eigenvectors(i, u));
    }
    out << '\n';
  }
}

void write_embedding_csv(std::ostream& out, const Embedding& e) {
  out << "sample_index";
  for (Index r = 0; r < e.dimension(); ++r) out << ",y_" << (r + 1);
  out << '\n';
  for (Index i = 0; i < e.n_samples(); ++i) {
    out << (i + 1);
    for (Index r = 0; r < e.dimension(); ++r) out << ',' << format_number(e.coords(r, i));
    out << '\n';
  }
}

void write_labels_csv(std::ostream& out, const std::vector<int>& labels) {
  out << "sample_index,label\n";
  for (std::size_t i = 0; i < labels.size(); ++i) out << (i + 1) << ',' << labels[i] << '\n';
}

std::vector<int> parse_labels_csv(std::istream& in) {
  std::vector<int> labels;
  std::string line;
  long number = 0;
  while (std::getline(in, line)) {
    ++number;
    const auto body = trim(line);
    if (body.empty() || body.rfind("sample_index", 0) == 0) continue;
    const auto comma = body.find(',');
    if (comma == std::string_view::npos) {
      throw Error(ErrorKind::ParseError,
                  "line " + std::to_string(number) + ": expected 'sample_index,label'", number);
    }
    labels.push_back(static_cast<int>(parse_index(trim(body.substr(comma + 1)), number)));
  }
  return labels;
}

void write_trajectory_csv(std::ostream& out, const std::vector<HeatState>& states) {
  const Index n = states.empty() ? 0 : states.front().temperatures.size();
  out << "t";
  for (Index i = 0; i < n; ++i) out << ",h_" << (i + 1);
  out << '\n';
  for (const auto& s : states) {
    out << format_number(s.time);
    for (Index i = 0; i < s.temperatures.size(); ++i) out << ',' << format_number(s.temperatures(i));
    out << '\n';
  }
}

void write_lpp_model(std::ostream& out, const LppModel& model) {
  out << "lpp-model 1\n";
  out << "m " << model.dimension() << '\n';
  out << "input_dim " << model.input_dim << '\n';
  out << "features " << model.projections.rows() << '\n';
  out << "expansion " << (model.expansion ? model.expansion->spec : std::string("none")) << '\n';
  out << "rank " << model.numerical_rank << '\n';
  out << "eigenvalues";
  for (Index u = 0; u < model.eigenvalues.size(); ++u) out << ' ' << format_number(model.eigenvalues(u));
  out << '\n';
  for (Index u = 0; u < model.dimension(); ++u) {
    out << "projection";
    for (Index i = 0; i < model.projections.rows(); ++i) {
      out << ' ' << format_number(model.projections(i, u));
    }
    out << '\n';
  }
}

LppModel parse_lpp_model(std::istream& in) {
  auto fail = [](const std::string& what) -> Error {
    return Error(ErrorKind::ParseError, "LPP model: " + what);
  };
  std::string line;
  auto next_tokens = [&](std::string_view key) {
    if (!std::getline(in, line)) throw fail("missing '" + std::string(key) + "' line");
    auto tokens = split_whitespace(line);
    if (tokens.empty() || tokens[0] != key) throw fail("expected '" + std::string(key) + "'");
    return tokens;
  };
  auto header = next_tokens("lpp-model");
  if (header.size() != 2 || header[1] != "1") throw fail("unsupported version");
  const long m = parse_index(next_tokens("m").at(1), 2);
  const long input_dim = parse_index(next_tokens("input_dim").at(1), 3);
  const long p = parse_index(next_tokens("features").at(1), 4);
  const std::string expansion(next_tokens("expansion").at(1));
  const long rank = parse_index(next_tokens("rank").at(1), 6);

  LppModel model;
  model.input_dim = input_dim;
  model.numerical_rank = rank;
  if (expansion != "none") model.expansion = Expansion::from_spec(expansion);
  auto values = next_tokens("eigenvalues");
  if (static_cast<long>(values.size()) != m + 1) throw fail("eigenvalue count mismatch");
  model.eigenvalues.resize(m);
  for (long u = 0; u < m; ++u) model.eigenvalues(u) = parse_double(values[static_cast<std::size_t>(u + 1)], 7);
  model.projections.resize(p, m);
  for (long u = 0; u < m; ++u) {
    auto z = next_tokens("projection");
    if (static_cast<long>(z.size()) != p + 1) throw fail("projection length mismatch");
    for (long i = 0; i < p; ++i) model.projections(i, u) = parse_double(z[static_cast<std::size_t>(i + 1)], 8 + u);
  }
  model.near_constant.assign(static_cast<std::size_t>(m), false);
  return model;
}

void write_file(const std::filesystem::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::ParseError, "cannot write '" + path.string() + "'");
  out << content;
}

}  // namespace spectral::io
