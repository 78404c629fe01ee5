// spectral: command-line front end for graph construction, spectra,
// Laplacian eigenmaps, locality preserving projections, spectral
// clustering and heat diffusion.

#include "spectral/cluster.hpp"
#include "spectral/diffusion.hpp"
#include "spectral/eigensolver.hpp"
#include "spectral/embed.hpp"
#include "spectral/error.hpp"
#include "spectral/graph.hpp"
#include "spectral/io.hpp"
#include "spectral/laplacian.hpp"
#include "spectral/plot.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

namespace {

using namespace spectral;

constexpr int kExitOk = 0;
constexpr int kExitParse = 2;
constexpr int kExitRecipe = 3;
constexpr int kExitNumerical = 4;
constexpr int kExitDisconnected = 5;

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ParseError:
    case ErrorKind::InvalidData:
    case ErrorKind::InvalidEdgeList:
      return kExitParse;
    case ErrorKind::InvalidRecipe:
    case ErrorKind::ShapeError:
    case ErrorKind::InvalidExpansion:
    case ErrorKind::PlotDimension:
      return kExitRecipe;
    case ErrorKind::NotSymmetric:
    case ErrorKind::NoConvergence:
    case ErrorKind::SingularConstraint:
    case ErrorKind::UnstableStep:
      return kExitNumerical;
    case ErrorKind::DisconnectedGraph:
    case ErrorKind::IsolatedNode:
      return kExitDisconnected;
  }
  return kExitNumerical;
}

struct RunConfig {
  std::string command;
  std::string input;
  std::string output = "-";
  std::string format = "auto";
  GraphRecipe recipe;
  int m = 2;
  int k = 2;
  std::uint64_t seed = 0;
  std::string plot;
  JacobiOptions jacobi;
  // graph
  std::string emit = "edges";
  // spectrum
  std::string kind = "generalized";
  // embed-lem
  std::string constraint = "degree";
  // embed-lpp
  int expansion_degree = 1;
  std::string model_out;
  std::string apply;
  std::string apply_output;
  // cluster
  std::string metrics;
  std::string reference;
  // diffuse
  std::string method = "analytic";
  double dt = 1e-3;
  std::vector<double> times{0.0, 1.0};
  int source = 1;
  std::string initial;
  std::string on_unstable = "error";
};

bool is_edge_input(const RunConfig& cfg) {
  if (cfg.format == "edges") return true;
  if (cfg.format == "csv") return false;
  const auto ext = std::filesystem::path(cfg.input).extension().string();
  if (ext == ".edges") return true;
  if (ext == ".csv") return false;
  throw Error(ErrorKind::ParseError,
              "cannot infer input format from '" + cfg.input + "'; pass --format csv|edges");
}

void validate(const RunConfig& cfg) {
  const bool edges = is_edge_input(cfg);
  if (!edges) cfg.recipe.validate();
  if (cfg.command == "embed-lem" || cfg.command == "embed-lpp") {
    if (cfg.m < 1) throw Error(ErrorKind::ShapeError, "--m must be at least 1");
  }
  if (cfg.command == "embed-lpp") {
    if (edges) throw Error(ErrorKind::InvalidRecipe, "embed-lpp needs vectorial (CSV) input");
    if (cfg.expansion_degree != 1 && cfg.expansion_degree != 2) {
      throw Error(ErrorKind::InvalidExpansion, "--expansion-degree must be 1 or 2");
    }
  }
  if (cfg.command == "cluster" && cfg.k < 1) {
    throw Error(ErrorKind::ShapeError, "--k must be at least 1");
  }
  if (!cfg.plot.empty()) {
    const int dim = cfg.command == "cluster" ? cfg.k : cfg.m;
    if (cfg.command != "cluster" && cfg.command != "embed-lem" && cfg.command != "embed-lpp") {
      throw Error(ErrorKind::InvalidRecipe, "--plot is only available for embeddings and clusters");
    }
    if (dim > 2) {
      throw Error(ErrorKind::PlotDimension,
                  "plotting needs a 1-D or 2-D embedding, requested " + std::to_string(dim));
    }
  }
  if (cfg.command == "diffuse") {
    if (!(cfg.dt > 0.0)) throw Error(ErrorKind::InvalidRecipe, "--dt must be positive");
    for (std::size_t i = 0; i < cfg.times.size(); ++i) {
      if (cfg.times[i] < 0.0 || (i > 0 && cfg.times[i] < cfg.times[i - 1])) {
        throw Error(ErrorKind::InvalidRecipe, "--times must be nonnegative and ascending");
      }
    }
    if (cfg.initial.empty() && cfg.source < 1) {
      throw Error(ErrorKind::InvalidRecipe, "--source is a 1-based node index");
    }
  }
  if (cfg.jacobi.max_sweeps < 1) throw Error(ErrorKind::InvalidRecipe, "--jacobi-sweeps must be >= 1");
}

struct Inputs {
  std::optional<DataSet> data;
  SimilarityGraph graph;
};

Inputs load(const RunConfig& cfg) {
  if (is_edge_input(cfg)) {
    return Inputs{std::nullopt, io::read_edge_list(cfg.input)};
  }
  DataSet data = io::read_csv(cfg.input);
  for (const auto& warning : recipe_warnings(cfg.recipe)) {
    std::cerr << "warning: " << warning << '\n';
  }
  SimilarityGraph g = build_graph(data, cfg.recipe);
  return Inputs{std::move(data), std::move(g)};
}

void deliver(const std::string& path, const std::string& content) {
  if (path.empty() || path == "-") {
    std::cout << content;
  } else {
    io::write_file(path, content);
  }
}

void run_graph(const RunConfig& cfg, const Inputs& in) {
  std::ostringstream out;
  const auto& g = in.graph;
  if (cfg.emit == "edges") {
    io::write_edge_list(out, g);
  } else if (cfg.emit == "weights") {
    io::write_matrix(out, g.weights());
  } else if (cfg.emit == "degrees") {
    io::write_matrix(out, degree_vector(g));
  } else if (cfg.emit == "laplacian") {
    io::write_matrix(out, laplacian(g));
  } else if (cfg.emit == "sym") {
    io::write_matrix(out, sym_normalized(g));
  } else if (cfg.emit == "rw") {
    io::write_matrix(out, random_walk_normalized(g));
  } else if (cfg.emit == "components") {
    const auto comps = connected_components(g);
    io::write_labels_csv(out, comps.labels);
  }
  deliver(cfg.output, out.str());
}

void run_spectrum(const RunConfig& cfg, const Inputs& in) {
  const Matrix l = laplacian(in.graph);
  const Vector d = degree_vector(in.graph);
  Spectrum s;
  if (cfg.kind == "ordinary") {
    s = sym_eig(l, cfg.jacobi);
  } else if (cfg.kind == "sym-normalized") {
    s = sym_normalized_eig(l, d, cfg.jacobi);
  } else {
    s = generalized_eig(l, d, cfg.jacobi);
  }
  std::ostringstream out;
  io::write_spectrum(out, s);
  deliver(cfg.output, out.str());
}

void run_embed_lem(const RunConfig& cfg, const Inputs& in) {
  LemOptions options;
  options.constraint = cfg.constraint == "identity" ? LemConstraint::Identity
                                                    : LemConstraint::DegreeWeighted;
  options.jacobi = cfg.jacobi;
  const Embedding e = lem_embed(in.graph, cfg.m, options);
  std::ostringstream out;
  io::write_embedding_csv(out, e);
  if (!cfg.plot.empty()) emit_scatter_svg(e.coords, std::nullopt, cfg.plot);
  deliver(cfg.output, out.str());
}

void run_embed_lpp(const RunConfig& cfg, const Inputs& in) {
  LppOptions options;
  options.jacobi = cfg.jacobi;
  std::optional<Expansion> expansion;
  if (cfg.expansion_degree == 2) expansion = Expansion::monomials(2);
  const LppModel model = lpp_fit(*in.data, in.graph, cfg.m, expansion, options);
  for (std::size_t u = 0; u < model.near_constant.size(); ++u) {
    if (model.near_constant[u]) {
      std::cerr << "warning: projection " << (u + 1) << " is nearly constant on the training data\n";
    }
  }
  Embedding training;
  training.source = EmbeddingSource::Lpp;
  training.coords = model.training_embedding;
  training.eigenvalues = model.eigenvalues;

  if (!cfg.model_out.empty()) {
    std::ostringstream m;
    io::write_lpp_model(m, model);
    io::write_file(cfg.model_out, m.str());
  }
  if (!cfg.apply.empty()) {
    const Embedding projected = lpp_transform(model, io::read_csv(cfg.apply));
    std::ostringstream a;
    io::write_embedding_csv(a, projected);
    deliver(cfg.apply_output, a.str());
  }
  if (!cfg.plot.empty()) emit_scatter_svg(training.coords, std::nullopt, cfg.plot);
  std::ostringstream out;
  io::write_embedding_csv(out, training);
  deliver(cfg.output, out.str());
}

void run_cluster(const RunConfig& cfg, const Inputs& in) {
  const SpectralCoordinates coords = spectral_coordinates(in.graph, cfg.k, cfg.jacobi);
  if (!coords.zero_columns.empty()) {
    std::cerr << "warning: " << coords.zero_columns.size()
              << " embedded points had zero norm and were left at the origin\n";
  }
  const ClusterAssignment result = kmeans(coords.points, cfg.k, cfg.seed);

  nlohmann::ordered_json metrics;
  metrics["inertia"] = result.inertia;
  metrics["iterations"] = result.iterations;
  if (!cfg.reference.empty()) {
    std::ifstream ref(cfg.reference);
    if (!ref) throw Error(ErrorKind::ParseError, "cannot open '" + cfg.reference + "'");
    metrics["ari_vs_reference"] = adjusted_rand_index(result.labels, io::parse_labels_csv(ref));
  }
  if (!cfg.metrics.empty()) io::write_file(cfg.metrics, metrics.dump(2) + "\n");
  if (!cfg.plot.empty()) emit_scatter_svg(coords.points, result.labels, cfg.plot);

  std::ostringstream out;
  io::write_labels_csv(out, result.labels);
  deliver(cfg.output, out.str());
}

void run_diffuse(const RunConfig& cfg, const Inputs& in) {
  const Index n = in.graph.n_nodes();
  HeatState h0;
  if (!cfg.initial.empty()) {
    std::ifstream f(cfg.initial);
    if (!f) throw Error(ErrorKind::ParseError, "cannot open '" + cfg.initial + "'");
    const Matrix values = io::parse_matrix(f);
    if (values.size() != n) {
      throw Error(ErrorKind::ShapeError, "initial state needs " + std::to_string(n) + " values");
    }
    h0.temperatures = values.reshaped();
  } else {
    if (cfg.source > n) throw Error(ErrorKind::InvalidRecipe, "--source exceeds node count");
    h0.temperatures = Vector::Zero(n);
    h0.temperatures(cfg.source - 1) = 1.0;
  }
  StepOptions step;
  step.on_unstable = cfg.on_unstable == "tag" ? StabilityPolicy::Tag : StabilityPolicy::Throw;
  if (cfg.method == "discrete" && step.on_unstable == StabilityPolicy::Tag &&
      cfg.dt >= 2.0 * max_stable_dt(laplacian(in.graph))) {
    std::cerr << "warning: UnstableStep: dt exceeds 2 / gamma_max\n";
  }
  const auto states =
      trajectory(laplacian(in.graph), h0, cfg.times,
                 cfg.method == "discrete" ? DiffusionMethod::Discrete : DiffusionMethod::Analytic,
                 cfg.dt, step);
  std::ostringstream out;
  io::write_trajectory_csv(out, states);
  deliver(cfg.output, out.str());
}

int run(const RunConfig& cfg) {
  validate(cfg);
  const Inputs in = load(cfg);
  if (cfg.command == "graph") run_graph(cfg, in);
  else if (cfg.command == "spectrum") run_spectrum(cfg, in);
  else if (cfg.command == "embed-lem") run_embed_lem(cfg, in);
  else if (cfg.command == "embed-lpp") run_embed_lpp(cfg, in);
  else if (cfg.command == "cluster") run_cluster(cfg, in);
  else if (cfg.command == "diffuse") run_diffuse(cfg, in);
  return kExitOk;
}

const std::map<std::string, GraphMethod> kMethods{
    {"epsilon", GraphMethod::Epsilon}, {"knn", GraphMethod::Knn}, {"full", GraphMethod::Full}};
const std::map<std::string, KnnMode> kKnnModes{{"mutual", KnnMode::Mutual},
                                                {"symmetric", KnnMode::Symmetric}};
const std::map<std::string, Weighting> kWeightings{{"binary", Weighting::Binary},
                                                    {"gaussian", Weighting::Gaussian}};

void add_common(CLI::App& sub, RunConfig& cfg) {
  sub.add_option("-i,--input", cfg.input, "Input file (.csv samples or .edges edge list)")
      ->required();
  sub.add_option("-o,--output", cfg.output, "Output file ('-' for stdout)");
  sub.add_option("--format", cfg.format, "Input format")
      ->check(CLI::IsMember({"auto", "csv", "edges"}));
  sub.add_option("--graph", cfg.recipe.method, "Similarity graph construction")
      ->transform(CLI::CheckedTransformer(kMethods));
  sub.add_option("--epsilon", cfg.recipe.epsilon, "Distance threshold (epsilon graph)");
  sub.add_option("--neighbors", cfg.recipe.k, "Neighbor count (knn graph)");
  sub.add_option("--knn-mode", cfg.recipe.knn_mode, "k-NN symmetrization")
      ->transform(CLI::CheckedTransformer(kKnnModes));
  sub.add_option("--weighting", cfg.recipe.weighting, "Edge weighting")
      ->transform(CLI::CheckedTransformer(kWeightings));
  sub.add_option("--sigma", cfg.recipe.sigma, "Gaussian width");
  sub.add_option("--jacobi-sweeps", cfg.jacobi.max_sweeps, "Jacobi sweep cap");
  sub.add_option("--jacobi-tol", cfg.jacobi.off_diagonal_rel,
                 "Relative off-diagonal norm at which Jacobi stops");
}

}  // namespace

int main(int argc, char** argv) {
  RunConfig cfg;
  CLI::App app{
      "Spectral graph toolkit.\n\n"
      "Exit codes: 0 ok, 2 parse error, 3 invalid recipe or arguments, 4 numerical "
      "failure, 5 disconnected graph or isolated node.\n"
      "Failures print one line 'error: <Kind>: <message>' on stderr."};
  app.set_config("--config", "", "Read options from a TOML/INI file (flags take precedence)");
  bool dump_config = false;
  app.add_flag("--dump-config", dump_config, "Print the resolved configuration and exit");
  app.require_subcommand(1);

  auto* graph = app.add_subcommand("graph", "Build a similarity graph and export a matrix");
  add_common(*graph, cfg);
  graph->add_option("--emit", cfg.emit, "What to write")
      ->check(CLI::IsMember({"edges", "weights", "degrees", "laplacian", "sym", "rw", "components"}));

  auto* spectrum = app.add_subcommand("spectrum", "Eigenpairs of the graph Laplacian");
  add_common(*spectrum, cfg);
  spectrum->add_option("--kind", cfg.kind, "Eigenproblem")
      ->check(CLI::IsMember({"ordinary", "generalized", "sym-normalized"}));

  auto* lem = app.add_subcommand("embed-lem", "Laplacian eigenmaps embedding");
  add_common(*lem, cfg);
  lem->add_option("--m", cfg.m, "Target dimension");
  lem->add_option("--constraint", cfg.constraint, "Normalization constraint")
      ->check(CLI::IsMember({"degree", "identity"}));
  lem->add_option("--plot", cfg.plot, "Write an SVG scatter plot (m <= 2)");

  auto* lpp = app.add_subcommand("embed-lpp", "Locality preserving projections");
  add_common(*lpp, cfg);
  lpp->add_option("--m", cfg.m, "Target dimension");
  lpp->add_option("--expansion-degree", cfg.expansion_degree, "Monomial expansion degree (1 or 2)");
  lpp->add_option("--model-out", cfg.model_out, "Write the fitted model");
  lpp->add_option("--apply", cfg.apply, "Project this CSV with the fitted model");
  lpp->add_option("--apply-output", cfg.apply_output, "Destination for --apply ('-' for stdout)");
  lpp->add_option("--plot", cfg.plot, "Write an SVG scatter plot (m <= 2)");

  auto* cluster = app.add_subcommand("cluster", "Normalized spectral clustering");
  add_common(*cluster, cfg);
  cluster->add_option("--k", cfg.k, "Number of clusters");
  cluster->add_option("--seed", cfg.seed, "k-means++ seed");
  cluster->add_option("--metrics", cfg.metrics, "Write metrics JSON");
  cluster->add_option("--reference", cfg.reference, "Reference labels CSV for the ARI metric");
  cluster->add_option("--plot", cfg.plot, "Write an SVG scatter plot of the spectral points (k <= 2)");

  auto* diffuse = app.add_subcommand("diffuse", "Heat diffusion on the graph");
  add_common(*diffuse, cfg);
  diffuse->add_option("--method", cfg.method, "Solver")
      ->check(CLI::IsMember({"analytic", "discrete"}));
  diffuse->add_option("--dt", cfg.dt, "Euler step (discrete method)");
  diffuse->add_option("--times", cfg.times, "Sample times")->delimiter(',');
  diffuse->add_option("--source", cfg.source, "Node holding unit initial heat (1-based)");
  diffuse->add_option("--initial", cfg.initial, "File with one initial temperature per node");
  diffuse->add_option("--on-unstable", cfg.on_unstable, "Unstable step handling")
      ->check(CLI::IsMember({"error", "tag"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: ParseError: " << e.what() << '\n';
    return kExitParse;
  }

  for (auto* sub : app.get_subcommands()) cfg.command = sub->get_name();
  if (dump_config) {
    std::cout << app.config_to_str(true, false);
    return kExitOk;
  }

  try {
    return run(cfg);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_code_for(e.kind());
  } catch (const std::exception& e) {
    std::cerr << "error: Internal: " << e.what() << '\n';
    return kExitNumerical;
  }
}
