// opdr: measure, fit and recommend k-neighbor preserving target dimensions.

#include "opdr/core.hpp"
#include "opdr/error.hpp"
#include "opdr/fit.hpp"
#include "opdr/harness.hpp"
#include "opdr/knn.hpp"
#include "opdr/opm.hpp"
#include "opdr/reduce.hpp"
#include "opdr/subsample.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

namespace {

constexpr const char* kVersion = "0.1.0";

using json = nlohmann::ordered_json;

// Thrown for argument values that parse but make no sense; exit code 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

opdr::Metric metric_or_throw(const std::string& text) {
  auto metric = opdr::parse_metric(text);
  if (!metric) throw UsageError("unknown metric '" + text + "' (expected l1, l2 or cosine)");
  return *metric;
}

opdr::Method method_or_throw(const std::string& text) {
  auto method = opdr::parse_method(text);
  if (!method) throw UsageError("unknown method '" + text + "' (expected pca or mds)");
  return *method;
}

std::string read_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw opdr::Error(opdr::Errc::IoRead, "cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<std::size_t> parse_dims(const std::string& text) {
  if (text == "all") return {};
  std::vector<std::size_t> dims;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      const long long v = std::stoll(item, &used);
      if (used != item.size() || v < 1) throw std::invalid_argument(item);
      dims.push_back(static_cast<std::size_t>(v));
    } catch (const std::exception&) {
      throw UsageError("--dims expects 'all' or a comma-separated list of positive integers, got '" + text + "'");
    }
  }
  if (dims.empty()) throw UsageError("--dims list is empty");
  return dims;
}

json fit_to_json(const opdr::FitResult& fit) {
  return json{{"c0", fit.c0}, {"c1", fit.c1}, {"r_squared", fit.r_squared}, {"n_points", fit.n_points}};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Order-preserving dimension reduction: measure k-neighbor preservation, fit the "
               "accuracy/dimension law and recommend target dimensions."};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);

  // ingest
  auto* ingest = app.add_subcommand("ingest", "Convert a CSV or binary vector file to OPDR-VEC float64");
  std::string ingest_format = "csv";
  std::string ingest_dtype = "float64";
  std::string ingest_in;
  std::string ingest_out;
  ingest->add_option("--format", ingest_format, "Input format")->check(CLI::IsMember({"csv", "binary"}))
      ->capture_default_str();
  ingest->add_option("--dtype", ingest_dtype, "Output payload type")->check(CLI::IsMember({"float32", "float64"}))
      ->capture_default_str();
  ingest->add_option("in", ingest_in, "Input file")->required()->check(CLI::ExistingFile);
  ingest->add_option("out", ingest_out, "Output .vec file")->required();

  // reduce
  auto* reduce_cmd = app.add_subcommand("reduce", "Reduce a vector file with PCA or classical MDS");
  std::string reduce_method = "pca";
  std::size_t reduce_dim = 0;
  std::string reduce_metric = "l2";
  std::string reduce_in;
  std::string reduce_out;
  reduce_cmd->add_option("--method", reduce_method, "Reducer")->check(CLI::IsMember({"pca", "mds"}))
      ->capture_default_str();
  reduce_cmd->add_option("--dim", reduce_dim, "Target dimension n (>= 1)")->required()->check(CLI::PositiveNumber);
  reduce_cmd->add_option("--metric", reduce_metric, "Distance feeding MDS (ignored by PCA)")
      ->check(CLI::IsMember({"l1", "l2", "cosine"}))
      ->capture_default_str();
  reduce_cmd->add_option("in", reduce_in, "Input .vec file")->required()->check(CLI::ExistingFile);
  reduce_cmd->add_option("out", reduce_out, "Output .vec file")->required();

  // eval
  auto* eval = app.add_subcommand("eval", "Accuracy of k-neighbor preservation between two vector files");
  std::size_t eval_k = 5;
  std::string eval_metric = "l2";
  std::string eval_x;
  std::string eval_y;
  eval->add_option("--k", eval_k, "Neighbors per point")->check(CLI::PositiveNumber)->capture_default_str();
  eval->add_option("--metric", eval_metric, "Distance used in both spaces")
      ->check(CLI::IsMember({"l1", "l2", "cosine"}))
      ->capture_default_str();
  eval->add_option("x", eval_x, "Original space .vec")->required()->check(CLI::ExistingFile);
  eval->add_option("y", eval_y, "Reduced space .vec")->required()->check(CLI::ExistingFile);

  // sweep
  auto* sweep = app.add_subcommand("sweep", "Accuracy over subsample sizes m and target dimensions n");
  opdr::SweepConfig sweep_cfg;
  std::string sweep_metric = "l2";
  std::string sweep_method = "pca";
  std::string sweep_dims = "all";
  std::string sweep_in;
  std::string sweep_out;
  sweep->add_option("--k", sweep_cfg.k, "Neighbors per point")->check(CLI::PositiveNumber)->capture_default_str();
  sweep->add_option("--metric", sweep_metric, "Distance used in both spaces")
      ->check(CLI::IsMember({"l1", "l2", "cosine"}))
      ->capture_default_str();
  sweep->add_option("--method", sweep_method, "Reducer")->check(CLI::IsMember({"pca", "mds"}))->capture_default_str();
  sweep->add_option("--sizes", sweep_cfg.sample_sizes, "Subsample sizes m, ascending")
      ->delimiter(',')
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  sweep->add_option("--dims", sweep_dims, "Target dimensions: 'all' (1..m-1) or a comma-separated list")
      ->capture_default_str();
  sweep->add_option("--seed", sweep_cfg.seed, "Subsampling seed")->capture_default_str();
  sweep->add_option("--repeats", sweep_cfg.repeats, "Independent draws per m")->check(CLI::PositiveNumber)
      ->capture_default_str();
  sweep->add_option("--threads", sweep_cfg.threads, "Worker threads (0 = all cores)")->capture_default_str();
  sweep->add_option("in", sweep_in, "Input .vec file")->required()->check(CLI::ExistingFile);
  sweep->add_option("out", sweep_out, "Output CSV")->required();

  // fit
  auto* fit_cmd = app.add_subcommand("fit", "Fit accuracy = c0 * ln(n/m) + c1 to a sweep CSV");
  std::string fit_in;
  std::string fit_out;
  fit_cmd->add_option("in", fit_in, "Sweep CSV")->required()->check(CLI::ExistingFile);
  fit_cmd->add_option("-o,--output", fit_out, "Write the fit JSON here instead of standard output");

  // recommend
  auto* recommend = app.add_subcommand("recommend", "Smallest target dimension reaching an accuracy");
  std::string rec_fit;
  double rec_accuracy = 1.0;
  std::size_t rec_m = 0;
  std::size_t rec_max_dim = 0;
  recommend->add_option("--fit", rec_fit, "Fit JSON from 'opdr fit'")->required()->check(CLI::ExistingFile);
  recommend->add_option("--accuracy", rec_accuracy, "Target accuracy in (0, 1]")->required()
      ->check(CLI::Range(0.0, 1.0));
  recommend->add_option("--m", rec_m, "Number of points")->required()->check(CLI::PositiveNumber);
  recommend->add_option("--max-dim", rec_max_dim, "Original dimension")->required()->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*ingest) {
      const auto vs = opdr::load_vectors(ingest_in, ingest_format == "csv" ? opdr::FileFormat::Csv
                                                                           : opdr::FileFormat::Binary);
      opdr::save_vectors(vs, ingest_out, opdr::FileFormat::Binary,
                         ingest_dtype == "float32" ? opdr::Dtype::Float32 : opdr::Dtype::Float64);
    } else if (*reduce_cmd) {
      const auto x = opdr::load_vectors(reduce_in, opdr::FileFormat::Binary);
      const auto result =
          opdr::reduce(x, {method_or_throw(reduce_method), reduce_dim, metric_or_throw(reduce_metric)});
      if (result.zero_padded) {
        std::cerr << "opdr: warning: fewer than " << reduce_dim
                  << " positive eigenvalues; trailing columns are zero\n";
      }
      opdr::save_vectors(result.y, reduce_out, opdr::FileFormat::Binary);
    } else if (*eval) {
      const auto metric = metric_or_throw(eval_metric);
      const auto x = opdr::load_vectors(eval_x, opdr::FileFormat::Binary);
      const auto y = opdr::load_vectors(eval_y, opdr::FileFormat::Binary);
      if (x.count() != y.count()) {
        throw opdr::Error(opdr::Errc::TableMismatch, "x has " + std::to_string(x.count()) + " points, y has " +
                                                         std::to_string(y.count()));
      }
      const auto report = opdr::accuracy(opdr::knn_table(x, eval_k, metric), opdr::knn_table(y, eval_k, metric));
      json out{{"k", report.k},
               {"metric", std::string(opdr::to_string(report.metric))},
               {"accuracy", report.accuracy},
               {"per_point", report.per_point},
               {"is_op_k", report.is_op_k}};
      std::cout << out.dump() << '\n';
    } else if (*sweep) {
      sweep_cfg.metric = metric_or_throw(sweep_metric);
      sweep_cfg.method = method_or_throw(sweep_method);
      sweep_cfg.dims = parse_dims(sweep_dims);
      const auto x = opdr::load_vectors(sweep_in, opdr::FileFormat::Binary);
      const auto records = opdr::run_sweep(x, sweep_cfg);
      std::string comment = " seed=" + std::to_string(sweep_cfg.seed) + " generator=" +
                            std::string(opdr::kSamplerId) + " dataset=" + sweep_in + " k=" +
                            std::to_string(sweep_cfg.k) + " metric=" + sweep_metric + " method=" + sweep_method +
                            " version=" + kVersion;
      opdr::write_file_atomic(sweep_out, opdr::format_sweep_csv(records, comment));
    } else if (*fit_cmd) {
      const auto records = opdr::parse_sweep_csv(read_text(fit_in));
      const auto text = fit_to_json(opdr::fit_law(opdr::to_fit_samples(records))).dump(2) + "\n";
      if (fit_out.empty()) {
        std::cout << text;
      } else {
        opdr::write_file_atomic(fit_out, text);
      }
    } else if (*recommend) {
      if (rec_accuracy <= 0.0) throw UsageError("--accuracy must be in (0, 1]");
      opdr::FitResult fit;
      try {
        const auto doc = json::parse(read_text(rec_fit));
        fit.c0 = doc.at("c0").get<double>();
        fit.c1 = doc.at("c1").get<double>();
        fit.r_squared = doc.value("r_squared", 0.0);
        fit.n_points = doc.value("n_points", std::size_t{0});
      } catch (const json::exception& e) {
        throw opdr::Error(opdr::Errc::MalformedValue, "fit file " + rec_fit + ": " + e.what());
      }
      const auto rec = opdr::recommend_dim(fit, rec_accuracy, rec_m, rec_max_dim);
      json out{{"target_accuracy", rec.target_accuracy},
               {"m", rec.m},
               {"raw", rec.raw},
               {"recommended_dim", rec.recommended_dim},
               {"clamped", rec.clamped}};
      std::cout << out.dump(2) << '\n';
    }
  } catch (const UsageError& e) {
    std::cerr << "opdr: usage: " << e.what() << '\n';
    return 2;
  } catch (const opdr::Error& e) {
    std::cerr << "opdr: error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "opdr: error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
