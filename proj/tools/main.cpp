// Command-line front end for the spectral-rounding library. Talks to the
// core exclusively through the C API in specround/specround.h.

#include "specround/specround.h"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

using ordered_json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitCompute = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ComputeError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

[[noreturn]] void compute_fail(const std::string& context) {
    std::string detail = sr_last_error();
    throw ComputeError(context + (detail.empty() ? "" : ": " + detail));
}

using DatasetPtr = std::unique_ptr<sr_dataset, decltype(&sr_dataset_free)>;
using SimilarityPtr = std::unique_ptr<sr_similarity, decltype(&sr_similarity_free)>;
using EigenPtr = std::unique_ptr<sr_eigensystem, decltype(&sr_eigensystem_free)>;
using ResultPtr = std::unique_ptr<sr_result, decltype(&sr_result_free)>;
using LabelsPtr = std::unique_ptr<sr_labels, decltype(&sr_labels_free)>;

std::string fmt(double v) {
    char buf[32];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    if (ec != std::errc()) throw ComputeError("failed to format number");
    return std::string(buf, ptr);
}

std::uint64_t fnv1a_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ComputeError("cannot hash " + path);
    std::uint64_t h = 0xcbf29ce484222325ULL;
    char chunk[4096];
    while (in.read(chunk, sizeof(chunk)) || in.gcount() > 0) {
        for (std::streamsize i = 0; i < in.gcount(); ++i) {
            h ^= static_cast<unsigned char>(chunk[i]);
            h *= 0x100000001b3ULL;
        }
        if (!in) break;
    }
    return h;
}

std::string hex64(std::uint64_t v) {
    char buf[17];
    static const char* digits = "0123456789abcdef";
    for (int i = 15; i >= 0; --i) {
        buf[i] = digits[v & 0xf];
        v >>= 4;
    }
    buf[16] = '\0';
    return std::string(buf);
}

// ---------- similarity-function option ----------

struct SimilarityFn {
    enum class Kind { knn, gaussian } kind = Kind::knn;
    int k = 10;
    double sigma = 0.2;
    std::string text = "knn:10";
};

SimilarityFn parse_similarity_fn(const std::string& text) {
    SimilarityFn fn;
    fn.text = text;
    const auto colon = text.find(':');
    if (colon == std::string::npos)
        throw UsageError("--similarity-fn expects knn:<k> or gauss:<sigma>, got " + text);
    const std::string head = text.substr(0, colon);
    const std::string tail = text.substr(colon + 1);
    try {
        if (head == "knn") {
            fn.kind = SimilarityFn::Kind::knn;
            std::size_t used = 0;
            fn.k = std::stoi(tail, &used);
            if (used != tail.size()) throw std::invalid_argument(tail);
        } else if (head == "gauss" || head == "gaussian") {
            fn.kind = SimilarityFn::Kind::gaussian;
            std::size_t used = 0;
            fn.sigma = std::stod(tail, &used);
            if (used != tail.size()) throw std::invalid_argument(tail);
        } else {
            throw UsageError("unknown similarity function '" + head + "'");
        }
    } catch (const UsageError&) {
        throw;
    } catch (const std::exception&) {
        throw UsageError("cannot parse similarity parameter in '" + text + "'");
    }
    return fn;
}

// ---------- shared pipeline pieces ----------

struct InputOptions {
    std::string points_path;
    std::string similarity_path;
    std::string preset;
    std::string labels_mode = "auto";
    std::string similarity_fn_text;
    std::uint64_t seed = 0;  // used when generating from a preset
};

int label_mode_code(const std::string& mode) {
    if (mode == "auto") return 0;
    if (mode == "yes") return 1;
    if (mode == "no") return 2;
    throw UsageError("--labels-mode must be auto, yes, or no");
}

struct PipelineInput {
    DatasetPtr dataset{nullptr, sr_dataset_free};
    SimilarityPtr similarity{nullptr, sr_similarity_free};
    SimilarityFn fn;
    bool fn_used = false;
};

PipelineInput load_input(const InputOptions& opt) {
    const int sources = (opt.points_path.empty() ? 0 : 1) +
                        (opt.similarity_path.empty() ? 0 : 1) +
                        (opt.preset.empty() ? 0 : 1);
    if (sources != 1)
        throw UsageError("give exactly one input: --points, --similarity, or --preset");

    PipelineInput in;
    if (!opt.similarity_path.empty()) {
        in.similarity.reset(sr_similarity_read_csv(opt.similarity_path.c_str()));
        if (!in.similarity) compute_fail("reading similarity matrix");
        if (!opt.similarity_fn_text.empty())
            throw UsageError("--similarity-fn conflicts with --similarity");
        return in;
    }

    if (!opt.points_path.empty()) {
        in.dataset.reset(sr_dataset_read_csv(opt.points_path.c_str(),
                                             label_mode_code(opt.labels_mode)));
        if (!in.dataset) compute_fail("reading points");
    } else {
        in.dataset.reset(sr_dataset_from_preset(opt.preset.c_str(), opt.seed));
        if (!in.dataset) compute_fail("generating preset dataset");
    }

    in.fn = parse_similarity_fn(
        opt.similarity_fn_text.empty() ? "knn:10" : opt.similarity_fn_text);
    in.fn_used = true;
    if (in.fn.kind == SimilarityFn::Kind::knn)
        in.similarity.reset(sr_similarity_knn(in.dataset.get(), in.fn.k));
    else
        in.similarity.reset(sr_similarity_gaussian(in.dataset.get(), in.fn.sigma));
    if (!in.similarity) compute_fail("building similarity graph");
    return in;
}

EigenPtr compute_eigs(const PipelineInput& in, int K) {
    EigenPtr es(sr_eigensystem_compute(in.similarity.get(), K), sr_eigensystem_free);
    if (!es) compute_fail("computing eigensystem");
    return es;
}

std::vector<std::int32_t> truth_labels(const PipelineInput& in,
                                       const std::string& truth_path, int n) {
    if (!truth_path.empty()) {
        LabelsPtr labels(sr_labels_read_csv(truth_path.c_str()), sr_labels_free);
        if (!labels) compute_fail("reading truth labels");
        const int tn = sr_labels_n(labels.get());
        if (tn != n)
            throw ComputeError("truth labels count (" + std::to_string(tn) +
                               ") does not match point count (" + std::to_string(n) + ")");
        std::vector<std::int32_t> out(static_cast<std::size_t>(n));
        if (sr_labels_get(labels.get(), out.data()) != SR_OK)
            compute_fail("reading truth labels");
        return out;
    }
    if (in.dataset && sr_dataset_has_labels(in.dataset.get()) == 1) {
        std::vector<std::int32_t> out(static_cast<std::size_t>(n));
        if (sr_dataset_labels(in.dataset.get(), out.data()) != SR_OK)
            compute_fail("reading embedded labels");
        return out;
    }
    return {};
}

// ---------- cluster ----------

struct ClusterOptions {
    InputOptions input;
    std::string method = "ltm";
    int K = 40;
    double delta = 0.1;
    int restarts = 5;
    std::uint64_t seed = 0;
    int k = 0;  // kmeans only
    std::string dof_mode = "pair";
    std::string truth_path;
    std::string out_path;
    std::string record_path;
    std::string svg_path;
    std::string labels_out;
};

struct ClusterOutcome {
    ResultPtr result{nullptr, sr_result_free};
    std::vector<std::int32_t> assignment;
    std::vector<sr_trace_entry> trace;
    std::optional<sr_metrics> metrics;
    int q = 0;
    int k = 0;
};

int dof_mode_code(const std::string& mode) {
    if (mode == "pair") return 0;
    if (mode == "structural") return 1;
    throw UsageError("--ltm-dof-mode must be pair or structural");
}

void check_method(const ClusterOptions& opt) {
    if (opt.method != "ltm" && opt.method != "naive" && opt.method != "kmeans")
        throw UsageError("--method must be ltm, naive, or kmeans");
    if (opt.method == "kmeans" && opt.k < 2)
        throw UsageError("--method kmeans requires --k >= 2");
}

int eigs_needed(const ClusterOptions& opt) {
    return opt.method == "kmeans" ? std::max(opt.K, opt.k) : opt.K;
}

ClusterOutcome run_cluster(const PipelineInput& in, const ClusterOptions& opt,
                           const sr_eigensystem* es) {
    check_method(opt);

    ClusterOutcome out;
    if (opt.method == "ltm") {
        out.result.reset(sr_cluster_ltm(es, opt.K, opt.delta, opt.restarts,
                                        opt.seed, dof_mode_code(opt.dof_mode)));
    } else if (opt.method == "naive") {
        out.result.reset(sr_cluster_naive(es, opt.K, opt.delta));
    } else {
        out.result.reset(sr_cluster_kmeans(es, opt.k, opt.restarts, opt.seed));
    }
    if (!out.result) compute_fail("clustering");

    const int n = sr_result_n(out.result.get());
    out.q = sr_result_q(out.result.get());
    out.k = sr_result_k(out.result.get());
    out.assignment.resize(static_cast<std::size_t>(n));
    if (sr_result_assignment(out.result.get(), out.assignment.data()) != SR_OK)
        compute_fail("reading assignment");

    const int trace_size = sr_result_trace_size(out.result.get());
    if (trace_size > 0) {
        out.trace.resize(static_cast<std::size_t>(trace_size));
        if (sr_result_trace(out.result.get(), out.trace.data()) != SR_OK)
            compute_fail("reading trace");
    }

    const int flags = sr_result_flags(out.result.get());
    if (flags & 1)
        std::cerr << "warning: best score at q = floor(K/2); raise K for headroom\n";
    if (flags & 2)
        std::cerr << "warning: containment test never triggered; returning the "
                     "last partition of the search\n";

    std::vector<std::int32_t> truth = truth_labels(in, opt.truth_path, n);
    if (!truth.empty()) {
        sr_metrics m{};
        if (sr_evaluate(out.assignment.data(), truth.data(), n, &m) != SR_OK)
            compute_fail("evaluating against truth labels");
        out.metrics = m;
    }
    return out;
}

ordered_json params_json(const ClusterOptions& opt, const PipelineInput& in) {
    ordered_json params;
    if (opt.method == "kmeans") {
        params["k"] = opt.k;
        params["restarts"] = opt.restarts;
        params["seed"] = opt.seed;
    } else {
        params["K"] = opt.K;
        params["delta"] = opt.delta;
        if (opt.method == "ltm") {
            params["restarts"] = opt.restarts;
            params["seed"] = opt.seed;
            params["dof_mode"] = opt.dof_mode;
        }
    }
    if (in.fn_used) params["similarity"] = in.fn.text;
    return params;
}

ordered_json result_json(const ClusterOptions& opt, const PipelineInput& in,
                         const ClusterOutcome& out) {
    ordered_json doc;
    doc["method"] = opt.method;
    doc["params"] = params_json(opt, in);
    doc["q"] = out.q;
    doc["k"] = out.k;
    doc["assignment"] = out.assignment;
    ordered_json trace = ordered_json::array();
    for (const sr_trace_entry& t : out.trace) {
        ordered_json entry;
        entry["q"] = t.q;
        entry["k"] = t.k;
        entry["lcm_bic"] = t.lcm_bic;
        entry["ltm_bic"] = t.ltm_bic;
        trace.push_back(std::move(entry));
    }
    doc["bic_trace"] = std::move(trace);
    if (out.metrics) {
        ordered_json m;
        m["rand_index"] = out.metrics->rand_index;
        m["vi"] = out.metrics->vi;
        m["k_found"] = out.metrics->k_found;
        m["k_true"] = out.metrics->k_true;
        doc["metrics"] = std::move(m);
    }
    return doc;
}

void write_text(const std::string& path, const std::string& text) {
    std::ofstream f(path);
    if (!f) throw ComputeError("cannot write " + path);
    f << text;
}

// ---------- SVG emission ----------

const char* palette(int c) {
    static const char* colors[] = {"#4e79a7", "#f28e2b", "#e15759", "#76b7b2",
                                   "#59a14f", "#edc948", "#b07aa1", "#ff9da7",
                                   "#9c755f", "#bab0ac", "#1f77b4", "#8c564b"};
    return colors[c % 12];
}

void emit_svg(const std::string& path, const PipelineInput& in,
              const EigenPtr& es, const ClusterOutcome& out) {
    const int n = static_cast<int>(out.assignment.size());
    const bool have_points =
        in.dataset && sr_dataset_dim(in.dataset.get()) == 2;
    const int panels =
        std::min({out.q > 0 ? out.q : 4, 8, sr_eigensystem_count(es.get())});
    const int width = 640;
    const int scatter_h = have_points ? 480 : 0;
    const int panel_h = 90;
    const int height = scatter_h + panels * panel_h + 20;

    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width
        << "\" height=\"" << height << "\" viewBox=\"0 0 " << width << " "
        << height << "\">\n";
    svg << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

    if (have_points) {
        std::vector<double> pts(static_cast<std::size_t>(n) * 2);
        if (sr_dataset_points(in.dataset.get(), pts.data()) != SR_OK)
            compute_fail("reading points for plot");
        double xmin = pts[0], xmax = pts[0], ymin = pts[1], ymax = pts[1];
        for (int i = 0; i < n; ++i) {
            xmin = std::min(xmin, pts[2 * i]);
            xmax = std::max(xmax, pts[2 * i]);
            ymin = std::min(ymin, pts[2 * i + 1]);
            ymax = std::max(ymax, pts[2 * i + 1]);
        }
        const double spanx = std::max(xmax - xmin, 1e-12);
        const double spany = std::max(ymax - ymin, 1e-12);
        const double margin = 24.0;
        for (int i = 0; i < n; ++i) {
            const double px =
                margin + (pts[2 * i] - xmin) / spanx * (width - 2 * margin);
            const double py = scatter_h - margin -
                              (pts[2 * i + 1] - ymin) / spany * (scatter_h - 2 * margin);
            svg << "<circle cx=\"" << fmt(px) << "\" cy=\"" << fmt(py)
                << "\" r=\"2.4\" fill=\""
                << palette(out.assignment[static_cast<std::size_t>(i)]) << "\"/>\n";
        }
    }

    const int K = sr_eigensystem_count(es.get());
    const int shown = std::min(panels, K);
    std::vector<double> vecs(static_cast<std::size_t>(n) * static_cast<std::size_t>(K));
    if (sr_eigensystem_vectors(es.get(), vecs.data()) != SR_OK)
        compute_fail("reading eigenvectors for plot");
    for (int j = 0; j < shown; ++j) {
        const double* col = vecs.data() + static_cast<std::size_t>(j) * n;
        double lo = col[0], hi = col[0];
        for (int i = 0; i < n; ++i) {
            lo = std::min(lo, col[i]);
            hi = std::max(hi, col[i]);
        }
        const double span = std::max(hi - lo, 1e-12);
        const int top = scatter_h + 10 + j * panel_h;
        svg << "<text x=\"6\" y=\"" << top + 12
            << "\" font-size=\"11\" font-family=\"sans-serif\">e" << (j + 1)
            << "</text>\n";
        for (int i = 0; i < n; ++i) {
            const double px = 30.0 + static_cast<double>(i) / std::max(n - 1, 1) *
                                         (width - 40.0);
            const double py = top + (panel_h - 18) -
                              (col[i] - lo) / span * (panel_h - 24) + 4;
            svg << "<circle cx=\"" << fmt(px) << "\" cy=\"" << fmt(py)
                << "\" r=\"1.2\" fill=\""
                << palette(out.assignment[static_cast<std::size_t>(i)]) << "\"/>\n";
        }
    }
    svg << "</svg>\n";
    write_text(path, svg.str());
}

// ---------- subcommand drivers ----------

int cmd_gen(const std::string& preset, std::uint64_t seed, const std::string& out,
            bool no_labels) {
    DatasetPtr ds(sr_dataset_from_preset(preset.c_str(), seed), sr_dataset_free);
    if (!ds) compute_fail("generating dataset");
    if (sr_dataset_write_csv(ds.get(), out.c_str(), no_labels ? 0 : 1) != SR_OK)
        compute_fail("writing dataset");
    return kExitOk;
}

int cmd_eigen(const InputOptions& input, int K, const std::string& values_out,
              const std::string& vectors_out) {
    PipelineInput in = load_input(input);
    EigenPtr es = compute_eigs(in, K);
    const int n = sr_eigensystem_n(es.get());
    const int count = sr_eigensystem_count(es.get());

    std::vector<double> values(static_cast<std::size_t>(count));
    if (sr_eigensystem_values(es.get(), values.data()) != SR_OK)
        compute_fail("reading eigenvalues");
    std::ostringstream vals;
    vals << "eigenvalue\n";
    for (double v : values) vals << fmt(v) << '\n';
    write_text(values_out, vals.str());

    std::vector<double> vecs(static_cast<std::size_t>(n) * static_cast<std::size_t>(count));
    if (sr_eigensystem_vectors(es.get(), vecs.data()) != SR_OK)
        compute_fail("reading eigenvectors");
    std::ostringstream body;
    for (int j = 0; j < count; ++j) body << (j ? "," : "") << "e" << (j + 1);
    body << '\n';
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < count; ++j)
            body << (j ? "," : "") << fmt(vecs[static_cast<std::size_t>(j) * n + i]);
        body << '\n';
    }
    write_text(vectors_out, body.str());
    return kExitOk;
}

int cmd_cluster(const ClusterOptions& opt) {
    const auto started = std::chrono::steady_clock::now();
    PipelineInput in = load_input(opt.input);
    if (!in.dataset)
        std::cerr << "warning: no point coordinates; scatter plots unavailable\n";

    check_method(opt);
    EigenPtr es = compute_eigs(in, eigs_needed(opt));
    ClusterOutcome out = run_cluster(in, opt, es.get());
    ordered_json doc = result_json(opt, in, out);
    const std::string rendered = doc.dump(2) + "\n";
    if (opt.out_path.empty())
        std::cout << rendered;
    else
        write_text(opt.out_path, rendered);

    if (!opt.labels_out.empty() &&
        sr_labels_write_csv(opt.labels_out.c_str(), out.assignment.data(),
                            static_cast<int>(out.assignment.size())) != SR_OK)
        compute_fail("writing assignment labels");

    if (!opt.svg_path.empty()) emit_svg(opt.svg_path, in, es, out);

    if (!opt.record_path.empty()) {
        const double seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - started)
                .count();
        ordered_json record;
        ordered_json inputs = ordered_json::array();
        for (const std::string& p :
             {opt.input.points_path, opt.input.similarity_path, opt.truth_path}) {
            if (p.empty()) continue;
            ordered_json one;
            one["path"] = p;
            one["fnv1a"] = hex64(fnv1a_file(p));
            inputs.push_back(std::move(one));
        }
        record["inputs"] = std::move(inputs);
        if (!opt.input.preset.empty()) {
            record["preset"] = opt.input.preset;
            record["preset_seed"] = opt.input.seed;
        }
        record["method"] = opt.method;
        record["params"] = params_json(opt, in);
        record["labels_mode"] = opt.input.labels_mode;
        ordered_json outputs;
        outputs["q"] = out.q;
        outputs["k"] = out.k;
        outputs["assignment"] = out.assignment;
        outputs["bic_trace"] = doc["bic_trace"];
        record["outputs"] = std::move(outputs);
        if (out.metrics) record["metrics"] = doc["metrics"];
        record["duration_seconds"] = seconds;
        write_text(opt.record_path, record.dump(2) + "\n");
    }
    return kExitOk;
}

int cmd_eval(const std::string& pred_path, const std::string& truth_path) {
    LabelsPtr pred(sr_labels_read_csv(pred_path.c_str()), sr_labels_free);
    if (!pred) compute_fail("reading predicted labels");
    LabelsPtr truth(sr_labels_read_csv(truth_path.c_str()), sr_labels_free);
    if (!truth) compute_fail("reading truth labels");
    const int n = sr_labels_n(pred.get());
    if (n != sr_labels_n(truth.get()))
        throw ComputeError("label files differ in length");
    std::vector<std::int32_t> p(static_cast<std::size_t>(n)),
        t(static_cast<std::size_t>(n));
    sr_labels_get(pred.get(), p.data());
    sr_labels_get(truth.get(), t.data());
    sr_metrics m{};
    if (sr_evaluate(p.data(), t.data(), n, &m) != SR_OK)
        compute_fail("evaluating partitions");
    ordered_json doc;
    doc["rand_index"] = m.rand_index;
    doc["vi"] = m.vi;
    doc["k_found"] = m.k_found;
    doc["k_true"] = m.k_true;
    std::cout << doc.dump(2) << "\n";
    return kExitOk;
}

struct SweepOptions {
    ClusterOptions cluster;
    std::string axis;
    std::vector<double> grid;
    std::string out_path;
};

int cmd_sweep(const SweepOptions& opt) {
    if (opt.axis != "delta" && opt.axis != "K" && opt.axis != "noise")
        throw UsageError("--axis must be delta, K, or noise");

    std::ostringstream csv;
    csv << "value,rand_index,vi,q,k\n";

    if (!opt.grid.empty()) {
        // Shared seed policy: every grid point runs with the same seed so
        // the axis is the only thing that moves.
        if (opt.axis == "noise") {
            if (!opt.cluster.input.points_path.empty() ||
                !opt.cluster.input.similarity_path.empty())
                throw UsageError("--axis noise generates its own datasets; "
                                 "drop --points/--similarity");
            for (double value : opt.grid) {
                const int level = static_cast<int>(value);
                if (value != level || level < 0)
                    throw UsageError("noise grid values must be integers >= 0");
                ClusterOptions point = opt.cluster;
                point.input.preset =
                    level == 0 ? "ideal-b" : "noisy:" + std::to_string(level);
                PipelineInput in = load_input(point.input);
                check_method(point);
                EigenPtr es = compute_eigs(in, eigs_needed(point));
                ClusterOutcome out = run_cluster(in, point, es.get());
                if (!out.metrics) throw ComputeError("sweep needs truth labels");
                csv << fmt(value) << ',' << fmt(out.metrics->rand_index) << ','
                    << fmt(out.metrics->vi) << ',' << out.q << ',' << out.k << '\n';
            }
        } else {
            PipelineInput in = load_input(opt.cluster.input);
            check_method(opt.cluster);
            // One eigensystem serves every grid point: the K axis never
            // exceeds the largest grid value, and the delta axis reuses
            // the configured K.
            int es_K = eigs_needed(opt.cluster);
            if (opt.axis == "K")
                for (double value : opt.grid) {
                    const int K = static_cast<int>(value);
                    if (value != K || K < 4)
                        throw UsageError("K grid values must be integers >= 4");
                    es_K = std::max(es_K, K);
                }
            EigenPtr es = compute_eigs(in, es_K);
            for (double value : opt.grid) {
                ClusterOptions point = opt.cluster;
                if (opt.axis == "delta")
                    point.delta = value;
                else
                    point.K = static_cast<int>(value);
                ClusterOutcome out = run_cluster(in, point, es.get());
                if (!out.metrics) throw ComputeError("sweep needs truth labels");
                csv << fmt(value) << ',' << fmt(out.metrics->rand_index) << ','
                    << fmt(out.metrics->vi) << ',' << out.q << ',' << out.k << '\n';
            }
        }
    }

    if (opt.out_path.empty())
        std::cout << csv.str();
    else
        write_text(opt.out_path, csv.str());
    return kExitOk;
}

void add_input_flags(CLI::App* cmd, InputOptions& input, bool allow_preset) {
    cmd->add_option("--points", input.points_path, "points CSV (optional label column)");
    cmd->add_option("--similarity", input.similarity_path, "similarity matrix CSV");
    cmd->add_option("--similarity-fn", input.similarity_fn_text,
                    "knn:<k> or gauss:<sigma> (default knn:10)");
    cmd->add_option("--labels-mode", input.labels_mode,
                    "label column handling: auto|yes|no");
    if (allow_preset) {
        cmd->add_option("--preset", input.preset,
                        "generate input from a preset instead of reading files");
        cmd->add_option("--preset-seed", input.seed, "seed for --preset generation");
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Model-based rounding for spectral clustering"};
    app.require_subcommand(1);

    // gen
    auto* gen = app.add_subcommand("gen", "generate a synthetic dataset");
    std::string gen_preset;
    std::uint64_t gen_seed = 0;
    std::string gen_out;
    bool gen_no_labels = false;
    gen->add_option("--preset", gen_preset,
                    "ideal-a | ideal-b | ideal-c | noisy:<1..8>")
        ->required();
    gen->add_option("--seed", gen_seed, "generator seed");
    gen->add_option("--out", gen_out, "output CSV path")->required();
    gen->add_flag("--no-labels", gen_no_labels, "omit the label column");

    // eigen
    auto* eigen = app.add_subcommand("eigen", "dump leading Laplacian eigenpairs");
    InputOptions eigen_input;
    int eigen_K = 40;
    std::string eigen_values_out = "eigenvalues.csv";
    std::string eigen_vectors_out = "eigenvectors.csv";
    add_input_flags(eigen, eigen_input, true);
    eigen->add_option("--K", eigen_K, "number of leading eigenpairs");
    eigen->add_option("--values-out", eigen_values_out, "eigenvalue CSV path");
    eigen->add_option("--vectors-out", eigen_vectors_out, "eigenvector CSV path");

    // cluster
    auto* cluster = app.add_subcommand("cluster", "cluster a dataset");
    ClusterOptions copt;
    add_input_flags(cluster, copt.input, true);
    cluster->add_option("--method", copt.method, "ltm | naive | kmeans");
    cluster->add_option("--K", copt.K, "eigenvectors to compute (default 40)");
    cluster->add_option("--delta", copt.delta, "binarization confidence (default 0.1)");
    cluster->add_option("--restarts", copt.restarts, "EM / k-means restarts");
    cluster->add_option("--seed", copt.seed, "random seed");
    cluster->add_option("--k", copt.k, "cluster count (kmeans only)");
    cluster->add_option("--ltm-dof-mode", copt.dof_mode,
                        "secondary free-parameter accounting: pair | structural");
    cluster->add_option("--truth", copt.truth_path, "truth labels CSV for metrics");
    cluster->add_option("--out", copt.out_path, "result JSON path (default stdout)");
    cluster->add_option("--record", copt.record_path, "run-record JSON path");
    cluster->add_option("--svg", copt.svg_path, "plot SVG path");
    cluster->add_option("--labels-out", copt.labels_out, "assignment CSV path");

    // eval
    auto* eval = app.add_subcommand("eval", "compare two labelings");
    std::string eval_pred, eval_truth;
    eval->add_option("--pred", eval_pred, "predicted labels CSV")->required();
    eval->add_option("--truth", eval_truth, "truth labels CSV")->required();

    // sweep
    auto* sweep = app.add_subcommand("sweep", "sensitivity sweep over one axis");
    SweepOptions sopt;
    std::string sweep_grid;
    add_input_flags(sweep, sopt.cluster.input, true);
    sweep->add_option("--axis", sopt.axis, "delta | K | noise")->required();
    sweep->add_option("--grid", sweep_grid, "comma-separated axis values")->required();
    sweep->add_option("--method", sopt.cluster.method, "ltm | naive | kmeans");
    sweep->add_option("--K", sopt.cluster.K, "eigenvectors to compute");
    sweep->add_option("--delta", sopt.cluster.delta, "binarization confidence");
    sweep->add_option("--restarts", sopt.cluster.restarts, "EM / k-means restarts");
    sweep->add_option("--seed", sopt.cluster.seed, "random seed (shared per grid point)");
    sweep->add_option("--k", sopt.cluster.k, "cluster count (kmeans only)");
    sweep->add_option("--ltm-dof-mode", sopt.cluster.dof_mode, "pair | structural");
    sweep->add_option("--truth", sopt.cluster.truth_path, "truth labels CSV");
    sweep->add_option("--out", sopt.out_path, "sweep CSV path (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    }

    try {
        if (*gen) return cmd_gen(gen_preset, gen_seed, gen_out, gen_no_labels);
        if (*eigen) return cmd_eigen(eigen_input, eigen_K, eigen_values_out,
                                     eigen_vectors_out);
        if (*cluster) return cmd_cluster(copt);
        if (*eval) return cmd_eval(eval_pred, eval_truth);
        if (*sweep) {
            if (!sweep_grid.empty()) {
                std::stringstream ss(sweep_grid);
                std::string cell;
                while (std::getline(ss, cell, ',')) {
                    if (cell.empty()) continue;
                    std::size_t used = 0;
                    double v = 0.0;
                    try {
                        v = std::stod(cell, &used);
                    } catch (const std::exception&) {
                        used = 0;
                    }
                    if (used != cell.size())
                        throw UsageError("bad grid value '" + cell + "'");
                    sopt.grid.push_back(v);
                }
            }
            return cmd_sweep(sopt);
        }
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const ComputeError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitCompute;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitCompute;
    }
    return kExitUsage;
}
