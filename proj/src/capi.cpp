#include "specround/specround.h"

#include "specround/baseline.hpp"
#include "specround/datagen.hpp"
#include "specround/error.hpp"
#include "specround/graph.hpp"
#include "specround/io.hpp"
#include "specround/ltm.hpp"
#include "specround/metrics.hpp"
#include "specround/naive.hpp"
#include "specround/spectra.hpp"
#include "specround/types.hpp"

#include <cstring>
#include <exception>
#include <span>
#include <string>
#include <utility>
#include <vector>

struct sr_dataset {
    specround::DataSet data;
};

struct sr_similarity {
    specround::SimilarityMatrix sim;
};

struct sr_eigensystem {
    specround::EigenSystem es;
};

struct sr_result {
    specround::Partition partition;
    int q = 0;
    int flags = 0;
    std::vector<specround::TraceEntry> trace;
};

struct sr_labels {
    std::vector<std::int32_t> values;
};

namespace {

thread_local int g_last_code = 0;
thread_local std::string g_last_message;

void clear_error() {
    g_last_code = 0;
    g_last_message.clear();
}

void record(const specround::Error& e) {
    g_last_code = static_cast<int>(e.code());
    g_last_message = std::string(specround::error_code_name(e.code())) + ": " + e.what();
}

void record_unknown(const std::exception& e) {
    g_last_code = SR_E_INTERNAL;
    g_last_message = std::string("InternalError: ") + e.what();
}

/// Runs a handle-producing body, mapping exceptions to NULL + last-error.
template <typename F>
auto make_handle(F&& body) -> decltype(body()) {
    clear_error();
    try {
        return body();
    } catch (const specround::Error& e) {
        record(e);
    } catch (const std::exception& e) {
        record_unknown(e);
    }
    return nullptr;
}

template <typename F>
sr_status run_status(F&& body) {
    clear_error();
    try {
        body();
        return SR_OK;
    } catch (const specround::Error& e) {
        record(e);
        return static_cast<sr_status>(g_last_code);
    } catch (const std::exception& e) {
        record_unknown(e);
        return SR_E_INTERNAL;
    }
}

void require(bool ok, const char* what) {
    if (!ok) specround::fail(specround::ErrorCode::invalid_argument, what);
}

int bad_count(const char* what) {
    clear_error();
    g_last_code = SR_E_INVALID_ARGUMENT;
    g_last_message = std::string("InvalidArgument: ") + what;
    return -1;
}

}  // namespace

extern "C" {

const char* sr_version(void) { return "1.0.0"; }

int sr_last_error_code(void) { return g_last_code; }

const char* sr_last_error(void) { return g_last_message.c_str(); }

/* ---------- datasets ---------- */

sr_dataset* sr_dataset_from_preset(const char* name, uint64_t seed) {
    return make_handle([&]() -> sr_dataset* {
        require(name != nullptr, "preset name is null");
        return new sr_dataset{specround::preset_dataset(name, seed)};
    });
}

sr_dataset* sr_dataset_read_csv(const char* path, int label_mode) {
    return make_handle([&]() -> sr_dataset* {
        require(path != nullptr, "path is null");
        require(label_mode >= 0 && label_mode <= 2, "label_mode must be 0, 1, or 2");
        const auto mode = static_cast<specround::LabelColumn>(label_mode);
        return new sr_dataset{specround::read_points_csv(path, mode)};
    });
}

sr_status sr_dataset_write_csv(const sr_dataset* ds, const char* path,
                               int with_labels) {
    return run_status([&] {
        require(ds != nullptr && path != nullptr, "null argument");
        specround::write_points_csv(path, ds->data, with_labels != 0);
    });
}

int sr_dataset_n(const sr_dataset* ds) {
    if (!ds) return bad_count("null dataset");
    return ds->data.n();
}

int sr_dataset_dim(const sr_dataset* ds) {
    if (!ds) return bad_count("null dataset");
    return ds->data.d();
}

int sr_dataset_has_labels(const sr_dataset* ds) {
    if (!ds) return bad_count("null dataset");
    return ds->data.has_labels() ? 1 : 0;
}

sr_status sr_dataset_points(const sr_dataset* ds, double* out) {
    return run_status([&] {
        require(ds != nullptr && out != nullptr, "null argument");
        const auto& p = ds->data.points;
        for (int i = 0; i < ds->data.n(); ++i)
            for (int j = 0; j < ds->data.d(); ++j) out[i * ds->data.d() + j] = p(i, j);
    });
}

sr_status sr_dataset_labels(const sr_dataset* ds, int32_t* out) {
    return run_status([&] {
        require(ds != nullptr && out != nullptr, "null argument");
        if (!ds->data.has_labels())
            specround::fail(specround::ErrorCode::empty_data, "dataset has no labels");
        std::memcpy(out, ds->data.labels.data(),
                    ds->data.labels.size() * sizeof(int32_t));
    });
}

void sr_dataset_free(sr_dataset* ds) { delete ds; }

/* ---------- similarity graphs ---------- */

sr_similarity* sr_similarity_knn(const sr_dataset* ds, int k) {
    return make_handle([&]() -> sr_similarity* {
        require(ds != nullptr, "null dataset");
        return new sr_similarity{specround::knn_similarity(ds->data, k)};
    });
}

sr_similarity* sr_similarity_gaussian(const sr_dataset* ds, double sigma) {
    return make_handle([&]() -> sr_similarity* {
        require(ds != nullptr, "null dataset");
        return new sr_similarity{specround::gaussian_similarity(ds->data, sigma)};
    });
}

sr_similarity* sr_similarity_read_csv(const char* path) {
    return make_handle([&]() -> sr_similarity* {
        require(path != nullptr, "path is null");
        return new sr_similarity{specround::read_similarity_csv(path)};
    });
}

sr_status sr_similarity_write_csv(const sr_similarity* sim, const char* path) {
    return run_status([&] {
        require(sim != nullptr && path != nullptr, "null argument");
        specround::write_similarity_csv(path, sim->sim);
    });
}

int sr_similarity_n(const sr_similarity* sim) {
    if (!sim) return bad_count("null similarity");
    return sim->sim.n();
}

int sr_similarity_components(const sr_similarity* sim) {
    if (!sim) return bad_count("null similarity");
    clear_error();
    try {
        return specround::connected_components(sim->sim).k;
    } catch (const specround::Error& e) {
        record(e);
    } catch (const std::exception& e) {
        record_unknown(e);
    }
    return -1;
}

void sr_similarity_free(sr_similarity* sim) { delete sim; }

/* ---------- eigensystem ---------- */

sr_eigensystem* sr_eigensystem_compute(const sr_similarity* sim, int K) {
    return make_handle([&]() -> sr_eigensystem* {
        require(sim != nullptr, "null similarity");
        specround::Laplacian lap = specround::laplacian_rw(sim->sim);
        return new sr_eigensystem{specround::leading_eigenpairs(lap, K)};
    });
}

int sr_eigensystem_n(const sr_eigensystem* es) {
    if (!es) return bad_count("null eigensystem");
    return es->es.n();
}

int sr_eigensystem_count(const sr_eigensystem* es) {
    if (!es) return bad_count("null eigensystem");
    return es->es.K();
}

sr_status sr_eigensystem_values(const sr_eigensystem* es, double* out) {
    return run_status([&] {
        require(es != nullptr && out != nullptr, "null argument");
        std::memcpy(out, es->es.eigenvalues.data(),
                    static_cast<std::size_t>(es->es.K()) * sizeof(double));
    });
}

sr_status sr_eigensystem_vectors(const sr_eigensystem* es, double* out) {
    return run_status([&] {
        require(es != nullptr && out != nullptr, "null argument");
        std::memcpy(out, es->es.eigenvectors.data(),
                    static_cast<std::size_t>(es->es.n()) *
                        static_cast<std::size_t>(es->es.K()) * sizeof(double));
    });
}

void sr_eigensystem_free(sr_eigensystem* es) { delete es; }

/* ---------- clustering ---------- */

sr_result* sr_cluster_ltm(const sr_eigensystem* es, int K, double delta,
                          int restarts, uint64_t seed, int dof_mode) {
    return make_handle([&]() -> sr_result* {
        require(es != nullptr, "null eigensystem");
        require(dof_mode == 0 || dof_mode == 1, "dof_mode must be 0 or 1");
        specround::RoundingParams params;
        params.K = K;
        params.delta = delta;
        params.restarts = restarts;
        params.seed = seed;
        params.dof_mode = dof_mode == 0 ? specround::LtmDofMode::per_secondary_pair
                                        : specround::LtmDofMode::structural_only;
        specround::RoundingResult rr = specround::ltm_rounding(es->es, params);
        auto* out = new sr_result;
        out->partition = std::move(rr.partition);
        out->q = rr.q_selected;
        out->flags = rr.boundary_warning ? 1 : 0;
        out->trace = std::move(rr.trace);
        return out;
    });
}

sr_result* sr_cluster_naive(const sr_eigensystem* es, int K, double delta) {
    return make_handle([&]() -> sr_result* {
        require(es != nullptr, "null eigensystem");
        specround::NaiveResult nr = specround::naive_rounding2(es->es, K, delta);
        auto* out = new sr_result;
        out->partition = std::move(nr.partition);
        out->q = nr.q_used;
        out->flags = nr.triggered ? 0 : 2;
        return out;
    });
}

sr_result* sr_cluster_kmeans(const sr_eigensystem* es, int k, int restarts,
                             uint64_t seed) {
    return make_handle([&]() -> sr_result* {
        require(es != nullptr, "null eigensystem");
        auto* out = new sr_result;
        out->partition = specround::kmeans_rounding(es->es, k, restarts, seed);
        out->q = k;
        return out;
    });
}

int sr_result_n(const sr_result* res) {
    if (!res) return bad_count("null result");
    return res->partition.n();
}

int sr_result_q(const sr_result* res) {
    if (!res) return bad_count("null result");
    return res->q;
}

int sr_result_k(const sr_result* res) {
    if (!res) return bad_count("null result");
    return res->partition.k;
}

int sr_result_flags(const sr_result* res) {
    if (!res) return bad_count("null result");
    return res->flags;
}

sr_status sr_result_assignment(const sr_result* res, int32_t* out) {
    return run_status([&] {
        require(res != nullptr && out != nullptr, "null argument");
        std::memcpy(out, res->partition.assignment.data(),
                    res->partition.assignment.size() * sizeof(int32_t));
    });
}

int sr_result_trace_size(const sr_result* res) {
    if (!res) return bad_count("null result");
    return static_cast<int>(res->trace.size());
}

sr_status sr_result_trace(const sr_result* res, sr_trace_entry* out) {
    return run_status([&] {
        require(res != nullptr && out != nullptr, "null argument");
        for (std::size_t i = 0; i < res->trace.size(); ++i) {
            const specround::TraceEntry& t = res->trace[i];
            out[i] = sr_trace_entry{t.q, t.k, t.lcm_bic, t.ltm_bic};
        }
    });
}

void sr_result_free(sr_result* res) { delete res; }

/* ---------- evaluation ---------- */

sr_status sr_evaluate(const int32_t* predicted, const int32_t* truth, int n,
                      sr_metrics* out) {
    return run_status([&] {
        require(predicted != nullptr && truth != nullptr && out != nullptr,
                "null argument");
        require(n >= 2, "need at least two points to compare partitions");
        auto p = specround::Partition::from_labels(
            std::span<const std::int32_t>(predicted, static_cast<std::size_t>(n)));
        auto t = specround::Partition::from_labels(
            std::span<const std::int32_t>(truth, static_cast<std::size_t>(n)));
        specround::MetricReport report = specround::evaluate_partition(p, t);
        out->rand_index = report.rand_index;
        out->vi = report.vi;
        out->k_found = report.k_found;
        out->k_true = report.k_true;
    });
}

sr_labels* sr_labels_read_csv(const char* path) {
    return make_handle([&]() -> sr_labels* {
        require(path != nullptr, "path is null");
        return new sr_labels{specround::read_labels_csv(path)};
    });
}

int sr_labels_n(const sr_labels* labels) {
    if (!labels) return bad_count("null labels");
    return static_cast<int>(labels->values.size());
}

sr_status sr_labels_get(const sr_labels* labels, int32_t* out) {
    return run_status([&] {
        require(labels != nullptr && out != nullptr, "null argument");
        std::memcpy(out, labels->values.data(), labels->values.size() * sizeof(int32_t));
    });
}

void sr_labels_free(sr_labels* labels) { delete labels; }

sr_status sr_labels_write_csv(const char* path, const int32_t* labels, int n) {
    return run_status([&] {
        require(path != nullptr && labels != nullptr && n >= 0, "null argument");
        std::vector<std::int32_t> v(labels, labels + n);
        specround::write_labels_csv(path, v);
    });
}

}  // extern "C"
