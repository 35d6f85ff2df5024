#include "specround/datagen.hpp"
#include "specround/error.hpp"
#include "specround/graph.hpp"
#include "specround/io.hpp"

#include "doctest.h"
#include "helpers.hpp"

#include <filesystem>
#include <fstream>
#include <random>
#include <string>
#include <vector>

using namespace specround;

namespace {

/// Self-deleting file in the system temp directory.
struct TempFile {
    std::filesystem::path path;

    explicit TempFile(const std::string& stem) {
        static std::mt19937_64 rng(std::random_device{}());
        path = std::filesystem::temp_directory_path() /
               (stem + "-" + std::to_string(rng()) + ".csv");
    }
    ~TempFile() {
        std::error_code ec;
        std::filesystem::remove(path, ec);
    }
    std::string str() const { return path.string(); }

    void fill(const std::string& text) {
        std::ofstream out(path);
        out << text;
    }
};

}  // namespace

TEST_CASE("matrix csv round-trips bit-exactly") {
    std::mt19937_64 rng(51);
    Matrix m(7, 3);
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j)
            m(i, j) = (static_cast<double>(rng() >> 11) * 0x1.0p-53 - 0.5) * 1e3;
    m(0, 0) = 0.1;
    m(1, 1) = -1e-17;
    m(2, 2) = 12345678.9012345;

    TempFile f("matrix");
    write_matrix_csv(f.str(), m);
    Matrix back = read_matrix_csv(f.str());
    REQUIRE(back.rows() == m.rows());
    REQUIRE(back.cols() == m.cols());
    CHECK((back.array() == m.array()).all());
}

TEST_CASE("matrix csv header round-trips") {
    Matrix m(2, 2);
    m << 1, 2, 3, 4;
    TempFile f("header");
    write_matrix_csv(f.str(), m, {"alpha", "beta"});
    std::vector<std::string> header;
    Matrix back = read_matrix_csv(f.str(), &header);
    CHECK(header == std::vector<std::string>{"alpha", "beta"});
    CHECK((back.array() == m.array()).all());

    CHECK_THROWS_AS(write_matrix_csv(f.str(), m, {"only-one"}), Error);
}

TEST_CASE("points csv round-trips coordinates and labels") {
    auto data = preset_dataset("ideal-a", 3);
    TempFile f("points");
    write_points_csv(f.str(), data, true);

    auto back = read_points_csv(f.str());  // header says "label"
    REQUIRE(back.n() == data.n());
    CHECK((back.points.array() == data.points.array()).all());
    CHECK(back.labels == data.labels);

    auto no_labels = read_points_csv(f.str(), LabelColumn::no);
    CHECK(no_labels.d() == 3);  // label column read as a feature
    CHECK_FALSE(no_labels.has_labels());
}

TEST_CASE("points csv without labels stays unlabeled") {
    auto data = preset_dataset("ideal-a", 3);
    TempFile f("plain");
    write_points_csv(f.str(), data, false);
    auto back = read_points_csv(f.str());
    CHECK_FALSE(back.has_labels());
    CHECK(back.d() == 2);
}

TEST_CASE("headerless label heuristic needs a real-valued feature column") {
    TempFile labeled("heur1");
    labeled.fill("0.5,1.25,0\n0.25,2.5,0\n0.75,0.125,1\n");
    auto data = read_points_csv(labeled.str());
    CHECK(data.d() == 2);
    CHECK(data.labels == std::vector<std::int32_t>{0, 0, 1});

    // All-integral rows could be lattice coordinates; leave them alone.
    TempFile ambiguous("heur2");
    ambiguous.fill("1,2,0\n3,4,0\n5,6,1\n");
    auto lattice = read_points_csv(ambiguous.str());
    CHECK(lattice.d() == 3);
    CHECK_FALSE(lattice.has_labels());

    // Explicit mode overrides the heuristic in both directions.
    CHECK(read_points_csv(ambiguous.str(), LabelColumn::yes).d() == 2);
    CHECK(read_points_csv(labeled.str(), LabelColumn::no).d() == 3);
}

TEST_CASE("label-column requests are validated") {
    TempFile fractional("heur3");
    fractional.fill("0.5,1.5,0.25\n0.5,2.5,0.5\n");
    CHECK_THROWS_AS(read_points_csv(fractional.str(), LabelColumn::yes), Error);

    TempFile single("heur4");
    single.fill("1\n2\n3\n");
    CHECK_THROWS_AS(read_points_csv(single.str(), LabelColumn::yes), Error);
}

TEST_CASE("similarity csv round-trips and recomputes degrees") {
    auto data = preset_dataset("ideal-a", 5);
    auto sim = knn_similarity(data, 6);
    TempFile f("sim");
    write_similarity_csv(f.str(), sim);
    auto back = read_similarity_csv(f.str());
    CHECK((back.s.array() == sim.s.array()).all());
    CHECK((back.degrees.array() == sim.degrees.array()).all());
}

TEST_CASE("similarity csv validation") {
    TempFile nonsquare("sim-shape");
    nonsquare.fill("0,1,0\n1,0,1\n");
    CHECK_THROWS_AS(read_similarity_csv(nonsquare.str()), Error);

    TempFile asym("sim-asym");
    asym.fill("0,1\n0.5,0\n");
    CHECK_THROWS_AS(read_similarity_csv(asym.str()), Error);

    TempFile negative("sim-neg");
    negative.fill("0,-1\n-1,0\n");
    CHECK_THROWS_AS(read_similarity_csv(negative.str()), Error);

    // Rounding-level asymmetry is repaired to exact symmetry.
    TempFile tiny("sim-tiny");
    tiny.fill("0,0.1000000000001\n0.1,0\n");
    auto sim = read_similarity_csv(tiny.str());
    CHECK(sim.s(0, 1) == sim.s(1, 0));
}

TEST_CASE("labels csv round-trips") {
    std::vector<std::int32_t> labels = {3, 0, 0, 2, 1, 1, 3};
    TempFile f("labels");
    write_labels_csv(f.str(), labels);
    CHECK(read_labels_csv(f.str()) == labels);
}

TEST_CASE("labels csv validation") {
    TempFile wide("labels-wide");
    wide.fill("label,extra\n1,2\n");
    CHECK_THROWS_AS(read_labels_csv(wide.str()), Error);

    TempFile fractional("labels-frac");
    fractional.fill("label\n1.5\n");
    CHECK_THROWS_AS(read_labels_csv(fractional.str()), Error);
}

TEST_CASE("csv parse failures carry their error codes") {
    auto code_of = [](auto&& fn) {
        try {
            fn();
        } catch (const Error& e) {
            return e.code();
        }
        return ErrorCode{};
    };

    CHECK(code_of([] { read_matrix_csv("/nonexistent/nope.csv"); }) == ErrorCode::io_error);

    TempFile ragged("ragged");
    ragged.fill("1,2\n3\n");
    CHECK(code_of([&] { read_matrix_csv(ragged.str()); }) == ErrorCode::parse_error);

    TempFile words("words");
    words.fill("a,b\n1,2\nx,4\n");
    CHECK(code_of([&] { read_matrix_csv(words.str()); }) == ErrorCode::parse_error);

    TempFile empty("empty");
    empty.fill("");
    CHECK(code_of([&] { read_matrix_csv(empty.str()); }) == ErrorCode::empty_data);

    TempFile blank("blank");
    blank.fill("\n\n  \n");
    CHECK(code_of([&] { read_matrix_csv(blank.str()); }) == ErrorCode::empty_data);
}
