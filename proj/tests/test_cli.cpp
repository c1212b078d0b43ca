#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "nilpair/io.hpp"
#include "testutil.hpp"

using namespace nilpair;
using nlohmann::json;
namespace fs = std::filesystem;

namespace {

const std::string kCli = NILPAIR_CLI_PATH;

fs::path temp_dir() {
    fs::path dir = fs::temp_directory_path() / "nilpair_cli_test";
    fs::create_directories(dir);
    return dir;
}

int run(const std::string& args, const fs::path& stdout_path = {}) {
    std::string command = kCli + " " + args;
    if (!stdout_path.empty()) command += " > " + stdout_path.string();
    command += " 2> /dev/null";
    int status = std::system(command.c_str());
    return WEXITSTATUS(status);
}

void write_pair(const fs::path& path, const std::string& field, const DenseMatrix& a,
                const DenseMatrix& b) {
    json doc;
    doc["field"] = field;
    doc["A"] = matrix_to_json(a);
    doc["B"] = matrix_to_json(b);
    std::ofstream out(path);
    out << doc.dump(2) << "\n";
}

std::string slurp(const fs::path& path) {
    std::ifstream in(path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

} // namespace

TEST_CASE("canon: valid rank-2 pair over Q") {
    fs::path dir = temp_dir();
    FieldSpec q = FieldSpec::rationals();
    ShortForm sf = testutil::sf_of_ints(q, 6, 4, {0, 1, 2, 3, 4, 5}, {0, 0, 1, 2}, {0, 0, 1, 0},
                                        {0, 1, 2, 0});
    DenseMatrix j = DenseMatrix::jordan_matrix(q, JordanType({6, 4}));
    write_pair(dir / "pair.json", "Q", j, expand(sf));

    fs::path out = dir / "canon.json";
    CHECK(run("canon --pair " + (dir / "pair.json").string() + " --out " + out.string()) == 0);

    json doc = json::parse(slurp(out));
    CHECK(doc["form"] == "TypeB");
    CHECK(doc["rank"] == 2);
    CHECK(doc["field"] == "Q");
    CHECK(doc["m"] == 6);
    CHECK(doc["n"] == 4);

    // emitted matrices re-parse to exactly the emitted values
    DenseMatrix canonical_b = matrix_from_json(doc["canonical_B"], q);
    ShortForm canonical = short_form_from_json(doc["canonical_short_form"], q);
    CHECK(expand(canonical) == canonical_b);
    DenseMatrix witness = matrix_from_json(doc["witness"], q);
    DenseMatrix jordanizer = matrix_from_json(doc["jordanizer"], q);
    DenseMatrix total = jordanizer * witness;
    CHECK(total.inverse() * expand(sf) * total == canonical_b);
}

TEST_CASE("canon: B = 0 reports Decomposable with exit 0") {
    fs::path dir = temp_dir();
    FieldSpec q = FieldSpec::rationals();
    DenseMatrix j = DenseMatrix::jordan_matrix(q, JordanType({3, 2}));
    write_pair(dir / "zero.json", "Q", j, DenseMatrix(q, 5, 5));

    fs::path out = dir / "zero_out.json";
    CHECK(run("canon --pair " + (dir / "zero.json").string() + " --out " + out.string()) == 0);
    json doc = json::parse(slurp(out));
    CHECK(doc["form"] == "Decomposable");
    CHECK(doc["rank"] == 0);
    CHECK(!doc.contains("canonical_short_form"));
}

TEST_CASE("canon: exit 2 on malformed input") {
    fs::path dir = temp_dir();
    std::ofstream(dir / "garbage.json") << "not json at all";
    CHECK(run("canon --pair " + (dir / "garbage.json").string()) == 2);

    std::ofstream(dir / "ragged.json")
        << R"({"field": "Q", "A": [["0","1"],["0"]], "B": [["0","0"],["0","0"]]})";
    CHECK(run("canon --pair " + (dir / "ragged.json").string()) == 2);

    CHECK(run("canon --pair " + (dir / "missing_file.json").string()) == 2);
}

TEST_CASE("canon: exit 3 on precondition violations") {
    fs::path dir = temp_dir();
    FieldSpec q = FieldSpec::rationals();

    DenseMatrix j33 = DenseMatrix::jordan_matrix(q, JordanType({3, 3}));
    write_pair(dir / "equal.json", "Q", j33, DenseMatrix(q, 6, 6));
    CHECK(run("canon --pair " + (dir / "equal.json").string()) == 3);

    DenseMatrix j32 = DenseMatrix::jordan_matrix(q, JordanType({3, 2}));
    write_pair(dir / "non_nilpotent.json", "Q", j32, DenseMatrix::identity(q, 5));
    CHECK(run("canon --pair " + (dir / "non_nilpotent.json").string()) == 3);

    DenseMatrix nilp(q, 5, 5); // nilpotent but not commuting with J
    nilp.set(1, 0, Scalar::one(q));
    write_pair(dir / "non_commuting.json", "Q", j32, nilp);
    CHECK(run("canon --pair " + (dir / "non_commuting.json").string()) == 3);
}

TEST_CASE("similar: conjugated pair vs original, and a decomposable rejection") {
    fs::path dir = temp_dir();
    FieldSpec f5 = FieldSpec::prime_field(5);
    testutil::Rng rng(41);
    DenseMatrix j = DenseMatrix::jordan_matrix(f5, JordanType({4, 2}));
    ShortForm sf = testutil::random_reduced_short_form(rng, f5, 4, 2, 1, true);
    DenseMatrix b = expand(sf);
    DenseMatrix q_mat = testutil::random_invertible(rng, f5, 6);

    write_pair(dir / "p1.json", "GF(5)", j, b);
    write_pair(dir / "p2.json", "GF(5)", conjugate(q_mat, j), conjugate(q_mat, b));
    fs::path out = dir / "similar_out.txt";
    CHECK(run("similar --pair1 " + (dir / "p1.json").string() + " --pair2 " +
              (dir / "p2.json").string(),
              out) == 0);
    CHECK(slurp(out).substr(0, 7) == "SIMILAR");

    // different canonical parameter: not similar, still exit 0
    ShortForm sf2 = sf;
    sf2.b[1] += Scalar::one(f5);
    write_pair(dir / "p3.json", "GF(5)", j, expand(sf2));
    CHECK(run("similar --pair1 " + (dir / "p1.json").string() + " --pair2 " +
              (dir / "p3.json").string(),
              out) == 0);
    CHECK(slurp(out).substr(0, 11) == "NOT-SIMILAR");

    write_pair(dir / "dec.json", "GF(5)", j, DenseMatrix(f5, 6, 6));
    CHECK(run("similar --pair1 " + (dir / "dec.json").string() + " --pair2 " +
              (dir / "dec.json").string()) == 3);
}

TEST_CASE("certify: exit codes") {
    fs::path dir = temp_dir();
    CHECK(run("certify --m 2 --n 1 --p 2 --out " + (dir / "c212.json").string()) == 0);
    CHECK(run("certify --m 2 --n 1 --p 4") == 2);  // p not prime
    CHECK(run("certify --m 1 --n 2 --p 2") == 2);  // m <= n
    CHECK(run("certify --m 6 --n 4 --p 2 --budget 1000") == 5);
}

TEST_CASE("selftest: deterministic and small") {
    fs::path dir = temp_dir();
    fs::path out1 = dir / "self1.txt";
    fs::path out2 = dir / "self2.txt";
    CHECK(run("selftest --samples 5 --seed 7 --out " + out1.string()) == 0);
    CHECK(run("selftest --samples 5 --seed 7 --out " + out2.string()) == 0);
    CHECK(slurp(out1) == slurp(out2));
    CHECK(slurp(out1).find("80 checked, 0 failures") != std::string::npos);

    fs::path out0 = dir / "self0.txt";
    CHECK(run("selftest --samples 0 --seed 7 --out " + out0.string()) == 0);
    CHECK(slurp(out0).find("0 checked, 0 failures") != std::string::npos);
}

TEST_CASE("canon: a non-prime field designator in a file is malformed input") {
    fs::path dir = temp_dir();
    std::ofstream(dir / "badfield.json")
        << R"json({"field": "GF(4)", "A": [["0","1"],["0","0"]], "B": [["0","0"],["0","0"]]})json";
    CHECK(run("canon --pair " + (dir / "badfield.json").string()) == 2);

    std::ofstream(dir / "zeroden.json")
        << R"({"field": "Q", "A": [["0","1/0"],["0","0"]], "B": [["0","0"],["0","0"]]})";
    CHECK(run("canon --pair " + (dir / "zeroden.json").string()) == 2);
}
