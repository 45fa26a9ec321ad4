// Copyright 2026 The bonafide Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <catch_amalgamated.hpp>

#include <cmath>
#include <filesystem>
#include <sstream>
#include <string>
#include <vector>

#include "bonafide/cli/commands.hpp"
#include "bonafide/cli/document.hpp"
#include "bonafide/families.hpp"

using namespace bonafide;
using namespace bonafide::cli;
using Json = nlohmann::ordered_json;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(const std::vector<std::string>& args, const std::string& stdin_text = "") {
  std::istringstream in(stdin_text);
  std::ostringstream out, err;
  const int code = run(args, in, out, err);
  return {code, out.str(), err.str()};
}

std::string gen_machine(const std::string& family, const std::vector<double>& params) {
  std::vector<std::string> args{"gen", "--family", family, "--format", "machine"};
  for (double p : params) {
    args.push_back("--param");
    args.push_back(format_real(p));
  }
  const auto r = invoke(args);
  REQUIRE(r.code == kOk);
  return r.out;
}

std::vector<std::vector<std::string>> read_csv(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    std::vector<std::string> cells;
    std::string cell;
    std::istringstream ls(line);
    while (std::getline(ls, cell, ',')) cells.push_back(cell);
    if (!line.empty() && line.back() == ',') cells.emplace_back();
    rows.push_back(std::move(cells));
  }
  return rows;
}

}  // namespace

TEST_CASE("document parsing", "[cli]") {
  const auto doc = parse_document(R"({"matrix": [[2, 0], [0, 0.5]], "label": "sq",
                                      "tolerance": {"rel": 1e-6}})");
  CHECK(doc.matrix == MatrixValue::diagonal({2.0, 0.5}));
  CHECK(doc.label == "sq");
  REQUIRE(doc.tolerance);
  CHECK(doc.tolerance->rel == 1e-6);
  CHECK(doc.tolerance->abs == Tolerance{}.abs);

  CHECK(parse_document("1 0 0 0\n0 1 0 0\n0 0 1 0\n0 0 0 1\n").matrix == vacuum());
  CHECK(parse_document("[[1, 0], [0, 1]]").matrix == MatrixValue::identity(2));

  CHECK_THROWS_AS(parse_document(""), ParseError);
  CHECK_THROWS_AS(parse_document("{\"matrix\": [[1, 0], [0, 1]"), ParseError);
  CHECK_THROWS_AS(parse_document("{\"label\": \"x\"}"), ParseError);
  CHECK_THROWS_AS(parse_document("1 2\n3 x"), ParseError);
  CHECK_THROWS_AS(parse_document("{\"matrix\": [[1, \"a\"], [0, 1]]}"), ParseError);
  CHECK_THROWS_AS(parse_document("1 2 3\n4 5 6"), DimensionError);
  CHECK_THROWS_AS(parse_document("1 0 0\n0 1 0\n0 0 1"), DimensionError);
  CHECK_THROWS_AS(parse_document("1 2\n3 1"), SymmetryError);
  // The document tolerance governs the symmetry check.
  CHECK_NOTHROW(parse_document(R"({"matrix": [[1, 1e-7], [0, 1]], "tolerance": {"abs": 1e-6}})"));
}

TEST_CASE("exit codes", "[cli]") {
  CHECK(invoke({"classify"}, "1 0 0 0\n0 1 0 0\n0 0 1 0\n0 0 0 1").code == kOk);
  CHECK(invoke({"classify"}, "not a matrix").code == kUsage);
  CHECK(invoke({"classify"}, "1 2\n2 1 3").code == kShape);
  CHECK(invoke({"classify"}, "1 0\n0 1").code == kShape);
  CHECK(invoke({"classify"}, "1 2 0 0\n0 1 0 0\n0 0 1 0\n0 0 0 1").code == kShape);
  CHECK(invoke({"classify", "--tol-rel", "-1"}, "1 0\n0 1").code == kUsage);
  CHECK(invoke({"frobnicate"}).code == kUsage);
  CHECK(invoke({}).code == kUsage);
  CHECK(invoke({"--help"}).code == kOk);
  CHECK(invoke({"classify", "--input", "/nonexistent/file.json"}).code == kFailure);
  CHECK(invoke({"gen", "--family", "simon_vx", "--param", "-1"}).code == kUsage);
  CHECK(invoke({"gen", "--family", "nope"}).code == kUsage);
  CHECK(invoke({"sweep", "--family", "random_physical", "--from", "0", "--to", "1", "--step",
                "0.5"})
            .code == kUsage);

  const auto w = invoke({"williamson"}, gen_machine("random_symmetric", {}));
  CHECK(w.code == kPositivity);
  CHECK(w.err.find("smallest eigenvalue") != std::string::npos);
  const auto sf = invoke({"standard-form"}, "1 0 0 0\n0 1 0 0\n0 0 -2 0\n0 0 0 1");
  CHECK(sf.code == kPositivity);
  CHECK(sf.err.find("block B") != std::string::npos);

  // The verdict is payload, never the exit code.
  CHECK(invoke({"classify"}, gen_machine("simon_vx", {0.1})).code == kOk);
}

TEST_CASE("classify reports", "[cli]") {
  auto classify = [](const std::string& doc) {
    const auto r = invoke({"classify", "--format", "machine"}, doc);
    REQUIRE(r.code == kOk);
    return Json::parse(r.out);
  };
  CHECK(classify(gen_machine("simon_vx", {1.0}))["tag"] == "EntangledGaussianCM");
  CHECK(classify(gen_machine("vacuum", {}))["tag"] == "SeparableGaussianCM");

  const auto v01 = classify(gen_machine("simon_vx", {0.1}));
  CHECK(v01["tag"] == "Unphysical");
  const auto& margins = v01["bona_fide"]["global"]["margins"];
  bool found = false;
  for (const auto& m : margins) {
    if (m["name"] == "det_V_minus_1") {
      CHECK(std::abs(m["value"].get<double>() - (0.18 - 1.0)) < 1e-12);
      CHECK_FALSE(m["passes"].get<bool>());
      found = true;
    }
  }
  CHECK(found);

  for (const char* key : {"det_a", "det_b", "det_c", "det_v", "i4", "delta", "delta_tilde",
                          "gamma_sep"}) {
    CHECK(v01["invariants"].contains(key));
  }
  for (const char* route : {"oracle", "global", "local"}) {
    CHECK(v01["bona_fide"][route].contains("verdict"));
    CHECK(v01["bona_fide"][route].contains("borderline"));
  }
  CHECK(v01["classification"]["global"].contains("reason"));

  const auto text = invoke({"classify"}, gen_machine("simon_vx", {1.0}));
  CHECK(text.out.find("tag: EntangledGaussianCM") != std::string::npos);
  CHECK(text.out.find("nu_tilde_minus") != std::string::npos);
}

TEST_CASE("classify reports round trip", "[cli][property]") {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const auto family = seed % 2 == 0 ? "random_physical" : "random_symmetric";
    const auto g = invoke({"gen", "--family", family, "--seed", std::to_string(seed), "--format",
                           "machine"});
    REQUIRE(g.code == kOk);
    const auto first = invoke({"classify", "--format", "machine"}, g.out);
    REQUIRE(first.code == kOk);
    const auto second = invoke({"classify", "--format", "machine"}, first.out);
    REQUIRE(second.code == kOk);
    // Identical tags, margins and every other field.
    REQUIRE(Json::parse(first.out) == Json::parse(second.out));

    // Text rows round-trip too.
    const auto t = invoke({"gen", "--family", family, "--seed", std::to_string(seed)});
    REQUIRE(parse_document(t.out).matrix == parse_document(g.out).matrix);
  }
}

TEST_CASE("generation is reproducible", "[cli]") {
  for (const char* family : {"random_physical", "random_symmetric"}) {
    const auto a = invoke({"gen", "--family", family, "--seed", "99", "--format", "machine"});
    const auto b = invoke({"gen", "--family", family, "--seed", "99", "--format", "machine"});
    const auto c = invoke({"gen", "--family", family, "--seed", "100", "--format", "machine"});
    CHECK(a.out == b.out);
    CHECK(a.out != c.out);
  }
  const auto sx = Json::parse(gen_machine("simon_vx", {0.5}));
  CHECK(parse_document(sx.dump()).matrix == simon_vx(0.5));
  CHECK(sx["label"] == "simon_vx(0.5)");
  CHECK(parse_document(gen_machine("two_mode_squeezed", {0.0})).matrix == vacuum());
}

TEST_CASE("williamson and invariants commands agree", "[cli]") {
  const auto doc = gen_machine("simon_vx", {1.0});
  const auto w = Json::parse(invoke({"williamson", "--format", "machine"}, doc).out);
  const auto inv = Json::parse(invoke({"invariants", "--format", "machine"}, doc).out);
  const double nu_minus = inv["spectrum"]["nu_minus"].get<double>();
  const double nu_plus = inv["spectrum"]["nu_plus"].get<double>();
  CHECK(std::abs(w["w"][0][0].get<double>() - nu_minus) < 1e-9);
  CHECK(std::abs(w["w"][2][2].get<double>() - nu_plus) < 1e-9);
  CHECK(w["residual_symplectic"].get<double>() < 1e-9);
  CHECK(w["residual_williamson"].get<double>() < 1e-9);

  const auto vac = Json::parse(invoke({"williamson", "--format", "machine"}, "1 0\n0 1").out);
  CHECK(vac["residual_symplectic"].get<double>() < 1e-12);
  CHECK(vac["residual_williamson"].get<double>() < 1e-12);

  const auto sf = Json::parse(invoke({"standard-form", "--format", "machine"}, doc).out);
  CHECK(sf["residual"].get<double>() < 1e-12);
  CHECK(sf["c_plus"].get<double>() >= 0.0);
}

TEST_CASE("sweep", "[cli]") {
  SECTION("simon_vx thresholds") {
    const auto r = invoke({"sweep", "--family", "simon_vx", "--from", "0.05", "--to", "1.0",
                           "--step", "0.05"});
    REQUIRE(r.code == kOk);
    const auto rows = read_csv(r.out);
    REQUIRE(rows.size() == 21);
    CHECK(r.out.rfind(std::string(kSweepHeader) + "\n", 0) == 0);
    for (std::size_t i = 1; i < rows.size(); ++i) {
      REQUIRE(rows[i].size() == 9);
      const double x = std::stod(rows[i][0]);
      const double simon = std::stod(rows[i][7]);
      const std::string& tag = rows[i][8];
      if (x < 0.11) {
        CHECK(simon >= 0.0);
        CHECK(tag == "Unphysical");
      }
      if (x < 0.49) {
        CHECK(tag == "Unphysical");
      } else {
        CHECK(tag != "Unphysical");
      }
    }
    CHECK(std::stod(rows[10][0]) == 0.5);
    CHECK(rows[10][8] == "EntangledGaussianCM");
  }

  SECTION("sign changes at the analytic thresholds") {
    const double step = 1e-3;
    const auto r = invoke({"sweep", "--family", "simon_vx", "--from", "0.001", "--to", "1.0",
                           "--step", format_real(step)});
    REQUIRE(r.code == kOk);
    const auto rows = read_csv(r.out);
    // Each sign change is reported as the bracketing pair (x_{i-1}, x_i);
    // the analytic threshold must fall inside it. Margins that vanish
    // exactly on a grid point round to +-1e-16 there.
    using Bracket = std::pair<double, double>;
    auto changes = [&](std::size_t col, double level) {
      std::vector<Bracket> out;
      for (std::size_t i = 2; i < rows.size(); ++i) {
        const bool prev = std::stod(rows[i - 1][col]) >= level - 1e-12;
        const bool cur = std::stod(rows[i][col]) >= level - 1e-12;
        if (prev != cur) out.emplace_back(std::stod(rows[i - 1][0]), std::stod(rows[i][0]));
      }
      return out;
    };
    auto brackets = [&](const Bracket& b, double threshold) {
      return b.second - b.first <= step * (1 + 1e-9) && b.first - 1e-12 <= threshold &&
             threshold <= b.second + 1e-12;
    };

    const auto det = changes(1, 1.0);
    REQUIRE(det.size() == 1);
    CHECK(brackets(det[0], (std::sqrt(33.0) - 1.0) / 16.0));

    const auto simon = changes(7, 0.0);
    REQUIRE(simon.size() == 2);
    CHECK(brackets(simon[0], 0.125));
    CHECK(brackets(simon[1], 0.5));

    const auto heis = changes(6, 0.0);
    REQUIRE(heis.size() == 1);
    CHECK(brackets(heis[0], 0.5));
  }

  SECTION("two_mode_squeezed") {
    const auto r = invoke({"sweep", "--family", "two_mode_squeezed", "--from", "0", "--to",
                           "0.5", "--step", "0.25"});
    REQUIRE(r.code == kOk);
    const auto rows = read_csv(r.out);
    REQUIRE(rows.size() == 4);
    const double expected[] = {1.0, std::exp(-0.5), std::exp(-1.0)};
    for (int i = 0; i < 3; ++i) {
      CHECK(std::abs(std::stod(rows[i + 1][5]) - expected[i]) < 1e-9);
    }
    CHECK(rows[1][8] == "SeparableGaussianCM");
    CHECK(rows[2][8] == "EntangledGaussianCM");
  }

  SECTION("thermal") {
    const auto path = std::filesystem::temp_directory_path() / "bonafide_thermal_sweep.csv";
    const auto r = invoke({"sweep", "--family", "thermal", "--from", "1", "--to", "2", "--step",
                           "1", "--out", path.string()});
    REQUIRE(r.code == kOk);
    CHECK(r.out.empty());
    const auto rows = read_csv(read_file(path));
    std::filesystem::remove(path);
    REQUIRE(rows.size() == 3);
    CHECK(rows[1][8] == "SeparableGaussianCM");
    CHECK(rows[2][8] == "SeparableGaussianCM");
  }

  SECTION("bad ranges") {
    CHECK(invoke({"sweep", "--family", "simon_vx", "--from", "1", "--to", "0", "--step", "0.1"})
              .code == kUsage);
    CHECK(invoke({"sweep", "--family", "simon_vx", "--from", "0.1", "--to", "1", "--step", "0"})
              .code == kUsage);
    CHECK(invoke({"sweep", "--family", "simon_vx", "--from", "0", "--to", "1", "--step", "0.5"})
              .code == kUsage);
    CHECK(invoke({"sweep", "--family", "simon_vx", "--from", "0.1", "--to", "1", "--step", "0.1",
                  "--out", "/nonexistent/dir/out.csv"})
              .code == kFailure);
  }
}
