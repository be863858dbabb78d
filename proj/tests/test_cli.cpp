#include <catch2/catch_amalgamated.hpp>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>

#include "commands.hpp"
#include "emit.hpp"
#include "statefile.hpp"
#include "test_util.hpp"

using namespace qiso;
using namespace qiso::cli;

namespace {

struct RunResult {
  int exit_code;
  std::string output;
};

// Run the installed CLI binary, capturing stdout (stderr discarded).
RunResult run_cli(const std::string& args) {
  const std::string cmd = std::string(QISO_CLI_BIN) + " " + args +
                          " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string output;
  char buf[4096];
  size_t n;
  while ((n = fread(buf, 1, sizeof(buf), pipe)) > 0) output.append(buf, n);
  const int status = pclose(pipe);
  return {WEXITSTATUS(status), output};
}

std::filesystem::path temp_dir() {
  const auto dir = std::filesystem::temp_directory_path() / "qiso_cli_tests";
  std::filesystem::create_directories(dir);
  return dir;
}

std::string write_temp_state(const std::string& name, const StateFile& sf) {
  const auto path = temp_dir() / name;
  std::ofstream out(path);
  write_state_file(out, sf);
  return path.string();
}

std::vector<std::vector<std::string>> parse_csv(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream lines(text);
  std::string line;
  while (std::getline(lines, line)) {
    std::vector<std::string> row;
    std::istringstream cells(line);
    std::string cell;
    while (std::getline(cells, cell, ',')) row.push_back(cell);
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

TEST_CASE("state files round-trip bit-exactly") {
  testing::Engine rng(2024);
  const DensityMatrix rho = testing::random_density(rng, 2);
  std::ostringstream buf;
  write_state_file(buf, to_state_file(rho));
  const LoadedState loaded = load_state(parse_state_file(buf.str()));
  const DensityMatrix back = as_density(loaded);
  CHECK(max_abs_diff(back.matrix(), rho.matrix()) == 0.0);

  const PureState psi = testing::random_pure(rng, 3);
  std::ostringstream buf2;
  write_state_file(buf2, to_state_file(psi));
  const LoadedState loaded2 = load_state(parse_state_file(buf2.str()));
  REQUIRE(std::holds_alternative<PureState>(loaded2));
  const PureState& back2 = std::get<PureState>(loaded2);
  for (std::size_t i = 0; i < psi.dim(); ++i)
    CHECK(back2.amplitude(i) == psi.amplitude(i));
}

TEST_CASE("state file validation names the violated invariant") {
  CHECK_THROWS_AS(parse_state_file("{"), ValidationError);
  CHECK_THROWS_AS(parse_state_file(R"({"kind":"pure","re":[],"im":[]})"),
                  ValidationError);
  CHECK_THROWS_AS(
      parse_state_file(R"({"n_qubits":1,"kind":"ghost","re":[],"im":[]})"),
      ValidationError);

  // wrong entry count
  StateFile bad;
  bad.n_qubits = 1;
  bad.kind = "pure";
  bad.re = {1.0};
  bad.im = {0.0};
  CHECK_THROWS_AS(load_state(bad), ValidationError);

  // unnormalized pure state
  bad.re = {0.6, 0.0};
  bad.im = {0.0, 0.0};
  CHECK_THROWS_AS(load_state(bad), NotNormalized);

  // density with negative eigenvalue fails the spectral check
  StateFile neg;
  neg.n_qubits = 1;
  neg.kind = "density";
  neg.re = {1.2, 0.0, 0.0, -0.2};
  neg.im = {0.0, 0.0, 0.0, 0.0};
  CHECK_THROWS_AS(load_state(neg), NotPSD);
}

TEST_CASE("sweep grammar") {
  const std::vector<double> pts = parse_sweep("0:1:5");
  REQUIRE(pts.size() == 5);
  CHECK(pts.front() == 0.0);
  CHECK(pts.back() == 1.0);
  CHECK(pts[2] == Catch::Approx(0.5).margin(1e-15));
  CHECK(parse_sweep("0.3:0.3:1") == std::vector<double>{0.3});
  CHECK_THROWS_AS(parse_sweep("0:1"), ValidationError);
  CHECK_THROWS_AS(parse_sweep("0:1:0"), ValidationError);
  CHECK_THROWS_AS(parse_sweep("a:1:3"), ValidationError);
}

TEST_CASE("angle grammar") {
  CHECK(parse_angle("0.5") == 0.5);
  CHECK(parse_angle("pi") == Catch::Approx(std::numbers::pi));
  CHECK(parse_angle("pi/2") == Catch::Approx(std::numbers::pi / 2));
  CHECK(parse_angle("-pi/4") == Catch::Approx(-std::numbers::pi / 4));
  CHECK(parse_angle("3pi/4") == Catch::Approx(3 * std::numbers::pi / 4));
  CHECK_THROWS_AS(parse_angle("tau"), ValidationError);
  CHECK_THROWS_AS(parse_angle("pi/0"), ValidationError);
}

TEST_CASE("format_double survives a round trip") {
  for (double v : {0.1, 1.0 / 3.0, 0.9613189697265625, -1e-17}) {
    const std::string s = format_double(v);
    CHECK(std::stod(s) == v);
  }
}

TEST_CASE("emitted CSV rows satisfy the triangle map") {
  GroverOptions opt;
  opt.qubits = 3;
  opt.error = "ldch";
  opt.params = {0.1, 0.2};
  std::ostringstream out;
  cmd_grover(opt, out);
  const auto rows = parse_csv(out.str());
  REQUIRE(rows.size() > 1);
  CHECK(rows[0] == std::vector<std::string>{"step", "param", "A", "p", "x",
                                            "y", "success"});
  for (std::size_t r = 1; r < rows.size(); ++r) {
    REQUIRE(rows[r].size() == 7);
    const double a = std::stod(rows[r][2]);
    const double p = std::stod(rows[r][3]);
    const double x = std::stod(rows[r][4]);
    const double y = std::stod(rows[r][5]);
    CHECK(x == Catch::Approx((1.0 - p) * a).margin(1e-15));
    CHECK(y == p);
  }
}

TEST_CASE("cmd_index reports the triangle corners") {
  // maximally mixed two-qubit state -> A=1 p=1 x=0 y=1
  const std::string mixed = write_temp_state(
      "mixed2.json", to_state_file(DensityMatrix::maximally_mixed(2)));
  const RunResult res = run_cli("index " + mixed + " --ref-basis 0");
  CHECK(res.exit_code == 0);
  CHECK(res.output ==
        "A=1 p=1 x=0 y=1 isotropic_error_state=true\n");

  // rho_N0 (n=2) -> A=-1 p=0
  const std::string orth = write_temp_state(
      "orth2.json",
      to_state_file(orthogonal_isotropic(PureState::basis(2, 0))));
  const RunResult res2 = run_cli("index " + orth + " --ref-basis 0");
  CHECK(res2.exit_code == 0);
  CHECK(res2.output.substr(0, 9) == "A=-1 p=0 ");

  // |+> against |0> -> A=0 p=0
  const std::string plus = write_temp_state(
      "plus.json", to_state_file(PureState::uniform_superposition(1)));
  const RunResult res3 = run_cli("index " + plus + " --ref-basis 0");
  CHECK(res3.exit_code == 0);
  CHECK(res3.output.substr(0, 8) == "A=0 p=0 ");

  // reference from a file instead of a basis index
  const std::string ref = write_temp_state(
      "ref0.json", to_state_file(PureState::basis(1, 0)));
  const RunResult res4 = run_cli("index " + plus + " " + ref);
  CHECK(res4.exit_code == 0);
  CHECK(res4.output == res3.output);

  // machine formats on request
  const RunResult csv =
      run_cli("index " + mixed + " --ref-basis 0 --format csv");
  CHECK(csv.exit_code == 0);
  const auto rows = parse_csv(csv.output);
  REQUIRE(rows.size() == 2);
  CHECK(rows[0][0] == "A");
  CHECK(rows[1][0] == "1");
  const RunResult json =
      run_cli("index " + mixed + " --ref-basis 0 --format json");
  CHECK(json.exit_code == 0);
  CHECK(json.output.find("\"isotropic_error_state\": true") !=
        std::string::npos);
}

TEST_CASE("cli exit codes") {
  CHECK(run_cli("nonsense").exit_code == 2);
  CHECK(run_cli("grover --error bogus").exit_code == 2);
  CHECK(run_cli("grover --error tdch --param 1.5").exit_code == 2);
  CHECK(run_cli("grover --error tdch").exit_code == 2);
  CHECK(run_cli("shor --alpha 0.1 --alpha-sweep 0:1:3").exit_code == 2);
  CHECK(run_cli("shor").exit_code == 2);
  CHECK(run_cli("shor --alpha 0.1 --theta bogus").exit_code == 2);
  CHECK(run_cli("horodecki --alpha-sweep -0.9:1:3").exit_code == 2);
  CHECK(run_cli("index /nonexistent.json --ref-basis 0").exit_code == 2);
  CHECK(run_cli("--help").exit_code == 0);

  // a density matrix cannot serve as the pure reference
  testing::Engine rng(42);
  const std::string dens = write_temp_state(
      "dens_ref.json", to_state_file(testing::random_density(rng, 1)));
  const std::string pure = write_temp_state(
      "pure_state.json", to_state_file(testing::random_pure(rng, 1)));
  CHECK(run_cli("index " + pure + " " + dens).exit_code == 2);
  // both or neither reference forms
  CHECK(run_cli("index " + pure).exit_code == 2);
  CHECK(run_cli("index " + pure + " " + pure + " --ref-basis 0").exit_code ==
        2);

  StateFile bad;
  bad.n_qubits = 1;
  bad.kind = "density";
  bad.re = {1.2, 0.0, 0.0, -0.2};
  bad.im = {0.0, 0.0, 0.0, 0.0};
  const std::string path = write_temp_state("bad.json", bad);
  CHECK(run_cli("index " + path + " --ref-basis 0").exit_code == 2);
}

TEST_CASE("grover command emits the closed-form success column") {
  const RunResult res = run_cli("grover --qubits 3 --steps 4 --error none");
  REQUIRE(res.exit_code == 0);
  const auto rows = parse_csv(res.output);
  REQUIRE(rows.size() == 6);
  const double theta = std::asin(1.0 / std::sqrt(8.0));
  for (std::size_t r = 1; r < rows.size(); ++r) {
    const double k = std::stod(rows[r][0]);
    const double s = std::sin((2 * k + 1) * theta);
    CHECK(std::stod(rows[r][6]) == Catch::Approx(s * s).margin(1e-10));
  }
}

TEST_CASE("grover tdch weight column follows 1-(1-gamma)^k") {
  const RunResult res =
      run_cli("grover --qubits 3 --steps 4 --error tdch --param 0.1");
  REQUIRE(res.exit_code == 0);
  const auto rows = parse_csv(res.output);
  for (std::size_t r = 1; r < rows.size(); ++r) {
    const double k = std::stod(rows[r][0]);
    CHECK(std::stod(rows[r][3]) ==
          Catch::Approx(1.0 - std::pow(0.9, k)).margin(1e-9));
  }
}

TEST_CASE("grover ldch with zero error equals the noiseless run") {
  const RunResult noisy =
      run_cli("grover --qubits 3 --steps 4 --error ldch --param 0");
  const RunResult clean = run_cli("grover --qubits 3 --steps 4 --error none");
  CHECK(noisy.output == clean.output);
}

TEST_CASE("shor command reports unit success at alpha = 0") {
  const RunResult res = run_cli("shor --alpha 0");
  REQUIRE(res.exit_code == 0);
  const auto rows = parse_csv(res.output);
  REQUIRE(rows.size() == 2);
  REQUIRE(rows[0].size() == 8);
  CHECK(rows[0][7] == "residual");
  CHECK(std::stod(rows[1][6]) == Catch::Approx(1.0).margin(1e-10));
}

TEST_CASE("shor sweep keeps the approximation residual small") {
  const RunResult res =
      run_cli("shor --theta pi/2 --phi pi/4 --alpha-sweep 0:0.3:4");
  REQUIRE(res.exit_code == 0);
  for (auto rows = parse_csv(res.output); const auto& row : rows) {
    if (row[0] == "step") continue;
    CHECK(std::abs(std::stod(row[7])) < 0.02);
  }
}

TEST_CASE("shor phase ordering at alpha = 0.1") {
  const RunResult a = run_cli("shor --theta pi/2 --phi 0 --alpha 0.1");
  const RunResult b = run_cli("shor --theta pi/2 --phi pi/2 --alpha 0.1");
  const double pa = std::stod(parse_csv(a.output)[1][6]);
  const double pb = std::stod(parse_csv(b.output)[1][6]);
  CHECK(pa > pb + 1e-4);
}

TEST_CASE("horodecki command emits matching closed forms") {
  const RunResult res = run_cli("horodecki --side-qubits 2");
  REQUIRE(res.exit_code == 0);
  const auto rows = parse_csv(res.output);
  REQUIRE(rows.size() == 22);
  REQUIRE(rows[0].size() == 9);
  for (std::size_t r = 1; r < rows.size(); ++r) {
    CHECK(std::abs(std::stod(rows[r][2]) - std::stod(rows[r][7])) <= 1e-9);
    CHECK(std::abs(std::stod(rows[r][3]) - std::stod(rows[r][8])) <= 1e-9);
  }
  // corners: alpha = 1 -> (1, 0); alpha = -1/15 -> (-1, 0)
  CHECK(std::stod(rows[21][2]) == Catch::Approx(1.0).margin(1e-9));
  CHECK(std::stod(rows[21][3]) == Catch::Approx(0.0).margin(1e-9));
  CHECK(std::stod(rows[1][2]) == Catch::Approx(-1.0).margin(1e-9));
  CHECK(std::stod(rows[1][3]) == Catch::Approx(0.0).margin(1e-9));
}

TEST_CASE("json output carries the same records") {
  const RunResult res =
      run_cli("grover --qubits 2 --steps 2 --error tdch --param 0.2 "
              "--format json");
  REQUIRE(res.exit_code == 0);
  CHECK(res.output.find("\"step\"") != std::string::npos);
  CHECK(res.output.find("\"success\"") != std::string::npos);
  CHECK_THROWS_AS(parse_format("xml"), ValidationError);
}

TEST_CASE("identical invocations are byte-identical") {
  for (const std::string args :
       {std::string("grover --qubits 3 --steps 5 --error ldch --param 0.1 "
                    "--param 0.3"),
        std::string("shor --alpha-sweep 0:0.2:3"),
        std::string("horodecki --side-qubits 1 --format json")}) {
    const RunResult first = run_cli(args);
    const RunResult second = run_cli(args);
    REQUIRE(first.exit_code == 0);
    CHECK(first.output == second.output);
    CHECK_FALSE(first.output.empty());
  }
}

TEST_CASE("--out writes the same bytes as stdout") {
  const auto path = temp_dir() / "traj.csv";
  const RunResult direct = run_cli("horodecki --side-qubits 1");
  const RunResult filed =
      run_cli("horodecki --side-qubits 1 --out " + path.string());
  REQUIRE(filed.exit_code == 0);
  CHECK(filed.output.empty());
  std::ifstream in(path);
  std::stringstream buf;
  buf << in.rdbuf();
  CHECK(buf.str() == direct.output);
}
