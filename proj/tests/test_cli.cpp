#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "core/io.hpp"
#include "core/random_instances.hpp"

using namespace mm;

namespace {

struct RunResult {
  int exit_code;
  std::string output;  // stdout + stderr
};

std::string cli_path() {
  const char* p = std::getenv("MM_CLI");
  REQUIRE_MESSAGE(p != nullptr, "MM_CLI must point at the CLI binary");
  return p;
}

RunResult run(const std::string& args, const std::string& env_prefix = "") {
  const std::string cmd = env_prefix + "'" + cli_path() + "' " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string output;
  char buf[512];
  while (std::size_t got = std::fread(buf, 1, sizeof buf, pipe)) output.append(buf, got);
  const int status = pclose(pipe);
  return {WEXITSTATUS(status), output};
}

std::filesystem::path work_dir() {
  const auto dir = std::filesystem::temp_directory_path() / "mm_cli_tests";
  std::filesystem::create_directories(dir);
  return dir;
}

std::string path_of(const char* name) { return (work_dir() / name).string(); }

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_inverse_pair_ensemble(const std::string& path) {
  Rng rng(71);
  const SymMatrix a = random_spd(rng, 3, 20.0);
  write_ensemble_json_file(Ensemble({a, inverse(a)}, {0.5, 0.5}), 1.0, path);
}

}  // namespace

TEST_CASE("avg resolvent on a matrix-inverse pair writes the identity") {
  const std::string ens = path_of("pair.json");
  write_inverse_pair_ensemble(ens);
  const std::string out = path_of("r.txt");
  const RunResult res = run("avg --kind resolvent --mu 1 --input '" + ens + "' --out '" + out + "'");
  CHECK(res.exit_code == 0);
  CHECK(res.output.find("lambda_min=") != std::string::npos);
  CHECK(res.output.find("tol-psd=") != std::string::npos);
  const SymMatrix r = read_matrix_text_file(out);
  CHECK(frobenius_distance(r, SymMatrix::identity(3)) <= 1e-9);
}

TEST_CASE("avg falls back to the mu stored in the ensemble file") {
  const std::string ens = path_of("pair_mu.json");
  write_inverse_pair_ensemble(ens);  // stores mu = 1.0
  const std::string out = path_of("r_mu.txt");
  const RunResult res = run("avg --kind resolvent --input '" + ens + "' --out '" + out + "'");
  CHECK(res.exit_code == 0);
  CHECK(res.output.find("mu=1") != std::string::npos);
  CHECK(frobenius_distance(read_matrix_text_file(out), SymMatrix::identity(3)) <= 1e-9);
}

TEST_CASE("avg harmonic on a singular ensemble exits 3") {
  const std::string ens = path_of("singular.json");
  std::ofstream f(ens);
  f << R"({"weights": [0.5, 0.5], "matrices": [[[1]], [[0]]]})";
  f.close();
  const RunResult res = run("avg --kind harmonic --input '" + ens + "' --out '" +
                            path_of("h.txt") + "'");
  CHECK(res.exit_code == 3);
  CHECK(res.output.find("not positive definite") != std::string::npos);
}

TEST_CASE("avg geometric2 demands exactly two matrices") {
  const std::string ens = path_of("three.json");
  std::ofstream f(ens);
  f << R"({"weights": [0.4, 0.3, 0.3], "matrices": [[[1]], [[2]], [[3]]]})";
  f.close();
  const RunResult res = run("avg --kind geometric2 --input '" + ens + "' --out '" +
                            path_of("g.txt") + "'");
  CHECK(res.exit_code == 2);
}

TEST_CASE("avg on unparseable input exits 2") {
  const std::string ens = path_of("garbage.json");
  std::ofstream f(ens);
  f << "{ nope";
  f.close();
  const RunResult res = run("avg --kind arithmetic --input '" + ens + "' --out '" +
                            path_of("a.txt") + "'");
  CHECK(res.exit_code == 2);
}

TEST_CASE("unknown flags and missing subcommands exit 2") {
  CHECK(run("avg --bogus 1").exit_code == 2);
  CHECK(run("").exit_code == 2);
  CHECK(run("--help").exit_code == 0);
}

TEST_CASE("sweep writes the pinned CSV and exits 0") {
  const std::string ens = path_of("pd.json");
  Rng rng(72);
  const SymMatrix a = random_spd(rng, 2, 5.0);
  const SymMatrix b = random_spd(rng, 2, 5.0);
  write_ensemble_json_file(Ensemble({a, b}, {0.5, 0.5}), 1.0, ens);
  const std::string out = path_of("sweep.csv");
  const RunResult res =
      run("sweep --input '" + ens + "' --mu-lo 1e-6 --mu-hi 1e6 --points 25 --out '" + out + "'");
  CHECK(res.exit_code == 0);
  const std::string csv = slurp(out);
  CHECK(csv.rfind("mu,dist_arith,dist_harm,chain_ok\n", 0) == 0);
  int lines = 0;
  for (char c : csv)
    if (c == '\n') ++lines;
  CHECK(lines == 26);
}

TEST_CASE("sweep on a constant ensemble reports zero distances") {
  const std::string ens = path_of("const.json");
  Rng rng(73);
  const SymMatrix a = random_spd(rng, 2, 5.0);
  write_ensemble_json_file(Ensemble({a, a}, {0.5, 0.5}), 1.0, ens);
  const std::string out = path_of("sweep_const.csv");
  const RunResult res =
      run("sweep --input '" + ens + "' --mu-lo 0.01 --mu-hi 100 --points 5 --out '" + out + "'");
  CHECK(res.exit_code == 0);
  std::ifstream in(out);
  std::string line;
  std::getline(in, line);  // header
  while (std::getline(in, line)) {
    std::size_t c1 = line.find(',');
    std::size_t c2 = line.find(',', c1 + 1);
    std::size_t c3 = line.find(',', c2 + 1);
    CHECK(std::stod(line.substr(c1 + 1, c2 - c1 - 1)) <= 1e-9);
    CHECK(std::stod(line.substr(c2 + 1, c3 - c2 - 1)) <= 1e-9);
    CHECK(line.substr(c3 + 1) == "1");
  }
}

TEST_CASE("scalar subcommand prints the H,G,R,A,ordering line") {
  RunResult res = run("scalar --xs 0,1 --weights 0.5,0.5");
  CHECK(res.exit_code == 0);
  CHECK(res.output.find("undef,0,0.33333333333333326,0.5,RGreater") != std::string::npos);

  res = run("scalar --xs 9,1 --weights 0.5,0.5");
  CHECK(res.exit_code == 0);
  CHECK(res.output.find(",3,") != std::string::npos);
  CHECK(res.output.find("GGreater") != std::string::npos);

  res = run("scalar --xs 2,2,2 --weights 0.25,0.5,0.25");
  CHECK(res.exit_code == 0);
  CHECK(res.output.find("2,2,2,2,Equal") != std::string::npos);

  CHECK(run("scalar --xs 1,x --weights 0.5,0.5").exit_code == 2);
  CHECK(run("scalar --xs 1,2 --weights 0.9,0.5").exit_code == 2);
}

TEST_CASE("check reports are byte-identical across reruns") {
  const std::string out1 = path_of("rep1.json");
  const std::string out2 = path_of("rep2.json");
  const std::string args = "check --suite all --seed 42 --trials 5 ";
  RunResult r1 = run(args + "--out '" + out1 + "'");
  RunResult r2 = run(args + "--out '" + out2 + "'");
  CHECK(r1.exit_code == 0);
  CHECK(r2.exit_code == 0);
  const std::string j1 = slurp(out1);
  CHECK(!j1.empty());
  CHECK(j1 == slurp(out2));
  CHECK(r1.output.find("overall: PASS") != std::string::npos);
}

TEST_CASE("check honors the suite filter and rejects unknown names") {
  const std::string out = path_of("sd.json");
  const RunResult res = run("check --suite self-duality --seed 3 --trials 4 --out '" + out + "'");
  CHECK(res.exit_code == 0);
  const std::string json = slurp(out);
  CHECK(json.find("\"suite\": \"self-duality\"") != std::string::npos);
  CHECK(json.find("\"name\": \"self-duality\"") != std::string::npos);
  CHECK(json.find("\"name\": \"resolvent-identity\"") == std::string::npos);

  CHECK(run("check --suite nonsense --trials 2").exit_code == 2);
}

TEST_CASE("check exits 4 when a property fails its tolerance") {
  // an identity-residual tolerance at the spectral floor cannot be met, so
  // the suite reports genuine failures through the property-violation code
  const std::string out = path_of("tight.json");
  const RunResult res = run("check --suite resolvent-identity --seed 42 --trials 200 "
                            "--tol-psd 1e-12 --tol-eq 1e-12 --out '" +
                            out + "'");
  CHECK(res.exit_code == 4);
  CHECK(res.output.find("overall: FAIL") != std::string::npos);
  const std::string json = slurp(out);
  CHECK(json.find("\"pass\": false") != std::string::npos);
  CHECK(json.find("\"worst_seed_offset\"") != std::string::npos);
}

TEST_CASE("MATRIXMEANS_SEED provides the default seed and the flag wins") {
  const std::string a = path_of("env_a.json");
  const std::string b = path_of("env_b.json");
  const std::string c = path_of("env_c.json");
  CHECK(run("gen --dim 2 --n 2 --cond 5 --out '" + a + "'", "MATRIXMEANS_SEED=5 ").exit_code == 0);
  CHECK(run("gen --seed 5 --dim 2 --n 2 --cond 5 --out '" + b + "'").exit_code == 0);
  CHECK(run("gen --seed 6 --dim 2 --n 2 --cond 5 --out '" + c + "'",
            "MATRIXMEANS_SEED=5 ").exit_code == 0);
  CHECK(slurp(a) == slurp(b));
  CHECK(slurp(b) != slurp(c));
  CHECK(run("gen --dim 2 --n 2 --out '" + a + "'", "MATRIXMEANS_SEED=zzz ").exit_code == 2);
}

TEST_CASE("gen is reproducible and round-trips through avg") {
  const std::string a = path_of("gen_a.json");
  const std::string b = path_of("gen_b.json");
  CHECK(run("gen --seed 9 --dim 4 --n 3 --cond 50 --out '" + a + "'").exit_code == 0);
  CHECK(run("gen --seed 9 --dim 4 --n 3 --cond 50 --out '" + b + "'").exit_code == 0);
  CHECK(slurp(a) == slurp(b));

  // cond = 1 forces identity matrices
  const std::string id_path = path_of("gen_id.json");
  CHECK(run("gen --seed 9 --dim 3 --n 2 --cond 1 --out '" + id_path + "'").exit_code == 0);
  const Ensemble ens = read_ensemble_json_file(id_path);
  for (int i = 0; i < ens.count(); ++i)
    CHECK(frobenius_distance(ens.matrix(i), SymMatrix::identity(3)) == 0.0);

  const RunResult res =
      run("avg --kind resolvent --mu 2 --input '" + a + "' --out '" + path_of("gen_r.txt") + "'");
  CHECK(res.exit_code == 0);

  CHECK(run("gen --seed 1 --dim 0 --n 2 --out '" + a + "'").exit_code == 2);
}

TEST_CASE("prox prints the closed form that matches avg resolvent") {
  // pure quadratics: the printed quadratic part equals the resolvent average
  Rng rng(74);
  const SymMatrix a = random_spd(rng, 2, 10.0);
  const SymMatrix b = random_spd(rng, 2, 10.0);

  const std::string ens_path = path_of("quads_ens.json");
  write_ensemble_json_file(Ensemble({a, b}, {0.5, 0.5}), 2.0, ens_path);

  std::ostringstream pens;
  pens << R"({"weights": [0.5, 0.5], "mu": 2.0, "funcs": [)";
  const auto emit = [&](const SymMatrix& m) {
    pens << R"({"A": [[)" << format_double(m(0, 0)) << "," << format_double(m(0, 1)) << "],["
         << format_double(m(1, 0)) << "," << format_double(m(1, 1))
         << R"(]], "b": [0, 0], "r": 0})";
  };
  emit(a);
  pens << ",";
  emit(b);
  pens << "]}";
  const std::string pens_path = path_of("quads_pens.json");
  std::ofstream pf(pens_path);
  pf << pens.str();
  pf.close();

  const std::string closed_path = path_of("closed.json");
  const RunResult pres = run("prox --input '" + pens_path + "' --x 0.5,-1 --out '" + closed_path + "'");
  CHECK(pres.exit_code == 0);
  CHECK(pres.output.find("value_closed=") != std::string::npos);
  CHECK(pres.output.find("value_oracle_split=") != std::string::npos);

  const std::string avg_path = path_of("quads_avg.txt");
  CHECK(run("avg --kind resolvent --input '" + ens_path + "' --out '" + avg_path + "'")
            .exit_code == 0);

  const LinQuad closed = read_linquad_json_file(closed_path);
  const SymMatrix avg = read_matrix_text_file(avg_path);
  CHECK(frobenius_distance(closed.quad(), avg) <= 1e-9 * (1.0 + avg.frobenius_norm()));

  // the printed difference is tiny
  const std::size_t pos = pres.output.find("difference=");
  REQUIRE(pos != std::string::npos);
  CHECK(std::abs(std::stod(pres.output.substr(pos + 11))) <= 1e-8);

  CHECK(run("prox --input '" + pens_path + "' --x 1 ").exit_code == 2);  // wrong dim
}

TEST_CASE("tolerance flags are validated and echoed") {
  CHECK(run("scalar --xs 1 --weights 1 --tol-eq -1").exit_code == 2);
  CHECK(run("scalar --xs 1 --weights 1 --tol-psd 1e-3 --tol-eq 1e-9").exit_code == 2);
  const RunResult res = run("--tol-eq 7.450580596923828125e-09 scalar --xs 1 --weights 1");
  CHECK(res.exit_code == 0);
  CHECK(res.output.find("tol-eq=7.4505805969238281e-09") != std::string::npos);
}
