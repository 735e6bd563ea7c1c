// End-to-end checks of the installed command surface, run through the shell
// against the freshly built binary.

#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <nlohmann/json.hpp>
#include <sstream>

namespace {

namespace fs = std::filesystem;

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() /
           ("mubvqe_cli_" + std::to_string(::getpid()) + "_" +
            std::to_string(counter()++));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  static int& counter() {
    static int c = 0;
    return c;
  }
};

int run(const std::string& args, const fs::path& stdout_path = {}) {
  std::string command = std::string(MUBVQE_CLI_PATH) + " " + args;
  if (!stdout_path.empty()) {
    command += " > " + stdout_path.string();
  } else {
    command += " > /dev/null";
  }
  command += " 2>/dev/null";
  const int status = std::system(command.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

nlohmann::json slurp_json(const fs::path& p) {
  return nlohmann::json::parse(slurp(p));
}

}  // namespace

TEST_CASE("diag reports the built-in ground energies") {
  TempDir dir;
  const fs::path out = dir.path / "diag.json";
  REQUIRE(run("diag --hamiltonian hcooh-2q --out " + out.string()) == 0);
  const auto j = slurp_json(out);
  CHECK(std::abs(j["result"]["e0"].get<double>() - (-0.244717)) < 1e-6);
  CHECK(j["result"]["method"] == "dense");
  CHECK(j["run_record"]["subcommand"] == "diag");
  CHECK(j["run_record"]["tool"] == "mubvqe");

  REQUIRE(run("diag --hamiltonian h2o-2q --solver lanczos --out " +
              out.string()) == 0);
  const auto j2 = slurp_json(out);
  CHECK(std::abs(j2["result"]["e0"].get<double>() - (-0.521193)) < 1e-6);
  CHECK(j2["result"]["method"] == "lanczos");
}

TEST_CASE("diag on a user file") {
  TempDir dir;
  const fs::path ham = dir.path / "ham.txt";
  std::ofstream(ham) << "1.0 ZZ\n0.5 XI\n";
  const fs::path out = dir.path / "diag.json";
  REQUIRE(run("diag --hamiltonian " + ham.string() + " --out " +
              out.string()) == 0);
  CHECK(slurp_json(out)["result"]["converged"] == true);
}

TEST_CASE("validation failures exit with status 1") {
  CHECK(run("diag --hamiltonian nope-2q") == 1);
  CHECK(run("diag") != 0);              // missing required flag
  CHECK(run("frobnicate") != 0);        // unknown subcommand
  CHECK(run("mubs --qubits 9") == 1);   // over the full-MUB cap
}

TEST_CASE("mubs prints one row per amplitude") {
  TempDir dir;
  const fs::path out = dir.path / "mubs.csv";
  REQUIRE(run("mubs --qubits 1 --out " + out.string()) == 0);
  const std::string csv = slurp(out);
  // 3 bases x 2 states x 2 amplitudes + header
  int lines = 0;
  for (char ch : csv) lines += ch == '\n';
  CHECK(lines == 13);
  CHECK(csv.starts_with("basis,state,index,re,im\n"));
}

TEST_CASE("vqe writes a replayable trace") {
  TempDir dir;
  const fs::path out = dir.path / "vqe.json";
  const fs::path trace = dir.path / "trace.csv";
  REQUIRE(run("vqe --hamiltonian hcooh-2q --ansatz uccsd2 --state 1 "
              "--max-iter 120 --out " +
              out.string() + " --trace " + trace.string()) == 0);
  const auto j = slurp_json(out);
  CHECK(j["result"]["delta_e"].get<double>() < 1.4e-3);
  const std::string csv = slurp(trace);
  CHECK(csv.starts_with("iteration,energy\n"));
  CHECK(csv.find("\nbest,") != std::string::npos);

  // Rerun: identical bytes.
  const fs::path trace2 = dir.path / "trace2.csv";
  REQUIRE(run("vqe --hamiltonian hcooh-2q --ansatz uccsd2 --state 1 "
              "--max-iter 120 --out " +
              out.string() + " --trace " + trace2.string()) == 0);
  CHECK(slurp(trace) == slurp(trace2));
}

TEST_CASE("dqes campaign produces the 19-trial report") {
  TempDir dir;
  const fs::path out = dir.path / "dqes.json";
  const fs::path csv = dir.path / "spread.csv";
  REQUIRE(run("dqes --hamiltonian hcooh-2q --ansatz uccsd2 --init mub-pairs "
              "--max-iter 200 --workers 2 --out " +
              out.string() + " --csv " + csv.string()) == 0);
  const auto j = slurp_json(out);
  CHECK(j["report"]["trial_count"] == 19);
  CHECK(j["report"]["min_delta_e"].get<double>() < 1.4e-3);
  CHECK(j["report"]["trials"].size() == 19);
  const std::string spread = slurp(csv);
  CHECK(spread.starts_with("label,delta_e\n"));
}

TEST_CASE("dqes replay reproduces artifacts byte for byte") {
  TempDir dir;
  const fs::path out = dir.path / "a.json";
  const fs::path csv = dir.path / "a.csv";
  REQUIRE(run("dqes --hamiltonian hcooh-2q --ansatz uccsd2 --init mub-pairs "
              "--max-iter 150 --seed 42 --workers 2 --out " +
              out.string() + " --csv " + csv.string()) == 0);
  const fs::path out2 = dir.path / "b.json";
  const fs::path csv2 = dir.path / "b.csv";
  REQUIRE(run("dqes --replay " + out.string() + " --out " + out2.string() +
              " --csv " + csv2.string()) == 0);
  // The replay archives the same config, so only the output paths differ;
  // compare the payloads.
  auto a = slurp_json(out);
  auto b = slurp_json(out2);
  CHECK(a["report"].dump() == b["report"].dump());
  CHECK(a["run_record"]["config"].dump() ==
        b["run_record"]["config"].dump());
  CHECK(slurp(csv) == slurp(csv2));
}

TEST_CASE("dqes random-basis honors the match-mub keyword") {
  TempDir dir;
  const fs::path out = dir.path / "rb.json";
  REQUIRE(run("dqes --hamiltonian hcooh-2q --ansatz uccsd2 "
              "--init random-basis --trials match-mub --max-iter 30 "
              "--seed 2 --workers 2 --out " +
              out.string()) == 0);
  CHECK(slurp_json(out)["report"]["trial_count"] == 19);
}

TEST_CASE("dqes shots mode pairs with nelder-mead") {
  TempDir dir;
  const fs::path out = dir.path / "shots.json";
  REQUIRE(run("dqes --hamiltonian hcooh-2q --ansatz uccsd2 --init zero "
              "--shots 256 --optimizer nelder-mead --max-iter 40 --out " +
              out.string()) == 0);
  const auto j = slurp_json(out);
  CHECK(j["report"]["trial_count"] == 1);
  CHECK(j["run_record"]["config"]["shots"] == 256);
  // Adam cannot consume sampled energies.
  CHECK(run("dqes --hamiltonian hcooh-2q --ansatz uccsd2 --init zero "
            "--shots 256 --optimizer adam") == 1);
}

TEST_CASE("dqes compare emits one row per strategy") {
  TempDir dir;
  const fs::path out = dir.path / "cmp.json";
  const fs::path csv = dir.path / "cmp.csv";
  REQUIRE(run("dqes --hamiltonian hcooh-2q --ansatz uccsd2 "
              "--compare mub-pairs,random-basis --trials 19 --max-iter 80 "
              "--workers 2 --out " +
              out.string() + " --csv " + csv.string()) == 0);
  const auto j = slurp_json(out);
  REQUIRE(j["comparison"].size() == 2);
  CHECK(j["comparison"][0]["strategy"] == "mub-pairs");
  CHECK(j["comparison"][1]["strategy"] == "random-basis");
  const std::string table = slurp(csv);
  CHECK(table.starts_with(
      "strategy,trials,mean_delta_e,min_delta_e,accurate_count\n"));
}

TEST_CASE("scan over a scaled manifest with extrema disabled") {
  TempDir dir;
  // Write three scaled copies of the water Hamiltonian.
  for (int i = 0; i < 3; ++i) {
    const double s = 0.5 + 0.5 * i;
    std::ofstream h(dir.path / ("h" + std::to_string(i) + ".txt"));
    h << s * 0.297406 << " IZ\n" << -s * 0.297406 << " ZI\n"
      << -s * 0.074868 << " ZZ\n" << s * 0.038562 << " XX\n";
  }
  std::ofstream(dir.path / "manifest.csv")
      << "s,path\n0.5,h0.txt\n1.0,h1.txt\n1.5,h2.txt\n";
  const fs::path out = dir.path / "grid.csv";
  const fs::path json = dir.path / "grid.json";
  REQUIRE(run("scan --manifest " + (dir.path / "manifest.csv").string() +
              " --out " + out.string() + " --json " + json.string()) == 0);
  const std::string csv = slurp(out);
  CHECK(csv.starts_with("s,E0\n"));
  const auto j = slurp_json(json);
  REQUIRE(j["grid"]["rows"].size() == 3);
  const double e0 = -0.5211926875;
  CHECK(std::abs(j["grid"]["rows"][0]["e0"].get<double>() - 0.5 * e0) < 1e-6);
  CHECK(std::abs(j["grid"]["rows"][2]["e0"].get<double>() - 1.5 * e0) < 1e-6);
}

TEST_CASE("scan reports failing rows with exit status 2") {
  TempDir dir;
  std::ofstream(dir.path / "good.txt") << "1.0 Z\n";
  std::ofstream(dir.path / "manifest.csv")
      << "x,path\n0,good.txt\n1,missing.txt\n";
  const fs::path out = dir.path / "grid.csv";
  CHECK(run("scan --manifest " + (dir.path / "manifest.csv").string() +
            " --out " + out.string()) == 2);
  const std::string csv = slurp(out);
  CHECK(csv.find("nan") != std::string::npos);
}

TEST_CASE("non-converged lanczos exits 2 but still writes its estimate") {
  TempDir dir;
  // A Krylov cap of 1 cannot converge on a non-trivial spectrum.
  std::ofstream(dir.path / "ham.txt")
      << "1.0 ZZZZZZ\n0.5 XIIIII\n0.25 IIYIII\n-0.75 IIIXXI\n";
  const fs::path out = dir.path / "diag.json";
  CHECK(run("diag --hamiltonian " + (dir.path / "ham.txt").string() +
            " --solver lanczos --max-krylov 1 --out " + out.string()) == 2);
  const auto j = slurp_json(out);
  CHECK(j["result"]["converged"] == false);
  CHECK(std::isfinite(j["result"]["e0"].get<double>()));
}

TEST_CASE("subcommands leave their input files untouched") {
  TempDir dir;
  const fs::path ham = dir.path / "ham.txt";
  std::ofstream(ham) << "0.9 ZZ\n0.1 XI\n";
  const std::string before = slurp(ham);
  REQUIRE(run("diag --hamiltonian " + ham.string()) == 0);
  REQUIRE(run("vqe --hamiltonian " + ham.string() +
              " --ansatz efficient-su2 --reps 1 --max-iter 5") == 0);
  std::ofstream(dir.path / "manifest.csv") << "x,path\n0,ham.txt\n";
  const std::string manifest_before = slurp(dir.path / "manifest.csv");
  REQUIRE(run("scan --manifest " + (dir.path / "manifest.csv").string()) ==
          0);
  CHECK(slurp(ham) == before);
  CHECK(slurp(dir.path / "manifest.csv") == manifest_before);
}
