#include "core/io.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace mm {
namespace {

using ordered_json = nlohmann::ordered_json;

std::string read_whole_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(Errc::Io, "cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

ordered_json parse_json_file(const std::string& path) {
  const std::string text = read_whole_file(path);
  ordered_json j = ordered_json::parse(text, nullptr, false);
  if (j.is_discarded()) fail(Errc::ParseError, "malformed JSON in " + path);
  return j;
}

Vec json_to_vec(const ordered_json& j, const std::string& what) {
  if (!j.is_array()) fail(Errc::ParseError, what + " must be an array of numbers");
  Vec v;
  v.reserve(j.size());
  for (const auto& e : j) {
    if (!e.is_number()) fail(Errc::ParseError, what + " must contain only numbers");
    v.push_back(e.get<double>());
  }
  return v;
}

std::vector<Vec> json_to_rows(const ordered_json& j, const std::string& what) {
  if (!j.is_array()) fail(Errc::ParseError, what + " must be an array of rows");
  std::vector<Vec> rows;
  rows.reserve(j.size());
  for (const auto& r : j) rows.push_back(json_to_vec(r, what + " row"));
  return rows;
}

ordered_json matrix_to_json(const SymMatrix& m) {
  ordered_json rows = ordered_json::array();
  for (int i = 0; i < m.dim(); ++i) {
    ordered_json row = ordered_json::array();
    for (int j = 0; j < m.dim(); ++j) row.push_back(m(i, j));
    rows.push_back(std::move(row));
  }
  return rows;
}

double json_number(const ordered_json& j, const char* key, double fallback, bool* present) {
  if (!j.contains(key)) {
    if (present) *present = false;
    return fallback;
  }
  if (!j[key].is_number()) fail(Errc::ParseError, std::string(key) + " must be a number");
  if (present) *present = true;
  return j[key].get<double>();
}

double clamp_finite(double v) {
  if (std::isfinite(v)) return v;
  return v > 0 ? 1e308 : -1e308;
}

}  // namespace

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(Errc::Io, "cannot write file: " + path);
  out << content;
  if (!out) fail(Errc::Io, "write failed: " + path);
}

SymMatrix read_matrix_text(std::istream& in, const Tolerances& tol) {
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    const std::size_t first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    lines.push_back(line);
  }
  if (lines.empty()) fail(Errc::ParseError, "matrix text: empty input");

  std::istringstream head(lines.front());
  long long n = 0;
  if (!(head >> n) || n < 1) fail(Errc::ParseError, "matrix text: first line must hold N >= 1");
  std::string extra;
  if (head >> extra) fail(Errc::ParseError, "matrix text: trailing tokens after N");
  if (static_cast<long long>(lines.size()) != n + 1)
    fail(Errc::ParseError, "matrix text: expected exactly N data rows");

  std::vector<Vec> rows;
  rows.reserve(n);
  for (long long i = 1; i <= n; ++i) {
    std::istringstream row(lines[i]);
    Vec r;
    double v;
    while (row >> v) r.push_back(v);
    if (!row.eof()) fail(Errc::ParseError, "matrix text: non-numeric token in row");
    if (static_cast<long long>(r.size()) != n)
      fail(Errc::ParseError, "matrix text: each row needs exactly N values");
    rows.push_back(std::move(r));
  }
  return SymMatrix::from_rows(rows, tol);
}

SymMatrix read_matrix_text_file(const std::string& path, const Tolerances& tol) {
  std::ifstream in(path);
  if (!in) fail(Errc::Io, "cannot open matrix file: " + path);
  return read_matrix_text(in, tol);
}

void write_matrix_text(const SymMatrix& m, std::ostream& out) {
  out << m.dim() << "\n";
  for (int i = 0; i < m.dim(); ++i) {
    for (int j = 0; j < m.dim(); ++j) {
      if (j) out << ' ';
      out << format_double(m(i, j));
    }
    out << "\n";
  }
}

void write_matrix_text_file(const SymMatrix& m, const std::string& path) {
  std::ostringstream ss;
  write_matrix_text(m, ss);
  write_file(path, ss.str());
}

Ensemble read_ensemble_json_file(const std::string& path, const Tolerances& tol, double* mu_out) {
  const ordered_json j = parse_json_file(path);
  if (!j.is_object() || !j.contains("weights") || !j.contains("matrices"))
    fail(Errc::ParseError, "ensemble JSON needs \"weights\" and \"matrices\"");
  const Vec weights = json_to_vec(j["weights"], "weights");
  const double mu = json_number(j, "mu", 1.0, nullptr);
  if (mu_out) *mu_out = mu;

  const std::filesystem::path base = std::filesystem::path(path).parent_path();
  std::vector<SymMatrix> mats;
  for (const auto& entry : j["matrices"]) {
    if (entry.is_string()) {
      const std::filesystem::path ref = entry.get<std::string>();
      const std::filesystem::path resolved = ref.is_absolute() ? ref : base / ref;
      mats.push_back(read_matrix_text_file(resolved.string(), tol));
    } else {
      mats.push_back(SymMatrix::from_rows(json_to_rows(entry, "matrix"), tol));
    }
  }
  return Ensemble(std::move(mats), weights, tol);
}

void write_ensemble_json_file(const Ensemble& ens, double mu, const std::string& path) {
  ordered_json j;
  j["weights"] = ens.weights();
  j["mu"] = mu;
  ordered_json mats = ordered_json::array();
  for (int i = 0; i < ens.count(); ++i) mats.push_back(matrix_to_json(ens.matrix(i)));
  j["matrices"] = std::move(mats);
  write_file(path, j.dump(2) + "\n");
}

namespace {

LinQuad linquad_from_json(const ordered_json& j, const Tolerances& tol) {
  if (!j.is_object() || !j.contains("A") || !j.contains("b") || !j.contains("r"))
    fail(Errc::ParseError, "linear-quadratic JSON needs \"A\", \"b\" and \"r\"");
  const SymMatrix a = SymMatrix::from_rows(json_to_rows(j["A"], "A"), tol);
  Vec b = json_to_vec(j["b"], "b");
  if (!j["r"].is_number()) fail(Errc::ParseError, "r must be a number");
  return LinQuad(a, std::move(b), j["r"].get<double>(), tol);
}

}  // namespace

LinQuad read_linquad_json_file(const std::string& path, const Tolerances& tol) {
  return linquad_from_json(parse_json_file(path), tol);
}

void write_linquad_json_file(const LinQuad& f, const std::string& path) {
  ordered_json j;
  j["A"] = matrix_to_json(f.quad());
  j["b"] = f.linear();
  j["r"] = f.constant();
  write_file(path, j.dump(2) + "\n");
}

ProxEnsemble read_prox_ensemble_json_file(const std::string& path, const Tolerances& tol) {
  const ordered_json j = parse_json_file(path);
  if (!j.is_object() || !j.contains("weights") || !j.contains("funcs"))
    fail(Errc::ParseError, "prox ensemble JSON needs \"weights\" and \"funcs\"");
  const Vec weights = json_to_vec(j["weights"], "weights");
  const double mu = json_number(j, "mu", 1.0, nullptr);
  std::vector<LinQuad> funcs;
  for (const auto& entry : j["funcs"]) funcs.push_back(linquad_from_json(entry, tol));
  return ProxEnsemble(std::move(funcs), weights, MuParam(mu), tol);
}

std::string sweep_to_csv(const SweepReport& rep) {
  std::ostringstream ss;
  ss << "mu,dist_arith,dist_harm,chain_ok\n";
  for (std::size_t j = 0; j < rep.grid.size(); ++j)
    ss << format_double(rep.grid[j]) << ',' << format_double(rep.dist_arith[j]) << ','
       << format_double(rep.dist_harm[j]) << ',' << (rep.chain_ok[j] ? 1 : 0) << "\n";
  return ss.str();
}

void write_sweep_csv_file(const SweepReport& rep, const std::string& path) {
  write_file(path, sweep_to_csv(rep));
}

std::string report_to_json(const CheckReport& rep) {
  ordered_json j;
  j["tool"] = "matrixmeans";
  j["suite"] = rep.suite;
  ordered_json cfg;
  cfg["seed"] = rep.config.seed;
  cfg["trials"] = rep.config.trials;
  cfg["dim_max"] = rep.config.dim_max;
  cfg["n_max"] = rep.config.n_max;
  cfg["cond_max"] = rep.config.cond_max;
  cfg["mu_set"] = rep.config.mu_set;
  ordered_json tol;
  tol["spec"] = rep.config.tol.spec;
  tol["psd"] = rep.config.tol.psd;
  tol["eq"] = rep.config.tol.eq;
  cfg["tolerances"] = std::move(tol);
  j["config"] = std::move(cfg);
  ordered_json checks = ordered_json::array();
  for (const PropertyRecord& r : rep.records) {
    ordered_json c;
    c["name"] = r.name;
    c["trials"] = r.trials;
    c["failures"] = r.failures;
    c["worst_residual"] = clamp_finite(r.worst_residual);
    c["worst_seed_offset"] = r.worst_seed_offset;
    checks.push_back(std::move(c));
  }
  j["checks"] = std::move(checks);
  j["pass"] = rep.pass();
  return j.dump(2) + "\n";
}

std::string report_to_table(const CheckReport& rep) {
  std::ostringstream ss;
  ss << "suite=" << rep.suite << " seed=" << rep.config.seed << " trials=" << rep.config.trials
     << " dim_max=" << rep.config.dim_max << " n_max=" << rep.config.n_max
     << " cond_max=" << format_double(rep.config.cond_max)
     << " tol-spec=" << format_double(rep.config.tol.spec)
     << " tol-psd=" << format_double(rep.config.tol.psd)
     << " tol-eq=" << format_double(rep.config.tol.eq) << "\n";
  char line[160];
  std::snprintf(line, sizeof line, "%-32s %8s %9s %-24s %s\n", "check", "trials", "failures",
                "worst_residual", "worst_offset");
  ss << line;
  for (const PropertyRecord& r : rep.records) {
    std::snprintf(line, sizeof line, "%-32s %8d %9d %-24s %llu\n", r.name.c_str(), r.trials,
                  r.failures, format_double(clamp_finite(r.worst_residual)).c_str(),
                  static_cast<unsigned long long>(r.worst_seed_offset));
    ss << line;
  }
  ss << "overall: " << (rep.pass() ? "PASS" : "FAIL") << "\n";
  return ss.str();
}

}  // namespace mm
