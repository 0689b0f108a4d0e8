#pragma once

#include <iosfwd>
#include <string>

#include "core/prox_average.hpp"
#include "core/suite.hpp"

namespace mm {

/// Matrix text format: line 1 holds N, then N rows of N decimals; lines whose
/// first nonblank character is '#' are ignored. Written at 17 significant
/// digits so values round-trip exactly.
SymMatrix read_matrix_text(std::istream& in, const Tolerances& tol = {});
SymMatrix read_matrix_text_file(const std::string& path, const Tolerances& tol = {});
void write_matrix_text(const SymMatrix& m, std::ostream& out);
void write_matrix_text_file(const SymMatrix& m, const std::string& path);

/// Ensemble JSON: { "weights": [...], "mu": number, "matrices": [...] } where
/// each matrix is either nested rows or a string path to a matrix text file
/// (resolved relative to the JSON file). "mu" is optional and defaults to 1;
/// it is returned through mu_out when requested.
Ensemble read_ensemble_json_file(const std::string& path, const Tolerances& tol = {},
                                 double* mu_out = nullptr);
void write_ensemble_json_file(const Ensemble& ens, double mu, const std::string& path);

/// LinQuad JSON: { "A": [[...]], "b": [...], "r": number }.
LinQuad read_linquad_json_file(const std::string& path, const Tolerances& tol = {});
void write_linquad_json_file(const LinQuad& f, const std::string& path);

/// ProxEnsemble JSON mirrors the ensemble format with "funcs" in place of
/// "matrices".
ProxEnsemble read_prox_ensemble_json_file(const std::string& path, const Tolerances& tol = {});

/// CSV with header `mu,dist_arith,dist_harm,chain_ok`, 17 significant digits,
/// '.' decimal separator.
std::string sweep_to_csv(const SweepReport& rep);
void write_sweep_csv_file(const SweepReport& rep, const std::string& path);

/// Deterministic JSON serialization of a check report (fixed key order, no
/// timestamps), and a fixed-width text table.
std::string report_to_json(const CheckReport& rep);
std::string report_to_table(const CheckReport& rep);

std::string format_double(double v);  // %.17g
void write_file(const std::string& path, const std::string& content);

}  // namespace mm
