#pragma once

#include <string>

#include "snlab/experiments.hpp"

namespace snlab {

// Repo-wide text formats. Operator bundles and certificates are JSON; sweep
// reports, profiles and coefficient files are CSV.

std::string matrix_to_json(const Matrix& m);
Matrix matrix_from_json_text(const std::string& text);

std::string bundle_to_json(const MarkedOperator& op);
MarkedOperator bundle_from_json_text(const std::string& text);

std::string certificate_to_json(const FactorizationCertificate& cert);
FactorizationCertificate certificate_from_json_text(const std::string& text);

// index,modulus,phase
std::string coefficients_to_csv(const CoefficientSequence& c);
CoefficientSequence coefficients_from_csv_text(const std::string& text);

// N,S,p
std::string profile_to_csv(const GrowthProfile& g);

// N,beta,exponent,partial_sum,slope,verdict,sup_norm,inferred_r_lower
std::string sweep_to_csv(const SweepReport& r);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace snlab
