#ifndef GENINV_IO_HPP_
#define GENINV_IO_HPP_

#include <string>

#include "json.hpp"

#include "geninv/inverses.hpp"
#include "geninv/local_spectral.hpp"
#include "geninv/matrix_inverses.hpp"
#include "geninv/semigroup.hpp"
#include "geninv/subspace.hpp"
#include "geninv/symbolic.hpp"

namespace geninv {

using nlohmann::json;

// Semigroup files: {"kind":"cayley","order":N,"table":[[..]]} or
// {"kind":"transformations","degree":K,"generators":[[..],..]}.
json semigroup_to_json(const Semigroup& s);
Semigroup semigroup_from_json(const json& j);
Semigroup load_semigroup(const std::string& path);

// Matrix files: {"rows":n,"cols":n,"entries":[[..]]} with entries either
// bare integers or "p/q" strings; .csv files hold the same entry grammar,
// one row per line.
json matrix_to_json(const RationalMatrix& m);
RationalMatrix matrix_from_json(const json& j);
RationalMatrix load_matrix(const std::string& path);

json rational_to_json(const Rational& x);
Rational rational_from_json(const json& j);

json subspace_to_json(const Subspace& s);

json certificates_to_json(const std::vector<Certificate>& certs);

json inverse_report_to_json(const InverseReport& r);
json sigma_to_json(const SigmaSet& s);
json natural_inverse_to_json(const NaturalInverseResult& r);
json drazin_to_json(const DrazinResult& r);
json sigma_lemmas_to_json(const SigmaLemmasReport& r);
json sym_sigma_to_json(const SymSigmaReport& r);

json matrix_inverse_report_to_json(const MatrixInverseReport& r);
json matrix_drazin_to_json(const MatrixDrazinResult& r);
json decomposition_to_json(const MatrixDecompositionReport& r);
json sigma2_report_to_json(const Sigma2Report& r);
json fitting_to_json(const FittingDecomposition& r);
json inclusion_report_to_json(const InclusionReport& r);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& contents);

}  // namespace geninv

#endif  // GENINV_IO_HPP_
