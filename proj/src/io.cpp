#include "geninv/io.hpp"

#include <cstdint>
#include <fstream>
#include <limits>
#include <sstream>

#include "geninv/exceptions.hpp"

namespace geninv {

json semigroup_to_json(const Semigroup& s) {
  json j;
  j["kind"] = "cayley";
  j["order"] = s.order();
  j["table"] = s.table_rows();
  return j;
}

Semigroup semigroup_from_json(const json& j) {
  if (!j.is_object() || !j.contains("kind")) {
    throw InputError("semigroup JSON must be an object with a \"kind\" field");
  }
  std::string kind = j.at("kind").get<std::string>();
  if (kind == "cayley") {
    if (!j.contains("order") || !j.contains("table")) {
      throw InputError("cayley input needs \"order\" and \"table\"");
    }
    return Semigroup::from_cayley(
        j.at("order").get<int>(),
        j.at("table").get<std::vector<std::vector<int>>>());
  }
  if (kind == "transformations") {
    if (!j.contains("degree") || !j.contains("generators")) {
      throw InputError(
          "transformations input needs \"degree\" and \"generators\"");
    }
    return Semigroup::from_transformations(
        j.at("degree").get<int>(),
        j.at("generators").get<std::vector<std::vector<int>>>());
  }
  throw InputError("unknown semigroup kind '" + kind + "'");
}

Semigroup load_semigroup(const std::string& path) {
  json j = json::parse(read_file(path), nullptr, false);
  if (j.is_discarded()) {
    throw InputError("could not parse JSON in " + path);
  }
  return semigroup_from_json(j);
}

json rational_to_json(const Rational& x) {
  if (denominator(x) == 1) {
    const Integer& num = numerator(x);
    if (num >= std::numeric_limits<std::int64_t>::min() &&
        num <= std::numeric_limits<std::int64_t>::max()) {
      return static_cast<std::int64_t>(num);
    }
  }
  return format_rational(x);
}

Rational rational_from_json(const json& j) {
  if (j.is_number_integer()) {
    return Rational(j.get<std::int64_t>());
  }
  if (j.is_string()) {
    return parse_rational(j.get<std::string>());
  }
  throw InputError("matrix entries must be integers or \"p/q\" strings");
}

json matrix_to_json(const RationalMatrix& m) {
  json entries = json::array();
  for (int i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (int j = 0; j < m.cols(); ++j) {
      row.push_back(rational_to_json(m.at(i, j)));
    }
    entries.push_back(std::move(row));
  }
  json j;
  j["rows"] = m.rows();
  j["cols"] = m.cols();
  j["entries"] = std::move(entries);
  return j;
}

RationalMatrix matrix_from_json(const json& j) {
  if (!j.is_object() || !j.contains("rows") || !j.contains("cols") ||
      !j.contains("entries")) {
    throw InputError("matrix JSON needs \"rows\", \"cols\" and \"entries\"");
  }
  int rows = j.at("rows").get<int>();
  int cols = j.at("cols").get<int>();
  const json& entries = j.at("entries");
  if (rows < 0 || cols < 0 || static_cast<int>(entries.size()) != rows) {
    throw InputError("matrix entry grid does not match \"rows\"");
  }
  RationalMatrix m(rows, cols);
  for (int i = 0; i < rows; ++i) {
    const json& row = entries.at(i);
    if (static_cast<int>(row.size()) != cols) {
      throw InputError("matrix row " + std::to_string(i)
                       + " does not match \"cols\"");
    }
    for (int c = 0; c < cols; ++c) {
      m.at(i, c) = rational_from_json(row.at(c));
    }
  }
  return m;
}

namespace {

RationalMatrix matrix_from_csv(const std::string& text) {
  std::vector<std::vector<Rational>> rows;
  std::istringstream lines(text);
  std::string line;
  while (std::getline(lines, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) {
      continue;
    }
    std::vector<Rational> row;
    std::istringstream cells(line);
    std::string cell;
    while (std::getline(cells, cell, ',')) {
      row.push_back(parse_rational(cell));
    }
    rows.push_back(std::move(row));
  }
  if (rows.empty()) {
    throw InputError("empty CSV matrix");
  }
  return RationalMatrix::from_rows(rows);
}

}  // namespace

RationalMatrix load_matrix(const std::string& path) {
  std::string text = read_file(path);
  if (path.size() >= 4 && path.substr(path.size() - 4) == ".csv") {
    return matrix_from_csv(text);
  }
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) {
    throw InputError("could not parse JSON in " + path);
  }
  return matrix_from_json(j);
}

json subspace_to_json(const Subspace& s) {
  json basis = json::array();
  for (int c = 0; c < s.dim(); ++c) {
    json vec = json::array();
    for (int i = 0; i < s.ambient(); ++i) {
      vec.push_back(rational_to_json(s.basis().at(i, c)));
    }
    basis.push_back(std::move(vec));
  }
  json j;
  j["ambient"] = s.ambient();
  j["dim"] = s.dim();
  j["basis"] = std::move(basis);
  return j;
}

json certificates_to_json(const std::vector<Certificate>& certs) {
  json out = json::array();
  for (const Certificate& c : certs) {
    out.push_back({{"check", c.name}, {"pass", c.pass}});
  }
  return out;
}

json inverse_report_to_json(const InverseReport& r) {
  json j;
  j["exists"] = r.exists;
  if (r.witness) {
    j["witness"] = *r.witness;
  } else {
    j["witness"] = nullptr;
  }
  j["certificates"] = certificates_to_json(r.certificates);
  return j;
}

json sigma_to_json(const SigmaSet& s) {
  json j;
  j["j"] = s.j;
  j["members"] = s.members;
  j["maximal"] = s.maximal;
  if (s.greatest) {
    j["greatest"] = *s.greatest;
  } else {
    j["greatest"] = nullptr;
  }
  return j;
}

json natural_inverse_to_json(const NaturalInverseResult& r) {
  json j;
  j["j"] = r.j;
  j["sigma"] = sigma_to_json(r.sigma);
  if (r.decomposition) {
    j["exists"] = true;
    j["greatest"] = r.decomposition->greatest;
    j["inverse"] = r.decomposition->inverse;
    j["core"] = r.decomposition->core;
    j["certificates"] = certificates_to_json(r.decomposition->certificates);
  } else {
    j["exists"] = false;
  }
  return j;
}

json drazin_to_json(const DrazinResult& r) {
  json j;
  j["index"] = r.index;
  j["inverse"] = r.inverse;
  j["certificates"] = certificates_to_json(r.certificates);
  return j;
}

json sigma_lemmas_to_json(const SigmaLemmasReport& r) {
  json j;
  j["cases"] = r.cases;
  j["pass"] = r.pass();
  j["failures"] = r.failures;
  return j;
}

json sym_sigma_to_json(const SymSigmaReport& r) {
  auto names = [](const std::vector<SymElement>& xs) {
    json out = json::array();
    for (const SymElement& x : xs) {
      out.push_back(x.str());
    }
    return out;
  };
  json j;
  j["model"] = r.model == SymModel::A ? "paper-example-A" : "paper-example-B";
  j["j"] = r.j;
  j["members"] = names(r.members);
  j["maximal"] = names(r.maximal);
  if (r.greatest) {
    j["greatest"] = r.greatest->str();
  } else {
    j["greatest"] = nullptr;
  }
  json inverses = json::array();
  for (const auto& [e, b] : r.inverses) {
    inverses.push_back({{"idempotent", e.str()}, {"inverse_along", b.str()}});
  }
  j["inverses"] = std::move(inverses);
  return j;
}

json matrix_inverse_report_to_json(const MatrixInverseReport& r) {
  json j;
  j["exists"] = r.exists;
  if (r.witness) {
    j["witness"] = matrix_to_json(*r.witness);
  } else {
    j["witness"] = nullptr;
  }
  j["certificates"] = certificates_to_json(r.certificates);
  return j;
}

json matrix_drazin_to_json(const MatrixDrazinResult& r) {
  json j;
  j["index"] = r.index;
  j["index_convention"] = "invertible matrices report index 1 with A^D = A^{-1}";
  j["inverse"] = matrix_to_json(r.inverse);
  j["certificates"] = certificates_to_json(r.certificates);
  return j;
}

json decomposition_to_json(const MatrixDecompositionReport& r) {
  json j;
  j["x"] = matrix_to_json(r.x);
  j["y"] = matrix_to_json(r.y);
  j["greatest"] = matrix_to_json(r.greatest);
  j["inverse"] = matrix_to_json(r.inverse);
  j["nilpotency_degree"] = r.nilpotency_degree;
  j["certificates"] = certificates_to_json(r.certificates);
  return j;
}

json sigma2_report_to_json(const Sigma2Report& r) {
  json members = json::array();
  for (const RationalMatrix& m : r.members) {
    members.push_back(matrix_to_json(m));
  }
  json j;
  j["greatest"] = matrix_to_json(r.greatest);
  j["members"] = std::move(members);
  j["certificates"] = certificates_to_json(r.certificates);
  j["pass"] = r.pass;
  return j;
}

json fitting_to_json(const FittingDecomposition& r) {
  json j;
  j["h0"] = subspace_to_json(r.h0);
  j["k"] = subspace_to_json(r.k);
  j["projection"] = matrix_to_json(r.projection);
  j["certificates"] = certificates_to_json(r.certificates);
  return j;
}

json inclusion_report_to_json(const InclusionReport& r) {
  json j;
  j["in_sigma1"] = r.in_sigma1;
  j["certificates"] = certificates_to_json(r.certificates);
  return j;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw InputError("cannot open " + path);
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_file(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw InputError("cannot write " + path);
  }
  out << contents;
}

}  // namespace geninv
