#include "hopfcode/io.hpp"

#include <sstream>

namespace hopfcode {

std::string algebra_kind_name(AlgebraKind k) {
  switch (k) {
    case AlgebraKind::omega: return "omega";
    case AlgebraKind::taft: return "taft";
    case AlgebraKind::cdmm: return "cdmm";
    case AlgebraKind::cyclic: return "cyclic";
  }
  return "?";
}

json field_spec_to_json(const FieldSpec& spec) {
  if (spec.kind == FieldKind::prime)
    return json{{"kind", "prime"}, {"p", spec.p}};
  return json{{"kind", "cyclotomic"}, {"n", spec.n}};
}

FieldSpec field_spec_from_json(const json& j) {
  if (!j.is_object() || !j.contains("kind"))
    throw ConfigError("field spec must be an object with a kind");
  std::string kind = j.at("kind").get<std::string>();
  if (kind == "prime") {
    if (!j.contains("p")) throw ConfigError("prime field spec needs p");
    return FieldSpec::prime(j.at("p").get<std::uint64_t>());
  }
  if (kind == "cyclotomic") {
    if (!j.contains("n")) throw ConfigError("cyclotomic field spec needs n");
    return FieldSpec::cyclotomic(j.at("n").get<unsigned>());
  }
  throw ConfigError("unknown field kind: " + kind);
}

namespace {

std::string rational_to_string(const mpq_class& q) {
  return q.get_str();
}

mpq_class rational_from_string(const std::string& s) {
  try {
    mpq_class q(s);
    q.canonicalize();
    return q;
  } catch (const std::invalid_argument&) {
    throw ConfigError("cannot parse rational: " + s);
  }
}

}  // namespace

json scalar_to_json(const Scalar& s) {
  if (s.field().kind() == FieldKind::prime)
    return std::to_string(s.residue());
  json arr = json::array();
  for (const auto& c : s.coefficients()) arr.push_back(rational_to_string(c));
  return arr;
}

Scalar scalar_from_json(const Field& field, const json& j) {
  if (field.kind() == FieldKind::prime) {
    if (j.is_number_integer()) return field.from_integer(j.get<long long>());
    if (j.is_string()) return field.parse(j.get<std::string>());
    throw ConfigError("prime scalar must be an integer or decimal string");
  }
  if (!j.is_array()) throw ConfigError("cyclotomic scalar must be an array");
  std::vector<mpq_class> coeffs;
  for (const auto& c : j)
    coeffs.push_back(rational_from_string(c.get<std::string>()));
  return field.from_coefficients(std::move(coeffs));
}

json subspace_to_json(const Subspace& s) {
  json rows = json::array();
  for (std::size_t i = 0; i < s.dim(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < s.ambient_dim(); ++j)
      row.push_back(s.basis().at(i, j).to_string());
    rows.push_back(std::move(row));
  }
  return json{{"ambient_dim", s.ambient_dim()}, {"basis", std::move(rows)}};
}

json matrix_to_json(const Matrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j)
      row.push_back(m.at(i, j).to_string());
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string matrix_to_csv(const Matrix& m) {
  std::ostringstream os;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) os << ',';
      os << m.at(i, j).to_string();
    }
    os << '\n';
  }
  return os.str();
}

json algebra_to_json(const StructureAlgebra& alg) {
  json mul = json::array();
  for (std::size_t i = 0; i < alg.dim(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < alg.dim(); ++j) {
      json coords = json::array();
      for (const auto& c : alg.product_coords(i, j))
        coords.push_back(scalar_to_json(c));
      row.push_back(std::move(coords));
    }
    mul.push_back(std::move(row));
  }
  json unit = json::array();
  for (const auto& c : alg.unit_coords()) unit.push_back(scalar_to_json(c));
  return json{{"dim", alg.dim()},
              {"labels", alg.labels()},
              {"unit", std::move(unit)},
              {"mul", std::move(mul)}};
}

StructureAlgebra algebra_from_json(const Field& field, const json& j) {
  if (!j.contains("dim") || !j.contains("labels") || !j.contains("unit") ||
      !j.contains("mul"))
    throw ConfigError("algebra spec needs dim, labels, unit, mul");
  const std::size_t dim = j.at("dim").get<std::size_t>();
  auto labels = j.at("labels").get<std::vector<std::string>>();
  if (labels.size() != dim) throw ConfigError("label count mismatch");
  auto parse_coords = [&](const json& arr) {
    if (!arr.is_array() || arr.size() != dim)
      throw ConfigError("coordinate tuple has wrong length");
    std::vector<Scalar> out;
    for (const auto& c : arr) out.push_back(scalar_from_json(field, c));
    return out;
  };
  std::vector<std::vector<std::vector<Scalar>>> mul;
  for (const auto& row : j.at("mul")) {
    std::vector<std::vector<Scalar>> r;
    for (const auto& coords : row) r.push_back(parse_coords(coords));
    mul.push_back(std::move(r));
  }
  return StructureAlgebra(field, std::move(labels), std::move(mul),
                          parse_coords(j.at("unit")));
}

json omega_spec_to_json(const OmegaSpec& spec) {
  return json{{"S", spec.s_size}, {"omega", spec.omega}, {"N", spec.capN}};
}

OmegaSpec omega_spec_from_json(const json& j) {
  OmegaSpec spec;
  if (!j.contains("S") || !j.contains("omega") || !j.contains("N"))
    throw ConfigError("omega spec needs S, omega, N");
  spec.s_size = j.at("S").get<unsigned>();
  spec.omega = j.at("omega").get<std::vector<unsigned>>();
  spec.capN = j.at("N").get<unsigned>();
  return spec;
}

json classification_to_json(const Classification& cls) {
  json members = json::array();
  for (const auto& c : cls.family) {
    json r = json::array();
    for (const auto& coeff : c.r_coords) r.push_back(coeff.to_string());
    members.push_back(json{{"s", c.s},
                           {"t", c.t},
                           {"r_coords", std::move(r)},
                           {"basis", subspace_to_json(c.module.space())},
                           {"canonical", c.canonical},
                           {"multiplicity", c.multiplicity},
                           {"indecomposable", true}});
  }
  return json{{"sampled", cls.sampled},
              {"representatives", cls.representative_count()},
              {"family", std::move(members)}};
}

json verify_report_to_json(const VerifyReport& report) {
  json entries = json::array();
  for (const auto& e : report.entries)
    entries.push_back(
        json{{"key", e.key}, {"pass", e.pass}, {"detail", e.detail}});
  return json{{"all_pass", report.all_pass()}, {"entries", std::move(entries)}};
}

RunConfig run_config_from_json(const json& j) {
  RunConfig cfg;
  if (!j.is_object() || !j.contains("algebra"))
    throw ConfigError("config must be an object naming an algebra");
  std::string kind = j.at("algebra").get<std::string>();
  if (kind == "omega")
    cfg.algebra = AlgebraKind::omega;
  else if (kind == "taft")
    cfg.algebra = AlgebraKind::taft;
  else if (kind == "cdmm")
    cfg.algebra = AlgebraKind::cdmm;
  else if (kind == "cyclic")
    cfg.algebra = AlgebraKind::cyclic;
  else
    throw ConfigError("unknown algebra: " + kind);
  if (!j.contains("field")) throw ConfigError("config needs a field spec");
  cfg.field = field_spec_from_json(j.at("field"));
  switch (cfg.algebra) {
    case AlgebraKind::omega:
      cfg.omega_spec = omega_spec_from_json(j);
      break;
    case AlgebraKind::taft:
      if (!j.contains("N")) throw ConfigError("taft config needs N");
      cfg.taft_N = j.at("N").get<unsigned>();
      break;
    case AlgebraKind::cyclic:
      if (!j.contains("n")) throw ConfigError("cyclic config needs n");
      cfg.cyclic_n = j.at("n").get<unsigned>();
      break;
    case AlgebraKind::cdmm:
      break;
  }
  if (j.contains("budget")) cfg.budget = j.at("budget").get<std::uint64_t>();
  if (j.contains("format")) cfg.format = j.at("format").get<std::string>();
  return cfg;
}

}  // namespace hopfcode
