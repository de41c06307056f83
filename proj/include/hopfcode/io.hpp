// JSON and CSV views of the core value types, plus the run configuration
// shared by the CLI flags and --config files.

#pragma once

#include <json.hpp>

#include "hopfcode/omega.hpp"
#include "hopfcode/verify_fwd.hpp"

namespace hopfcode {

using nlohmann::json;

enum class AlgebraKind { omega, taft, cdmm, cyclic };

struct RunConfig {
  AlgebraKind algebra = AlgebraKind::omega;
  FieldSpec field;
  OmegaSpec omega_spec;    // omega kind
  unsigned taft_N = 2;     // taft kind
  unsigned cyclic_n = 2;   // cyclic kind
  std::uint64_t budget = 531441;
  std::string format = "json";  // json | csv | table
};

std::string algebra_kind_name(AlgebraKind k);

json field_spec_to_json(const FieldSpec& spec);
FieldSpec field_spec_from_json(const json& j);  // ConfigError on bad schema

// Prime scalars as decimal strings; cyclotomic scalars as coefficient
// arrays of rationals "num/den".
json scalar_to_json(const Scalar& s);
Scalar scalar_from_json(const Field& field, const json& j);

json subspace_to_json(const Subspace& s);
json matrix_to_json(const Matrix& m);
std::string matrix_to_csv(const Matrix& m);

json algebra_to_json(const StructureAlgebra& alg);
// Rebuilds a structure algebra from its JSON spec; construction re-runs the
// associativity and unit checks.
StructureAlgebra algebra_from_json(const Field& field, const json& j);
json omega_spec_to_json(const OmegaSpec& spec);
OmegaSpec omega_spec_from_json(const json& j);

json classification_to_json(const Classification& cls);
json verify_report_to_json(const VerifyReport& report);

RunConfig run_config_from_json(const json& j);  // ConfigError on bad schema

}  // namespace hopfcode
