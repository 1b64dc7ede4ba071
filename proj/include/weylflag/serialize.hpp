#pragma once

#include <json.hpp>

#include "weylflag/artin.hpp"
#include "weylflag/formula.hpp"
#include "weylflag/good_pairs.hpp"

namespace weylflag {

using json = nlohmann::json;

// Reports serialize to JSON with sorted keys and exact rational strings;
// dump_json renders them byte-identically for fixed inputs.
std::string dump_json(const json& j);

// MultiPermutation as an array of per-tau one-line strings; WeightVector as an
// array of per-tau arrays of exact rational strings.
json mp_to_json(const MultiPermutation& w);
MultiPermutation mp_from_json(const json& j);
json weight_to_json(const WeightVector& lam);
WeightVector weight_from_json(const json& j);

// Census pairs print in the compact semicolon-joined form ("1,3,2,4" when
// sigma = 1), the shape the regression fixtures freeze.
json to_json(const CensusReport& r);
CensusReport census_from_json(const json& j);
std::string census_csv(const CensusReport& r);

json to_json(const Root& r);
Root root_from_json(const json& j);
json to_json(const LinkageResult& r);
LinkageResult linkage_from_json(const json& j);

json to_json(const GoodPairCertificate& c);
GoodPairCertificate certificate_from_json(const json& j);

json to_json(const FormulaReport& r);
FormulaReport formula_from_json(const json& j);

// Matrices over an algebra as nested arrays of element strings.
json matrix_to_json(const ArtinMatrix& m);
ArtinMatrix matrix_from_json(const AlgPtr& alg, const json& j);
json to_json(const Refinement& r);
Refinement refinement_from_json(const AlgPtr& alg, const json& j);

// Tangent-dimension table over all Bruhat-comparable (w, tau), CSV with header
// w,tau,dim; rows sorted by (w, tau) one-line order.
std::string schubert_table_csv(int n, bool oracle);

}  // namespace weylflag
