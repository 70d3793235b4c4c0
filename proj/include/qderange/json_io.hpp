#ifndef QDERANGE_JSON_IO_HPP
#define QDERANGE_JSON_IO_HPP

#include <json.hpp>

#include <string>
#include <vector>

#include "qderange/characters.hpp"
#include "qderange/cone.hpp"
#include "qderange/tables.hpp"

namespace qderange {

using json = nlohmann::json;

// IntPoly <-> array of decimal strings, ascending powers of q
json to_json(const IntPoly& p);
IntPoly intpoly_from_json(const json& j);

// RatFunc <-> {"num": [...], "den": [...]}
json to_json(const RatFunc& f);
RatFunc ratfunc_from_json(const json& j);

// Partition <-> array of integers, [] for the empty diagram
json to_json(const Partition& p);
Partition partition_from_json(const json& j);

// BlockVector <-> {"n": int, "coeffs": [{"partition": [...], "value": ratfunc}]}
json to_json(const BlockVector& v);
BlockVector blockvector_from_json(const json& j);

// PsiCoeffs <-> {"n": int, "coeffs": [ratfunc, ...]}
json to_json(const PsiCoeffs& f);
PsiCoeffs psicoeffs_from_json(const json& j);

/// Polynomial entries serialize as plain coefficient arrays; genuinely
/// rational entries as {"num","den"} objects.
json to_json(const CoeffTable& t);
CoeffTable table_from_json(const json& j);

std::string to_csv(const CoeffTable& t);
std::string to_pretty(const CoeffTable& t);

json to_json(const ConeReport& r);

/// Paper-style sign-pattern table over the full-degree diagrams and the empty
/// diagram: '+' for a strictly positive coefficient, '0' for zero.
std::string sign_pattern_table(const ConeReport& r);
std::string to_pretty(const ConeReport& r);

} // namespace qderange

#endif
