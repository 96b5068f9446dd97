#ifndef SCHURCONE_JSON_IO_HPP
#define SCHURCONE_JSON_IO_HPP

#include <json.hpp>

#include "schurcone/cone.hpp"
#include "schurcone/schur.hpp"

namespace schurcone {

// JSON forms. All numbers are exact decimal strings ("p/q" for
// rationals); term and combination orders are canonical so identical
// values render identically.
//
//   SchurVector: { "degree": N, "terms": [{"partition": "3,2,1", "coeff": "-1"}] }
//   Certificate: { "target": "...", "mode": "interval",
//                  "interval": ["...", "..."], "f": <SchurVector>,
//                  "margin": "1", "max_other": "0" }
//   Witness:     { "target": "...", "combination": [{"factors": "...", "coeff": "1"}] }

nlohmann::json schur_vector_to_json(const SchurVector& v);
SchurVector schur_vector_from_json(const nlohmann::json& j);

nlohmann::json certificate_to_json(const SeparationCertificate& cert);
SeparationCertificate certificate_from_json(const nlohmann::json& j);

nlohmann::json witness_to_json(const FactorSet& target,
                               const std::vector<std::pair<FactorSet, Rational>>& combination);
std::pair<FactorSet, std::vector<std::pair<FactorSet, Rational>>> witness_from_json(
    const nlohmann::json& j);

}  // namespace schurcone

#endif  // SCHURCONE_JSON_IO_HPP
