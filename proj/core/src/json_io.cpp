#include "schurcone/json_io.hpp"

#include <stdexcept>

namespace schurcone {

using nlohmann::json;

json schur_vector_to_json(const SchurVector& v) {
    json terms = json::array();
    for (const auto& [lam, c] : v.terms())
        terms.push_back({{"partition", lam.to_string()}, {"coeff", to_string(c)}});
    return json{{"degree", v.degree()}, {"terms", std::move(terms)}};
}

SchurVector schur_vector_from_json(const json& j) {
    if (!j.is_object() || !j.contains("degree") || !j.contains("terms"))
        throw std::invalid_argument("schur vector JSON requires degree and terms");
    SchurVector v(j.at("degree").get<int>());
    for (const auto& term : j.at("terms")) {
        const Partition lam = Partition::parse(term.at("partition").get<std::string>());
        v.add_term(lam, parse_rational(term.at("coeff").get<std::string>()));
    }
    return v;
}

json certificate_to_json(const SeparationCertificate& cert) {
    json out{{"target", cert.target.to_string()},
             {"f", schur_vector_to_json(cert.f)},
             {"margin", to_string(cert.margin)},
             {"max_other", to_string(cert.max_other)}};
    switch (cert.mode.kind) {
        case SeparationKind::Global:
            out["mode"] = "global";
            break;
        case SeparationKind::FromAbove:
            out["mode"] = "from_above";
            break;
        case SeparationKind::Interval:
            out["mode"] = "interval";
            out["interval"] = json::array({cert.mode.lam.to_string(), cert.mode.rho.to_string()});
            break;
    }
    return out;
}

SeparationCertificate certificate_from_json(const json& j) {
    SeparationCertificate cert;
    cert.target = FactorSet::parse(j.at("target").get<std::string>());
    cert.f = schur_vector_from_json(j.at("f"));
    cert.margin = parse_rational(j.at("margin").get<std::string>());
    cert.max_other = parse_rational(j.at("max_other").get<std::string>());
    const std::string mode = j.at("mode").get<std::string>();
    if (mode == "global") {
        cert.mode = SeparationMode::global();
    } else if (mode == "from_above") {
        cert.mode = SeparationMode::from_above();
    } else if (mode == "interval") {
        const auto& bounds = j.at("interval");
        cert.mode = SeparationMode::interval(Partition::parse(bounds.at(0).get<std::string>()),
                                             Partition::parse(bounds.at(1).get<std::string>()));
    } else {
        throw std::invalid_argument("unknown separation mode: " + mode);
    }
    return cert;
}

json witness_to_json(const FactorSet& target,
                     const std::vector<std::pair<FactorSet, Rational>>& combination) {
    json combo = json::array();
    for (const auto& [B, c] : combination)
        combo.push_back({{"factors", B.to_string()}, {"coeff", to_string(c)}});
    return json{{"target", target.to_string()}, {"combination", std::move(combo)}};
}

std::pair<FactorSet, std::vector<std::pair<FactorSet, Rational>>> witness_from_json(const json& j) {
    FactorSet target = FactorSet::parse(j.at("target").get<std::string>());
    std::vector<std::pair<FactorSet, Rational>> combination;
    for (const auto& entry : j.at("combination"))
        combination.emplace_back(FactorSet::parse(entry.at("factors").get<std::string>()),
                                 parse_rational(entry.at("coeff").get<std::string>()));
    return {std::move(target), std::move(combination)};
}

}  // namespace schurcone
