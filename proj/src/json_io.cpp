#include "spirallike/json_io.hpp"

#include <stdexcept>
#include <string>

namespace spirallike {

namespace {

Json complex_json(std::complex<double> z) { return Json::array({z.real(), z.imag()}); }

Json witness_json(const Witness& w)
{
    Json j;
    j["descriptor"] = w.descriptor;
    j["z"] = complex_json(w.z);
    j["measure"] = w.measure ? to_json(*w.measure) : Json(nullptr);
    return j;
}

} // namespace

Json to_json(const HerglotzMeasure& m)
{
    Json atoms = Json::array();
    for (Eigen::Index k = 0; k < m.size(); ++k) {
        Json atom;
        atom["w"] = m.weights()[k];
        atom["theta"] = m.thetas()[k];
        atoms.push_back(std::move(atom));
    }
    Json j;
    j["atoms"] = std::move(atoms);
    return j;
}

HerglotzMeasure measure_from_json(const Json& j)
{
    if (!j.is_object() || !j.contains("atoms") || !j["atoms"].is_array()) {
        throw std::invalid_argument("measure JSON must be an object with an \"atoms\" array");
    }
    const Json& atoms = j["atoms"];
    Eigen::ArrayXd weights(static_cast<Eigen::Index>(atoms.size()));
    Eigen::ArrayXd thetas(static_cast<Eigen::Index>(atoms.size()));
    Eigen::Index k = 0;
    for (const Json& atom : atoms) {
        if (!atom.is_object() || !atom.contains("w") || !atom.contains("theta")
            || !atom["w"].is_number() || !atom["theta"].is_number()) {
            throw std::invalid_argument("each atom needs numeric \"w\" and \"theta\"");
        }
        weights[k] = atom["w"].get<double>();
        thetas[k] = atom["theta"].get<double>();
        ++k;
    }
    return HerglotzMeasure(std::move(weights), std::move(thetas));
}

Json to_json(const RadiusReport& r)
{
    Json j;
    j["kind"] = r.kind == RadiusKind::R1 ? "R1" : "R2";
    j["lambda"] = r.lambda;
    j["value"] = r.value;
    j["bracket_lo"] = r.bracket_lo;
    j["bracket_hi"] = r.bracket_hi;
    j["iterations"] = r.iterations;
    j["tol"] = r.tol;
    return j;
}

Json to_json(const VerificationReport& r)
{
    Json j;
    j["schema"] = std::string(kReportSchema);
    j["claim"] = std::string(claim_name(r.claim));
    j["lambda"] = r.lambda;
    j["trials"] = r.trials;
    j["seed"] = r.seed;
    j["slack"] = r.slack;
    j["min_margin"] = r.min_margin;
    j["passed"] = r.passed;
    j["worst_witness"] = witness_json(r.worst_witness);
    return j;
}

Json to_json(const FalsifyResult& r)
{
    Json j;
    j["schema"] = std::string(kReportSchema);
    j["mode"] = "falsify";
    j["seed"] = r.seed;
    j["radius"] = r.radius;
    j["trials_searched"] = r.trials_searched;
    j["found"] = r.found;
    if (r.found) {
        j["re_q"] = r.re_q;
        j["witness"] = witness_json(r.witness);
    } else {
        j["result"] = "none found";
    }
    return j;
}

} // namespace spirallike
