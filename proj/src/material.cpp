#include "cosserat/material.hpp"

#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace cosserat {

namespace {
constexpr const char* kKeys[] = {"kappa1", "kappa2", "kappa3", "chi1",   "chi3",
                                 "rho",    "rho_rot", "mu_c",  "lambda", "mu"};

double* field_by_key(MaterialParams& p, const std::string& key) {
    if (key == "kappa1") return &p.kappa1;
    if (key == "kappa2") return &p.kappa2;
    if (key == "kappa3") return &p.kappa3;
    if (key == "chi1") return &p.chi1;
    if (key == "chi3") return &p.chi3;
    if (key == "rho") return &p.rho;
    if (key == "rho_rot") return &p.rho_rot;
    if (key == "mu_c") return &p.mu_c;
    if (key == "lambda") return &p.lambda;
    if (key == "mu") return &p.mu;
    return nullptr;
}
}  // namespace

void MaterialParams::validate() const {
    const double all[] = {kappa1, kappa2, kappa3, chi1, chi3, rho, rho_rot, mu_c, lambda, mu};
    for (double v : all)
        if (!std::isfinite(v)) throw std::invalid_argument("params: non-finite entry");
    if (!(rho > 0.0)) throw std::invalid_argument("params: rho > 0 violated");
    if (!(rho_rot > 0.0)) throw std::invalid_argument("params: rho_rot > 0 violated");
    if (!(mu > 0.0)) throw std::invalid_argument("params: mu > 0 violated");
    if (!(mu_c >= 0.0)) throw std::invalid_argument("params: mu_c >= 0 violated");
    if (!(lambda + 2.0 * mu > 0.0))
        throw std::invalid_argument("params: lambda + 2 mu > 0 violated (v_elas not real)");
    if (!(kappa1 + 6.0 * kappa3 > 0.0))
        throw std::invalid_argument("params: kappa1 + 6 kappa3 > 0 violated (v_rot not real)");
}

bool MaterialParams::admissible() const {
    try {
        validate();
    } catch (const std::invalid_argument&) {
        return false;
    }
    return true;
}

MaterialParams params_from_json_text(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw std::invalid_argument(std::string("params: JSON parse error: ") + e.what());
    }
    if (!j.is_object()) throw std::invalid_argument("params: top level must be a JSON object");

    MaterialParams p;
    for (const char* key : kKeys) {
        if (!j.contains(key))
            throw std::invalid_argument(std::string("params: missing key '") + key + "'");
        const auto& v = j.at(key);
        if (!v.is_number())
            throw std::invalid_argument(std::string("params: key '") + key + "' must be a number");
        *field_by_key(p, key) = v.get<double>();
    }
    p.validate();
    return p;
}

MaterialParams load_params_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("params: cannot open file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return params_from_json_text(buf.str());
}

std::string params_to_json_text(const MaterialParams& p) {
    nlohmann::ordered_json j;
    j["kappa1"] = p.kappa1;
    j["kappa2"] = p.kappa2;
    j["kappa3"] = p.kappa3;
    j["chi1"] = p.chi1;
    j["chi3"] = p.chi3;
    j["rho"] = p.rho;
    j["rho_rot"] = p.rho_rot;
    j["mu_c"] = p.mu_c;
    j["lambda"] = p.lambda;
    j["mu"] = p.mu;
    return j.dump(2);
}

}  // namespace cosserat
