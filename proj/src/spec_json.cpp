#include "diskspace/spec_json.hpp"

#include <cstdint>
#include <sstream>

#include <json.hpp>

#include "diskspace/errors.hpp"

namespace diskspace {

namespace {

using nlohmann::json;

Complex parse_coefficient(const json& j) {
    if (j.is_number()) return {j.get<double>(), 0.0};
    if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number())
        return {j[0].get<double>(), j[1].get<double>()};
    raise(ErrorCode::MalformedSpec,
          "coefficient must be a number or a [re, im] pair");
}

std::vector<Complex> parse_coefficients(const json& j, const char* field) {
    if (!j.is_array())
        raise(ErrorCode::MalformedSpec, std::string(field) + " must be an array");
    std::vector<Complex> out;
    out.reserve(j.size());
    for (const auto& item : j) out.push_back(parse_coefficient(item));
    return out;
}

json parse_json(const std::string& text) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded())
        raise(ErrorCode::MalformedSpec, "spec is not valid JSON: " + text);
    return j;
}

} // namespace

DiskFunction parse_function_spec(const std::string& text) {
    if (text == "identity")
        return DiskFunction::power_series({{0.0, 0.0}, {1.0, 0.0}});
    json j = parse_json(text);
    if (!j.is_object() || !j.contains("family") || !j["family"].is_string())
        raise(ErrorCode::MalformedSpec, "function spec needs a \"family\" string");
    std::string family = j["family"].get<std::string>();
    if (family == "power") {
        if (!j.contains("coeffs"))
            raise(ErrorCode::MalformedSpec, "power family needs \"coeffs\"");
        return DiskFunction::power_series(parse_coefficients(j["coeffs"], "coeffs"));
    }
    if (family == "lacunary") {
        if (!j.contains("terms") || !j["terms"].is_number_integer())
            raise(ErrorCode::MalformedSpec, "lacunary family needs integer \"terms\"");
        return DiskFunction::lacunary(j["terms"].get<int>());
    }
    if (family == "harmonic_pair") {
        if (!j.contains("h") || !j.contains("g"))
            raise(ErrorCode::MalformedSpec, "harmonic_pair needs \"h\" and \"g\"");
        return DiskFunction::harmonic_pair(parse_coefficients(j["h"], "h"),
                                           parse_coefficients(j["g"], "g"));
    }
    if (family == "yukawa") {
        if (!j.contains("lambda") || !j["lambda"].is_number())
            raise(ErrorCode::MalformedSpec, "yukawa family needs numeric \"lambda\"");
        return DiskFunction::yukawa_exp(j["lambda"].get<double>());
    }
    raise(ErrorCode::MalformedSpec, "unknown function family: " + family);
}

Majorant parse_majorant_spec(const std::string& text) {
    if (text == "identity") return Majorant::identity();
    if (text == "logsmoothed") return Majorant::log_smoothed();
    if (text.rfind("power:", 0) == 0) {
        std::istringstream is(text.substr(6));
        double s;
        if (!(is >> s)) raise(ErrorCode::MalformedSpec, "bad power shorthand: " + text);
        return Majorant::power(s);
    }
    json j = parse_json(text);
    if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string())
        raise(ErrorCode::MalformedSpec, "majorant spec needs a \"kind\" string");
    std::string kind = j["kind"].get<std::string>();
    if (kind == "identity") return Majorant::identity();
    if (kind == "logsmoothed") return Majorant::log_smoothed();
    if (kind == "power") {
        if (!j.contains("s") || !j["s"].is_number())
            raise(ErrorCode::MalformedSpec, "power majorant needs numeric \"s\"");
        return Majorant::power(j["s"].get<double>());
    }
    if (kind == "table") {
        if (!j.contains("knots") || !j["knots"].is_array())
            raise(ErrorCode::MalformedSpec, "table majorant needs \"knots\"");
        std::vector<std::pair<double, double>> knots;
        for (const auto& k : j["knots"]) {
            if (!k.is_array() || k.size() != 2 || !k[0].is_number() || !k[1].is_number())
                raise(ErrorCode::MalformedSpec, "each knot must be a [t, w] pair");
            knots.emplace_back(k[0].get<double>(), k[1].get<double>());
        }
        return Majorant::table(std::move(knots));
    }
    raise(ErrorCode::MalformedSpec, "unknown majorant kind: " + kind);
}

std::string config_hash(const std::string& canonical) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : canonical) {
        h ^= c;
        h *= 1099511628211ull;
    }
    std::ostringstream os;
    os << std::hex << h;
    return os.str();
}

} // namespace diskspace
