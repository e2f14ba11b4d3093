#include "prmlcc/serialize.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace prmlcc {

using nlohmann::json;

std::string family_name(CodeFamily family) {
    switch (family) {
        case CodeFamily::PRM: return "PRM";
        case CodeFamily::GRM: return "GRM";
        case CodeFamily::RS: return "RS";
        case CodeFamily::ERS: return "ERS";
    }
    return "?";
}

CodeFamily family_from_name(std::string_view name) {
    std::string lower(name);
    std::transform(lower.begin(), lower.end(), lower.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    if (lower == "prm") return CodeFamily::PRM;
    if (lower == "grm") return CodeFamily::GRM;
    if (lower == "rs") return CodeFamily::RS;
    if (lower == "ers") return CodeFamily::ERS;
    throw std::invalid_argument("unknown code family: " + std::string(name));
}

namespace {

json field_json(const Field& f) {
    return json{{"p", f.p()}, {"k", f.k()}, {"modulus", f.modulus()}};
}

Field field_from(const json& j) {
    Field f(j.at("p").get<unsigned>(), j.value("k", 1u));
    if (j.contains("modulus")) {
        const auto stored = j.at("modulus").get<std::vector<Elem>>();
        if (stored != f.modulus())
            throw std::invalid_argument("field json: modulus does not match the canonical choice");
    }
    return f;
}

}  // namespace

std::string field_to_json(const Field& f) { return field_json(f).dump(); }

Field field_from_json(const std::string& text) { return field_from(json::parse(text)); }

std::string codeword_to_json(const Codeword& word) {
    json j{{"family", family_name(word.spec.family)},
           {"p", word.spec.field.p()},
           {"k", word.spec.field.k()},
           {"d", word.spec.d}};
    if (word.spec.family == CodeFamily::PRM || word.spec.family == CodeFamily::GRM)
        j["m"] = word.spec.m;
    j["symbols"] = word.symbols;
    return j.dump();
}

Codeword codeword_from_json(const std::string& text) {
    const json j = json::parse(text);
    CodeSpec spec{family_from_name(j.at("family").get<std::string>()),
                  Field(j.at("p").get<unsigned>(), j.value("k", 1u)), j.at("d").get<unsigned>(),
                  j.value("m", 1u)};
    validate_spec(spec);

    Codeword word{spec, j.at("symbols").get<std::vector<Elem>>()};
    if (word.symbols.size() != code_params(spec).code_length)
        throw std::invalid_argument("codeword json: symbol count does not match the spec");
    for (Elem s : word.symbols)
        if (s >= spec.field.q()) throw std::invalid_argument("codeword json: symbol out of range");
    return word;
}

Codeword load_codeword(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return codeword_from_json(buf.str());
}

void save_codeword(const Codeword& word, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << codeword_to_json(word) << '\n';
}

std::string report_to_json(const SimReport& report) {
    const CodeSpec& spec = report.config.spec;
    json j{{"family", family_name(spec.family)},
           {"p", spec.field.p()},
           {"k", spec.field.k()},
           {"d", spec.d},
           {"m", spec.m},
           {"mode", mode_name(report.config.mode)},
           {"delta", report.config.delta},
           {"trials", report.config.trials},
           {"seed", report.config.seed},
           {"success", report.success},
           {"wrong", report.wrong},
           {"failed", report.failed},
           {"bound", report.bound},
           {"wall_time", report.wall_time_seconds}};
    if (report.sigma_used)
        j["sigma"] = *report.sigma_used;
    else
        j["sigma"] = nullptr;
    return j.dump();
}

std::string reports_to_csv(std::span<const SimReport> reports) {
    std::ostringstream out;
    out << "family,p,k,d,m,delta,sigma,trials,seed,success,wrong,failed,bound\n";
    for (const SimReport& r : reports) {
        const CodeSpec& spec = r.config.spec;
        out << family_name(spec.family) << ',' << spec.field.p() << ',' << spec.field.k() << ','
            << spec.d << ',' << spec.m << ',' << r.config.delta << ',';
        if (r.sigma_used) out << *r.sigma_used;
        out << ',' << r.config.trials << ',' << r.config.seed << ',' << r.success << ',' << r.wrong
            << ',' << r.failed << ',' << r.bound << '\n';
    }
    return out.str();
}

}  // namespace prmlcc
