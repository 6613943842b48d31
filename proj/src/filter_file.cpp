#include "iirkit/filter_file.hpp"

#include <fstream>
#include <stdexcept>

#include <json.hpp>

namespace iirkit {

using nlohmann::json;

std::string to_string(Family family) {
    switch (family) {
        case Family::butterworth: return "butterworth";
        case Family::chebyshev1: return "chebyshev1";
        case Family::elliptic: return "elliptic";
    }
    return "unknown";
}

std::string to_string(BandShape band) {
    switch (band) {
        case BandShape::lowpass: return "lowpass";
        case BandShape::highpass: return "highpass";
        case BandShape::bandpass: return "bandpass";
        case BandShape::bandstop: return "bandstop";
    }
    return "unknown";
}

Family family_from_string(const std::string& s) {
    if (s == "butterworth" || s == "butter") return Family::butterworth;
    if (s == "chebyshev1" || s == "cheby1") return Family::chebyshev1;
    if (s == "elliptic" || s == "ellip") return Family::elliptic;
    throw std::invalid_argument("unknown family: " + s);
}

BandShape band_from_string(const std::string& s) {
    if (s == "lowpass" || s == "lp") return BandShape::lowpass;
    if (s == "highpass" || s == "hp") return BandShape::highpass;
    if (s == "bandpass" || s == "bp") return BandShape::bandpass;
    if (s == "bandstop" || s == "bs") return BandShape::bandstop;
    throw std::invalid_argument("unknown band: " + s);
}

void save_filter_file(const FilterFile& file, const std::string& path) {
    json sections = json::array();
    for (const Biquad& q : file.cascade.sections) {
        sections.push_back({q.b0, q.b1, q.b2, 1.0, q.a1, q.a2});
    }
    json j{
        {"schema_version", file.schema_version},
        {"family", to_string(file.spec.family)},
        {"band", to_string(file.spec.band)},
        {"sample_rate", file.spec.sample_rate},
        {"order", file.order},
        {"spec",
         {{"passband_edges", file.spec.passband_edges},
          {"stopband_edges", file.spec.stopband_edges},
          {"passband_ripple_db", file.spec.passband_ripple_db},
          {"stopband_atten_db", file.spec.stopband_atten_db}}},
        {"overall_gain", file.cascade.overall_gain},
        {"sections", sections},
    };

    std::ofstream out(path);
    if (!out) throw std::runtime_error("io error: cannot write " + path);
    out << j.dump(2) << "\n";
}

FilterFile load_filter_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("io error: cannot open " + path);
    json j = json::parse(in);

    FilterFile file;
    file.schema_version = j.at("schema_version").get<int>();
    if (file.schema_version != 1) {
        throw std::runtime_error("unrecognized schema_version " +
                                 std::to_string(file.schema_version));
    }
    file.spec.family = family_from_string(j.at("family").get<std::string>());
    file.spec.band = band_from_string(j.at("band").get<std::string>());
    file.spec.sample_rate = j.at("sample_rate").get<double>();
    file.order = j.at("order").get<int>();
    file.spec.order_override = file.order;

    const json& spec = j.at("spec");
    file.spec.passband_edges = spec.at("passband_edges").get<std::vector<double>>();
    file.spec.stopband_edges = spec.at("stopband_edges").get<std::vector<double>>();
    file.spec.passband_ripple_db = spec.at("passband_ripple_db").get<double>();
    file.spec.stopband_atten_db = spec.at("stopband_atten_db").get<double>();

    file.cascade.overall_gain = j.at("overall_gain").get<double>();
    for (const json& row : j.at("sections")) {
        if (row.size() != 6 || row[3].get<double>() != 1.0) {
            throw std::runtime_error("corrupt coefficient file: bad section row");
        }
        Biquad q;
        q.b0 = row[0].get<double>();
        q.b1 = row[1].get<double>();
        q.b2 = row[2].get<double>();
        q.a1 = row[4].get<double>();
        q.a2 = row[5].get<double>();
        file.cascade.sections.push_back(q);
    }
    if (!is_stable(file.cascade).stable) {
        throw std::runtime_error("coefficient file describes an unstable cascade");
    }
    return file;
}

}  // namespace iirkit
