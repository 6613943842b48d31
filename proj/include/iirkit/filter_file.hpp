#pragma once

#include <string>

#include "iirkit/design.hpp"
#include "iirkit/sos.hpp"

namespace iirkit {

// On-disk coefficient format: schema-versioned JSON with the spec echo
// and [b0,b1,b2,1,a1,a2] section rows.
struct FilterFile {
    int schema_version = 1;
    FilterSpec spec;  // order_override carries the realized order
    int order = 0;
    SOSCascade cascade;
};

std::string to_string(Family family);
std::string to_string(BandShape band);
Family family_from_string(const std::string& s);
BandShape band_from_string(const std::string& s);

void save_filter_file(const FilterFile& file, const std::string& path);
FilterFile load_filter_file(const std::string& path);

}  // namespace iirkit
