// Dims files: a single JSON document {"edges": [[a, b], ...],
// "facets": [[k, l, p, q], ...], "name": "..."} with integer coordinates in
// signed 32-bit range. Everything here is parsing and serialization; the
// invariants live in FullereneDims.
#pragma once

#include <stdexcept>
#include <string>

#include "fullerene.hpp"

namespace gcf {

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

FullereneDims parse_dims(const std::string& text);  // throws ParseError

std::string dims_to_json(const FullereneDims& d, bool pretty);
std::string report_to_json(const IdentificationReport& r, bool pretty);

}  // namespace gcf
