#ifndef CYCLOSCHUR_REPORT_HPP
#define CYCLOSCHUR_REPORT_HPP

#include <iosfwd>
#include <string>

#include "cycloschur/identity.hpp"

namespace cycloschur {

// JSON object {n, r, x, xi, backend, lhs, rhs, equal, observed_sign,
// elapsed_ms}; under the strict-printed-form flag the keys lhs_printed and
// equal_printed are appended.  Serialization is canonical: parsing and
// re-serializing a report yields identical bytes.
std::string report_to_json(const VerificationReport& rep);

// Round-trip helper: parses a serialized report and re-emits it.
std::string reserialize_report_json(const std::string& json_text);

void print_report_text(std::ostream& os, const VerificationReport& rep);

}  // namespace cycloschur

#endif
