#pragma once

// JSON form of a gap certificate:
//   {"kind": "tan"|"bessel", "t": "a/b", "s": "c/d"|null, "p": "...", "q": "...",
//    "n": 3, "W": "-1", "A_upper": "3.3e-02", "gap_lower_bound": "x/2^k",
//    "prec_bits": 256}
// Big integers and rationals are strings; field order is fixed.

#include <lhcert/certify.hpp>

#include <json.hpp>

namespace lhcert {

nlohmann::ordered_json certificate_to_json(const GapCertificate& cert);

// The A_n ball is not serialized; a_bound is left empty and a_upper is kept
// as text. Throws Error(Parse) on schema problems.
GapCertificate certificate_from_json(const nlohmann::json& j);

}  // namespace lhcert
