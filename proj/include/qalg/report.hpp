#pragma once

#include <string>

#include "qalg/verify.hpp"

namespace qalg {

/**
 * JSON form of a report:
 *   {"algebra": {"name", "dim", "field"},
 *    "entries": [{"id", "anchor", "status", "witness": {..}, "cutoff", "ms"}]}
 * Keys keep insertion order so output is stable apart from "ms".
 */
std::string report_to_json(const VerificationReport& r, int indent = 2);
VerificationReport report_from_json(const std::string& text);

/** One line per entry: status, id, then the witness. */
std::string report_to_text(const VerificationReport& r);

}  // namespace qalg
