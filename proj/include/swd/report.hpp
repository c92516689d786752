// Deterministic serialization of verification results.
//
// JSON documents use insertion-ordered objects so that two runs with the
// same configuration produce byte-identical files; CSV rows quote the
// composition cells (their parts are comma-joined) per RFC 4180.

#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "swd/hom_engine.hpp"

namespace swd {

using OrderedJson = nlohmann::ordered_json;

OrderedJson to_json(const ThetaResult& result);
OrderedJson to_json(const CheckRecord& record);
OrderedJson to_json(const SemisimpleReport& report);
OrderedJson to_json(const VerifyReport& report);
OrderedJson to_json(const FieldIndependence& matrix);

// Serialized document: dump with two-space indent and a trailing newline.
std::string json_text(const OrderedJson& j);

// RFC 4180 quoting: wrap in double quotes, doubling any embedded quote.
std::string csv_quote(const std::string& cell);

// Header shared by all theta-dimension tables.
std::string csv_header();

// One line per theta row: alpha, beta, field, and the three dimensions.
std::vector<std::string> csv_rows(const VerifyReport& report);
std::vector<std::string> csv_rows(const FieldIndependence& matrix);

// Header line plus rows, newline-terminated.
std::string csv_document(const std::vector<std::string>& rows);

}  // namespace swd
