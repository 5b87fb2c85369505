#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "hookbound/harness.hpp"

namespace hookbound {

enum class OutputFormat { csv, json };

/// Throws std::invalid_argument for anything but "csv" or "json".
OutputFormat parse_output_format(const std::string& text);

/// Header: n,lambda,alpha_or_mu,lhs_num,lhs_den,rhs_num,rhs_den,
/// implied_c_num,implied_c_den,satisfied
void write_csv(std::ostream& out, const std::vector<BoundRecord>& records);
void write_csv(std::ostream& out, const OrthogonalityReport& report);
void write_csv(std::ostream& out, const std::vector<SharpnessReport>& reports);
void write_csv(std::ostream& out, const std::vector<CompressionStats>& stats);

/// JSON documents share the envelope {"kind", "n", "records", "summary"};
/// exact rationals are {"num": "...", "den": "..."} decimal strings.
/// schema/report.schema.json describes all four kinds.
void write_json(std::ostream& out, const BoundSweep& sweep);
void write_json(std::ostream& out, const OrthogonalityReport& report);
void write_json(std::ostream& out, int max_n, const std::vector<SharpnessReport>& reports);
void write_json(std::ostream& out, int n, const std::vector<CompressionStats>& stats);

}  // namespace hookbound
