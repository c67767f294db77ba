#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "goedisc/harness/config.hpp"
#include "goedisc/harness/records.hpp"

namespace goedisc::harness {

/// n,m,trial,seed,disc,predicted,xi_hat,ratio,runtime_ms
const std::vector<std::string>& prediction_columns();

Table prediction_table(const std::vector<PredictionRecord>& records);

/// %.17g; non-finite values as nan, inf, -inf.
std::string format_real(double value);

void write_csv(const Table& table, std::ostream& os);
/// Array of flat objects; non-finite reals become null.
void write_json(const Table& table, std::ostream& os);

/// Writes to `path`, or to stdout when it is empty. Throws IoError with the path.
void emit(const Table& table, OutputFormat format, const std::string& path);

std::vector<PredictionRecord> parse_prediction_csv(std::istream& is);
std::vector<PredictionRecord> parse_prediction_json(std::istream& is);

}  // namespace goedisc::harness
