#ifndef SQZ_IO_HPP
#define SQZ_IO_HPP

#include <string>

#include <nlohmann/json.hpp>

#include "sqz/linalg.hpp"

namespace sqz {

using OrderedJson = nlohmann::ordered_json;

/// 17 significant digits, lowercase scientific; round-trips exactly.
std::string format_float(double v);

/// Write-to-temp-then-rename so readers never observe a partial file.
void atomic_write(const std::string& path, const std::string& content);

/// Row-major matrix encoding with [re, im] entry pairs.
OrderedJson matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const OrderedJson& j);

/// JSON numbers rendered through format_float for deterministic output.
std::string dump_deterministic(const OrderedJson& j, int indent = 2);

}  // namespace sqz

#endif
