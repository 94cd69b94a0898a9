// Self-contained SHA-256, used to stamp reports with their input digest.

#pragma once

#include <cstdint>
#include <string>

namespace qtcob {

/// Hex digest of the given bytes.
std::string sha256_hex(const std::string& bytes);

}  // namespace qtcob
