#pragma once

#include <string>

namespace polytc {

// FNV-1a over the bytes, as a 16-hex-digit string. Provenance tagging
// for certificates, not a security boundary.
std::string fnv1a64_hex(const std::string& bytes);

// "fnv1a64:<hex>" of a file's contents; input_error if unreadable.
std::string hash_file(const std::string& path);

// Same tag computed over an in-memory serialization (used for base
// presentations, which have no backing file).
std::string hash_bytes(const std::string& bytes);

}  // namespace polytc
