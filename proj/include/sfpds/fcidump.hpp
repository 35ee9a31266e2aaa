#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "sfpds/chem.hpp"

namespace sfpds {

/// FCIDUMP text: "&FCI NORB=..,NELEC=..,MS2=.., ... &END" (or "/") header,
/// then "value i j k l" records in chemists' notation with 1-based indices.
/// "i j 0 0" is a one-body entry and "0 0 0 0" the core energy. Orbitals are
/// taken as orthonormal. Errors name the offending line.
IntegralSet parse_fcidump(std::string_view text);
IntegralSet read_fcidump(const std::filesystem::path& path);

/// Writes unique (i>=j, k>=l, ij>=kl) nonzero entries with 17 significant digits.
std::string format_fcidump(const IntegralSet& ints);
void write_fcidump(const IntegralSet& ints, const std::filesystem::path& path);

}  // namespace sfpds
