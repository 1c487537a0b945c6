// evmdesc: natural-language descriptions for EVM runtime bytecode
// Copyright 2026 The evmdesc Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace evmdesc
{
using Bytes = std::vector<uint8_t>;

/// Decodes a hex string into bytes. Accepts an optional 0x prefix and mixed
/// case; surrounding whitespace (including a trailing newline) is ignored.
/// Throws HexError on odd length or non-hex characters.
Bytes parse_hex(std::string_view text);

/// Lowercase hex encoding without prefix.
std::string to_hex(const Bytes& data);

std::string selector_hex(uint32_t selector);
}  // namespace evmdesc
