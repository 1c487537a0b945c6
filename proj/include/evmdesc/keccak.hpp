// evmdesc: natural-language descriptions for EVM runtime bytecode
// Copyright 2026 The evmdesc Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string_view>

namespace evmdesc
{
/// Keccak-256 with the original 0x01 domain padding (the variant Ethereum
/// uses), not the later standardized SHA3-256.
std::array<uint8_t, 32> keccak256(std::span<const uint8_t> data);
std::array<uint8_t, 32> keccak256(std::string_view text);
}  // namespace evmdesc
