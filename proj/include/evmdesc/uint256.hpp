// evmdesc: natural-language descriptions for EVM runtime bytecode
// Copyright 2026 The evmdesc Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <sstream>
#include <string>

namespace evmdesc
{
/// 256-bit EVM machine word. Fixed width and unchecked, so arithmetic wraps
/// modulo 2^256 exactly like the EVM.
using u256 = boost::multiprecision::uint256_t;
using u512 = boost::multiprecision::uint512_t;

/// Program counter: byte offset into the runtime code.
using Pc = uint32_t;

inline std::string to_hex_string(const u256& v)
{
    std::ostringstream os;
    os << std::hex << v;
    return "0x" + os.str();
}
}  // namespace evmdesc
