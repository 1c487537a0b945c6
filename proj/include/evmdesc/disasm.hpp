// evmdesc: natural-language descriptions for EVM runtime bytecode
// Copyright 2026 The evmdesc Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "evmdesc/hex.hpp"
#include "evmdesc/opcodes.hpp"
#include "evmdesc/uint256.hpp"

#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

namespace evmdesc
{
struct Instruction
{
    Pc pc = 0;
    const OpcodeInfo* opcode = nullptr;
    Bytes immediate;  // immediate_len bytes, possibly shorter for a truncated trailing PUSH

    uint8_t byte() const { return opcode->byte; }
    bool is(uint8_t op) const { return opcode->byte == op; }

    /// Immediate interpreted as a big-endian 256-bit value.
    u256 immediate_value() const;
};

struct Disassembly
{
    std::vector<Instruction> instructions;
    // Set when the final PUSH ran past the end of the code; the short
    // immediate is kept as-is.
    bool truncated_push = false;
};

/// Decodes raw runtime bytecode into an instruction stream. Total on any
/// byte string: unassigned opcodes decode as INVALID-class instructions.
/// Throws EmptyBytecodeError on empty input.
Disassembly disassemble(std::span<const uint8_t> code);

/// Re-encodes an instruction stream; serialize(disassemble(c)) == c.
Bytes serialize(const Disassembly& d);

/// Program counters of JUMPDEST bytes that are real instructions, i.e. not
/// shadowed by a preceding PUSH immediate.
std::set<Pc> jumpdest_set(std::span<const uint8_t> code);

/// One-line rendering, e.g. "PUSH2 0x0041".
std::string to_string(const Instruction& instr);
}  // namespace evmdesc
