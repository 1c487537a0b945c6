// evmdesc: natural-language descriptions for EVM runtime bytecode
// Copyright 2026 The evmdesc Authors.
// SPDX-License-Identifier: Apache-2.0

#include "evmdesc/opcodes.hpp"

namespace evmdesc
{
namespace
{
struct Def
{
    uint8_t byte;
    std::string_view name;
    uint8_t pops;
    uint8_t pushes;
    bool term;
};

// Metropolis onward, plus later opcodes with correct stack arity so the
// disassembler and the symbolic executor never desynchronize on newer code.
constexpr Def kDefs[] = {
    {0x00, "STOP", 0, 0, true},
    {0x01, "ADD", 2, 1, false},
    {0x02, "MUL", 2, 1, false},
    {0x03, "SUB", 2, 1, false},
    {0x04, "DIV", 2, 1, false},
    {0x05, "SDIV", 2, 1, false},
    {0x06, "MOD", 2, 1, false},
    {0x07, "SMOD", 2, 1, false},
    {0x08, "ADDMOD", 3, 1, false},
    {0x09, "MULMOD", 3, 1, false},
    {0x0a, "EXP", 2, 1, false},
    {0x0b, "SIGNEXTEND", 2, 1, false},
    {0x10, "LT", 2, 1, false},
    {0x11, "GT", 2, 1, false},
    {0x12, "SLT", 2, 1, false},
    {0x13, "SGT", 2, 1, false},
    {0x14, "EQ", 2, 1, false},
    {0x15, "ISZERO", 1, 1, false},
    {0x16, "AND", 2, 1, false},
    {0x17, "OR", 2, 1, false},
    {0x18, "XOR", 2, 1, false},
    {0x19, "NOT", 1, 1, false},
    {0x1a, "BYTE", 2, 1, false},
    {0x1b, "SHL", 2, 1, false},
    {0x1c, "SHR", 2, 1, false},
    {0x1d, "SAR", 2, 1, false},
    {0x20, "SHA3", 2, 1, false},
    {0x30, "ADDRESS", 0, 1, false},
    {0x31, "BALANCE", 1, 1, false},
    {0x32, "ORIGIN", 0, 1, false},
    {0x33, "CALLER", 0, 1, false},
    {0x34, "CALLVALUE", 0, 1, false},
    {0x35, "CALLDATALOAD", 1, 1, false},
    {0x36, "CALLDATASIZE", 0, 1, false},
    {0x37, "CALLDATACOPY", 3, 0, false},
    {0x38, "CODESIZE", 0, 1, false},
    {0x39, "CODECOPY", 3, 0, false},
    {0x3a, "GASPRICE", 0, 1, false},
    {0x3b, "EXTCODESIZE", 1, 1, false},
    {0x3c, "EXTCODECOPY", 4, 0, false},
    {0x3d, "RETURNDATASIZE", 0, 1, false},
    {0x3e, "RETURNDATACOPY", 3, 0, false},
    {0x3f, "EXTCODEHASH", 1, 1, false},
    {0x40, "BLOCKHASH", 1, 1, false},
    {0x41, "COINBASE", 0, 1, false},
    {0x42, "TIMESTAMP", 0, 1, false},
    {0x43, "NUMBER", 0, 1, false},
    {0x44, "DIFFICULTY", 0, 1, false},
    {0x45, "GASLIMIT", 0, 1, false},
    {0x46, "CHAINID", 0, 1, false},
    {0x47, "SELFBALANCE", 0, 1, false},
    {0x48, "BASEFEE", 0, 1, false},
    {0x49, "BLOBHASH", 1, 1, false},
    {0x4a, "BLOBBASEFEE", 0, 1, false},
    {0x50, "POP", 1, 0, false},
    {0x51, "MLOAD", 1, 1, false},
    {0x52, "MSTORE", 2, 0, false},
    {0x53, "MSTORE8", 2, 0, false},
    {0x54, "SLOAD", 1, 1, false},
    {0x55, "SSTORE", 2, 0, false},
    {0x56, "JUMP", 1, 0, true},
    {0x57, "JUMPI", 2, 0, false},
    {0x58, "PC", 0, 1, false},
    {0x59, "MSIZE", 0, 1, false},
    {0x5a, "GAS", 0, 1, false},
    {0x5b, "JUMPDEST", 0, 0, false},
    {0x5c, "TLOAD", 1, 1, false},
    {0x5d, "TSTORE", 2, 0, false},
    {0x5e, "MCOPY", 3, 0, false},
    {0x5f, "PUSH0", 0, 1, false},
    {0xf0, "CREATE", 3, 1, false},
    {0xf1, "CALL", 7, 1, false},
    {0xf2, "CALLCODE", 7, 1, false},
    {0xf3, "RETURN", 2, 0, true},
    {0xf4, "DELEGATECALL", 6, 1, false},
    {0xf5, "CREATE2", 4, 1, false},
    {0xfa, "STATICCALL", 6, 1, false},
    {0xfd, "REVERT", 2, 0, true},
    {0xfe, "INVALID", 0, 0, true},
    {0xff, "SELFDESTRUCT", 1, 0, true},
};

constexpr std::string_view kPushNames[] = {"PUSH1", "PUSH2", "PUSH3", "PUSH4", "PUSH5", "PUSH6",
    "PUSH7", "PUSH8", "PUSH9", "PUSH10", "PUSH11", "PUSH12", "PUSH13", "PUSH14", "PUSH15",
    "PUSH16", "PUSH17", "PUSH18", "PUSH19", "PUSH20", "PUSH21", "PUSH22", "PUSH23", "PUSH24",
    "PUSH25", "PUSH26", "PUSH27", "PUSH28", "PUSH29", "PUSH30", "PUSH31", "PUSH32"};
constexpr std::string_view kDupNames[] = {"DUP1", "DUP2", "DUP3", "DUP4", "DUP5", "DUP6", "DUP7",
    "DUP8", "DUP9", "DUP10", "DUP11", "DUP12", "DUP13", "DUP14", "DUP15", "DUP16"};
constexpr std::string_view kSwapNames[] = {"SWAP1", "SWAP2", "SWAP3", "SWAP4", "SWAP5", "SWAP6",
    "SWAP7", "SWAP8", "SWAP9", "SWAP10", "SWAP11", "SWAP12", "SWAP13", "SWAP14", "SWAP15",
    "SWAP16"};
constexpr std::string_view kLogNames[] = {"LOG0", "LOG1", "LOG2", "LOG3", "LOG4"};

OpcodeTable build_table()
{
    OpcodeTable table{};
    for (unsigned b = 0; b < 256; ++b)
    {
        table[b].byte = static_cast<uint8_t>(b);
        table[b].mnemonic = "INVALID";
        table[b].is_terminator = true;
        table[b].assigned = false;
    }
    for (const auto& d : kDefs)
    {
        auto& e = table[d.byte];
        e.mnemonic = d.name;
        e.stack_pops = d.pops;
        e.stack_pushes = d.pushes;
        e.is_terminator = d.term;
        e.assigned = true;
    }
    for (unsigned n = 1; n <= 32; ++n)
    {
        auto& e = table[OP_PUSH1 + n - 1];
        e.mnemonic = kPushNames[n - 1];
        e.immediate_len = static_cast<uint8_t>(n);
        e.stack_pushes = 1;
        e.is_terminator = false;
        e.assigned = true;
    }
    for (unsigned n = 1; n <= 16; ++n)
    {
        auto& dup = table[OP_DUP1 + n - 1];
        dup.mnemonic = kDupNames[n - 1];
        dup.stack_pops = static_cast<uint8_t>(n);
        dup.stack_pushes = static_cast<uint8_t>(n + 1);
        dup.is_terminator = false;
        dup.assigned = true;
        auto& swap = table[OP_SWAP1 + n - 1];
        swap.mnemonic = kSwapNames[n - 1];
        swap.stack_pops = static_cast<uint8_t>(n + 1);
        swap.stack_pushes = static_cast<uint8_t>(n + 1);
        swap.is_terminator = false;
        swap.assigned = true;
    }
    for (unsigned n = 0; n <= 4; ++n)
    {
        auto& e = table[OP_LOG0 + n];
        e.mnemonic = kLogNames[n];
        e.stack_pops = static_cast<uint8_t>(2 + n);
        e.is_terminator = false;
        e.assigned = true;
    }
    return table;
}
}  // namespace

const OpcodeTable& opcode_table()
{
    static const OpcodeTable table = build_table();
    return table;
}
}  // namespace evmdesc
