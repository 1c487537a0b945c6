// evmdesc: natural-language descriptions for EVM runtime bytecode
// Copyright 2026 The evmdesc Authors.
// SPDX-License-Identifier: Apache-2.0

#include "evmdesc/disasm.hpp"
#include "evmdesc/errors.hpp"

namespace evmdesc
{
u256 Instruction::immediate_value() const
{
    u256 v = 0;
    for (const uint8_t b : immediate)
        v = (v << 8) | b;
    return v;
}

Disassembly disassemble(std::span<const uint8_t> code)
{
    if (code.empty())
        throw EmptyBytecodeError{};
    Disassembly out;
    out.instructions.reserve(code.size());
    size_t i = 0;
    while (i < code.size())
    {
        const auto& info = opcode_info(code[i]);
        Instruction instr;
        instr.pc = static_cast<Pc>(i);
        instr.opcode = &info;
        if (info.immediate_len > 0)
        {
            const size_t want = info.immediate_len;
            const size_t have = std::min(want, code.size() - i - 1);
            instr.immediate.assign(code.begin() + i + 1, code.begin() + i + 1 + have);
            if (have < want)
                out.truncated_push = true;
            i += 1 + have;
        }
        else
        {
            i += 1;
        }
        out.instructions.push_back(std::move(instr));
    }
    return out;
}

Bytes serialize(const Disassembly& d)
{
    Bytes out;
    for (const auto& instr : d.instructions)
    {
        out.push_back(instr.opcode->byte);
        out.insert(out.end(), instr.immediate.begin(), instr.immediate.end());
    }
    return out;
}

std::set<Pc> jumpdest_set(std::span<const uint8_t> code)
{
    std::set<Pc> dests;
    size_t i = 0;
    while (i < code.size())
    {
        const uint8_t op = code[i];
        if (op == OP_JUMPDEST)
            dests.insert(static_cast<Pc>(i));
        i += 1 + opcode_info(op).immediate_len;
    }
    return dests;
}

std::string to_string(const Instruction& instr)
{
    std::string s{instr.opcode->mnemonic};
    if (!instr.immediate.empty())
    {
        s += " 0x";
        s += to_hex(instr.immediate);
    }
    return s;
}
}  // namespace evmdesc
