// evmdesc: natural-language descriptions for EVM runtime bytecode
// Copyright 2026 The evmdesc Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "evmdesc/disasm.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace evmdesc
{
enum class TerminatorKind
{
    jump,
    jumpi,
    fallthrough,
    terminator,
};

enum class EdgeKind
{
    taken,
    fallthrough,
};

struct BasicBlock
{
    size_t id = 0;
    Pc start_pc = 0;
    Pc end_pc = 0;           // pc of the last instruction in the block
    size_t first_instr = 0;  // index range into Cfg::instructions
    size_t instr_count = 0;
    TerminatorKind terminator_kind = TerminatorKind::fallthrough;
};

struct Edge
{
    size_t from = 0;
    size_t to = 0;
    EdgeKind kind = EdgeKind::fallthrough;
    auto operator<=>(const Edge&) const = default;
};

/// Control flow graph over the disassembled instruction stream. Immutable
/// after construction and shareable across threads.
class Cfg
{
public:
    std::vector<Instruction> instructions;
    std::set<Pc> jumpdests;
    std::vector<BasicBlock> blocks;
    std::set<Edge> edges;
    // JUMP/JUMPI pcs whose target is not a PUSH constant in the same block;
    // resolution is deferred to symbolic execution.
    std::set<Pc> unresolved_jumps;
    // JUMP/JUMPI pcs whose PUSH-constant target is not a JUMPDEST.
    std::set<Pc> invalid_static_jumps;

    const BasicBlock* block_starting_at(Pc pc) const;
    const BasicBlock* block_containing(Pc pc) const;
    const Instruction& terminator_of(const BasicBlock& b) const
    {
        return instructions[b.first_instr + b.instr_count - 1];
    }
    const Instruction* instruction_at(Pc pc) const;

    std::vector<const Edge*> out_edges(size_t block_id) const;
    const Edge* out_edge(size_t block_id, EdgeKind kind) const;

    /// Blocks reachable from the entry block (block 0) over static edges.
    /// Bytecode data trailers disassemble to unreachable garbage blocks and
    /// stay out of this set.
    std::set<size_t> reachable_blocks() const;

    bool contains_push4() const;

private:
    friend Cfg build_cfg(Disassembly d, std::set<Pc> jumpdests);
    std::map<Pc, size_t> block_index_;  // start_pc -> block id
};

Cfg build_cfg(Disassembly d, std::set<Pc> jumpdests);

/// Reachable JUMP/JUMPI pcs whose statically-resolved constant target is not
/// a valid JUMPDEST.
std::set<Pc> statically_invalid_jumps(const Cfg& cfg);

/// DOT rendering: one node per block labeled "start..end", edges labeled
/// taken/fallthrough.
std::string to_dot(const Cfg& cfg);
}  // namespace evmdesc
