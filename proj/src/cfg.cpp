// evmdesc: natural-language descriptions for EVM runtime bytecode
// Copyright 2026 The evmdesc Authors.
// SPDX-License-Identifier: Apache-2.0

#include "evmdesc/cfg.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

namespace evmdesc
{
const BasicBlock* Cfg::block_starting_at(Pc pc) const
{
    const auto it = block_index_.find(pc);
    return it == block_index_.end() ? nullptr : &blocks[it->second];
}

const BasicBlock* Cfg::block_containing(Pc pc) const
{
    auto it = block_index_.upper_bound(pc);
    if (it == block_index_.begin())
        return nullptr;
    --it;
    const BasicBlock& b = blocks[it->second];
    const Instruction& last = instructions[b.first_instr + b.instr_count - 1];
    if (pc > last.pc)
        return nullptr;
    return &b;
}

const Instruction* Cfg::instruction_at(Pc pc) const
{
    const auto it = std::lower_bound(instructions.begin(), instructions.end(), pc,
        [](const Instruction& i, Pc p) { return i.pc < p; });
    if (it == instructions.end() || it->pc != pc)
        return nullptr;
    return &*it;
}

std::vector<const Edge*> Cfg::out_edges(size_t block_id) const
{
    std::vector<const Edge*> out;
    for (auto it = edges.lower_bound(Edge{block_id, 0, EdgeKind::taken});
         it != edges.end() && it->from == block_id; ++it)
        out.push_back(&*it);
    return out;
}

const Edge* Cfg::out_edge(size_t block_id, EdgeKind kind) const
{
    for (const Edge* e : out_edges(block_id))
        if (e->kind == kind)
            return e;
    return nullptr;
}

std::set<size_t> Cfg::reachable_blocks() const
{
    std::set<size_t> seen;
    if (blocks.empty())
        return seen;
    std::deque<size_t> work{0};
    seen.insert(0);
    while (!work.empty())
    {
        const size_t id = work.front();
        work.pop_front();
        for (const Edge* e : out_edges(id))
            if (seen.insert(e->to).second)
                work.push_back(e->to);
    }
    return seen;
}

bool Cfg::contains_push4() const
{
    return std::any_of(instructions.begin(), instructions.end(),
        [](const Instruction& i) { return i.is(OP_PUSH4); });
}

Cfg build_cfg(Disassembly d, std::set<Pc> jumpdests)
{
    Cfg cfg;
    cfg.instructions = std::move(d.instructions);
    cfg.jumpdests = std::move(jumpdests);
    const auto& instrs = cfg.instructions;
    if (instrs.empty())
        return cfg;

    // Leaders: first instruction, every JUMPDEST, and every instruction
    // following a block-ending one (JUMP/JUMPI/terminator).
    std::set<size_t> leaders{0};
    for (size_t i = 0; i < instrs.size(); ++i)
    {
        if (instrs[i].is(OP_JUMPDEST))
            leaders.insert(i);
        const bool ends_block =
            instrs[i].is(OP_JUMP) || instrs[i].is(OP_JUMPI) || instrs[i].opcode->is_terminator;
        if (ends_block && i + 1 < instrs.size())
            leaders.insert(i + 1);
    }

    for (auto it = leaders.begin(); it != leaders.end(); ++it)
    {
        const size_t first = *it;
        const size_t next = std::next(it) == leaders.end() ? instrs.size() : *std::next(it);
        BasicBlock b;
        b.id = cfg.blocks.size();
        b.first_instr = first;
        b.instr_count = next - first;
        b.start_pc = instrs[first].pc;
        b.end_pc = instrs[next - 1].pc;
        const Instruction& last = instrs[next - 1];
        if (last.is(OP_JUMP))
            b.terminator_kind = TerminatorKind::jump;
        else if (last.is(OP_JUMPI))
            b.terminator_kind = TerminatorKind::jumpi;
        else if (last.opcode->is_terminator)
            b.terminator_kind = TerminatorKind::terminator;
        else
            b.terminator_kind = TerminatorKind::fallthrough;
        cfg.block_index_[b.start_pc] = b.id;
        cfg.blocks.push_back(b);
    }

    for (const BasicBlock& b : cfg.blocks)
    {
        const Instruction& last = cfg.instructions[b.first_instr + b.instr_count - 1];
        const bool is_jump = last.is(OP_JUMP) || last.is(OP_JUMPI);
        if (is_jump)
        {
            // Static resolution covers only a PUSH immediately before the
            // jump inside the same block; everything else is deferred.
            const Instruction* prev =
                b.instr_count >= 2 ? &cfg.instructions[b.first_instr + b.instr_count - 2] : nullptr;
            if (prev != nullptr && is_push(prev->byte()))
            {
                const u256 target = prev->immediate_value();
                if (target <= u256(std::numeric_limits<Pc>::max()) &&
                    cfg.jumpdests.count(static_cast<Pc>(target)) > 0)
                {
                    const auto dest = cfg.block_index_.find(static_cast<Pc>(target));
                    if (dest != cfg.block_index_.end())
                        cfg.edges.insert({b.id, dest->second, EdgeKind::taken});
                }
                else
                {
                    cfg.invalid_static_jumps.insert(last.pc);
                }
            }
            else
            {
                cfg.unresolved_jumps.insert(last.pc);
            }
        }
        const bool falls_through = b.terminator_kind == TerminatorKind::fallthrough ||
                                   b.terminator_kind == TerminatorKind::jumpi;
        if (falls_through && b.id + 1 < cfg.blocks.size())
            cfg.edges.insert({b.id, b.id + 1, EdgeKind::fallthrough});
    }
    return cfg;
}

std::set<Pc> statically_invalid_jumps(const Cfg& cfg)
{
    const std::set<size_t> reachable = cfg.reachable_blocks();
    std::set<Pc> out;
    for (const Pc pc : cfg.invalid_static_jumps)
    {
        const BasicBlock* b = cfg.block_containing(pc);
        if (b != nullptr && reachable.count(b->id) > 0)
            out.insert(pc);
    }
    return out;
}

std::string to_dot(const Cfg& cfg)
{
    std::ostringstream os;
    os << "digraph cfg {\n  node [shape=box fontname=\"monospace\"];\n";
    for (const BasicBlock& b : cfg.blocks)
        os << "  b" << b.id << " [label=\"0x" << std::hex << b.start_pc << "..0x" << b.end_pc
           << std::dec << "\"];\n";
    for (const Edge& e : cfg.edges)
        os << "  b" << e.from << " -> b" << e.to << " [label=\""
           << (e.kind == EdgeKind::taken ? "taken" : "fallthrough") << "\"];\n";
    os << "}\n";
    return os.str();
}
}  // namespace evmdesc
