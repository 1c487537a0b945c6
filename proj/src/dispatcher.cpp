// evmdesc: natural-language descriptions for EVM runtime bytecode
// Copyright 2026 The evmdesc Authors.
// SPDX-License-Identifier: Apache-2.0

#include "evmdesc/dispatcher.hpp"
#include "evmdesc/hex.hpp"

#include <algorithm>

namespace evmdesc
{
namespace
{
// Blocks the walk may cross before the first comparison (memory setup and
// the calldatasize guard solc emits ahead of the dispatcher).
constexpr size_t kMaxLeadBlocks = 4;
constexpr size_t kMaxChainBlocks = 4 * 1024;

bool is_dup(uint8_t b)
{
    return b >= OP_DUP1 && b <= OP_DUP16;
}
bool is_swap(uint8_t b)
{
    return b >= OP_SWAP1 && b <= OP_SWAP16;
}

// Matches one selector comparison inside a block: PUSH4 constant compared
// with EQ feeding the terminating JUMPI whose target is a PUSH constant.
// DUP/SWAP shuffling between the parts is tolerated.
std::optional<SelectorBinding> match_comparison(const Cfg& cfg, const BasicBlock& b)
{
    if (b.terminator_kind != TerminatorKind::jumpi || b.instr_count < 4)
        return std::nullopt;
    const size_t last = b.first_instr + b.instr_count - 1;
    const Instruction& jumpi = cfg.instructions[last];
    const Instruction& target_push = cfg.instructions[last - 1];
    if (!is_push(target_push.byte()))
        return std::nullopt;
    const u256 target = target_push.immediate_value();
    if (target > u256(std::numeric_limits<Pc>::max()) ||
        cfg.jumpdests.count(static_cast<Pc>(target)) == 0)
        return std::nullopt;

    // Walk backwards over the EQ and locate the PUSH4 feeding it.
    size_t i = last - 1;
    while (i > b.first_instr && (is_dup(cfg.instructions[i - 1].byte()) ||
                                    is_swap(cfg.instructions[i - 1].byte())))
        --i;
    if (i == b.first_instr || !cfg.instructions[i - 1].is(OP_EQ))
        return std::nullopt;
    size_t j = i - 1;
    while (j > b.first_instr &&
           (is_dup(cfg.instructions[j - 1].byte()) || is_swap(cfg.instructions[j - 1].byte())))
        --j;
    if (j == b.first_instr || !cfg.instructions[j - 1].is(OP_PUSH4) ||
        cfg.instructions[j - 1].immediate.size() != 4)
        return std::nullopt;

    const bool loads_calldata = std::any_of(cfg.instructions.begin() + b.first_instr,
        cfg.instructions.begin() + last,
        [](const Instruction& in) { return in.is(OP_CALLDATALOAD); });

    SelectorBinding binding;
    binding.selector = static_cast<uint32_t>(cfg.instructions[j - 1].immediate_value());
    binding.entry_pc = static_cast<Pc>(target);
    binding.pattern = loads_calldata ? DispatchPattern::type1 : DispatchPattern::type2;
    binding.compare_pc = jumpi.pc;
    return binding;
}
}  // namespace

DispatchInfo extract_selectors(const Cfg& cfg)
{
    DispatchInfo info;
    if (cfg.blocks.empty())
        return info;

    std::set<uint32_t> seen;
    size_t lead_blocks = 0;
    size_t walked = 0;
    const BasicBlock* current = &cfg.blocks[0];
    while (current != nullptr && walked++ < kMaxChainBlocks)
    {
        if (const auto binding = match_comparison(cfg, *current))
        {
            if (seen.insert(binding->selector).second)
                info.bindings.push_back(*binding);
            const Edge* next = cfg.out_edge(current->id, EdgeKind::fallthrough);
            current = next != nullptr ? &cfg.blocks[next->to] : nullptr;
            continue;
        }
        if (info.bindings.empty())
        {
            // Still ahead of the dispatcher; cross setup blocks that keep
            // falling through.
            const bool can_continue = current->terminator_kind == TerminatorKind::fallthrough ||
                                      current->terminator_kind == TerminatorKind::jumpi;
            if (can_continue && ++lead_blocks <= kMaxLeadBlocks)
            {
                const Edge* next = cfg.out_edge(current->id, EdgeKind::fallthrough);
                current = next != nullptr ? &cfg.blocks[next->to] : nullptr;
                continue;
            }
            break;
        }
        // First non-comparison block after the chain: the default edge.
        info.fallback_entry = current->start_pc;
        break;
    }
    return info;
}

ContractTag classify_contract(
    const Cfg& cfg, const std::vector<SelectorBinding>& bindings, bool symexec_bad_jump)
{
    const auto bad_jumps = statically_invalid_jumps(cfg);
    if (!bad_jumps.empty())
    {
        const Pc pc = *bad_jumps.begin();
        return {ContractKind::je,
            "reachable jump at pc " + std::to_string(pc) + " targets a non-JUMPDEST"};
    }
    if (symexec_bad_jump)
        return {ContractKind::je, "symbolic execution reached a bad jump destination"};
    if (bindings.empty() && !cfg.contains_push4())
        return {ContractKind::nf, "no function dispatcher and no PUSH4 instruction"};
    return {ContractKind::normal, ""};
}
}  // namespace evmdesc
