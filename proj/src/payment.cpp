// evmdesc: natural-language descriptions for EVM runtime bytecode
// Copyright 2026 The evmdesc Authors.
// SPDX-License-Identifier: Apache-2.0

#include "evmdesc/payment.hpp"

#include <algorithm>

namespace evmdesc
{
namespace
{
// Blocks examined from the function entry before any state-changing opcode:
// compilers emit the guard immediately, but stack setup may precede it.
constexpr int kGuardWindowDepth = 2;

bool is_state_changing(uint8_t op)
{
    return op == OP_SSTORE || op == OP_CREATE || op == OP_CREATE2 || op == OP_CALL ||
           op == OP_CALLCODE || op == OP_DELEGATECALL || op == OP_SELFDESTRUCT ||
           (op >= OP_LOG0 && op <= OP_LOG4);
}

bool is_stack_shuffle(uint8_t op)
{
    return (op >= OP_DUP1 && op <= OP_DUP16) || (op >= OP_SWAP1 && op <= OP_SWAP16);
}

// Failure side of the guard must land in a block that aborts.
std::optional<GuardFailureMode> failure_mode_of_block(const Cfg& cfg, Pc start_pc)
{
    const BasicBlock* b = cfg.block_starting_at(start_pc);
    if (b == nullptr)
        return std::nullopt;
    const Instruction& last = cfg.terminator_of(*b);
    if (last.is(OP_REVERT))
        return GuardFailureMode::revert_0xfd;
    if (last.byte() == OP_INVALID && last.opcode->assigned)
        return GuardFailureMode::invalid_0xfe;
    return std::nullopt;
}

std::optional<PaymentReport> match_guard_block(const Cfg& cfg, const BasicBlock& b)
{
    if (b.terminator_kind != TerminatorKind::jumpi)
        return std::nullopt;
    const size_t end = b.first_instr + b.instr_count - 1;  // the JUMPI

    // Find CALLVALUE and make sure everything between it and the JUMPI is
    // stack shuffling, ISZERO or the target push.
    std::optional<size_t> callvalue_at;
    for (size_t i = b.first_instr; i < end; ++i)
        if (cfg.instructions[i].is(OP_CALLVALUE))
            callvalue_at = i;
    if (!callvalue_at)
        return std::nullopt;

    int iszero_count = 0;
    std::optional<u256> target;
    for (size_t i = *callvalue_at + 1; i < end; ++i)
    {
        const Instruction& in = cfg.instructions[i];
        if (in.is(OP_ISZERO))
        {
            ++iszero_count;
            continue;
        }
        if (is_push(in.byte()))
        {
            target = in.immediate_value();
            continue;
        }
        if (is_stack_shuffle(in.byte()))
            continue;
        return std::nullopt;
    }
    if (!target || *target > u256(std::numeric_limits<Pc>::max()))
        return std::nullopt;
    const Pc taken_pc = static_cast<Pc>(*target);
    if (cfg.jumpdests.count(taken_pc) == 0)
        return std::nullopt;
    const Pc fallthrough_pc = cfg.instructions[end].pc + 1;

    // Odd ISZERO parity: the jump is taken when the value is zero, so the
    // fallthrough side fails. Even parity: the taken side fails.
    const Pc failure_pc = (iszero_count % 2 == 1) ? fallthrough_pc : taken_pc;
    const auto mode = failure_mode_of_block(cfg, failure_pc);
    if (!mode)
        return std::nullopt;

    PaymentReport report;
    report.nonpayable = true;
    report.guard_pc = cfg.instructions[*callvalue_at].pc;
    report.failure_mode = mode;
    return report;
}
}  // namespace

PaymentReport detect_payment_structural(const Cfg& cfg, Pc entry_pc)
{
    const BasicBlock* entry = cfg.block_starting_at(entry_pc);
    if (entry == nullptr)
        return {};

    // Breadth-first window: the entry block plus up to two successor levels,
    // not expanding past state-changing code.
    std::vector<std::pair<const BasicBlock*, int>> window{{entry, 0}};
    std::set<size_t> seen{entry->id};
    for (size_t i = 0; i < window.size(); ++i)
    {
        const auto [block, depth] = window[i];
        if (const auto report = match_guard_block(cfg, *block))
            return *report;
        if (depth >= kGuardWindowDepth)
            continue;
        const bool has_state_change = std::any_of(
            cfg.instructions.begin() + block->first_instr,
            cfg.instructions.begin() + block->first_instr + block->instr_count,
            [](const Instruction& in) { return is_state_changing(in.byte()); });
        if (has_state_change)
            continue;
        for (const Edge* e : cfg.out_edges(block->id))
            if (seen.insert(e->to).second)
                window.emplace_back(&cfg.blocks[e->to], depth + 1);
    }
    return {};
}

PaymentReport detect_payment_from_traces(
    const Cfg& cfg, const std::vector<sym::PathTrace>& traces)
{
    std::set<Pc> seen;
    for (const sym::PathTrace& trace : traces)
    {
        for (const sym::PaymentProbe& probe : trace.payment_probes)
        {
            if (!seen.insert(probe.jumpi_pc).second)
                continue;
            const Pc failure_pc =
                (probe.parity % 2 == 1) ? probe.fallthrough_pc : probe.taken_pc;
            if (const auto mode = failure_mode_of_block(cfg, failure_pc))
            {
                PaymentReport report;
                report.nonpayable = true;
                report.guard_pc = probe.callvalue_pc;
                report.failure_mode = mode;
                return report;
            }
        }
    }
    return {};
}

PaymentReport detect_payment(
    const Cfg& cfg, Pc entry_pc, const std::vector<sym::PathTrace>& traces)
{
    PaymentReport report = detect_payment_structural(cfg, entry_pc);
    if (report.nonpayable)
        return report;
    return detect_payment_from_traces(cfg, traces);
}
}  // namespace evmdesc
