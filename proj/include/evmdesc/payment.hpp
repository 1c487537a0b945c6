// evmdesc: natural-language descriptions for EVM runtime bytecode
// Copyright 2026 The evmdesc Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "evmdesc/cfg.hpp"
#include "evmdesc/symexec.hpp"

#include <optional>

namespace evmdesc
{
enum class GuardFailureMode
{
    invalid_0xfe,  // pre-0.4.12 compilers abort through INVALID
    revert_0xfd,   // 0.4.12+ compilers revert through REVERT
};

/// Payability of one interface (the IF_p intermediate information).
/// nonpayable, guard_pc and failure_mode are present together or not at all.
struct PaymentReport
{
    bool nonpayable = false;
    std::optional<Pc> guard_pc;  // pc of the CALLVALUE feeding the guard
    std::optional<GuardFailureMode> failure_mode;

    bool operator==(const PaymentReport&) const = default;
};

/// Detects the non-payable guard at a function entry: a CALLVALUE zero-test
/// feeding a JUMPI whose failing side terminates in INVALID or REVERT.
/// The CFG pattern is matched structurally first; traces are the fallback
/// when stack shuffling obscures the idiom.
PaymentReport detect_payment(
    const Cfg& cfg, Pc entry_pc, const std::vector<sym::PathTrace>& traces);

/// The two detection routes separately, for cross-checking.
PaymentReport detect_payment_structural(const Cfg& cfg, Pc entry_pc);
PaymentReport detect_payment_from_traces(
    const Cfg& cfg, const std::vector<sym::PathTrace>& traces);
}  // namespace evmdesc
