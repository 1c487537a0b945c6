// evmdesc: natural-language descriptions for EVM runtime bytecode
// Copyright 2026 The evmdesc Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "evmdesc/symexec.hpp"

#include <set>
#include <string>
#include <vector>

namespace evmdesc
{
enum class EthTransfer
{
    none,
    fixed,     // a CALL/CALLCODE value operand is a non-zero constant
    variable,  // symbolic value operand, or differing fixed amounts across paths
    via_selfdestruct,
};

enum class CallMechanism
{
    call,
    callcode,
    staticcall,
    delegatecall,
};

std::string_view to_string(CallMechanism m);
std::string_view precompile_name(int id);

/// Message-call behavior summary for one interface (the IF_b intermediate
/// information). Folding is a set union over traces: adding a trace never
/// removes a reported behavior.
struct BehaviorReport
{
    EthTransfer eth_transfer = EthTransfer::none;
    std::vector<u256> fixed_amounts;  // concrete value operands observed, deduped
    bool selfdestruct_seen = false;
    std::set<int> precompile_calls;  // ids within 1..8
    bool user_contract_call = false;
    std::set<CallMechanism> call_mechanisms;
    bool contract_deployment = false;
    bool causes_internal_tx = false;

    bool operator==(const BehaviorReport&) const = default;
};

BehaviorReport summarize_behaviors(const std::vector<sym::PathTrace>& traces);
}  // namespace evmdesc
