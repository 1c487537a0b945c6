// evmdesc: natural-language descriptions for EVM runtime bytecode
// Copyright 2026 The evmdesc Authors.
// SPDX-License-Identifier: Apache-2.0

#include "evmdesc/behavior.hpp"

#include <algorithm>

namespace evmdesc
{
std::string_view to_string(CallMechanism m)
{
    switch (m)
    {
    case CallMechanism::call:
        return "CALL";
    case CallMechanism::callcode:
        return "CALLCODE";
    case CallMechanism::staticcall:
        return "STATICCALL";
    case CallMechanism::delegatecall:
        return "DELEGATECALL";
    }
    return "?";
}

std::string_view precompile_name(int id)
{
    switch (id)
    {
    case 1:
        return "ECDSA signature recovery";
    case 2:
        return "SHA-256 hash";
    case 3:
        return "RIPEMD-160 hash";
    case 4:
        return "identity";
    case 5:
        return "modular exponentiation";
    case 6:
        return "elliptic curve addition";
    case 7:
        return "elliptic curve scalar multiplication";
    case 8:
        return "elliptic curve pairing check";
    }
    return "?";
}

BehaviorReport summarize_behaviors(const std::vector<sym::PathTrace>& traces)
{
    BehaviorReport r;
    bool call_transfer_variable = false;

    for (const sym::PathTrace& trace : traces)
    {
        for (const sym::CallEvent& ev : trace.call_events)
        {
            switch (ev.opcode)
            {
            case OP_SELFDESTRUCT:
                r.selfdestruct_seen = true;
                break;
            case OP_CREATE:
                r.contract_deployment = true;
                break;
            case OP_CALL:
            case OP_CALLCODE: {
                if (const auto value = sym::as_constant(*ev.value_operand))
                {
                    if (*value != 0 &&
                        std::find(r.fixed_amounts.begin(), r.fixed_amounts.end(), *value) ==
                            r.fixed_amounts.end())
                        r.fixed_amounts.push_back(*value);
                }
                else
                {
                    call_transfer_variable = true;
                }
                const auto addr = sym::as_constant(*ev.addr_operand);
                const bool precompile =
                    ev.opcode == OP_CALL && addr && *addr >= 1 && *addr <= 8;
                if (precompile)
                    r.precompile_calls.insert(static_cast<int>(*addr));
                else
                {
                    r.user_contract_call = true;
                    r.call_mechanisms.insert(ev.opcode == OP_CALL ? CallMechanism::call :
                                                                    CallMechanism::callcode);
                }
                break;
            }
            case OP_STATICCALL:
            case OP_DELEGATECALL:
                r.user_contract_call = true;
                r.call_mechanisms.insert(ev.opcode == OP_STATICCALL ?
                                             CallMechanism::staticcall :
                                             CallMechanism::delegatecall);
                break;
            default:
                break;
            }
        }
    }

    if (call_transfer_variable || r.fixed_amounts.size() > 1)
        r.eth_transfer = EthTransfer::variable;
    else if (r.fixed_amounts.size() == 1)
        r.eth_transfer = EthTransfer::fixed;
    else if (r.selfdestruct_seen)
        r.eth_transfer = EthTransfer::via_selfdestruct;

    // Starred categories: ETH transfer, user-defined call, deployment.
    r.causes_internal_tx =
        r.eth_transfer != EthTransfer::none || r.user_contract_call || r.contract_deployment;
    return r;
}
}  // namespace evmdesc
