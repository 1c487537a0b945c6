// evmdesc: natural-language descriptions for EVM runtime bytecode
// Copyright 2026 The evmdesc Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "evmdesc/cfg.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace evmdesc
{
enum class DispatchPattern
{
    // Entry form: the comparison block itself loads the call data word and
    // truncates it to the 4-byte selector.
    type1,
    // Chained form: the comparison block reuses the cached selector from the
    // stack (DUPn ... PUSH4 ... EQ ... JUMPI).
    type2,
};

struct SelectorBinding
{
    uint32_t selector = 0;
    Pc entry_pc = 0;
    DispatchPattern pattern = DispatchPattern::type1;
    Pc compare_pc = 0;  // pc of the JUMPI performing the comparison
};

/// Result of walking the dispatcher chain. The default edge (where all
/// comparisons have failed, or where a too-short-calldata guard lands) is
/// kept separately as the fallback entry; it is not a selector binding.
struct DispatchInfo
{
    std::vector<SelectorBinding> bindings;
    std::optional<Pc> fallback_entry;
};

enum class ContractKind
{
    normal,
    nf,  // no external/public function: no bindings and no PUSH4 anywhere
    je,  // reachable jump to a non-JUMPDEST target
};

struct ContractTag
{
    ContractKind kind = ContractKind::normal;
    std::string detail;
};

/// Walks the entry region of the CFG along fallthrough edges, collecting
/// every selector comparison until the chain ends. Bindings come back in
/// bytecode order; an empty result is valid (see ContractKind::nf).
DispatchInfo extract_selectors(const Cfg& cfg);

/// je takes precedence over nf; anything else is normal.
ContractTag classify_contract(
    const Cfg& cfg, const std::vector<SelectorBinding>& bindings, bool symexec_bad_jump);
}  // namespace evmdesc
