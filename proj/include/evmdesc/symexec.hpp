// evmdesc: natural-language descriptions for EVM runtime bytecode
// Copyright 2026 The evmdesc Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "evmdesc/cfg.hpp"
#include "evmdesc/uint256.hpp"

#include <chrono>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace evmdesc::sym
{
enum class OriginTag : uint8_t
{
    calldata,   // aux = byte offset when loaded at a concrete offset
    callvalue,  // transaction value field
    caller,
    storage,  // aux = storage key when loaded at a concrete key
    env,      // named environment value (timestamp, gas price, ...)
    op_result,
};

/// Concrete-or-symbolic 256-bit machine value. Concrete values are canonical
/// mod 2^256. Symbolic values carry an origin tag and an execution-unique id;
/// equal ids denote the same value.
struct SymValue
{
    bool concrete = true;
    u256 word = 0;  // concrete value; for symbolic values the origin aux (offset/key)
    OriginTag origin = OriginTag::op_result;
    uint64_t id = 0;
    std::string env_name;

    // Set while the value is CALLVALUE under a pure ISZERO chain; parity is
    // the number of ISZERO applications mod nothing (0 = raw CALLVALUE).
    int8_t callvalue_parity = -1;
    Pc callvalue_pc = 0;

    static SymValue of(u256 v)
    {
        SymValue s;
        s.concrete = true;
        s.word = std::move(v);
        return s;
    }
};

std::optional<u256> as_constant(const SymValue& v);

struct CallEvent
{
    uint8_t opcode = 0;  // CALL, CALLCODE, STATICCALL, DELEGATECALL, CREATE, SELFDESTRUCT
    std::optional<SymValue> value_operand;  // P_v: CALL and CALLCODE only
    std::optional<SymValue> addr_operand;   // P_a: CALL/CALLCODE/STATICCALL/DELEGATECALL
    Pc pc = 0;
};

/// Conditional branch whose condition derives from CALLVALUE; consumed by the
/// trace-based non-payable detection.
struct PaymentProbe
{
    Pc jumpi_pc = 0;
    int parity = 0;  // ISZERO applications between CALLVALUE and the branch
    Pc callvalue_pc = 0;
    Pc taken_pc = 0;
    Pc fallthrough_pc = 0;
};

enum class Outcome
{
    stop,
    ret,
    revert,
    invalid,
    selfdestruct,
    bad_jump,        // dynamically-resolved jump target outside jumpdest_set
    bound_exceeded,  // loop/step bound, unresolvable jump, or timeout cut
};

std::string_view to_string(Outcome o);

struct PathTrace
{
    std::vector<size_t> blocks;
    std::vector<CallEvent> call_events;
    Outcome outcome = Outcome::stop;
    std::string diagnostic;
    std::vector<PaymentProbe> payment_probes;
};

struct MachineState
{
    Pc pc = 0;
    std::vector<SymValue> stack;  // max depth 1024
    std::map<u256, SymValue> memory;
    bool memory_havoc = false;  // a write with unknown offset invalidated hits
    std::map<u256, SymValue> storage;
    bool storage_havoc = false;
    std::vector<size_t> path;  // block ids in visit order
    std::unordered_map<size_t, int> block_visits;
    size_t step_count = 0;
    std::vector<CallEvent> call_events;
    std::vector<PaymentProbe> payment_probes;
    std::optional<Outcome> halted;
    std::string diagnostic;
};

struct ExecLimits
{
    size_t max_paths = 256;
    size_t max_steps = 20'000;  // per path
    std::chrono::milliseconds timeout{60'000};
    int max_block_visits = 3;  // per path; re-entering beyond this cuts the path
};

struct ExecutionResult
{
    std::vector<PathTrace> traces;
    bool truncated = false;  // path/time budget exhausted before exploration finished
    std::string reason;
};

/// Bounded depth-first symbolic execution of one function body. One executor
/// per analysis; independent executors may run in parallel.
class Executor
{
public:
    explicit Executor(const Cfg& cfg, ExecLimits limits = {});

    ExecutionResult run(Pc entry_pc);

    /// Single-instruction transition. Returns the successor states: one
    /// normally, two for a symbolic-condition JUMPI. A state with `halted`
    /// set is finished, not a live successor; terminators (and execution
    /// errors such as stack underflow) yield exactly one halted state and
    /// zero live ones.
    std::vector<MachineState> step(MachineState state, const Instruction& instr);

    MachineState make_initial_state(Pc entry_pc) const;

private:
    SymValue fresh(OriginTag tag, u256 aux = 0, std::string env_name = {});
    const SymValue& canonical_env(const std::string& name);
    const SymValue& canonical_calldata(const u256& offset);
    SymValue callvalue_symbol(Pc pc);

    void apply_binary(MachineState& s, uint8_t op);
    void apply_ternary(MachineState& s, uint8_t op);

    const Cfg& cfg_;
    ExecLimits limits_;
    uint64_t next_id_ = 1;
    std::map<std::string, SymValue> env_values_;
    std::map<u256, SymValue> calldata_values_;
    std::optional<SymValue> callvalue_;
};

ExecutionResult execute_function(const Cfg& cfg, Pc entry_pc, const ExecLimits& limits = {});
}  // namespace evmdesc::sym
