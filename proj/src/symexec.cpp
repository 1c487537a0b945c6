// evmdesc: natural-language descriptions for EVM runtime bytecode
// Copyright 2026 The evmdesc Authors.
// SPDX-License-Identifier: Apache-2.0

#include "evmdesc/symexec.hpp"

#include <algorithm>
#include <cassert>

namespace evmdesc::sym
{
namespace
{
constexpr size_t kStackLimit = 1024;

bool top_bit_set(const u256& v)
{
    return boost::multiprecision::bit_test(v, 255);
}

u256 negate(const u256& v)
{
    return u256(0) - v;
}

u256 wrap_exp(u256 base, u256 exponent)
{
    u256 result = 1;
    while (exponent != 0)
    {
        if (boost::multiprecision::bit_test(exponent, 0))
            result *= base;
        base *= base;
        exponent >>= 1;
    }
    return result;
}

u256 shift_left(const u256& value, const u256& shift)
{
    if (shift >= 256)
        return 0;
    return value << static_cast<unsigned>(shift);
}

u256 shift_right(const u256& value, const u256& shift)
{
    if (shift >= 256)
        return 0;
    return value >> static_cast<unsigned>(shift);
}

u256 shift_right_arith(const u256& value, const u256& shift)
{
    const bool negative = top_bit_set(value);
    if (shift >= 256)
        return negative ? ~u256(0) : u256(0);
    const auto s = static_cast<unsigned>(shift);
    u256 result = value >> s;
    if (negative && s > 0)
        result |= ~(~u256(0) >> s);
    return result;
}

u256 sign_extend(const u256& index, const u256& value)
{
    if (index >= 31)
        return value;
    const unsigned bits = 8 * (static_cast<unsigned>(index) + 1);
    const u256 mask = (u256(1) << bits) - 1;
    if (boost::multiprecision::bit_test(value, bits - 1))
        return value | ~mask;
    return value & mask;
}

u256 get_byte(const u256& index, const u256& value)
{
    if (index >= 32)
        return 0;
    const unsigned shift = 8 * (31 - static_cast<unsigned>(index));
    return (value >> shift) & 0xff;
}

u256 fold_binary(uint8_t op, const u256& a, const u256& b)
{
    switch (op)
    {
    case OP_ADD:
        return a + b;
    case OP_MUL:
        return a * b;
    case OP_SUB:
        return a - b;
    case OP_DIV:
        return b == 0 ? u256(0) : a / b;
    case OP_SDIV: {
        if (b == 0)
            return 0;
        const bool na = top_bit_set(a);
        const bool nb = top_bit_set(b);
        const u256 q = (na ? negate(a) : a) / (nb ? negate(b) : b);
        return na != nb ? negate(q) : q;
    }
    case OP_MOD:
        return b == 0 ? u256(0) : a % b;
    case OP_SMOD: {
        if (b == 0)
            return 0;
        const bool na = top_bit_set(a);
        const u256 r = (na ? negate(a) : a) % (top_bit_set(b) ? negate(b) : b);
        return na ? negate(r) : r;
    }
    case OP_EXP:
        return wrap_exp(a, b);
    case OP_SIGNEXTEND:
        return sign_extend(a, b);
    case OP_LT:
        return a < b ? 1 : 0;
    case OP_GT:
        return a > b ? 1 : 0;
    case OP_SLT: {
        const bool na = top_bit_set(a);
        const bool nb = top_bit_set(b);
        if (na != nb)
            return na ? 1 : 0;
        return a < b ? 1 : 0;
    }
    case OP_SGT: {
        const bool na = top_bit_set(a);
        const bool nb = top_bit_set(b);
        if (na != nb)
            return nb ? 1 : 0;
        return a > b ? 1 : 0;
    }
    case OP_EQ:
        return a == b ? 1 : 0;
    case OP_AND:
        return a & b;
    case OP_OR:
        return a | b;
    case OP_XOR:
        return a ^ b;
    case OP_BYTE:
        return get_byte(a, b);
    case OP_SHL:
        return shift_left(b, a);
    case OP_SHR:
        return shift_right(b, a);
    case OP_SAR:
        return shift_right_arith(b, a);
    default:
        assert(false && "not a binary opcode");
        return 0;
    }
}

Pc next_pc(const Instruction& instr)
{
    return instr.pc + 1 + static_cast<Pc>(instr.immediate.size());
}

void halt(MachineState& s, Outcome o, std::string why = {})
{
    s.halted = o;
    s.diagnostic = std::move(why);
}
}  // namespace

std::optional<u256> as_constant(const SymValue& v)
{
    if (v.concrete)
        return v.word;
    return std::nullopt;
}

std::string_view to_string(Outcome o)
{
    switch (o)
    {
    case Outcome::stop:
        return "stop";
    case Outcome::ret:
        return "return";
    case Outcome::revert:
        return "revert";
    case Outcome::invalid:
        return "invalid";
    case Outcome::selfdestruct:
        return "selfdestruct";
    case Outcome::bad_jump:
        return "bad_jump";
    case Outcome::bound_exceeded:
        return "bound_exceeded";
    }
    return "?";
}

Executor::Executor(const Cfg& cfg, ExecLimits limits) : cfg_(cfg), limits_(limits) {}

SymValue Executor::fresh(OriginTag tag, u256 aux, std::string env_name)
{
    SymValue v;
    v.concrete = false;
    v.word = std::move(aux);
    v.origin = tag;
    v.id = next_id_++;
    v.env_name = std::move(env_name);
    return v;
}

const SymValue& Executor::canonical_env(const std::string& name)
{
    auto it = env_values_.find(name);
    if (it == env_values_.end())
        it = env_values_.emplace(name, fresh(OriginTag::env, 0, name)).first;
    return it->second;
}

const SymValue& Executor::canonical_calldata(const u256& offset)
{
    auto it = calldata_values_.find(offset);
    if (it == calldata_values_.end())
        it = calldata_values_.emplace(offset, fresh(OriginTag::calldata, offset)).first;
    return it->second;
}

SymValue Executor::callvalue_symbol(Pc pc)
{
    if (!callvalue_)
    {
        SymValue v = fresh(OriginTag::callvalue);
        v.callvalue_parity = 0;
        v.callvalue_pc = pc;
        callvalue_ = v;
    }
    return *callvalue_;
}

MachineState Executor::make_initial_state(Pc entry_pc) const
{
    MachineState s;
    s.pc = entry_pc;
    return s;
}

void Executor::apply_binary(MachineState& s, uint8_t op)
{
    SymValue a = std::move(s.stack.back());
    s.stack.pop_back();
    SymValue b = std::move(s.stack.back());
    s.stack.pop_back();
    if (a.concrete && b.concrete)
    {
        s.stack.push_back(SymValue::of(fold_binary(op, a.word, b.word)));
        return;
    }
    if (op == OP_EQ && !a.concrete && !b.concrete && a.id == b.id)
    {
        // Identical symbolic values are the same value.
        s.stack.push_back(SymValue::of(1));
        return;
    }
    s.stack.push_back(fresh(OriginTag::op_result));
}

void Executor::apply_ternary(MachineState& s, uint8_t op)
{
    SymValue a = std::move(s.stack.back());
    s.stack.pop_back();
    SymValue b = std::move(s.stack.back());
    s.stack.pop_back();
    SymValue n = std::move(s.stack.back());
    s.stack.pop_back();
    if (a.concrete && b.concrete && n.concrete)
    {
        u256 r = 0;
        if (n.word != 0)
        {
            const u512 wide = op == OP_ADDMOD ? u512(a.word) + u512(b.word)
                                              : u512(a.word) * u512(b.word);
            r = u256(wide % u512(n.word));
        }
        s.stack.push_back(SymValue::of(r));
        return;
    }
    s.stack.push_back(fresh(OriginTag::op_result));
}

std::vector<MachineState> Executor::step(MachineState s, const Instruction& instr)
{
    const uint8_t op = instr.byte();
    const OpcodeInfo& info = *instr.opcode;

    if (s.stack.size() < info.stack_pops)
    {
        halt(s, Outcome::invalid, "stack underflow at pc " + std::to_string(instr.pc));
        return {std::move(s)};
    }
    if (s.stack.size() - info.stack_pops + info.stack_pushes > kStackLimit)
    {
        halt(s, Outcome::invalid, "stack overflow at pc " + std::to_string(instr.pc));
        return {std::move(s)};
    }

    s.step_count++;
    const Pc fallthrough = next_pc(instr);

    // Push family.
    if (op == OP_PUSH0 || is_push(op))
    {
        s.stack.push_back(SymValue::of(instr.immediate_value()));
        s.pc = fallthrough;
        return {std::move(s)};
    }
    if (op >= OP_DUP1 && op <= OP_DUP16)
    {
        s.stack.push_back(s.stack[s.stack.size() - 1 - (op - OP_DUP1)]);
        s.pc = fallthrough;
        return {std::move(s)};
    }
    if (op >= OP_SWAP1 && op <= OP_SWAP16)
    {
        std::swap(s.stack.back(), s.stack[s.stack.size() - 2 - (op - OP_SWAP1)]);
        s.pc = fallthrough;
        return {std::move(s)};
    }

    switch (op)
    {
    case OP_STOP:
        halt(s, Outcome::stop);
        return {std::move(s)};
    case OP_RETURN:
        halt(s, Outcome::ret);
        return {std::move(s)};
    case OP_REVERT:
        halt(s, Outcome::revert);
        return {std::move(s)};
    case OP_SELFDESTRUCT: {
        CallEvent ev;
        ev.opcode = op;
        ev.pc = instr.pc;
        s.stack.pop_back();
        s.call_events.push_back(std::move(ev));
        halt(s, Outcome::selfdestruct);
        return {std::move(s)};
    }

    case OP_ADD:
    case OP_MUL:
    case OP_SUB:
    case OP_DIV:
    case OP_SDIV:
    case OP_MOD:
    case OP_SMOD:
    case OP_EXP:
    case OP_SIGNEXTEND:
    case OP_LT:
    case OP_GT:
    case OP_SLT:
    case OP_SGT:
    case OP_EQ:
    case OP_AND:
    case OP_OR:
    case OP_XOR:
    case OP_BYTE:
    case OP_SHL:
    case OP_SHR:
    case OP_SAR:
        apply_binary(s, op);
        s.pc = fallthrough;
        return {std::move(s)};

    case OP_ADDMOD:
    case OP_MULMOD:
        apply_ternary(s, op);
        s.pc = fallthrough;
        return {std::move(s)};

    case OP_ISZERO: {
        SymValue a = std::move(s.stack.back());
        s.stack.pop_back();
        if (a.concrete)
        {
            s.stack.push_back(SymValue::of(a.word == 0 ? 1 : 0));
        }
        else
        {
            SymValue r = fresh(OriginTag::op_result);
            if (a.callvalue_parity >= 0 && a.callvalue_parity < 64)
            {
                r.callvalue_parity = static_cast<int8_t>(a.callvalue_parity + 1);
                r.callvalue_pc = a.callvalue_pc;
            }
            s.stack.push_back(std::move(r));
        }
        s.pc = fallthrough;
        return {std::move(s)};
    }
    case OP_NOT: {
        SymValue a = std::move(s.stack.back());
        s.stack.pop_back();
        s.stack.push_back(a.concrete ? SymValue::of(~a.word) : fresh(OriginTag::op_result));
        s.pc = fallthrough;
        return {std::move(s)};
    }

    case OP_CALLVALUE:
        s.stack.push_back(callvalue_symbol(instr.pc));
        s.pc = fallthrough;
        return {std::move(s)};
    case OP_CALLER:
        s.stack.push_back(canonical_env("caller"));
        s.stack.back().origin = OriginTag::caller;
        s.pc = fallthrough;
        return {std::move(s)};
    case OP_ADDRESS:
    case OP_ORIGIN:
    case OP_CALLDATASIZE:
    case OP_GASPRICE:
    case OP_COINBASE:
    case OP_TIMESTAMP:
    case OP_NUMBER:
    case OP_DIFFICULTY:
    case OP_GASLIMIT:
    case OP_CHAINID:
    case OP_BASEFEE:
        s.stack.push_back(canonical_env(std::string(info.mnemonic)));
        s.pc = fallthrough;
        return {std::move(s)};

    case OP_CODESIZE:
        // The analyzed code is in hand; its size is concrete.
        if (!cfg_.instructions.empty())
        {
            const Instruction& last = cfg_.instructions.back();
            s.stack.push_back(SymValue::of(next_pc(last)));
        }
        else
        {
            s.stack.push_back(SymValue::of(0));
        }
        s.pc = fallthrough;
        return {std::move(s)};

    case OP_CALLDATALOAD: {
        SymValue offset = std::move(s.stack.back());
        s.stack.pop_back();
        if (offset.concrete)
            s.stack.push_back(canonical_calldata(offset.word));
        else
            s.stack.push_back(fresh(OriginTag::calldata));
        s.pc = fallthrough;
        return {std::move(s)};
    }

    case OP_MLOAD: {
        SymValue offset = std::move(s.stack.back());
        s.stack.pop_back();
        if (offset.concrete)
        {
            const auto it = s.memory.find(offset.word);
            if (it != s.memory.end())
            {
                s.stack.push_back(it->second);
                s.pc = fallthrough;
                return {std::move(s)};
            }
        }
        s.stack.push_back(fresh(OriginTag::op_result));
        s.pc = fallthrough;
        return {std::move(s)};
    }
    case OP_MSTORE: {
        SymValue offset = std::move(s.stack.back());
        s.stack.pop_back();
        SymValue value = std::move(s.stack.back());
        s.stack.pop_back();
        if (offset.concrete)
        {
            s.memory[offset.word] = std::move(value);
        }
        else
        {
            // A write at an unknown offset may have hit anything.
            s.memory.clear();
            s.memory_havoc = true;
        }
        s.pc = fallthrough;
        return {std::move(s)};
    }
    case OP_MSTORE8: {
        SymValue offset = std::move(s.stack.back());
        s.stack.pop_back();
        s.stack.pop_back();
        // Byte-partial write: smear the containing word.
        if (offset.concrete)
        {
            s.memory[offset.word] = fresh(OriginTag::op_result);
        }
        else
        {
            s.memory.clear();
            s.memory_havoc = true;
        }
        s.pc = fallthrough;
        return {std::move(s)};
    }

    case OP_SLOAD: {
        SymValue key = std::move(s.stack.back());
        s.stack.pop_back();
        if (key.concrete)
        {
            const auto it = s.storage.find(key.word);
            if (it != s.storage.end())
            {
                s.stack.push_back(it->second);
                s.pc = fallthrough;
                return {std::move(s)};
            }
        }
        s.stack.push_back(
            fresh(OriginTag::storage, key.concrete ? key.word : u256(0)));
        s.pc = fallthrough;
        return {std::move(s)};
    }
    case OP_SSTORE: {
        SymValue key = std::move(s.stack.back());
        s.stack.pop_back();
        SymValue value = std::move(s.stack.back());
        s.stack.pop_back();
        if (key.concrete)
        {
            s.storage[key.word] = std::move(value);
        }
        else
        {
            s.storage.clear();
            s.storage_havoc = true;
        }
        s.pc = fallthrough;
        return {std::move(s)};
    }

    case OP_CALLDATACOPY:
    case OP_CODECOPY:
    case OP_RETURNDATACOPY:
    case OP_MCOPY:
    case OP_EXTCODECOPY:
        for (unsigned i = 0; i < info.stack_pops; ++i)
            s.stack.pop_back();
        s.memory.clear();
        s.memory_havoc = true;
        s.pc = fallthrough;
        return {std::move(s)};

    case OP_JUMPDEST:
    case OP_PC:
        if (op == OP_PC)
            s.stack.push_back(SymValue::of(instr.pc));
        s.pc = fallthrough;
        return {std::move(s)};

    case OP_JUMP: {
        SymValue target = std::move(s.stack.back());
        s.stack.pop_back();
        if (!target.concrete)
        {
            halt(s, Outcome::bound_exceeded,
                "unresolvable dynamic jump at pc " + std::to_string(instr.pc));
            return {std::move(s)};
        }
        if (target.word > u256(std::numeric_limits<Pc>::max()) ||
            cfg_.jumpdests.count(static_cast<Pc>(target.word)) == 0)
        {
            halt(s, Outcome::bad_jump, "jump at pc " + std::to_string(instr.pc) +
                                           " targets invalid destination " +
                                           to_hex_string(target.word));
            return {std::move(s)};
        }
        s.pc = static_cast<Pc>(target.word);
        return {std::move(s)};
    }
    case OP_JUMPI: {
        SymValue target = std::move(s.stack.back());
        s.stack.pop_back();
        SymValue cond = std::move(s.stack.back());
        s.stack.pop_back();

        const bool target_known = target.concrete &&
                                  target.word <= u256(std::numeric_limits<Pc>::max());
        const bool target_valid =
            target_known && cfg_.jumpdests.count(static_cast<Pc>(target.word)) > 0;

        if (cond.concrete)
        {
            if (cond.word == 0)
            {
                s.pc = fallthrough;
                return {std::move(s)};
            }
            if (!target.concrete)
            {
                halt(s, Outcome::bound_exceeded,
                    "unresolvable dynamic jump at pc " + std::to_string(instr.pc));
                return {std::move(s)};
            }
            if (!target_valid)
            {
                halt(s, Outcome::bad_jump,
                    "jump at pc " + std::to_string(instr.pc) + " targets invalid destination " +
                        to_hex_string(target.word));
                return {std::move(s)};
            }
            s.pc = static_cast<Pc>(target.word);
            return {std::move(s)};
        }

        // Symbolic condition: fork both branches.
        if (cond.callvalue_parity >= 0 && target_valid)
        {
            PaymentProbe probe;
            probe.jumpi_pc = instr.pc;
            probe.parity = cond.callvalue_parity;
            probe.callvalue_pc = cond.callvalue_pc;
            probe.taken_pc = static_cast<Pc>(target.word);
            probe.fallthrough_pc = fallthrough;
            s.payment_probes.push_back(probe);
        }

        std::vector<MachineState> out;
        MachineState taken = s;
        if (!target.concrete)
        {
            halt(taken, Outcome::bound_exceeded,
                "unresolvable dynamic jump at pc " + std::to_string(instr.pc));
        }
        else if (!target_valid)
        {
            halt(taken, Outcome::bad_jump,
                "jump at pc " + std::to_string(instr.pc) + " targets invalid destination " +
                    to_hex_string(target.word));
        }
        else
        {
            taken.pc = static_cast<Pc>(target.word);
        }
        out.push_back(std::move(taken));
        s.pc = fallthrough;
        out.push_back(std::move(s));
        return out;
    }

    case OP_CREATE:
    case OP_CALL:
    case OP_CALLCODE:
    case OP_DELEGATECALL:
    case OP_STATICCALL: {
        CallEvent ev;
        ev.opcode = op;
        ev.pc = instr.pc;
        // Stack (top first): CALL/CALLCODE gas,addr,value,...; DELEGATECALL/
        // STATICCALL gas,addr,...; CREATE value,offset,length.
        if (op == OP_CALL || op == OP_CALLCODE)
        {
            ev.addr_operand = s.stack[s.stack.size() - 2];
            ev.value_operand = s.stack[s.stack.size() - 3];
        }
        else if (op == OP_DELEGATECALL || op == OP_STATICCALL)
        {
            ev.addr_operand = s.stack[s.stack.size() - 2];
        }
        for (unsigned i = 0; i < info.stack_pops; ++i)
            s.stack.pop_back();
        s.call_events.push_back(std::move(ev));
        s.stack.push_back(fresh(OriginTag::op_result));
        s.pc = fallthrough;
        return {std::move(s)};
    }

    default:
        break;
    }

    if (!info.assigned)
    {
        halt(s, Outcome::invalid, std::string("invalid opcode 0x") +
                                      (instr.byte() < 16 ? "0" : "") + to_hex({instr.byte()}));
        return {std::move(s)};
    }
    if (info.is_terminator)
    {
        halt(s, Outcome::invalid);
        return {std::move(s)};
    }

    // Anything else (SHA3, BALANCE, CREATE2, LOG, GAS, ...): honor the stack
    // arity and produce fresh symbolic results.
    for (unsigned i = 0; i < info.stack_pops; ++i)
        s.stack.pop_back();
    for (unsigned i = 0; i < info.stack_pushes; ++i)
        s.stack.push_back(fresh(OriginTag::op_result));
    s.pc = fallthrough;
    return {std::move(s)};
}

ExecutionResult Executor::run(Pc entry_pc)
{
    ExecutionResult result;
    const auto deadline = std::chrono::steady_clock::now() + limits_.timeout;

    const BasicBlock* entry = cfg_.block_starting_at(entry_pc);
    if (entry == nullptr)
    {
        PathTrace t;
        t.outcome = Outcome::invalid;
        t.diagnostic = "entry pc " + std::to_string(entry_pc) + " does not start a block";
        result.traces.push_back(std::move(t));
        return result;
    }

    const auto finalize = [&result](MachineState&& s, Outcome outcome) {
        PathTrace t;
        t.blocks = std::move(s.path);
        t.call_events = std::move(s.call_events);
        t.payment_probes = std::move(s.payment_probes);
        t.outcome = outcome;
        t.diagnostic = std::move(s.diagnostic);
        result.traces.push_back(std::move(t));
    };

    std::vector<MachineState> pending;
    pending.push_back(make_initial_state(entry_pc));

    while (!pending.empty())
    {
        if (result.traces.size() >= limits_.max_paths)
        {
            result.truncated = true;
            result.reason = "path budget exhausted";
            break;
        }
        MachineState state = std::move(pending.back());
        pending.pop_back();

        while (true)
        {
            if (state.halted)
            {
                const Outcome outcome = *state.halted;
                finalize(std::move(state), outcome);
                break;
            }
            if (state.step_count >= limits_.max_steps)
            {
                state.diagnostic = "step bound exceeded";
                finalize(std::move(state), Outcome::bound_exceeded);
                break;
            }
            if ((state.step_count & 0xff) == 0 && std::chrono::steady_clock::now() > deadline)
            {
                result.truncated = true;
                result.reason = "timeout";
                state.diagnostic = "timeout";
                finalize(std::move(state), Outcome::bound_exceeded);
                pending.clear();
                break;
            }

            const Instruction* instr = cfg_.instruction_at(state.pc);
            if (instr == nullptr)
            {
                // Running past the end of the code is an implicit STOP.
                finalize(std::move(state), Outcome::stop);
                break;
            }

            if (const BasicBlock* b = cfg_.block_starting_at(state.pc))
            {
                const int visits = ++state.block_visits[b->id];
                if (visits > limits_.max_block_visits)
                {
                    state.diagnostic =
                        "loop bound: block " + std::to_string(b->id) + " revisited";
                    finalize(std::move(state), Outcome::bound_exceeded);
                    break;
                }
                state.path.push_back(b->id);
            }

            auto successors = step(std::move(state), *instr);
            assert(!successors.empty());
            if (successors.size() == 2)
                pending.push_back(std::move(successors[1]));
            state = std::move(successors[0]);
        }
    }

    if (!pending.empty() && !result.truncated)
    {
        result.truncated = true;
        result.reason = "path budget exhausted";
    }
    return result;
}

ExecutionResult execute_function(const Cfg& cfg, Pc entry_pc, const ExecLimits& limits)
{
    Executor ex(cfg, limits);
    return ex.run(entry_pc);
}
}  // namespace evmdesc::sym
