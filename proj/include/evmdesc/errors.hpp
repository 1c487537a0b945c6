// evmdesc: natural-language descriptions for EVM runtime bytecode
// Copyright 2026 The evmdesc Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>

namespace evmdesc
{
/// Base class for all analysis errors raised by this library.
struct Error : std::runtime_error
{
    using std::runtime_error::runtime_error;
};

/// Raised when the input bytecode is empty.
struct EmptyBytecodeError : Error
{
    EmptyBytecodeError() : Error("empty bytecode") {}
};

/// Raised when a function signature cannot be brought into canonical form.
struct CanonicalizationError : Error
{
    explicit CanonicalizationError(const std::string& what, std::string hint = {})
      : Error(what), fix_hint(std::move(hint))
    {}
    std::string fix_hint;
};

/// Raised when an ABI document or signature dump cannot be parsed.
struct ImportError : Error
{
    explicit ImportError(const std::string& what, size_t line = 0) : Error(what), line(line) {}
    size_t line = 0;
};

/// Raised when every sentence of an annotation corpus is filtered out.
struct EmptyCorpusError : Error
{
    EmptyCorpusError() : Error("corpus empty after preprocessing") {}
};

/// Raised on JSON-RPC transport or protocol failures.
struct RpcError : Error
{
    using Error::Error;
};

/// Raised when an account holds no code (self-destructed contract or EOA).
struct EmptyCodeError : Error
{
    EmptyCodeError() : Error("account contains empty bytecode") {}
};

/// Raised on malformed hex input.
struct HexError : Error
{
    using Error::Error;
};
}  // namespace evmdesc
