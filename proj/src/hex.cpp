// evmdesc: natural-language descriptions for EVM runtime bytecode
// Copyright 2026 The evmdesc Authors.
// SPDX-License-Identifier: Apache-2.0

#include "evmdesc/hex.hpp"
#include "evmdesc/errors.hpp"

#include <cctype>
#include <cstdio>

namespace evmdesc
{
namespace
{
int nibble(char c)
{
    if (c >= '0' && c <= '9')
        return c - '0';
    if (c >= 'a' && c <= 'f')
        return c - 'a' + 10;
    if (c >= 'A' && c <= 'F')
        return c - 'A' + 10;
    return -1;
}
}  // namespace

Bytes parse_hex(std::string_view text)
{
    size_t begin = 0;
    size_t end = text.size();
    while (begin < end && std::isspace(static_cast<unsigned char>(text[begin])))
        ++begin;
    while (end > begin && std::isspace(static_cast<unsigned char>(text[end - 1])))
        --end;
    if (end - begin >= 2 && text[begin] == '0' && (text[begin + 1] == 'x' || text[begin + 1] == 'X'))
        begin += 2;
    const size_t len = end - begin;
    if (len % 2 != 0)
        throw HexError("odd-length hex string");
    Bytes out;
    out.reserve(len / 2);
    for (size_t i = begin; i < end; i += 2)
    {
        const int hi = nibble(text[i]);
        const int lo = nibble(text[i + 1]);
        if (hi < 0 || lo < 0)
            throw HexError(std::string("invalid hex character '") + text[hi < 0 ? i : i + 1] + "'");
        out.push_back(static_cast<uint8_t>(hi << 4 | lo));
    }
    return out;
}

std::string to_hex(const Bytes& data)
{
    static constexpr char digits[] = "0123456789abcdef";
    std::string out;
    out.reserve(data.size() * 2);
    for (const uint8_t b : data)
    {
        out.push_back(digits[b >> 4]);
        out.push_back(digits[b & 0xf]);
    }
    return out;
}

std::string selector_hex(uint32_t selector)
{
    char buf[11];
    std::snprintf(buf, sizeof(buf), "0x%08x", selector);
    return buf;
}
}  // namespace evmdesc
