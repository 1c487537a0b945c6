// evmdesc: natural-language descriptions for EVM runtime bytecode
// Copyright 2026 The evmdesc Authors.
// SPDX-License-Identifier: Apache-2.0

#include "evmdesc/keccak.hpp"

#include <bit>
#include <cstring>

namespace evmdesc
{
namespace
{
constexpr uint64_t kRoundConstants[24] = {
    0x0000000000000001ull, 0x0000000000008082ull, 0x800000000000808aull, 0x8000000080008000ull,
    0x000000000000808bull, 0x0000000080000001ull, 0x8000000080008081ull, 0x8000000000008009ull,
    0x000000000000008aull, 0x0000000000000088ull, 0x0000000080008009ull, 0x000000008000000aull,
    0x000000008000808bull, 0x800000000000008bull, 0x8000000000008089ull, 0x8000000000008003ull,
    0x8000000000008002ull, 0x8000000000000080ull, 0x000000000000800aull, 0x800000008000000aull,
    0x8000000080008081ull, 0x8000000000008080ull, 0x0000000080000001ull, 0x8000000080008008ull};

// Rotation offsets indexed [x][y].
constexpr int kRotation[5][5] = {
    {0, 36, 3, 41, 18},
    {1, 44, 10, 45, 2},
    {62, 6, 43, 15, 61},
    {28, 55, 25, 21, 56},
    {27, 20, 39, 8, 14},
};

// State lane at (x, y) lives at index x + 5y.
void keccak_f1600(uint64_t a[25])
{
    for (int round = 0; round < 24; ++round)
    {
        // theta
        uint64_t c[5];
        for (int x = 0; x < 5; ++x)
            c[x] = a[x] ^ a[x + 5] ^ a[x + 10] ^ a[x + 15] ^ a[x + 20];
        for (int x = 0; x < 5; ++x)
        {
            const uint64_t d = c[(x + 4) % 5] ^ std::rotl(c[(x + 1) % 5], 1);
            for (int y = 0; y < 5; ++y)
                a[x + 5 * y] ^= d;
        }
        // rho + pi
        uint64_t b[25];
        for (int x = 0; x < 5; ++x)
            for (int y = 0; y < 5; ++y)
                b[y + 5 * ((2 * x + 3 * y) % 5)] = std::rotl(a[x + 5 * y], kRotation[x][y]);
        // chi
        for (int x = 0; x < 5; ++x)
            for (int y = 0; y < 5; ++y)
                a[x + 5 * y] = b[x + 5 * y] ^ (~b[(x + 1) % 5 + 5 * y] & b[(x + 2) % 5 + 5 * y]);
        // iota
        a[0] ^= kRoundConstants[round];
    }
}

constexpr size_t kRate = 136;  // 1600/8 - 2*32
}  // namespace

std::array<uint8_t, 32> keccak256(std::span<const uint8_t> data)
{
    uint64_t state[25] = {};
    uint8_t block[kRate];

    size_t offset = 0;
    while (data.size() - offset >= kRate)
    {
        std::memcpy(block, data.data() + offset, kRate);
        for (size_t i = 0; i < kRate / 8; ++i)
        {
            uint64_t lane;
            std::memcpy(&lane, block + 8 * i, 8);
            state[i] ^= lane;  // little-endian host assumed; asserted in tests
        }
        keccak_f1600(state);
        offset += kRate;
    }

    // Final block with pad10*1 and the 0x01 domain byte.
    const size_t tail = data.size() - offset;
    std::memset(block, 0, kRate);
    if (tail > 0)
        std::memcpy(block, data.data() + offset, tail);
    block[tail] = 0x01;
    block[kRate - 1] |= 0x80;
    for (size_t i = 0; i < kRate / 8; ++i)
    {
        uint64_t lane;
        std::memcpy(&lane, block + 8 * i, 8);
        state[i] ^= lane;
    }
    keccak_f1600(state);

    std::array<uint8_t, 32> digest;
    std::memcpy(digest.data(), state, 32);
    return digest;
}

std::array<uint8_t, 32> keccak256(std::string_view text)
{
    return keccak256(
        std::span<const uint8_t>(reinterpret_cast<const uint8_t*>(text.data()), text.size()));
}
}  // namespace evmdesc
