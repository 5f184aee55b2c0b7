// Copyright 2026 dstream-cpp contributors
// SPDX-License-Identifier: Apache-2.0

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace dstream::detail {

namespace {
constexpr char alphabet[] =
    "ABCDEFGHIJKLMNOPQRSTUVWXYZabcdefghijklmnopqrstuvwxyz0123456789+/";

std::array<std::int8_t, 256> decode_table() {
    std::array<std::int8_t, 256> table{};
    table.fill(-1);
    for (int i = 0; i < 64; ++i) {
        table[static_cast<unsigned char>(alphabet[i])] = static_cast<std::int8_t>(i);
    }
    return table;
}
}  // namespace

std::string base64_encode(const std::string& bytes) {
    std::string out;
    out.reserve((bytes.size() + 2) / 3 * 4);
    std::uint32_t acc = 0;
    int held = 0;
    for (const char c : bytes) {
        acc = (acc << 8) | static_cast<unsigned char>(c);
        held += 8;
        while (held >= 6) {
            held -= 6;
            out.push_back(alphabet[(acc >> held) & 0x3f]);
        }
    }
    if (held > 0) {
        out.push_back(alphabet[(acc << (6 - held)) & 0x3f]);
    }
    while (out.size() % 4 != 0) out.push_back('=');
    return out;
}

std::string base64_decode(const std::string& text) {
    static const auto table = decode_table();
    std::string out;
    out.reserve(text.size() / 4 * 3);
    std::uint32_t acc = 0;
    int held = 0;
    for (const char c : text) {
        if (c == '=') break;
        const std::int8_t v = table[static_cast<unsigned char>(c)];
        if (v < 0) throw std::invalid_argument{"invalid base64 input"};
        acc = (acc << 6) | static_cast<std::uint32_t>(v);
        held += 6;
        if (held >= 8) {
            held -= 8;
            out.push_back(static_cast<char>((acc >> held) & 0xff));
        }
    }
    return out;
}

}  // namespace dstream::detail
