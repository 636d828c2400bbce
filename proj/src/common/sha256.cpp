// acctoken: constant-state accumulator token simulator
// Copyright 2026 The acctoken Authors.
// SPDX-License-Identifier: Apache-2.0

#include <acctoken/sha256.hpp>

#include <openssl/evp.h>

#include <memory>
#include <stdexcept>

namespace acctoken
{
namespace
{
struct MdCtxDeleter
{
    void operator()(EVP_MD_CTX* ctx) const noexcept { EVP_MD_CTX_free(ctx); }
};

struct MdDeleter
{
    void operator()(EVP_MD* md) const noexcept { EVP_MD_free(md); }
};

/// Per-thread digest context; fetching the algorithm once avoids the provider lookup per call.
struct Sha256Context
{
    std::unique_ptr<EVP_MD, MdDeleter> md{EVP_MD_fetch(nullptr, "SHA256", nullptr)};
    std::unique_ptr<EVP_MD_CTX, MdCtxDeleter> ctx{EVP_MD_CTX_new()};
};

Sha256Context& context()
{
    thread_local Sha256Context c;
    if (!c.md || !c.ctx)
        throw std::runtime_error{"OpenSSL SHA-256 unavailable"};
    return c;
}
}  // namespace

Digest sha256(std::initializer_list<ByteView> parts, HashTally* tally)
{
    auto& c = context();
    Digest out;
    std::size_t total = 0;
    unsigned len = 0;
    if (EVP_DigestInit_ex(c.ctx.get(), c.md.get(), nullptr) != 1)
        throw std::runtime_error{"EVP_DigestInit_ex failed"};
    for (const auto& p : parts)
    {
        EVP_DigestUpdate(c.ctx.get(), p.data(), p.size());
        total += p.size();
    }
    EVP_DigestFinal_ex(c.ctx.get(), out.data(), &len);
    if (tally != nullptr)
        tally->record(total);
    return out;
}
}  // namespace acctoken
