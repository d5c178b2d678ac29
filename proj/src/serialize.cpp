#include "hlx/serialize.hpp"

#include <cstring>
#include <istream>
#include <ostream>
#include <string>

#include "hlx/errors.hpp"

namespace hlx {

namespace {

constexpr char kMagic[4] = {'H', 'L', 'X', '1'};
constexpr std::uint32_t kVersion = 1;

std::uint64_t fnv1a(const unsigned char* data, std::size_t len) {
    std::uint64_t hash = 14695981039346656037ull;
    for (std::size_t i = 0; i < len; ++i) {
        hash ^= data[i];
        hash *= 1099511628211ull;
    }
    return hash;
}

struct Writer {
    std::string buf;
    void u8(std::uint8_t v) { buf.push_back(static_cast<char>(v)); }
    void u32(std::uint32_t v) {
        for (int i = 0; i < 4; ++i) buf.push_back(static_cast<char>((v >> (8 * i)) & 0xff));
    }
    void u64(std::uint64_t v) {
        for (int i = 0; i < 8; ++i) buf.push_back(static_cast<char>((v >> (8 * i)) & 0xff));
    }
};

struct Reader {
    const unsigned char* p;
    const unsigned char* end;
    void need(std::size_t bytes) const {
        if (static_cast<std::size_t>(end - p) < bytes)
            throw FormatError("truncated index file");
    }
    std::uint8_t u8() {
        need(1);
        return *p++;
    }
    std::uint32_t u32() {
        need(4);
        std::uint32_t v = 0;
        for (int i = 0; i < 4; ++i) v |= static_cast<std::uint32_t>(*p++) << (8 * i);
        return v;
    }
    std::uint64_t u64() {
        need(8);
        std::uint64_t v = 0;
        for (int i = 0; i < 8; ++i) v |= static_cast<std::uint64_t>(*p++) << (8 * i);
        return v;
    }
};

} // namespace

void serialize_index(const HLIndex& index, const std::vector<std::uint64_t>& original_ids,
                     std::ostream& out) {
    if (original_ids.size() != index.n)
        throw ArgumentError("original id table size differs from vertex count");
    Writer w;
    w.buf.append(kMagic, 4);
    w.u32(kVersion);
    w.u32(index.n);
    w.u32(index.m);
    w.u8(static_cast<std::uint8_t>(index.flavor));
    for (std::uint32_t r : index.rank) w.u32(r);
    for (std::uint64_t id : original_ids) w.u64(id);
    for (const auto& labels : index.labels) {
        w.u32(static_cast<std::uint32_t>(labels.size()));
        for (const Label& l : labels) {
            w.u32(l.edge);
            w.u32(l.s);
        }
    }
    std::uint64_t sum = fnv1a(reinterpret_cast<const unsigned char*>(w.buf.data()), w.buf.size());
    w.u64(sum);
    out.write(w.buf.data(), static_cast<std::streamsize>(w.buf.size()));
}

LoadedIndex deserialize_index(std::istream& in) {
    std::string raw((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    if (raw.size() < 4 + 4 + 4 + 4 + 1 + 8) throw FormatError("truncated index file");

    const auto* bytes = reinterpret_cast<const unsigned char*>(raw.data());
    std::uint64_t stored = 0;
    for (int i = 0; i < 8; ++i)
        stored |= static_cast<std::uint64_t>(bytes[raw.size() - 8 + i]) << (8 * i);
    if (fnv1a(bytes, raw.size() - 8) != stored)
        throw FormatError("index file checksum mismatch");

    Reader r{bytes, bytes + raw.size() - 8};
    if (std::memcmp(r.p, kMagic, 4) != 0) throw FormatError("bad index file magic");
    r.p += 4;
    if (std::uint32_t version = r.u32(); version != kVersion)
        throw FormatError("unsupported index file version " + std::to_string(version));

    LoadedIndex out;
    out.index.n = r.u32();
    out.index.m = r.u32();
    std::uint8_t flavor = r.u8();
    if (flavor > 2) throw FormatError("bad index flavor byte");
    out.index.flavor = static_cast<IndexFlavor>(flavor);

    out.index.rank.resize(out.index.m);
    for (auto& v : out.index.rank) v = r.u32();
    out.original_ids.resize(out.index.n);
    for (auto& v : out.original_ids) v = r.u64();

    out.index.labels.resize(out.index.n);
    for (auto& labels : out.index.labels) {
        std::uint32_t count = r.u32();
        r.need(static_cast<std::size_t>(count) * 8);
        labels.resize(count);
        for (auto& l : labels) {
            l.edge = r.u32();
            l.s = r.u32();
            if (l.edge >= out.index.m) throw FormatError("label hyperedge out of range");
        }
    }
    if (r.p != r.end) throw FormatError("trailing bytes in index file");
    return out;
}

} // namespace hlx
