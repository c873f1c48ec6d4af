#include "ballot/seqio.hpp"

#include <array>
#include <cstdlib>
#include <fstream>
#include <random>
#include <sstream>

#include <unistd.h>

#include "json.hpp"
#include <openssl/evp.h>

#include "ballot/error.hpp"

namespace ballot::seqio {

namespace fs = std::filesystem;

namespace {

bool is_digits(std::string_view s) {
    return !s.empty() && s.find_first_not_of("0123456789") == std::string_view::npos;
}

std::string read_file(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorCode::IoError, "cannot open " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

// Writes next to the destination, then renames over it.
void write_atomically(const fs::path& path, std::string_view bytes) {
    static thread_local std::mt19937_64 rng{std::random_device{}()};
    const auto tmp = path.parent_path() /
                     (path.filename().string() + ".tmp." + std::to_string(::getpid()) + "." + std::to_string(rng()));
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw Error(ErrorCode::IoError, "cannot create " + tmp.string());
        out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
        if (!out) throw Error(ErrorCode::IoError, "short write to " + tmp.string());
    }
    std::error_code ec;
    fs::rename(tmp, path, ec);
    if (ec) {
        fs::remove(tmp, ec);
        throw Error(ErrorCode::IoError, "cannot rename into " + path.string());
    }
}

Sequence prefix(const Sequence& seq, std::size_t count) {
    Sequence out;
    out.offset = seq.offset;
    out.provenance = seq.provenance;
    out.terms.assign(seq.terms.begin(), seq.terms.begin() + static_cast<std::ptrdiff_t>(std::min(count, seq.size())));
    return out;
}

}  // namespace

std::string to_bfile(const Sequence& seq, const std::vector<std::string>& comments) {
    std::string out;
    for (const auto& c : comments) {
        out += "# ";
        out += c;
        out += '\n';
    }
    for (std::size_t i = 0; i < seq.size(); ++i) {
        out += std::to_string(seq.offset + i);
        out += ' ';
        out += seq.terms[i].get_str();
        out += '\n';
    }
    return out;
}

std::size_t write_bfile(const Sequence& seq, std::ostream& out, const std::vector<std::string>& comments) {
    const auto bytes = to_bfile(seq, comments);
    out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
    if (!out) throw Error(ErrorCode::IoError, "b-file write failed");
    return bytes.size();
}

std::size_t write_bfile(const Sequence& seq, const fs::path& path, const std::vector<std::string>& comments) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(ErrorCode::IoError, "cannot open " + path.string() + " for writing");
    return write_bfile(seq, out, comments);
}

Sequence parse_bfile(std::string_view text) {
    Sequence seq;
    seq.provenance = "b-file";
    bool first = true;
    std::size_t expected = 0;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos < text.size()) {
        auto end = text.find('\n', pos);
        if (end == std::string_view::npos) end = text.size();
        auto line = text.substr(pos, end - pos);
        pos = end + 1;
        ++line_no;

        while (!line.empty() && (line.back() == ' ' || line.back() == '\t' || line.back() == '\r')) {
            line.remove_suffix(1);
        }
        if (line.empty() || line.front() == '#') continue;

        const auto gap = line.find_first_of(" \t");
        const auto index_text = line.substr(0, gap);
        const auto rest = gap == std::string_view::npos ? std::string_view{} : line.substr(gap);
        const auto value_start = rest.find_first_not_of(" \t");
        const auto value_text = value_start == std::string_view::npos ? std::string_view{} : rest.substr(value_start);
        if (!is_digits(index_text) || !is_digits(value_text)) {
            throw Error(ErrorCode::MalformedLine, "line " + std::to_string(line_no) + ": '" + std::string(line) + "'");
        }
        const auto index = std::stoull(std::string(index_text));
        if (first) {
            seq.offset = index;
            expected = index;
            first = false;
        }
        if (index != expected) {
            throw Error(ErrorCode::NonContiguousIndices, "line " + std::to_string(line_no) + ": expected index " +
                                                             std::to_string(expected) + ", found " +
                                                             std::to_string(index));
        }
        seq.terms.emplace_back(std::string(value_text), 10);
        ++expected;
    }
    return seq;
}

Sequence read_bfile(std::istream& in) {
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_bfile(buf.str());
}

Sequence read_bfile(const fs::path& path) { return parse_bfile(read_file(path)); }

std::string digest(std::string_view bytes) {
    std::array<unsigned char, EVP_MAX_MD_SIZE> md{};
    unsigned int len = 0;
    if (EVP_Digest(bytes.data(), bytes.size(), md.data(), &len, EVP_sha256(), nullptr) != 1) {
        throw Error(ErrorCode::IoError, "SHA-256 computation failed");
    }
    static constexpr char hex[] = "0123456789abcdef";
    std::string out = "sha256:";
    for (unsigned int i = 0; i < len; ++i) {
        out += hex[md[i] >> 4];
        out += hex[md[i] & 0xF];
    }
    return out;
}

std::string terms_digest(const Sequence& seq) { return digest(to_bfile(seq)); }

fs::path default_cache_root() {
    if (const char* env = std::getenv(kCacheEnvVar); env && *env) return env;
    if (const char* xdg = std::getenv("XDG_DATA_HOME"); xdg && *xdg) return fs::path(xdg) / "ballot" / "cache";
    if (const char* home = std::getenv("HOME"); home && *home) {
        return fs::path(home) / ".local" / "share" / "ballot" / "cache";
    }
    return fs::temp_directory_path() / "ballot-cache";
}

SequenceCache::SequenceCache(fs::path root, EnumeratorOptions options)
    : root_(std::move(root)),
      compute_([options](const WalkProblem& p, std::size_t n) { return enumerate(p, n, options); }) {}

SequenceCache::SequenceCache(fs::path root, Compute compute) : root_(std::move(root)), compute_(std::move(compute)) {}

CacheResult SequenceCache::get(std::string_view problem_key, std::size_t n_max) {
    return get(parse_key(problem_key), n_max);
}

CacheResult SequenceCache::get(const WalkProblem& problem, std::size_t n_max) {
    const auto key = canonical_key(problem);
    const auto dir = root_ / key;
    const auto meta_path = dir / "meta.json";

    CacheOutcome outcome = CacheOutcome::Miss;
    if (fs::exists(meta_path)) {
        try {
            const auto meta = nlohmann::json::parse(read_file(meta_path));
            const auto file = meta.at("file").get<std::string>();
            const auto bytes = read_file(dir / file);
            if (meta.at("problem_key").get<std::string>() != key || digest(bytes) != meta.at("digest").get<std::string>()) {
                throw Error(ErrorCode::CorruptCacheEntry, "digest mismatch for " + key);
            }
            auto stored = parse_bfile(bytes);
            stored.provenance = key;
            if (stored.offset != 0) throw Error(ErrorCode::CorruptCacheEntry, "cached terms do not start at 0");
            if (stored.size() >= n_max + 1) return {prefix(stored, n_max + 1), CacheOutcome::Hit};
            outcome = CacheOutcome::Extended;
        } catch (const Error&) {
            outcome = CacheOutcome::Corrupt;
        } catch (const nlohmann::json::exception&) {
            outcome = CacheOutcome::Corrupt;
        }
    }

    auto seq = compute_(problem, n_max);
    seq.provenance = key;
    store(key, seq);
    return {std::move(seq), outcome};
}

void SequenceCache::store(const std::string& key, const Sequence& seq) {
    const auto dir = root_ / key;
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec) throw Error(ErrorCode::IoError, "cannot create cache directory " + dir.string());

    const auto bytes = to_bfile(seq);
    const auto sum = digest(bytes);
    const auto file = sum.substr(sum.find(':') + 1) + ".b";
    write_atomically(dir / file, bytes);

    nlohmann::ordered_json meta;
    meta["problem_key"] = key;
    meta["terms_count"] = seq.size();
    meta["digest"] = sum;
    meta["file"] = file;
    write_atomically(dir / "meta.json", meta.dump(2) + "\n");

    for (const auto& entry : fs::directory_iterator(dir, ec)) {
        const auto name = entry.path().filename().string();
        if (entry.path().extension() == ".b" && name != file) fs::remove(entry.path(), ec);
    }
}

std::string_view to_string(CacheOutcome outcome) noexcept {
    switch (outcome) {
        case CacheOutcome::Hit: return "hit";
        case CacheOutcome::Miss: return "miss";
        case CacheOutcome::Extended: return "extended";
        case CacheOutcome::Corrupt: return "corrupt";
    }
    return "unknown";
}

}  // namespace ballot::seqio
