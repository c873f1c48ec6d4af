#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "ballot/enumerator.hpp"
#include "ballot/walkmodel.hpp"

namespace ballot::seqio {

// OEIS b-file: "<n> <value>\n" per term, optional leading "#" comment lines.

/// Returns the number of bytes written.
std::size_t write_bfile(const Sequence& seq, std::ostream& out, const std::vector<std::string>& comments = {});
std::size_t write_bfile(const Sequence& seq, const std::filesystem::path& path,
                        const std::vector<std::string>& comments = {});
std::string to_bfile(const Sequence& seq, const std::vector<std::string>& comments = {});

/// Throws Error{MalformedLine | NonContiguousIndices | IoError}.
Sequence read_bfile(std::istream& in);
Sequence read_bfile(const std::filesystem::path& path);
Sequence parse_bfile(std::string_view text);

/// "sha256:<64 hex digits>" of the given bytes.
std::string digest(std::string_view bytes);

/// Digest of the comment-free b-file rendering of `seq`.
std::string terms_digest(const Sequence& seq);

/// Environment variable naming the cache root directory.
inline constexpr const char* kCacheEnvVar = "BALLOT_CACHE_DIR";

/// $BALLOT_CACHE_DIR, else $XDG_DATA_HOME/ballot/cache, else ~/.local/share/ballot/cache.
std::filesystem::path default_cache_root();

enum class CacheOutcome {
    Hit,        ///< stored entry had enough terms
    Miss,       ///< no entry, computed and stored
    Extended,   ///< entry too short, recomputed and overwritten
    Corrupt,    ///< digest mismatch (CorruptCacheEntry), discarded and recomputed
};

struct CacheResult {
    Sequence sequence;
    CacheOutcome outcome = CacheOutcome::Miss;
};

/// Content-addressed term store, one directory per problem key:
///   <root>/<key>/meta.json      {"problem_key", "terms_count", "digest", "file"}
///   <root>/<key>/<hex>.b        b-file named after its own digest
/// meta.json is replaced by rename, so a reader sees either the old or the new entry.
class SequenceCache {
public:
    using Compute = std::function<Sequence(const WalkProblem&, std::size_t)>;

    explicit SequenceCache(std::filesystem::path root, EnumeratorOptions options = {});
    /// Injects the term source (tests count invocations through this).
    SequenceCache(std::filesystem::path root, Compute compute);

    const std::filesystem::path& root() const noexcept { return root_; }

    /// Terms x(0..n_max) of the problem named by `problem_key`.
    CacheResult get(std::string_view problem_key, std::size_t n_max);
    CacheResult get(const WalkProblem& problem, std::size_t n_max);

private:
    void store(const std::string& key, const Sequence& seq);

    std::filesystem::path root_;
    Compute compute_;
};

std::string_view to_string(CacheOutcome outcome) noexcept;

}  // namespace ballot::seqio
