#pragma once

#include <cstdint>
#include <functional>
#include <string>

namespace stackgame {

/// Worker count used by the embarrassingly-parallel loops (per-sample attacks,
/// payoff-matrix fills, metric sweeps). 1 by default; results are identical at
/// any setting because random streams are split per index and reductions are
/// order-fixed.
void set_thread_count(int n);
int thread_count();

/// Runs fn(i) for i in [0, n), chunked over thread_count() workers.
void parallel_for(int n, const std::function<void(int)>& fn);

/// FNV-1a over raw bytes, printed as 16 hex chars. Content identity for
/// datasets, configs and manifests.
class ContentHash {
public:
    void update(const void* bytes, std::size_t len);
    void update(const std::string& s);
    void update_double(double x);
    void update_int(std::int64_t x);
    std::string hex() const;

private:
    std::uint64_t state_ = 0xcbf29ce484222325ULL;
};

}  // namespace stackgame
