#include "steenrodlab/parallel.hpp"

#include <atomic>

namespace steenrodlab {

namespace {
std::atomic<std::size_t> g_workers{1};
}  // namespace

void set_worker_threads(std::size_t n) { g_workers.store(n == 0 ? 1 : n); }

std::size_t worker_threads() { return g_workers.load(); }

}  // namespace steenrodlab
