#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace infoval {

// Error taxonomy. The CLI maps these onto its exit codes
// (config/schema -> 2, numeric -> 3, empty group -> 4, unsupported -> 5, io -> 6).
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct SchemaError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct DomainError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct NumericError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct EmptyGroupError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct UnsupportedError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// FNV-1a over raw bytes; used for config fingerprints and cell hashing.
std::uint64_t fnv1a64(const void* data, std::size_t len);
std::uint64_t fnv1a64(const std::string& s);
std::string to_hex(std::uint64_t v);

/// Runs fn(0..n-1) on up to INFOVAL_THREADS workers. Results must be written
/// to per-index slots; the reduction order is then independent of scheduling.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

/// Derives `count` independent child seeds from a master seed (splitmix64),
/// so parallel work items stay deterministic regardless of thread order.
std::vector<std::uint64_t> derive_seeds(std::uint64_t master, std::size_t count);

/// Linear-interpolation quantile of an unsorted sample (sorts a copy).
double quantile(std::vector<double> values, double q);

inline bool approx_eq(double a, double b, double tol) { return std::abs(a - b) <= tol; }

}  // namespace infoval
