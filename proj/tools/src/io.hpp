#pragma once

// Shared CLI plumbing: argument parsing helpers, deterministic number
// formatting, the zero cache, and the CSV/JSON/SVG writers.

#include "xideform/almostperiod.hpp"
#include "xideform/zerofind.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace xideform::cli {

inline constexpr const char* kToolVersion = "0.1.0";

// Shortest round-trip decimal.
std::string fmt_d(double v);

// "a", "bi", "a+bi", "a-bi"; exponents allowed in both parts.
CxD parse_cx(const std::string& text);

// "lo:hi", lo < hi.
std::pair<double, double> parse_range(const std::string& text);

// XIDEFORM_CACHE_DIR, else .xideform-cache under the working directory.
std::string cache_dir();

// Exact-key cache of zero lists; entries from other tool versions are
// ignored.
struct CacheKey {
  std::string kind;
  std::uint64_t spec_hash;
  double t;
  Rect region;
  int working_digits;
  std::string target;  // decimal text of target_abs_err
};
bool cache_load(const CacheKey& key, std::vector<ZeroRecord>* zeros);
void cache_store(const CacheKey& key, const std::vector<ZeroRecord>& zeros);

void atomic_write(const std::string& path, const std::string& content);

std::string zeros_csv(const std::vector<ZeroRecord>& zeros);
std::string pairs_csv(const std::vector<PairedZero>& pairs);
std::string certificate_json(const LFunctionSpec& spec, double t,
                             const CertifiedZero& cert,
                             const PrecisionConfig& prec);

// Figure emission: <out_base>.csv with a panel column (series / xi) and
// <out_base>.svg with the strip on the left and the image-plane zeros with
// the mapped strip outline on the right. Returns the pairing it plotted.
std::vector<PairedZero> write_figure(const LFunctionSpec& spec, double t,
                                     const Rect& strip,
                                     const std::string& out_base,
                                     const PrecisionConfig& prec);

// Same emission from an existing pairing (skips the zero search).
void write_figure_data(const LFunctionSpec& spec, double t, const Rect& strip,
                       const std::vector<PairedZero>& pairs,
                       const std::string& out_base);

}  // namespace xideform::cli
