#pragma once

#include <chrono>
#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "anclab/approx.hpp"
#include "anclab/classic.hpp"
#include "anclab/generate.hpp"
#include "anclab/label_io.hpp"

namespace anclab {

/// One benchmark cell: label size and encode time of one scheme on one tree.
struct BenchRow {
  std::string scheme;
  std::uint64_t n = 0;
  std::string kind;
  std::uint64_t seed = 0;
  unsigned max_label_bits = 0;
  std::uint64_t encode_ms = 0;
};

struct BenchConfig {
  std::vector<Scheme> schemes{Scheme::Classic, Scheme::New};
  std::vector<std::uint64_t> sizes;
  std::vector<std::pair<TreeKind, unsigned>> kinds{{TreeKind::Attach, 2}};
  std::uint64_t seed = 0;
  /// With timing off, encode_ms is reported as 0 so the CSV is byte-stable
  /// for a fixed configuration.
  bool measure_time = true;
};

/// Runs every (size, kind, scheme) cell in deterministic order.
inline std::vector<BenchRow> run_bench(const BenchConfig& config) {
  std::vector<BenchRow> rows;
  for (const std::uint64_t n : config.sizes) {
    for (const auto& [kind, arity] : config.kinds) {
      const RootedTree tree = generate({kind, n, config.seed, arity});
      for (const Scheme scheme : config.schemes) {
        const auto start = std::chrono::steady_clock::now();
        const std::vector<Label> labels =
            scheme == Scheme::Classic ? encode_classic(tree) : encode_new(tree);
        const auto stop = std::chrono::steady_clock::now();
        unsigned max_bits = 0;
        for (const Label& l : labels) max_bits = std::max<unsigned>(max_bits, l.size());
        BenchRow row;
        row.scheme = scheme_name(scheme);
        row.n = n;
        row.kind = kind_name(kind, arity);
        row.seed = config.seed;
        row.max_label_bits = max_bits;
        if (config.measure_time)
          row.encode_ms = static_cast<std::uint64_t>(
              std::chrono::duration_cast<std::chrono::milliseconds>(stop - start).count());
        rows.push_back(std::move(row));
      }
    }
  }
  return rows;
}

inline void write_csv(std::ostream& out, const std::vector<BenchRow>& rows) {
  out << "scheme,n,kind,seed,max_label_bits,encode_ms\n";
  for (const BenchRow& r : rows)
    out << r.scheme << ',' << r.n << ',' << r.kind << ',' << r.seed << ','
        << r.max_label_bits << ',' << r.encode_ms << "\n";
}

}  // namespace anclab
