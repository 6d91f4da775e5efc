#include "frankl/search.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cstdio>
#include <fstream>
#include <mutex>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <thread>

#include "frankl/bridge.hpp"

namespace frankl {

namespace {

constexpr std::size_t kMaxExtremalStored = 8;
constexpr std::uint64_t kSmallChunk = 4096;
constexpr std::uint64_t kTransportSampleMask = 63;  // family_id % 64 == 0

struct ChunkResult {
  bool done = false;
  std::uint64_t union_closed = 0;
  std::uint64_t applicable = 0;
  std::vector<std::uint64_t> violations;
  bool has_min = false;
  std::uint64_t min_count = 0;
  std::uint64_t min_size = 0;
  std::uint64_t extremal_total = 0;
  std::vector<std::uint64_t> extremal_first;
  std::uint64_t transport_checked = 0;
};

// a/b < c/d on exact integers.
bool fraction_less(std::uint64_t a, std::uint64_t b, std::uint64_t c,
                   std::uint64_t d) {
  return static_cast<unsigned __int128>(a) * d <
         static_cast<unsigned __int128>(c) * b;
}

bool fraction_equal(std::uint64_t a, std::uint64_t b, std::uint64_t c,
                    std::uint64_t d) {
  return static_cast<unsigned __int128>(a) * d ==
         static_cast<unsigned __int128>(c) * b;
}

// Members of family_id are its set bits; the pairwise union test walks
// them in ascending order and stops at the first missing union.
bool family_union_closed(std::uint64_t family_id) {
  std::uint64_t rest_i = family_id;
  while (rest_i != 0) {
    std::uint32_t i = static_cast<std::uint32_t>(std::countr_zero(rest_i));
    rest_i &= rest_i - 1;
    std::uint64_t rest_j = rest_i;
    while (rest_j != 0) {
      std::uint32_t j = static_cast<std::uint32_t>(std::countr_zero(rest_j));
      rest_j &= rest_j - 1;
      if (!(family_id >> (i | j) & 1)) return false;
    }
  }
  return true;
}

void scan_chunk(std::uint32_t n, std::uint64_t lo, std::uint64_t hi,
                const FamilyVisitor& visitor, bool transport_checks,
                ChunkResult& out) {
  const std::uint32_t member_count = 1u << n;
  for (std::uint64_t id = lo; id < hi; ++id) {
    if (!family_union_closed(id)) continue;
    ++out.union_closed;
    if (visitor) visitor(id);

    std::uint64_t members = id;
    std::uint64_t size = static_cast<std::uint64_t>(std::popcount(members));
    bool has_nonempty = (members & ~std::uint64_t{1}) != 0;
    if (!has_nonempty) continue;
    ++out.applicable;

    std::uint64_t best = 0;
    for (std::uint32_t e = 0; e < n; ++e) {
      std::uint64_t count = 0;
      for (std::uint32_t m = 0; m < member_count; ++m) {
        if ((members >> m & 1) && (m >> e & 1)) ++count;
      }
      best = std::max(best, count);
    }
    if (best * 2 < size) out.violations.push_back(id);

    if (!out.has_min || fraction_less(best, size, out.min_count, out.min_size)) {
      out.has_min = true;
      out.min_count = best;
      out.min_size = size;
      out.extremal_total = 1;
      out.extremal_first.assign(1, id);
    } else if (fraction_equal(best, size, out.min_count, out.min_size)) {
      ++out.extremal_total;
      if (out.extremal_first.size() < kMaxExtremalStored) {
        out.extremal_first.push_back(id);
      }
    }

    if (transport_checks && (id & kTransportSampleMask) == 0) {
      SetFamily family = decode_family(n, id);
      auto family_report = abundant_elements(family);
      auto numset_report = abundant_divisors(family_to_numset(family));
      std::vector<std::size_t> family_counts, numset_counts;
      for (const auto& [label, count] : family_report.element_counts) {
        family_counts.push_back(count);
      }
      for (const auto& [pp, count] : numset_report.prime_power_counts) {
        numset_counts.push_back(count);
      }
      std::sort(family_counts.begin(), family_counts.end());
      std::sort(numset_counts.begin(), numset_counts.end());
      if (family_counts != numset_counts ||
          family_report.conjecture != numset_report.conjecture1) {
        throw std::logic_error(
            "abundance transport mismatch for family id " + std::to_string(id));
      }
      ++out.transport_checked;
    }
  }
  out.done = true;
}

std::string chunk_line(std::uint64_t index, const ChunkResult& r) {
  std::ostringstream line;
  line << "chunk " << index << " done uc=" << r.union_closed
       << " app=" << r.applicable << " min=" << r.min_count << "/"
       << r.min_size << " extot=" << r.extremal_total << " ex=";
  for (std::size_t i = 0; i < r.extremal_first.size(); ++i) {
    if (i) line << ",";
    line << r.extremal_first[i];
  }
  line << " viol=";
  for (std::size_t i = 0; i < r.violations.size(); ++i) {
    if (i) line << ",";
    line << r.violations[i];
  }
  line << " tc=" << r.transport_checked;
  return line.str();
}

std::vector<std::uint64_t> parse_id_list(const std::string& text) {
  std::vector<std::uint64_t> out;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t comma = text.find(',', pos);
    if (comma == std::string::npos) comma = text.size();
    out.push_back(std::stoull(text.substr(pos, comma - pos)));
    pos = comma + 1;
  }
  return out;
}

// Restores per-chunk results recorded by chunk_line.
void load_checkpoint(const std::string& path, std::uint32_t n,
                     std::vector<ChunkResult>& chunks) {
  std::ifstream in(path);
  if (!in) return;
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream fields(line);
    std::string word;
    fields >> word;
    if (word == "plan") {
      std::string spec;
      fields >> spec;
      if (spec != "n=" + std::to_string(n)) {
        fail(errc::domain_error,
             "checkpoint " + path + " was written for a different scan (" +
                 spec + ")");
      }
      continue;
    }
    if (word != "chunk") continue;
    std::uint64_t index = 0;
    fields >> index;
    fields >> word;  // "done"
    if (word != "done" || index >= chunks.size()) continue;
    ChunkResult r;
    r.done = true;
    std::string item;
    while (fields >> item) {
      auto eq = item.find('=');
      if (eq == std::string::npos) continue;
      std::string key = item.substr(0, eq);
      std::string value = item.substr(eq + 1);
      if (key == "uc") r.union_closed = std::stoull(value);
      else if (key == "app") r.applicable = std::stoull(value);
      else if (key == "tc") r.transport_checked = std::stoull(value);
      else if (key == "extot") r.extremal_total = std::stoull(value);
      else if (key == "ex" && !value.empty()) r.extremal_first = parse_id_list(value);
      else if (key == "viol" && !value.empty()) r.violations = parse_id_list(value);
      else if (key == "min") {
        auto slash = value.find('/');
        r.min_count = std::stoull(value.substr(0, slash));
        r.min_size = std::stoull(value.substr(slash + 1));
        r.has_min = r.min_size != 0;
      }
    }
    chunks[index] = std::move(r);
  }
}

ExhaustiveReport merge_chunks(std::uint32_t n, std::uint64_t candidates,
                              const std::vector<ChunkResult>& chunks) {
  ExhaustiveReport report;
  report.universe_size = n;
  report.candidates = candidates;
  bool has_min = false;
  for (const auto& c : chunks) {
    report.union_closed_count += c.union_closed;
    report.applicable_count += c.applicable;
    report.violations.insert(report.violations.end(), c.violations.begin(),
                             c.violations.end());
    report.transport_checked += c.transport_checked;
    if (!c.has_min) continue;
    if (!has_min || fraction_less(c.min_count, c.min_size,
                                  report.min_abundance_count,
                                  report.min_abundance_size)) {
      has_min = true;
      report.min_abundance_count = c.min_count;
      report.min_abundance_size = c.min_size;
      report.extremal_total = c.extremal_total;
      report.extremal_first = c.extremal_first;
    } else if (fraction_equal(c.min_count, c.min_size,
                              report.min_abundance_count,
                              report.min_abundance_size)) {
      report.extremal_total += c.extremal_total;
      for (std::uint64_t id : c.extremal_first) {
        if (report.extremal_first.size() < kMaxExtremalStored) {
          report.extremal_first.push_back(id);
        }
      }
    }
  }
  return report;
}

ExhaustiveReport run_scan(std::uint32_t n, const FamilyVisitor& visitor,
                          bool transport_checks, const ScanOptions& options) {
  if (n < 1 || n > 5) {
    fail(errc::unsupported,
         "universe size " + std::to_string(n) + " is not supported (1..5)");
  }
  if (n == 5 && !options.allow_large) {
    fail(errc::unsupported,
         "n = 5 scans 2^32 candidates; pass the explicit opt-in flag");
  }
  unsigned workers = std::max(1u, options.workers);
  const std::uint64_t candidates = std::uint64_t{1} << (1u << n);
  const std::uint64_t chunk_size = std::max(candidates / 256, kSmallChunk);
  const std::uint64_t chunk_count = (candidates + chunk_size - 1) / chunk_size;

  std::vector<ChunkResult> chunks(chunk_count);
  std::mutex checkpoint_mu;
  std::optional<std::ofstream> checkpoint;
  if (!options.checkpoint_path.empty()) {
    load_checkpoint(options.checkpoint_path, n, chunks);
    bool fresh = true;
    for (const auto& c : chunks) {
      if (c.done) fresh = false;
    }
    checkpoint.emplace(options.checkpoint_path, std::ios::app);
    if (!*checkpoint) {
      fail(errc::domain_error,
           "cannot open checkpoint file " + options.checkpoint_path);
    }
    if (fresh) {
      *checkpoint << "plan n=" << n << " chunks=" << chunk_count << "\n";
      checkpoint->flush();
    }
  }

  std::atomic<std::uint64_t> next_chunk{0};
  std::atomic<std::uint64_t> chunks_done{0};
  std::exception_ptr first_error;
  std::mutex error_mu;

  auto worker_loop = [&] {
    for (;;) {
      std::uint64_t index = next_chunk.fetch_add(1);
      if (index >= chunk_count) return;
      if (chunks[index].done) continue;
      try {
        std::uint64_t lo = index * chunk_size;
        std::uint64_t hi = std::min(candidates, lo + chunk_size);
        scan_chunk(n, lo, hi, visitor, transport_checks, chunks[index]);
      } catch (...) {
        std::lock_guard lock(error_mu);
        if (!first_error) first_error = std::current_exception();
        return;
      }
      std::uint64_t done = chunks_done.fetch_add(1) + 1;
      if (checkpoint) {
        std::lock_guard lock(checkpoint_mu);
        *checkpoint << chunk_line(index, chunks[index]) << "\n";
        checkpoint->flush();
      }
      if (options.progress) {
        std::fprintf(stderr, "chunk %llu/%llu done\n",
                     static_cast<unsigned long long>(done),
                     static_cast<unsigned long long>(chunk_count));
      }
    }
  };

  if (workers == 1) {
    worker_loop();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(worker_loop);
    for (auto& t : pool) t.join();
  }
  if (first_error) std::rethrow_exception(first_error);
  return merge_chunks(n, candidates, chunks);
}

}  // namespace

ExhaustiveReport enumerate_union_closed(std::uint32_t n,
                                        const FamilyVisitor& visitor,
                                        const ScanOptions& options) {
  return run_scan(n, visitor, /*transport_checks=*/false, options);
}

ExhaustiveReport verify_exhaustive(std::uint32_t n,
                                   const ScanOptions& options) {
  return run_scan(n, {}, /*transport_checks=*/true, options);
}

SetFamily decode_family(std::uint32_t n, std::uint64_t family_id) {
  if (n < 1 || n > 5) {
    fail(errc::unsupported, "universe size must be 1..5");
  }
  std::vector<std::string> labels;
  for (std::uint32_t e = 1; e <= n; ++e) labels.push_back(std::to_string(e));
  std::vector<MemberBits> members;
  const std::uint32_t member_count = 1u << n;
  for (std::uint32_t m = 0; m < member_count; ++m) {
    if (family_id >> m & 1) members.push_back(m);
  }
  return SetFamily(Universe(std::move(labels)), std::move(members));
}

NumberSet random_closed_numset(const RandomNumSetParams& params) {
  if (params.draws == 0 || params.max_prime_index == 0) {
    fail(errc::domain_error, "draws and max_prime_index must be positive");
  }
  std::mt19937_64 rng(params.seed);
  std::vector<ExponentVector> drawn;
  for (std::uint32_t d = 0; d < params.draws; ++d) {
    std::vector<ExponentVector::Entry> entries;
    for (PrimeIndex i = 1; i <= params.max_prime_index; ++i) {
      auto e = static_cast<std::uint32_t>(rng() % (params.max_exponent + 1));
      if (e > 0) entries.push_back({i, e});
    }
    drawn.push_back(ExponentVector::from_entries(std::move(entries)));
  }
  NumberSet seeds(std::move(drawn));
  return params.gcd_closed ? gcd_closure(seeds) : lcm_closure(seeds);
}

NumberSet periods_from_endofunction(const EndoFunction& sigma,
                                    const std::vector<std::uint32_t>& a) {
  NumberSet periods = period_set(sigma, a);
  if (!is_lcm_closed(periods)) {
    throw std::logic_error("period set is not LCM-closed");
  }
  ExponentVector expected_max;
  for (std::uint32_t x : a) {
    expected_max = lcm(expected_max, factorize(sigma.cycle_length(x)));
  }
  if (periods.max() != expected_max) {
    throw std::logic_error("period set maximum differs from P(A)");
  }
  return periods;
}

}  // namespace frankl
